#include "crosskiss/rates.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "crosskiss/entropy.hpp"

namespace crosskiss {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLn2 = 0.6931471805599453;
constexpr double kPi = 3.14159265358979323846;

// t * H(u/t) extended by continuity: 0 at t == 0 (needs u == 0). Returns
// -inf when u/t leaves [0,1]; a 1e-12 slack absorbs rounding at the simplex
// boundary, after which the ratio is clamped.
double scaled_entropy(double t, double u) {
  if (t < -1e-12) return -kInf;
  if (t <= 1e-300) return std::abs(u) <= 1e-12 ? 0.0 : -kInf;
  double r = u / t;
  if (r < -1e-12 || r > 1.0 + 1e-12) return -kInf;
  r = r < 0.0 ? 0.0 : (r > 1.0 ? 1.0 : r);
  return t * binary_entropy(r);
}

}  // namespace

void LowerRateParams::validate() const {
  if (!(z1 > 0 && z1 <= 1 && z2 > 0 && z2 <= 1))
    throw std::invalid_argument("lower-rate params: need 0 < z1, z2 <= 1");
  if (!(z2 < z1 / 2)) throw std::invalid_argument("lower-rate params: need z2 < z1/2");
  if (!(z1 + z2 < 1)) throw std::invalid_argument("lower-rate params: need z1 + z2 < 1");
}

void UpperRateParams::validate() const {
  if (!(c > 0 && c < 1)) throw std::invalid_argument("upper-rate params: need 0 < c < 1");
  double av = a();
  if (!(av > 0 && av < 0.5)) throw std::invalid_argument("upper-rate params: need 0 < b(1-c) < 1/2");
  if (!(big_r > 1)) throw std::invalid_argument("upper-rate params: need R > 1");
}

double f_rate(const LowerRateVars& vars, const LowerRateParams& params) {
  double y1 = vars.y1, y2 = vars.y2, z1 = params.z1, z2 = params.z2;
  if (y1 < 0 || y2 < 0 || y1 + y2 > z2 + 1e-12) return -kInf;
  double terms[5] = {
      scaled_entropy(z1, y1),
      scaled_entropy(z2, y2),
      scaled_entropy(z1 + z2 - y1 - y2, z1 / 2 + z2 - y1 - 2 * y2),
      scaled_entropy(1 + y2 - z1 / 2 - z2, y1 + 2 * y2 + z1 / 2 - z2),
      scaled_entropy(1 - z1 - y1 - y2, z2 - y1 - y2),
  };
  double s = z1 / 2 + y2;
  for (double t : terms) {
    if (t == -kInf) return -kInf;
    s += t;
  }
  return s;
}

RateReport sup_f(const LowerRateParams& params, int grid) {
  params.validate();
  if (grid < 2) throw std::invalid_argument("grid resolution must be >= 2");
  double z2 = params.z2;
  double best = -kInf, by1 = 0, by2 = 0;
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; j <= grid - i; ++j) {
      double y1 = z2 * i / grid;
      double y2 = z2 * j / grid;
      double v = f_rate({y1, y2}, params);
      if (v > best) {  // strict: ties keep the lexicographically first argmax
        best = v;
        by1 = y1;
        by2 = y2;
      }
    }
  }
  // coordinate descent on halving steps
  double step = z2 / grid;
  while (step > 1e-7) {
    bool improved = true;
    while (improved) {
      improved = false;
      const double moves[4][2] = {{step, 0}, {-step, 0}, {0, step}, {0, -step}};
      for (const auto& mv : moves) {
        double y1 = by1 + mv[0], y2 = by2 + mv[1];
        if (y1 < 0 || y2 < 0 || y1 + y2 > z2) continue;
        double v = f_rate({y1, y2}, params);
        if (v > best) {
          best = v;
          by1 = y1;
          by2 = y2;
          improved = true;
        }
      }
    }
    step /= 2;
  }
  RateReport rep;
  rep.function = "sup_f";
  rep.value = best;
  rep.argmax = {by1, by2};
  rep.grid = grid;
  rep.tolerance = 1e-7;
  return rep;
}

RateReport lower_bound_rate(const LowerRateParams& params, int grid) {
  RateReport sup = sup_f(params, grid);
  RateReport rep;
  rep.function = "lower_bound_rate";
  rep.value = binary_entropy(params.z1) + (1 - params.z1) * binary_entropy(params.z2 / (1 - params.z1)) +
              params.z1 + params.z2 - sup.value;
  rep.base = std::exp2(rep.value);
  rep.argmax = sup.argmax;
  rep.grid = grid;
  rep.tolerance = sup.tolerance;
  return rep;
}

namespace {

double alpha_interval_end(const UpperRateParams& p) { return (1.0 + 1.0 / std::sqrt(2.0) - p.big_r) / (2.0 * p.b); }

// -inf outside the feasible set, for sweep use
double alpha_value(double kprime, const UpperRateParams& p) {
  double root_arg = 1.0 - 2.0 * std::pow(p.big_r - 1.0 + 2.0 * kprime * p.b, 2);
  if (root_arg < 0 && root_arg > -1e-12) root_arg = 0;  // interval endpoint rounding
  if (root_arg < 0) return -kInf;
  double e = scaled_entropy(p.c, kprime);
  if (e == -kInf) return -kInf;
  return std::exp2(e + (1.0 - p.c)) * std::sqrt(root_arg);
}

}  // namespace

double alpha_function(double kprime, const UpperRateParams& params) {
  params.validate();
  double end = alpha_interval_end(params);
  if (kprime < 0 || kprime > end + 1e-15)
    throw std::domain_error("alpha_function: k' outside [0, (1 + 1/sqrt(2) - R)/(2b)]");
  double v = alpha_value(kprime, params);
  if (v == -kInf) throw std::domain_error("alpha_function: infeasible k' (entropy argument outside [0,1])");
  return v;
}

RateReport alpha_sup(const UpperRateParams& params, int grid) {
  params.validate();
  RateReport rep;
  rep.function = "alpha_sup";
  rep.grid = grid;
  double end = alpha_interval_end(params);
  if (end < 0) {
    rep.value = 0;
    rep.feasible = true;
    rep.note = "cap interval empty; alpha vacuously 0";
    return rep;
  }
  double best = -kInf, bk = 0;
  for (int i = 0; i <= grid; ++i) {
    double k = end * i / grid;
    double v = alpha_value(k, params);
    if (v > best) {
      best = v;
      bk = k;
    }
  }
  // golden-section refinement around the best grid point
  double lo = std::max(0.0, bk - end / grid);
  double hi = std::min(end, bk + end / grid);
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double f1 = alpha_value(x1, params), f2 = alpha_value(x2, params);
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = alpha_value(x2, params);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = alpha_value(x1, params);
    }
  }
  double mid = (lo + hi) / 2;
  double vm = alpha_value(mid, params);
  if (vm > best) {
    best = vm;
    bk = mid;
  }
  rep.value = best;
  rep.argmax = {bk};
  rep.tolerance = 1e-12;
  rep.feasible = best < 1.0;
  return rep;
}

double xprime_complement_rate(const UpperRateParams& params, long finite_n) {
  params.validate();
  double a = params.a();
  if (finite_n > 0) a += params.b / static_cast<double>(finite_n);
  if (!(a > 0 && a < 0.5)) throw std::domain_error("xprime_complement_rate: need 0 < a < 1/2");
  return std::exp2(binary_entropy(params.c)) * std::pow((3.0 - 2.0 * a) / (1.0 - 2.0 * a), params.c);
}

double blichfeldt_rate(double big_r) {
  if (!(big_r > 0)) throw std::invalid_argument("R > 0 required");
  return 2.0 * big_r * std::sqrt(std::exp(1.0) / kPi);
}

double log2_ball_volume(long n) {
  return (static_cast<double>(n) / 2.0) * std::log2(kPi) - std::lgamma(static_cast<double>(n) / 2.0 + 1.0) / kLn2;
}

double log2_factorial(long n) { return std::lgamma(static_cast<double>(n) + 1.0) / kLn2; }

double blichfeldt_finite_n_log2_rate(double big_r, long n) {
  if (n < 1) throw std::invalid_argument("n >= 1 required");
  double nn = static_cast<double>(n);
  double rate = nn * std::log2(2.0 * big_r) + (nn / 2.0) * std::log2(2.0 * nn) - log2_factorial(n) -
                log2_ball_volume(n);
  return rate / nn;
}

UpperBoundReport upper_bound_rate(const UpperRateParams& params) {
  UpperBoundReport rep;
  rep.alpha = alpha_sup(params);
  if (!rep.alpha.feasible)
    throw std::domain_error("Blichfeldt branch infeasible for these parameters (alpha >= 1)");
  rep.xprime = xprime_complement_rate(params);
  rep.blichfeldt = blichfeldt_rate(params.big_r);
  rep.value = std::max(rep.xprime, rep.blichfeldt);
  return rep;
}

IdentityCheck blichfeldt_integral_identity(long n) {
  if (n < 1) throw std::invalid_argument("n >= 1 required");
  // With rho^2 = 1/(2n), the integral of (1 - 2n r^2) over the rho-ball,
  // normalized by the ball volume, reduces radially to
  //   1 - 2n * (n/(n+2)) * rho^2.
  Rational rho_sq(1, 2 * n);
  Rational factor = Rational(1) - Rational(2 * n) * Rational(n, n + 2) * rho_sq;
  IdentityCheck out;
  out.n = n;
  out.factor = factor;
  out.expected = Rational(2, n + 2);
  out.exact_match = factor == out.expected;
  return out;
}

CapCheck cap_cylinder_bound_check(int n, double r, double h, long samples, std::uint64_t seed) {
  if (n < 2 || n > 12) throw std::invalid_argument("cap check supports 2 <= n <= 12");
  if (!(h > 0 && h <= r)) throw std::invalid_argument("need 0 < h <= r");
  if (samples < 2) throw std::invalid_argument("need at least 2 samples");

  // slice the cap perpendicular to its axis: area(t) = (r^2 - t^2)^((n-1)/2) vol(B_{n-1})
  double voln1 = std::exp2(log2_ball_volume(n - 1));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> axis(r - h, r);
  double sum = 0, sumsq = 0;
  for (long i = 0; i < samples; ++i) {
    double t = axis(rng);
    double slice = std::pow(std::max(0.0, r * r - t * t), (n - 1) / 2.0);
    sum += slice;
    sumsq += slice * slice;
  }
  double mean = sum / static_cast<double>(samples);
  double var = std::max(0.0, sumsq / static_cast<double>(samples) - mean * mean);
  CapCheck out;
  out.samples = samples;
  out.estimate = h * voln1 * mean;
  out.sigma = h * voln1 * std::sqrt(var / static_cast<double>(samples));
  out.cylinder = h * std::pow(r * r - (r - h) * (r - h), (n - 1) / 2.0) * voln1;
  out.ok = out.estimate <= out.cylinder + 3 * out.sigma;
  return out;
}

}  // namespace crosskiss
