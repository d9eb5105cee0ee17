#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "crosskiss/entropy.hpp"
#include "crosskiss/rates.hpp"

using namespace crosskiss;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// the six-term expression written out independently, as a cross-route
double f_by_hand(double y1, double y2, double z1, double z2) {
  auto term = [](double t, double u) { return t == 0.0 ? 0.0 : t * binary_entropy(u / t); };
  return term(z1, y1) + term(z2, y2) +
         term(z1 + z2 - y1 - y2, z1 / 2 + z2 - y1 - 2 * y2) +
         term(1 + y2 - z1 / 2 - z2, y1 + 2 * y2 + z1 / 2 - z2) +
         term(1 - z1 - y1 - y2, z2 - y1 - y2) + z1 / 2 + y2;
}

const LowerRateParams kRecordLower{0.19, 0.09};
const UpperRateParams kRecordUpper{0.334, 0.296, 1.5675};

}  // namespace

TEST_CASE("f at the record optimum") {
  double v = f_rate({0.01728, 0.04327}, kRecordLower);
  CHECK(std::abs(v - 1.17029) <= 1e-4);
  CHECK(v == doctest::Approx(f_by_hand(0.01728, 0.04327, 0.19, 0.09)).epsilon(1e-12));
}

TEST_CASE("f at the boundary corner (regression anchor)") {
  double v = f_rate({0.0, 0.0}, kRecordLower);
  CHECK(std::abs(v - 0.8053316) <= 1e-6);
  CHECK(v == doctest::Approx(f_by_hand(0, 0, 0.19, 0.09)).epsilon(1e-12));
}

TEST_CASE("infeasible points produce the -inf sentinel") {
  CHECK(f_rate({0.25, 0.0}, kRecordLower) == -kInf);   // y1/z1 > 1
  CHECK(f_rate({0.0, 0.095}, kRecordLower) == -kInf);  // y1+y2 > z2
  CHECK(f_rate({-0.01, 0.0}, kRecordLower) == -kInf);
}

TEST_CASE("f is continuous on the feasible triangle (finite differences)") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (int t = 0; t < 200; ++t) {
    double y1 = 0.09 * 0.4 * u(rng);
    double y2 = 0.09 * 0.4 * u(rng);
    double base = f_rate({y1, y2}, kRecordLower);
    double dy1 = f_rate({y1 + 1e-4, y2}, kRecordLower);
    double dy2 = f_rate({y1, y2 + 1e-4}, kRecordLower);
    CHECK(std::abs(dy1 - base) < 1e-2);
    CHECK(std::abs(dy2 - base) < 1e-2);
  }
}

TEST_CASE("sup_f reproduces the record optimum and argmax") {
  RateReport rep = sup_f(kRecordLower);
  CHECK(std::abs(rep.value - 1.17029) <= 1e-3);
  REQUIRE(rep.argmax.size() == 2);
  CHECK(std::abs(rep.argmax[0] - 0.01728) <= 2e-3);
  CHECK(std::abs(rep.argmax[1] - 0.04327) <= 2e-3);
}

TEST_CASE("sup_f is stable in the grid resolution") {
  double v200 = sup_f(kRecordLower, 200).value;
  double v400 = sup_f(kRecordLower, 400).value;
  double v800 = sup_f(kRecordLower, 800).value;
  CHECK(v400 >= v200 - 1e-12);
  CHECK(v800 >= v400 - 1e-12);
  CHECK(std::abs(v800 - v400) <= 1e-5);
}

TEST_CASE("sup_f degenerate domain collapses to the corner value") {
  LowerRateParams tiny{0.19, 1e-6};
  RateReport rep = sup_f(tiny, 50);
  CHECK(std::abs(rep.value - f_rate({0.0, 0.0}, tiny)) <= 1e-4);
}

TEST_CASE("sup_f moves continuously with the parameters") {
  // independently computed value at (0.20, 0.09); the gap from the
  // (0.19, 0.09) optimum is 0.0290
  double v = sup_f(LowerRateParams{0.20, 0.09}).value;
  CHECK(std::abs(v - 1.199271) <= 1e-3);
  CHECK(std::abs(v - 1.1702927) <= 0.05);
}

TEST_CASE("lower bound rate and the records it beats") {
  RateReport rep = lower_bound_rate(kRecordLower);
  CHECK(std::abs(rep.value - 0.218818) <= 1e-3);
  REQUIRE(rep.base.has_value());
  CHECK(*rep.base >= 1.1637);
  CHECK(rep.value > std::log2(1.1348));
  CHECK(rep.value > std::log2(1.1249));
  CHECK(rep.value > 0.2075);
}

TEST_CASE("invalid lower-rate parameters are rejected") {
  CHECK_THROWS_AS(sup_f(LowerRateParams{0.19, 0.10}), std::invalid_argument);  // z2 >= z1/2
  CHECK_THROWS_AS(sup_f(LowerRateParams{0.70, 0.32}), std::invalid_argument);  // z1 + z2 >= 1
  CHECK_THROWS_AS(sup_f(LowerRateParams{0.19, 0.0}), std::invalid_argument);   // z2 must be positive
}

TEST_CASE("alpha at the endpoints") {
  double end = (1 + 1 / std::sqrt(2.0) - 1.5675) / (2 * 0.334);
  CHECK(std::abs(alpha_function(end, kRecordUpper)) <= 1e-6);  // root factor vanishes
  double at0 = alpha_function(0.0, kRecordUpper);
  double expect = std::exp2(1 - 0.296) * std::sqrt(1 - 2 * std::pow(0.5675, 2));
  CHECK(at0 == doctest::Approx(expect).epsilon(1e-12));
  CHECK(std::abs(at0 - 0.97181) <= 1e-5);
  CHECK_THROWS_AS(alpha_function(-0.01, kRecordUpper), std::domain_error);
  CHECK_THROWS_AS(alpha_function(end + 0.01, kRecordUpper), std::domain_error);
}

TEST_CASE("alpha supremum stays below 1 for the working parameters") {
  RateReport rep = alpha_sup(kRecordUpper);
  CHECK(rep.feasible);
  CHECK(rep.value < 1.0);
  CHECK(rep.value > 0.999);  // the margin really is that thin
  REQUIRE(rep.argmax.size() == 1);
  CHECK(std::abs(rep.argmax[0] - 0.0237) < 2e-3);
}

TEST_CASE("alpha supremum near the vanishing-cap end") {
  UpperRateParams p{0.334, 0.296, 1.70};
  RateReport rep = alpha_sup(p);
  double at0 = alpha_function(0.0, p);
  CHECK(rep.value >= at0);
  CHECK(std::abs(rep.value - at0) < 0.05);
  CHECK(rep.feasible);  // small caps keep alpha well below 1
}

TEST_CASE("small R makes the caps too big (alpha >= 1)") {
  UpperRateParams p{0.334, 0.296, 1.2};
  RateReport rep = alpha_sup(p);
  CHECK(!rep.feasible);
  CHECK(rep.value >= 1.0);
  CHECK_THROWS_WITH_AS(upper_bound_rate(p),
                       "Blichfeldt branch infeasible for these parameters (alpha >= 1)",
                       std::domain_error);
}

TEST_CASE("empty cap interval is vacuous") {
  UpperRateParams p{0.334, 0.296, 1.75};  // beyond 1 + 1/sqrt(2)
  RateReport rep = alpha_sup(p);
  CHECK(rep.value == 0.0);
  CHECK(rep.feasible);
  CHECK(rep.note == "cap interval empty; alpha vacuously 0");
}

TEST_CASE("complement rate anchor and sensitivities") {
  double v = xprime_complement_rate(kRecordUpper);
  CHECK(std::abs(v - 2.9161) <= 2e-3);
  // c -> 0+ drives the base to 1
  CHECK(std::abs(xprime_complement_rate(UpperRateParams{0.334, 1e-9, 1.5675}) - 1.0) <= 1e-6);
  // a different b moves the value noticeably off the anchor
  double other = xprime_complement_rate(UpperRateParams{0.30, 0.296, 1.5675});
  CHECK(std::abs(other - 2.9161) > 1e-2);
  CHECK_THROWS_AS(xprime_complement_rate(UpperRateParams{0.80, 0.296, 1.5675}), std::invalid_argument);
}

TEST_CASE("finite-n complement variant approaches the limit") {
  double limit = xprime_complement_rate(kRecordUpper);
  double at_1e3 = xprime_complement_rate(kRecordUpper, 1000);
  double at_1e5 = xprime_complement_rate(kRecordUpper, 100000);
  CHECK(std::abs(at_1e5 - limit) < std::abs(at_1e3 - limit));
  CHECK(std::abs(at_1e5 - limit) < 1e-4);
}

TEST_CASE("volume-quotient rate anchors") {
  CHECK(std::abs(blichfeldt_rate(1.5675) - 2.91616) <= 1e-4);
  double unit_r = 0.5 * std::sqrt(M_PI / std::exp(1.0));
  CHECK(blichfeldt_rate(unit_r) == doctest::Approx(1.0).epsilon(1e-12));
  double finite = blichfeldt_finite_n_log2_rate(1.5675, 2000);
  double limit = std::log2(blichfeldt_rate(1.5675));
  CHECK(std::abs(finite - limit) <= 5e-3);
  CHECK(std::abs(finite - limit) <= 1e-3);  // the convergence is much tighter already
}

TEST_CASE("upper bound rate combines the two branches") {
  UpperBoundReport rep = upper_bound_rate(kRecordUpper);
  CHECK(std::abs(rep.value - 2.9162) <= 1e-3);
  CHECK(rep.value == doctest::Approx(std::max(rep.xprime, rep.blichfeldt)));
  CHECK(rep.alpha.feasible);
  CHECK(rep.value < 3.0);  // genuinely better than the 3^n - 1 base
}

TEST_CASE("no nearby parameter triple beats the working choice by 1e-3") {
  double anchor = upper_bound_rate(kRecordUpper).value;
  double best = kInf;
  for (int ib = 0; ib < 8; ++ib) {
    for (int ic = 0; ic < 8; ++ic) {
      for (int ir = 0; ir < 11; ++ir) {
        UpperRateParams p{0.30 + 0.07 * ib / 7, 0.26 + 0.07 * ic / 7, 1.52 + 0.10 * ir / 10};
        RateReport alpha = alpha_sup(p, 800);
        if (!alpha.feasible) continue;
        double v = std::max(xprime_complement_rate(p), blichfeldt_rate(p.big_r));
        best = std::min(best, v);
      }
    }
  }
  CHECK(best >= anchor - 1e-3);
}

TEST_CASE("radial identity is exact for n = 1..50") {
  for (long n = 1; n <= 50; ++n) {
    IdentityCheck c = blichfeldt_integral_identity(n);
    CHECK(c.exact_match);
    CHECK(c.factor == Rational(2, n + 2));
  }
  CHECK(blichfeldt_integral_identity(1).factor == Rational(2, 3));
  CHECK(blichfeldt_integral_identity(4).factor == Rational(1, 3));
  CHECK(blichfeldt_integral_identity(10).factor == Rational(1, 6));
}

TEST_CASE("Monte Carlo radial sampling agrees with the exact factor at n = 10") {
  // sample r = rho * U^(1/n): the radial law of a uniform point in the ball
  std::mt19937_64 rng(0);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const long n = 10;
  const double rho = 1.0 / std::sqrt(2.0 * n);
  const long samples = 4000000;
  double sum = 0;
  for (long i = 0; i < samples; ++i) {
    double radius = rho * std::pow(uni(rng), 1.0 / n);
    sum += 1.0 - 2.0 * n * radius * radius;
  }
  double mean = sum / samples;
  CHECK(std::abs(mean - 1.0 / 6.0) <= 1e-3);
}

TEST_CASE("cap volume stays below the cylinder bound") {
  CapCheck hemi = cap_cylinder_bound_check(3, 1.0, 1.0, 200000, 0);
  CHECK(hemi.ok);
  // hemisphere volume (2/3) pi r^3 against cylinder pi r^3
  CHECK(std::abs(hemi.estimate - 2.0 / 3.0 * M_PI) < 0.01);
  CHECK(hemi.cylinder == doctest::Approx(M_PI).epsilon(1e-12));

  CapCheck shallow = cap_cylinder_bound_check(5, 1.0, 0.2, 200000, 0);
  CHECK(shallow.ok);
  CHECK(shallow.estimate <= shallow.cylinder + 3 * shallow.sigma);

  CapCheck vanishing = cap_cylinder_bound_check(5, 1.0, 1e-6, 10000, 0);
  CHECK(vanishing.estimate < 1e-6);
  CHECK(vanishing.cylinder < 1e-6);

  CHECK_THROWS_AS(cap_cylinder_bound_check(5, 1.0, 1.5, 1000, 0), std::invalid_argument);
  CHECK_THROWS_AS(cap_cylinder_bound_check(30, 1.0, 0.5, 1000, 0), std::invalid_argument);
}

TEST_CASE("ball volume ratio approaches sqrt(2 pi / n)") {
  for (long n : {1000L, 10000L}) {
    double ratio = std::exp2(log2_ball_volume(n) - log2_ball_volume(n - 1));
    double asym = std::sqrt(2.0 * M_PI / static_cast<double>(n));
    CHECK(std::abs(ratio / asym - 1.0) <= 1e-3);
  }
}
