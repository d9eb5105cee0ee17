#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crosskiss/rational.hpp"

namespace crosskiss {

/// Parameters z1, z2 of the lower-bound rate function:
/// 0 < z1, z2 <= 1, z2 < z1/2, z1 + z2 < 1.
struct LowerRateParams {
  double z1 = 0;
  double z2 = 0;
  void validate() const;
};

struct LowerRateVars {
  double y1 = 0;
  double y2 = 0;
};

/// Parameters of the upper-bound argument; a = b(1-c) in the limit.
struct UpperRateParams {
  double b = 0;
  double c = 0;
  double big_r = 0;
  double a() const { return b * (1.0 - c); }
  void validate() const;
};

struct RateReport {
  std::string function;
  double value = 0;                    // log2 rate or plain value, per operation
  std::optional<double> base;          // 2^value where the value is a log2 rate
  std::vector<double> argmax;
  int grid = 0;
  double tolerance = 0;
  bool feasible = true;
  std::string note;
};

/// The six-term entropy expression; -inf when any entropy argument leaves
/// [0,1] (infeasible point).
double f_rate(const LowerRateVars& vars, const LowerRateParams& params);

/// Deterministic grid over the triangle {y1, y2 >= 0, y1 + y2 <= z2} followed
/// by coordinate descent on halving steps down to 1e-7 in argument.
RateReport sup_f(const LowerRateParams& params, int grid = 400);

/// H(z1) + (1-z1) H(z2/(1-z1)) + z1 + z2 - sup_f; the report carries both the
/// log2 rate (value) and 2^rate (base).
RateReport lower_bound_rate(const LowerRateParams& params, int grid = 400);

/// Integrand of the cap-density supremum at a single k'; throws
/// std::domain_error outside [0, (1 + 1/sqrt(2) - R)/(2b)] or when the
/// square-root argument leaves [0,1].
double alpha_function(double kprime, const UpperRateParams& params);

/// Grid plus golden-section refinement over the k' interval. feasible is the
/// alpha < 1 flag; an empty interval reports value 0 with a note.
RateReport alpha_sup(const UpperRateParams& params, int grid = 4000);

/// Per-n base 2^H(c) * ((3-2a)/(1-2a))^c with a = b(1-c). With
/// finite_n > 0, uses the finite-n value a = b(1-c) + b/n instead.
double xprime_complement_rate(const UpperRateParams& params, long finite_n = 0);

/// Asymptotic base 2 R sqrt(e/pi) of the enlargement volume quotient.
double blichfeldt_rate(double big_r);

/// (1/n) log2 of the finite-n quotient (2R)^n (2n)^(n/2) / (n! vol(B_n)),
/// for convergence checks against log2(blichfeldt_rate).
double blichfeldt_finite_n_log2_rate(double big_r, long n);

struct UpperBoundReport {
  double value = 0;  // max of the two branch bases
  double xprime = 0;
  double blichfeldt = 0;
  RateReport alpha;
};

/// Requires the alpha < 1 feasibility flag; throws std::domain_error
/// ("Blichfeldt branch infeasible...") otherwise.
UpperBoundReport upper_bound_rate(const UpperRateParams& params);

struct IdentityCheck {
  long n = 0;
  Rational factor;      // exact value of the normalized radial integral
  Rational expected;    // 2/(n+2)
  bool exact_match = false;
};

/// Exact rational verification that the enlargement density integrates to
/// 2/(n+2) times the ball volume.
IdentityCheck blichfeldt_integral_identity(long n);

struct CapCheck {
  double estimate = 0;   // Monte Carlo cap volume
  double sigma = 0;      // standard error of the estimate
  double cylinder = 0;   // h (r^2 - (r-h)^2)^((n-1)/2) vol(B_{n-1})
  long samples = 0;
  bool ok = false;       // estimate <= cylinder + 3 sigma
};

/// Monte Carlo check of the cap-by-cylinder bound; n <= 12, 0 < h <= r.
CapCheck cap_cylinder_bound_check(int n, double r, double h, long samples, std::uint64_t seed = 0);

double log2_ball_volume(long n);  // log2 vol(B_n)
double log2_factorial(long n);

}  // namespace crosskiss
