#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace crosskiss {

/// Binary entropy H(s) = -s log2 s - (1-s) log2 (1-s) on [0,1].
/// Endpoints are defined by continuity to exactly 0.
inline double binary_entropy(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw std::domain_error("binary_entropy: argument outside [0,1]");
  if (s == 0.0 || s == 1.0) return 0.0;
  return -s * std::log2(s) - (1.0 - s) * std::log2(1.0 - s);
}

/// log2 of binomial(n, k) via lgamma; safe for n up to 1e15 or so.
inline double log2_binomial(long n, long k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  constexpr double kLn2 = 0.6931471805599453;
  return (std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
          std::lgamma(static_cast<double>(n - k) + 1.0)) /
         kLn2;
}

}  // namespace crosskiss
