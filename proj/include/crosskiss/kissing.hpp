#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crosskiss/lattice.hpp"

namespace crosskiss {

/// Finite point set on the boundary of scale * K_n. Valid when every point
/// has l1 norm == scale and every distinct pair is at l1 distance >= scale.
/// verified_valid is set only by the verifier, never at construction.
struct KissingConfiguration {
  int n = 0;
  Rational scale;
  std::vector<RatVec> points;
  std::optional<bool> verified_valid;
};

struct ValidityReport {
  bool valid = false;
  // first offender in canonical index order, when invalid
  std::optional<int> bad_point;            // index of a point with wrong norm
  Rational bad_point_norm;
  std::optional<std::pair<int, int>> bad_pair;  // indices of a pair too close
  Rational bad_pair_distance;
  std::size_t point_count = 0;
  std::size_t pair_count = 0;
};

ValidityReport verify_kissing_configuration(const KissingConfiguration& cfg);

/// Same check, and stamps cfg.verified_valid with the outcome.
ValidityReport verify_kissing_configuration(KissingConfiguration& cfg);

mpz_class hadwiger_bound(int n);                  // 3^n - 1
mpz_class support_size_bound(int n, int k);       // C(n,k) * 3^k
mpz_class lattice_kissing_upper_bound(int n);     // 12 (2^n - 1)

/// Code alphabet {0,+-1,+-2}: m1 coordinates of absolute value 1, m2 of
/// absolute value 2, common norm m = m1 + 2 m2.
struct CodeParams {
  int n = 0;
  int m1 = 0;
  int m2 = 0;
  int m() const { return m1 + 2 * m2; }
  bool formula_in_range() const { return 2 * m2 < m1; }
  void validate() const;
};

/// Flat storage for code points (int8 coordinates, row-major).
class CodeSet {
public:
  CodeSet() = default;
  CodeSet(CodeParams params) : params_(params) {}
  const CodeParams& params() const { return params_; }
  std::size_t size() const { return params_.n == 0 ? 0 : data_.size() / static_cast<std::size_t>(params_.n); }
  std::span<const std::int8_t> point(std::size_t i) const {
    auto n = static_cast<std::size_t>(params_.n);
    return {data_.data() + i * n, n};
  }
  void append(std::span<const std::int8_t> p) { data_.insert(data_.end(), p.begin(), p.end()); }
  void sort_canonical();
  RatVec point_as_rational(std::size_t i) const;

private:
  CodeParams params_;
  std::vector<std::int8_t> data_;
};

/// All points of the code, canonically sorted. Cardinality equals
/// C(n,m1) C(n-m1,m2) 2^(m1+m2); guarded against oversized requests.
CodeSet construct_X(const CodeParams& params);

/// Closed-form cardinality of construct_X.
mpz_class code_size_closed_form(const CodeParams& params);

/// Streams every code point into fn without materializing the set.
void for_each_code_point(const CodeParams& params,
                         const std::function<void(std::span<const std::int8_t>)>& fn);

enum class BallMethod { bruteforce, formula };

struct BallCount {
  CodeParams params;
  std::vector<std::int8_t> center;  // empty for the formula path
  mpz_class count;
  BallMethod method = BallMethod::bruteforce;
  bool formula_in_range = true;
};

/// Exact |{y in X : l1(center - y) < m}| by a single pass over X (the center
/// itself counts, distance 0). Also recomputed through the 2c1+4c2+2c3 > m
/// coordinate criterion and asserted equal. Guarded at 1e8 distance
/// evaluations.
BallCount ball_size_bruteforce(const CodeParams& params, std::span<const std::int8_t> center);

/// The combinatorial upper bound for the ball size (sum of g terms over
/// 0 <= x1+x2 <= m2, with out-of-range binomials contributing 0). Requires
/// m2 < m1/2 unless allow_out_of_range is set; outside that range the sum is
/// still well defined but carries no guarantee.
BallCount ball_size_formula(const CodeParams& params, bool allow_out_of_range = false);

/// Canonical center (1,..,1,2,..,2,0,..,0).
std::vector<std::int8_t> canonical_center(const CodeParams& params);

/// First-fit greedy over the canonically sorted candidate set, removing the
/// open ball of each chosen point. The result is pairwise >= m and has at
/// least ceil(|X| / ball) points for the center-independent ball size.
CodeSet greedy_kissing_subset(const CodeSet& x);

/// Greedy on general rational point sets (all points must have norm scale).
std::vector<RatVec> greedy_kissing_subset(const std::vector<RatVec>& points, const Rational& scale);

KissingConfiguration to_configuration(const CodeSet& x);

struct LowerBoundCertificate {
  CodeParams params;
  mpz_class size_x;
  mpz_class max_ball_bruteforce;
  mpz_class ball_formula;
  bool formula_in_range = true;
  std::size_t greedy_size = 0;
  mpz_class union_bound_floor;  // ceil(|X| / max_ball_bruteforce)
  bool valid = false;
  double log2_rate = 0.0;       // log2(greedy_size) / n
};

/// Runs the construction at m1 = floor(0.19 n), m2 = floor(0.09 n) and
/// verifies the greedy output. Requires n >= 12.
LowerBoundCertificate lower_bound_certificate(int n);

}  // namespace crosskiss
