#include "crosskiss/kissing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "crosskiss/parallel.hpp"

namespace crosskiss {

namespace {

constexpr std::size_t kConstructGuard = 20'000'000;   // points materialized
constexpr unsigned long kScanGuard = 100'000'000;     // single-pass distance evaluations

mpz_class pow_ui(long base, unsigned long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return r;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// ascending k-subsets of {0..n-1}
template <typename Fn>
void for_each_combination(int n, int k, Fn&& fn) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  if (k == 0) {
    fn(idx);
    return;
  }
  if (k > n) return;
  for (;;) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

long int_l1_distance_capped(std::span<const std::int8_t> a, std::span<const std::int8_t> b, long cap) {
  long d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d += std::abs(static_cast<long>(a[i]) - static_cast<long>(b[i]));
    if (d >= cap) return d;
  }
  return d;
}

// smallest integer h with 2 x1 + 4 x2 + 2 h > m, i.e. floor(m/2 - x1 - 2 x2) + 1
long exact_h(int m, int x1, int x2) {
  long twice = static_cast<long>(m) - 2L * x1 - 4L * x2;
  long fl = twice >= 0 ? twice / 2 : -((-twice + 1) / 2);
  return fl + 1;
}

}  // namespace

void CodeParams::validate() const {
  if (n < 1) throw std::invalid_argument("infeasible params: n >= 1 required");
  if (m1 < 1 || m2 < 0 || m2 > m1) throw std::invalid_argument("infeasible params: need m1 >= m2 >= 0, m1 >= 1");
  if (m1 + m2 > n) throw std::invalid_argument("infeasible params: m1 + m2 must not exceed n");
}

void CodeSet::sort_canonical() {
  auto n = static_cast<std::size_t>(params_.n);
  std::size_t count = size();
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  const std::int8_t* base = data_.data();
  std::sort(order.begin(), order.end(), [base, n](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(base + a * n, base + (a + 1) * n, base + b * n, base + (b + 1) * n);
  });
  std::vector<std::int8_t> sorted(data_.size());
  for (std::size_t i = 0; i < count; ++i)
    std::copy_n(base + order[i] * n, n, sorted.data() + i * n);
  data_ = std::move(sorted);
}

RatVec CodeSet::point_as_rational(std::size_t i) const {
  auto p = point(i);
  RatVec v(params_.n);
  for (int j = 0; j < params_.n; ++j) v[j] = Rational(static_cast<long>(p[static_cast<std::size_t>(j)]));
  return v;
}

mpz_class code_size_closed_form(const CodeParams& params) {
  params.validate();
  return binomial(params.n, params.m1) * binomial(params.n - params.m1, params.m2) *
         pow_ui(2, static_cast<unsigned long>(params.m1 + params.m2));
}

void for_each_code_point(const CodeParams& params,
                         const std::function<void(std::span<const std::int8_t>)>& fn) {
  params.validate();
  int n = params.n, m1 = params.m1, m2 = params.m2;
  std::vector<std::int8_t> pt(static_cast<std::size_t>(n));
  std::vector<int> free_slots;
  for_each_combination(n, m1, [&](const std::vector<int>& ones) {
    free_slots.clear();
    int oi = 0;
    for (int i = 0; i < n; ++i) {
      if (oi < m1 && ones[static_cast<std::size_t>(oi)] == i) {
        ++oi;
        continue;
      }
      free_slots.push_back(i);
    }
    for_each_combination(n - m1, m2, [&](const std::vector<int>& twos_rel) {
      for (unsigned long mask = 0; mask < (1ul << (m1 + m2)); ++mask) {
        std::fill(pt.begin(), pt.end(), std::int8_t{0});
        for (int k = 0; k < m1; ++k)
          pt[static_cast<std::size_t>(ones[static_cast<std::size_t>(k)])] = (mask >> k) & 1 ? -1 : 1;
        for (int k = 0; k < m2; ++k) {
          int pos = free_slots[static_cast<std::size_t>(twos_rel[static_cast<std::size_t>(k)])];
          pt[static_cast<std::size_t>(pos)] = (mask >> (m1 + k)) & 1 ? -2 : 2;
        }
        fn(pt);
      }
    });
  });
}

CodeSet construct_X(const CodeParams& params) {
  mpz_class total = code_size_closed_form(params);
  if (total > static_cast<unsigned long>(kConstructGuard))
    throw std::runtime_error("construct_X: set too large to materialize (" + total.get_str() + " points)");
  CodeSet out(params);
  for_each_code_point(params, [&out](std::span<const std::int8_t> p) { out.append(p); });
  out.sort_canonical();
  return out;
}

std::vector<std::int8_t> canonical_center(const CodeParams& params) {
  std::vector<std::int8_t> c(static_cast<std::size_t>(params.n), 0);
  for (int i = 0; i < params.m1; ++i) c[static_cast<std::size_t>(i)] = 1;
  for (int i = 0; i < params.m2; ++i) c[static_cast<std::size_t>(params.m1 + i)] = 2;
  return c;
}

BallCount ball_size_bruteforce(const CodeParams& params, std::span<const std::int8_t> center) {
  params.validate();
  if (static_cast<int>(center.size()) != params.n) throw std::invalid_argument("center dimension mismatch");
  int ones = 0, twos = 0;
  for (auto c : center) {
    if (c == 1 || c == -1) ++ones;
    else if (c == 2 || c == -2) ++twos;
    else if (c != 0) throw std::invalid_argument("center not in X: entry outside {0,+-1,+-2}");
  }
  if (ones != params.m1 || twos != params.m2) throw std::invalid_argument("center not in X: wrong weight profile");
  mpz_class total = code_size_closed_form(params);
  if (total > kScanGuard)
    throw std::runtime_error("ball_size_bruteforce: scan guard exceeded (|X| = " + total.get_str() + " > 1e8)");

  // relabeling that carries this center to the canonical one, so the
  // 2c1 + 4c2 + 2c3 > m criterion applies verbatim
  int n = params.n, m1 = params.m1, m2 = params.m2, m = params.m();
  std::vector<int> slot_of_pos(static_cast<std::size_t>(n));
  std::vector<int> sign_of_pos(static_cast<std::size_t>(n), 1);
  {
    int s1 = 0, s2 = m1, s0 = m1 + m2;
    for (int i = 0; i < n; ++i) {
      std::int8_t c = center[static_cast<std::size_t>(i)];
      if (c == 1 || c == -1) slot_of_pos[static_cast<std::size_t>(i)] = s1++;
      else if (c == 2 || c == -2) slot_of_pos[static_cast<std::size_t>(i)] = s2++;
      else slot_of_pos[static_cast<std::size_t>(i)] = s0++;
      if (c < 0) sign_of_pos[static_cast<std::size_t>(i)] = -1;
    }
  }

  unsigned long by_distance = 0, by_criterion = 0;
  for_each_code_point(params, [&](std::span<const std::int8_t> y) {
    long d = int_l1_distance_capped(center, y, m);
    bool in_by_distance = d < m;
    int c1 = 0, c2 = 0, c3 = 0;
    for (int i = 0; i < n; ++i) {
      int slot = slot_of_pos[static_cast<std::size_t>(i)];
      if (slot >= m1 + m2) continue;
      int t = sign_of_pos[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
      if (t == 2) (slot < m1 ? c1 : c2)++;
      else if (t == 1 && slot < m1 + m2) ++c3;
    }
    bool in_by_criterion = 2 * c1 + 4 * c2 + 2 * c3 > m;
    if (in_by_distance != in_by_criterion)
      throw std::logic_error("ball criterion mismatch against the distance definition");
    if (in_by_distance) ++by_distance;
    if (in_by_criterion) ++by_criterion;
  });
  if (by_distance != by_criterion) throw std::logic_error("ball counts disagree");

  BallCount out;
  out.params = params;
  out.center.assign(center.begin(), center.end());
  out.count = mpz_class(by_distance);
  out.method = BallMethod::bruteforce;
  return out;
}

BallCount ball_size_formula(const CodeParams& params, bool allow_out_of_range) {
  params.validate();
  if (!params.formula_in_range() && !allow_out_of_range)
    throw std::domain_error("formula outside validity range: requires m2 < m1/2");

  int m1 = params.m1, m2 = params.m2, n = params.n, m = params.m();
  mpz_class total = 0;
  for (int x1 = 0; x1 <= m2; ++x1) {
    for (int x2 = 0; x1 + x2 <= m2; ++x2) {
      long h = exact_h(m, x1, x2);
      mpz_class g = binomial(m1, x1) * binomial(m2, x2) * binomial(m1 + m2 - x1 - x2, h) *
                    binomial(n - x1 - x2 - h, m1 - h) * binomial(n - m1 - x1 - x2, m2 - x1 - x2);
      long e = m1 + m2 - x1 - x2 - h;
      if (g == 0) continue;
      if (e < 0) throw std::logic_error("negative power with nonzero binomial product");
      total += g * pow_ui(2, static_cast<unsigned long>(e));
    }
  }
  BallCount out;
  out.params = params;
  out.count = total;
  out.method = BallMethod::formula;
  out.formula_in_range = params.formula_in_range();
  return out;
}

CodeSet greedy_kissing_subset(const CodeSet& x) {
  const CodeParams& params = x.params();
  int m = params.m();
  std::size_t count = x.size();
  CodeSet sorted = x;
  sorted.sort_canonical();

  std::vector<char> alive(count, 1);
  CodeSet out(params);
  for (std::size_t i = 0; i < count; ++i) {
    if (!alive[i]) continue;
    auto p = sorted.point(i);
    out.append(p);
    std::size_t rest = count - (i + 1);
    if (rest == 0) continue;
    parallel_chunk_reduce<int>(
        rest, 0,
        [&](std::size_t b, std::size_t e) {
          for (std::size_t k = b; k < e; ++k) {
            std::size_t j = i + 1 + k;
            if (alive[j] && int_l1_distance_capped(p, sorted.point(j), m) < m) alive[j] = 0;
          }
          return 0;
        },
        [](int a, int) { return a; });
  }
  return out;
}

std::vector<RatVec> greedy_kissing_subset(const std::vector<RatVec>& points, const Rational& scale) {
  if (points.size() > 10'000) throw std::runtime_error("rational greedy guard: too many points");
  for (const auto& p : points)
    if (l1_norm(p) != scale) throw std::invalid_argument("greedy input point with norm != scale");
  std::vector<RatVec> sorted = points;
  std::sort(sorted.begin(), sorted.end(), [](const RatVec& a, const RatVec& b) { return canonical_less(a, b); });
  std::vector<char> alive(sorted.size(), 1);
  std::vector<RatVec> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (!alive[i]) continue;
    out.push_back(sorted[i]);
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (alive[j] && l1_distance(sorted[i], sorted[j]) < scale) alive[j] = 0;
  }
  return out;
}

KissingConfiguration to_configuration(const CodeSet& x) {
  KissingConfiguration cfg;
  cfg.n = x.params().n;
  cfg.scale = Rational(x.params().m());
  cfg.points.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) cfg.points.push_back(x.point_as_rational(i));
  return cfg;
}

namespace {

struct PairViolation {
  bool found = false;
  std::size_t i = 0, j = 0;
};

// earlier (i, j) in lex order wins; chunk order already matches row order
PairViolation merge_violations(PairViolation a, PairViolation b) {
  if (!a.found) return b;
  if (!b.found) return a;
  if (a.i != b.i ? a.i < b.i : a.j <= b.j) return a;
  return b;
}

}  // namespace

ValidityReport verify_kissing_configuration(const KissingConfiguration& cfg) {
  ValidityReport rep;
  std::size_t count = cfg.points.size();
  rep.point_count = count;
  rep.pair_count = count * (count - 1) / 2;

  for (const auto& p : cfg.points)
    if (p.size() != cfg.n) throw std::invalid_argument("point dimension mismatch");

  // integer fast path when every coordinate is integral and small
  bool integral = cfg.scale.is_integer() && cfg.scale.num().fits_slong_p();
  for (std::size_t i = 0; i < count && integral; ++i)
    for (int j = 0; j < cfg.n && integral; ++j) {
      const Rational& x = cfg.points[i][j];
      integral = x.is_integer() && x.num().fits_slong_p() && ::abs(x.num().get_si()) <= 1000;
    }

  if (integral) {
    long scale = cfg.scale.num().get_si();
    auto n = static_cast<std::size_t>(cfg.n);
    std::vector<std::int8_t> flat;
    bool fits8 = true;
    for (std::size_t i = 0; i < count && fits8; ++i)
      for (int j = 0; j < cfg.n; ++j) {
        long v = cfg.points[i][j].num().get_si();
        if (v < -127 || v > 127) {
          fits8 = false;
          break;
        }
        flat.push_back(static_cast<std::int8_t>(v));
      }
    if (fits8) {
      for (std::size_t i = 0; i < count; ++i) {
        long norm = 0;
        for (std::size_t j = 0; j < n; ++j) norm += std::abs(static_cast<long>(flat[i * n + j]));
        if (norm != scale) {
          rep.valid = false;
          rep.bad_point = static_cast<int>(i);
          rep.bad_point_norm = Rational(norm);
          return rep;
        }
      }
      auto row_scan = [&](std::size_t b, std::size_t e) {
        PairViolation v;
        for (std::size_t i = b; i < e && !v.found; ++i) {
          std::span<const std::int8_t> pi{flat.data() + i * n, n};
          for (std::size_t j = i + 1; j < count; ++j) {
            std::span<const std::int8_t> pj{flat.data() + j * n, n};
            if (int_l1_distance_capped(pi, pj, scale) < scale) {
              v = {true, i, j};
              break;
            }
          }
        }
        return v;
      };
      PairViolation v = parallel_chunk_reduce<PairViolation>(count, {}, row_scan, merge_violations, 256);
      if (v.found) {
        rep.valid = false;
        rep.bad_pair = {static_cast<int>(v.i), static_cast<int>(v.j)};
        std::span<const std::int8_t> pi{flat.data() + v.i * n, n};
        std::span<const std::int8_t> pj{flat.data() + v.j * n, n};
        rep.bad_pair_distance = Rational(int_l1_distance_capped(pi, pj, 1L << 40));
        return rep;
      }
      rep.valid = true;
      return rep;
    }
  }

  // exact path
  for (std::size_t i = 0; i < count; ++i) {
    Rational norm = l1_norm(cfg.points[i]);
    if (norm != cfg.scale) {
      rep.valid = false;
      rep.bad_point = static_cast<int>(i);
      rep.bad_point_norm = norm;
      return rep;
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      Rational d = l1_distance(cfg.points[i], cfg.points[j]);
      if (d < cfg.scale) {
        rep.valid = false;
        rep.bad_pair = {static_cast<int>(i), static_cast<int>(j)};
        rep.bad_pair_distance = d;
        return rep;
      }
    }
  }
  rep.valid = true;
  return rep;
}

ValidityReport verify_kissing_configuration(KissingConfiguration& cfg) {
  ValidityReport rep = verify_kissing_configuration(static_cast<const KissingConfiguration&>(cfg));
  cfg.verified_valid = rep.valid;
  return rep;
}

mpz_class hadwiger_bound(int n) {
  if (n < 1) throw std::invalid_argument("n >= 1 required");
  return pow_ui(3, static_cast<unsigned long>(n)) - 1;
}

mpz_class support_size_bound(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("1 <= k <= n required");
  return binomial(n, k) * pow_ui(3, static_cast<unsigned long>(k));
}

mpz_class lattice_kissing_upper_bound(int n) {
  if (n < 1) throw std::invalid_argument("n >= 1 required");
  return 12 * (pow_ui(2, static_cast<unsigned long>(n)) - 1);
}

LowerBoundCertificate lower_bound_certificate(int n) {
  if (n < 12) throw std::invalid_argument("infeasible n: need n >= 12 so that m1 >= 2 and m2 >= 1");
  CodeParams params{n, static_cast<int>(19L * n / 100), static_cast<int>(9L * n / 100)};
  params.validate();

  LowerBoundCertificate cert;
  cert.params = params;
  cert.size_x = code_size_closed_form(params);

  CodeSet x = construct_X(params);
  if (mpz_class(static_cast<unsigned long>(x.size())) != cert.size_x)
    throw std::logic_error("constructed set size disagrees with the closed form");

  cert.max_ball_bruteforce = ball_size_bruteforce(params, canonical_center(params)).count;
  BallCount formula = ball_size_formula(params, /*allow_out_of_range=*/true);
  cert.ball_formula = formula.count;
  cert.formula_in_range = formula.formula_in_range;

  CodeSet s = greedy_kissing_subset(x);
  cert.greedy_size = s.size();
  mpz_cdiv_q(cert.union_bound_floor.get_mpz_t(), cert.size_x.get_mpz_t(), cert.max_ball_bruteforce.get_mpz_t());

  ValidityReport rep = verify_kissing_configuration(to_configuration(s));
  cert.valid = rep.valid && mpz_class(static_cast<unsigned long>(cert.greedy_size)) >= cert.union_bound_floor;
  cert.log2_rate = std::log2(static_cast<double>(cert.greedy_size)) / n;
  return cert;
}

}  // namespace crosskiss
