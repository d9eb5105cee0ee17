#include "crosskiss/reproduce.hpp"

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "crosskiss/catalog.hpp"
#include "crosskiss/deep_holes.hpp"
#include "crosskiss/entropy.hpp"
#include "crosskiss/kissing.hpp"
#include "crosskiss/rates.hpp"
#include "crosskiss/signed_perm.hpp"

namespace crosskiss {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void add(CriterionResult& c, std::string label, std::string expected, std::string computed, bool pass) {
  c.items.push_back({std::move(label), std::move(expected), std::move(computed), pass});
}

void add_bool(CriterionResult& c, std::string label, bool pass) {
  c.items.push_back({std::move(label), "true", pass ? "true" : "false", pass});
}

Rational random_rational(std::mt19937_64& rng, long num_range, long den_range) {
  std::uniform_int_distribution<long> num(-num_range, num_range);
  std::uniform_int_distribution<long> den(1, den_range);
  return Rational(num(rng), den(rng));
}

RatVec random_ratvec(std::mt19937_64& rng, int n, long num_range, long den_range) {
  RatVec v(n);
  for (int i = 0; i < n; ++i) v[i] = random_rational(rng, num_range, den_range);
  return v;
}

CriterionResult criterion_min_vector_counts() {
  CriterionResult c{1, "minimal-vector counts", {}, false, 0, 10.0 * 7};
  const std::pair<const char*, int> expect[] = {{"half_d4_plus", 40}, {"l0", 36}, {"l1", 28},
                                                {"l1_prime", 28},     {"l_prime", 20}};
  for (const auto& [key, want] : expect) {
    auto m = minimal_vectors(named_lattice(key));
    add(c, std::string("|M(") + key + ")|", std::to_string(want), std::to_string(m.vectors.size()),
        static_cast<int>(m.vectors.size()) == want);
  }
  auto d4 = minimal_vectors(named_lattice("dn", 4));
  add(c, "|M(D4)|", "32", std::to_string(d4.vectors.size()), d4.vectors.size() == 32);
  auto z4 = minimal_vectors(named_lattice("zn", 4));
  add(c, "|M(Z4)|", "8", std::to_string(z4.vectors.size()), z4.vectors.size() == 8);
  return c;
}

CriterionResult criterion_equivalence() {
  CriterionResult c{2, "signed-permutation equivalence", {}, false, 0, 5.0};
  Lattice l1 = named_lattice("l1"), l1p = named_lattice("l1_prime");
  auto sigma = find_signed_permutation_equivalence(l1, l1p);
  bool found = sigma.has_value();
  bool verified = false;
  if (found) {
    verified = true;
    for (const auto& row : l1p.basis()) verified = verified && l1.contains(sigma->apply(row));
    auto inv = sigma->inverse();
    for (const auto& row : l1.basis()) verified = verified && l1p.contains(inv.apply(row));
  }
  add_bool(c, "sigma with sigma(L1') = L1 found and verified", found && verified);
  auto none = find_signed_permutation_equivalence(named_lattice("half_d4_plus"), named_lattice("l0"));
  add(c, "equivalence(half_D4+, L0)", "none", none ? "found" : "none", !none.has_value());
  return c;
}

CriterionResult criterion_covering(std::uint64_t seed) {
  CriterionResult c{3, "covering radius of H2 (+) H2", {}, false, 0, 30.0};
  auto cert = covering_radius_h2sum();
  add(c, "covering_radius_h2sum", "1 (all steps verified)",
      cert.value.str() + (cert.all_verified ? " (all steps verified)" : " (step FAILED)"),
      cert.value == Rational(1) && cert.all_verified);

  Lattice h2h2 = named_lattice("h2_sum_h2");
  const Rational grid[5] = {Rational(0), Rational(1, 8), Rational(1, 4), Rational(3, 8), Rational(1, 2)};
  for (DeepHoleKind kind : {DeepHoleKind::v1, DeepHoleKind::v2, DeepHoleKind::v2prime, DeepHoleKind::v3}) {
    int exact = 0, total = 0;
    for (const auto& x1 : grid)
      for (const auto& x2 : grid) {
        ++total;
        RatVec p = deep_hole_point(kind, x1, x2);
        if (closest_point_l1(h2h2, p).distance == Rational(1)) ++exact;
      }
    add(c, std::string("family ") + deep_hole_kind_name(kind) + " at the 5x5 parameter grid",
        "25/25 at distance exactly 1 (>= 20 sampled)", std::to_string(exact) + "/" + std::to_string(total),
        exact == total && total >= 20);
  }

  std::mt19937_64 rng(seed);
  bool all_within = true;
  for (int t = 0; t < 100; ++t) {
    RatVec y = random_ratvec(rng, 4, 16, 16);
    if (closest_point_l1(h2h2, y).distance > Rational(1)) all_within = false;
  }
  add_bool(c, "100 random rational points at distance <= 1", all_within);
  return c;
}

CriterionResult criterion_containment() {
  CriterionResult c{4, "containment chain and proof-step properties", {}, false, 0, 30.0};
  Lattice lp = named_lattice("l_prime");
  for (const char* key : {"half_d4_plus", "l0", "l1", "l1_prime"}) {
    Lattice big = named_lattice(key);
    bool strict = big.contains_lattice(lp) && !lp.contains_lattice(big);
    add_bool(c, std::string("L' strictly contained in ") + key, strict);
  }
  for (const char* key : {"half_d4_plus", "l0", "l1", "l1_prime", "l_prime"}) {
    Lattice lat = named_lattice(key);
    auto mv = minimal_vectors(lat);
    auto classes = mod_2l_classes(lat, mv);
    bool ok = true;
    for (const auto& cls : classes.classes) {
      for (std::size_t a = 0; a < cls.size() && ok; ++a) {
        for (std::size_t b = a + 1; b < cls.size() && ok; ++b) {
          const RatVec& x = classes.representatives[static_cast<std::size_t>(cls[a])];
          const RatVec& y = classes.representatives[static_cast<std::size_t>(cls[b])];
          RatVec half_sum = (x + y).scaled(Rational(1, 2));
          RatVec half_diff = (x - y).scaled(Rational(1, 2));
          ok = lat.contains(half_sum) && lat.contains(half_diff);
          auto sx = support(x);
          auto sy = support(y);
          for (int i : sx)
            for (int j : sy)
              if (i == j) ok = false;
        }
      }
    }
    add_bool(c, std::string("mod-2L pairs of ") + key + ": (x+-y)/2 in L, disjoint supports", ok);
  }
  return c;
}

CriterionResult criterion_bounds() {
  CriterionResult c{5, "lattice kissing bound inequality", {}, false, 0, 5.0};
  int n0 = -1;
  bool all_hold = true;
  mpz_class two(2);
  for (int n = 120; n >= 1; --n) {
    mpz_class sum = 0;
    for (int k = 1; k <= n / 6; ++k) sum += support_size_bound(n, k);
    mpz_class rhs;
    mpz_ui_pow_ui(rhs.get_mpz_t(), 2, static_cast<unsigned long>(n));
    rhs -= 1;
    lattice_kissing_upper_bound(n);  // exercised for the full range
    if (sum < rhs) n0 = n;
    else {
      all_hold = false;
      break;
    }
  }
  add(c, "sum_{k<=n/6} C(n,k) 3^k < 2^n - 1 for n in 1..120", "holds from n0=1",
      all_hold ? ("holds from n0=" + std::to_string(n0)) : "violated", all_hold && n0 == 1);
  add(c, "12(2^4 - 1)", "180", lattice_kissing_upper_bound(4).get_str(),
      lattice_kissing_upper_bound(4) == 180);
  add(c, "hadwiger_bound(4)", "80", hadwiger_bound(4).get_str(), hadwiger_bound(4) == 80);
  return c;
}

CriterionResult criterion_construction() {
  CriterionResult c{6, "lower-bound code construction", {}, false, 0, 300.0};
  const std::array<CodeParams, 4> tuples{CodeParams{10, 3, 1}, CodeParams{12, 2, 1}, CodeParams{14, 3, 1},
                                         CodeParams{16, 3, 1}};
  for (const auto& params : tuples) {
    std::string tag = "(" + std::to_string(params.n) + "," + std::to_string(params.m1) + "," +
                      std::to_string(params.m2) + ")";
    CodeSet x = construct_X(params);
    mpz_class closed = code_size_closed_form(params);
    add(c, "|X| " + tag, closed.get_str(), std::to_string(x.size()),
        mpz_class(static_cast<unsigned long>(x.size())) == closed);

    BallCount brute = ball_size_bruteforce(params, canonical_center(params));
    BallCount formula = ball_size_formula(params, /*allow_out_of_range=*/true);
    add(c, "ball formula >= bruteforce " + tag, formula.count.get_str() + " >= " + brute.count.get_str(),
        formula.count >= brute.count ? "holds" : "violated", formula.count >= brute.count);

    CodeSet s = greedy_kissing_subset(x);
    mpz_class floor_bound;
    mpz_cdiv_q(floor_bound.get_mpz_t(), closed.get_mpz_t(), brute.count.get_mpz_t());
    bool meets = mpz_class(static_cast<unsigned long>(s.size())) >= floor_bound;
    ValidityReport rep = verify_kissing_configuration(to_configuration(s));
    add(c, "greedy " + tag, "valid and >= ceil(|X|/maxBall) = " + floor_bound.get_str(),
        std::string(rep.valid ? "valid" : "INVALID") + ", size " + std::to_string(s.size()),
        rep.valid && meets);
  }
  return c;
}

CriterionResult criterion_rate_anchors() {
  CriterionResult c{7, "rate-function anchors", {}, false, 0, 60.0};
  LowerRateParams lp{0.19, 0.09};
  RateReport sup = sup_f(lp);
  add(c, "sup_f(0.19, 0.09)", "1.17029 +- 1e-3", fmt(sup.value), std::abs(sup.value - 1.17029) <= 1e-3);
  bool arg_ok = std::abs(sup.argmax[0] - 0.01728) <= 2e-3 && std::abs(sup.argmax[1] - 0.04327) <= 2e-3;
  add(c, "argmax", "(0.01728, 0.04327) +- 2e-3", "(" + fmt(sup.argmax[0]) + ", " + fmt(sup.argmax[1]) + ")",
      arg_ok);
  RateReport lower = lower_bound_rate(lp);
  add(c, "lower_bound_rate", "0.218818 +- 1e-3", fmt(lower.value), std::abs(lower.value - 0.218818) <= 1e-3);
  add(c, "2^rate", ">= 1.1637", fmt(*lower.base), *lower.base >= 1.1637);

  UpperRateParams up{0.334, 0.296, 1.5675};
  double xp = xprime_complement_rate(up);
  add(c, "xprime_complement_rate(0.334, 0.296)", "2.9161 +- 2e-3", fmt(xp), std::abs(xp - 2.9161) <= 2e-3);
  double bl = blichfeldt_rate(1.5675);
  add(c, "blichfeldt_rate(1.5675)", "2.91616 +- 1e-4", fmt(bl), std::abs(bl - 2.91616) <= 1e-4);
  UpperBoundReport ub = upper_bound_rate(up);
  add(c, "upper_bound_rate", "2.9162 +- 1e-3", fmt(ub.value), std::abs(ub.value - 2.9162) <= 1e-3);
  add_bool(c, "alpha feasibility flag (alpha < 1)", ub.alpha.feasible);
  return c;
}

CriterionResult criterion_blichfeldt_identity() {
  CriterionResult c{8, "enlargement density identity", {}, false, 0, 10.0};
  bool all_exact = true;
  for (long n = 1; n <= 50; ++n) {
    auto check = blichfeldt_integral_identity(n);
    all_exact = all_exact && check.exact_match;
  }
  add_bool(c, "radial integral factor equals 2/(n+2) exactly, n = 1..50", all_exact);
  double finite = blichfeldt_finite_n_log2_rate(1.5675, 2000);
  double limit = std::log2(blichfeldt_rate(1.5675));
  add(c, "finite-n rate at n=2000 vs asymptotic", "|diff| <= 5e-3", fmt(std::abs(finite - limit)),
      std::abs(finite - limit) <= 5e-3);
  return c;
}

struct CliRun {
  int exit_code = -1;
  std::string output;
};

CliRun run_cli(const std::string& cli, const std::string& args) {
  CliRun r;
  std::string cmd = "'" + cli + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = status >= 0 ? WEXITSTATUS(status) : -1;
  return r;
}

CriterionResult criterion_property_suites(const ReproduceOptions& options) {
  CriterionResult c{9, "property suites", {}, false, 0, 120.0};
  std::mt19937_64 rng(options.seed);

  bool hadamard_ok = true;
  for (int t = 0; t < 10000 && hadamard_ok; ++t) {
    RatVec v = random_ratvec(rng, 2, 64, 64);
    hadamard_ok = linf_norm(hadamard_pair_transform(v)) == l1_norm(v);
  }
  add_bool(c, "linf(T v) == l1(v) on 10^4 random rational 2-vectors", hadamard_ok);

  bool triangle_ok = true;
  for (int t = 0; t < 10000 && triangle_ok; ++t) {
    RatVec u = random_ratvec(rng, 4, 64, 64);
    RatVec v = random_ratvec(rng, 4, 64, 64);
    triangle_ok = l1_norm(u + v) <= l1_norm(u) + l1_norm(v);
  }
  add_bool(c, "triangle inequality on 10^4 random rational vectors", triangle_ok);

  for (const CodeParams& params : {CodeParams{10, 3, 1}, CodeParams{12, 2, 1}}) {
    CodeSet x = construct_X(params);
    std::uniform_int_distribution<std::size_t> pick(0, x.size() - 1);
    mpz_class first = ball_size_bruteforce(params, canonical_center(params)).count;
    bool independent = true;
    for (int t = 0; t < 5; ++t) {
      auto center = x.point(pick(rng));
      independent = independent && ball_size_bruteforce(params, center).count == first;
    }
    add_bool(c,
             "ball size independent of center, 5 sampled centers (" + std::to_string(params.n) + "," +
                 std::to_string(params.m1) + "," + std::to_string(params.m2) + ")",
             independent);
  }

  if (options.cli_path.empty()) {
    add(c, "CLI byte-identical across --threads 1 vs 8", "identical", "cli path not provided", false);
  } else {
    const char* invocations[] = {
        "lattice min-vectors --name half_d4_plus",
        "kissing build --n 10 --m1 3 --m2 1 --greedy",
        "rates lower",
    };
    bool identical = true;
    for (const char* args : invocations) {
      CliRun a = run_cli(options.cli_path, std::string(args) + " --threads 1");
      CliRun b = run_cli(options.cli_path, std::string(args) + " --threads 8");
      identical = identical && a.exit_code == 0 && b.exit_code == 0 && a.output == b.output &&
                  !a.output.empty();
    }
    add_bool(c, "CLI byte-identical across --threads 1 vs 8 (3 subcommands)", identical);
  }
  return c;
}

}  // namespace

ReproductionReport run_reproduction(const ReproduceOptions& options) {
  ReproductionReport report;
  auto run = [&report](CriterionResult (*fn)()) {
    auto t0 = Clock::now();
    CriterionResult c = fn();
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    report.criteria.push_back(std::move(c));
  };
  run(criterion_min_vector_counts);
  run(criterion_equivalence);
  {
    auto t0 = Clock::now();
    CriterionResult c = criterion_covering(options.seed);
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    report.criteria.push_back(std::move(c));
  }
  run(criterion_containment);
  run(criterion_bounds);
  run(criterion_construction);
  run(criterion_rate_anchors);
  run(criterion_blichfeldt_identity);
  {
    auto t0 = Clock::now();
    CriterionResult c = criterion_property_suites(options);
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    report.criteria.push_back(std::move(c));
  }

  report.all_pass = true;
  for (auto& c : report.criteria) {
    bool items_ok = true;
    for (const auto& item : c.items) items_ok = items_ok && item.pass;
    bool time_ok = c.budget_seconds <= 0 || c.seconds <= c.budget_seconds;
    if (!time_ok)
      c.items.push_back({"time budget", "<= " + fmt(c.budget_seconds) + " s", fmt(c.seconds) + " s", false});
    c.pass = items_ok && time_ok;
    report.all_pass = report.all_pass && c.pass;
  }
  return report;
}

std::string reproduction_table(const ReproductionReport& report) {
  std::ostringstream out;
  std::size_t label_w = 12, exp_w = 8;
  for (const auto& c : report.criteria)
    for (const auto& item : c.items) {
      label_w = std::max(label_w, item.label.size());
      exp_w = std::max(exp_w, item.expected.size());
    }
  for (const auto& c : report.criteria) {
    out << "criterion " << c.number << ": " << c.name << "  [" << (c.pass ? "PASS" : "FAIL") << ", "
        << fmt(c.seconds) << " s]\n";
    for (const auto& item : c.items) {
      out << "  " << item.label;
      out << std::string(label_w - item.label.size() + 2, ' ');
      out << item.expected << std::string(exp_w - item.expected.size() + 2, ' ');
      out << item.computed << "  " << (item.pass ? "ok" : "MISMATCH") << "\n";
    }
  }
  out << (report.all_pass ? "ALL CRITERIA PASS" : "FAILURES PRESENT") << "\n";
  return out.str();
}

}  // namespace crosskiss
