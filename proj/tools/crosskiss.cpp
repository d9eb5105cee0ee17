#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

#include "crosskiss/catalog.hpp"
#include "crosskiss/deep_holes.hpp"
#include "crosskiss/json_io.hpp"
#include "crosskiss/kissing.hpp"
#include "crosskiss/parallel.hpp"
#include "crosskiss/rates.hpp"
#include "crosskiss/reproduce.hpp"
#include "crosskiss/signed_perm.hpp"

namespace {

using nlohmann::json;
using namespace crosskiss;

struct GlobalOptions {
  int threads = 0;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string argv0;
};

void emit(const json& j, const GlobalOptions& g, const std::string& text_alternative = "") {
  if (g.format == "text" && !text_alternative.empty()) {
    std::cout << text_alternative;
    return;
  }
  std::cout << j.dump(2) << "\n";
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

Lattice lattice_from_flags(const std::string& name, const std::string& basis_file, int n) {
  if (!name.empty() && !basis_file.empty())
    throw CLI::ValidationError("--name and --basis are mutually exclusive");
  if (!name.empty()) return named_lattice(name, n);
  if (!basis_file.empty()) return lattice_from_json(load_json_file(basis_file));
  throw CLI::ValidationError("one of --name or --basis is required");
}

int cmd_min_vectors(const GlobalOptions& g, const std::string& name, const std::string& basis_file, int n) {
  Lattice lat = lattice_from_flags(name, basis_file, n);
  MinimalVectorSet m = minimal_vectors(lat);
  json out = to_json(m);
  out["n"] = lat.dim();
  if (!name.empty()) out["lattice"] = name;
  if (g.format == "csv") {
    std::cout << "minimum," << m.minimum.str() << "\ncount," << m.vectors.size() << "\n";
    for (const auto& v : m.vectors) std::cout << v.str() << "\n";
    return 0;
  }
  emit(out, g);
  return 0;
}

int cmd_equiv(const GlobalOptions& g, const std::string& a, const std::string& b, int n) {
  Lattice la = named_lattice(a, n), lb = named_lattice(b, n);
  auto sigma = find_signed_permutation_equivalence(la, lb);
  json out;
  out["a"] = a;
  out["b"] = b;
  out["equivalent"] = sigma.has_value();
  if (sigma) out["sigma"] = to_json(*sigma);
  emit(out, g, sigma ? "equivalent\n" : "none\n");
  return 0;
}

int cmd_deep_hole(const GlobalOptions& g, const std::string& point) {
  RatVec y = RatVec::parse(point);
  Lattice h2h2 = named_lattice("h2_sum_h2");
  bool deep = is_deep_hole_h2sum(y);
  auto closest = closest_point_l1(h2h2, y);
  json out{{"point", to_json(y)}, {"deep_hole", deep}};
  out.update(to_json(closest));
  emit(out, g);
  return 0;
}

int cmd_covering(const GlobalOptions& g) {
  auto cert = covering_radius_h2sum();
  std::string text = "covering radius = " + cert.value.str() + "\n";
  for (const auto& s : cert.steps) text += "  [" + std::string(s.verified ? "ok" : "FAIL") + "] " + s.name + "\n";
  emit(to_json(cert), g, text);
  return cert.all_verified ? 0 : 1;
}

int cmd_verify(const GlobalOptions& g, const std::string& config_file) {
  KissingConfiguration cfg = configuration_from_json(load_json_file(config_file));
  ValidityReport rep = verify_kissing_configuration(cfg);
  emit(to_json(rep), g);
  if (!rep.valid) {
    std::cerr << "assertion failed: configuration is not a valid kissing configuration\n";
    return 1;
  }
  return 0;
}

int cmd_build(const GlobalOptions& g, int n, int m1, int m2, bool greedy, const std::string& out_file) {
  CodeParams params{n, m1, m2};
  CodeSet x = construct_X(params);
  json out;
  if (greedy) {
    BallCount brute = ball_size_bruteforce(params, canonical_center(params));
    BallCount formula = ball_size_formula(params, /*allow_out_of_range=*/true);
    CodeSet s = greedy_kissing_subset(x);
    ValidityReport rep = verify_kissing_configuration(to_configuration(s));
    mpz_class floor_bound, total = code_size_closed_form(params);
    mpz_cdiv_q(floor_bound.get_mpz_t(), total.get_mpz_t(), brute.count.get_mpz_t());
    json cert{{"params", json{{"n", n}, {"m1", m1}, {"m2", m2}, {"m", params.m()}}},
              {"sizeX", total.get_str()},
              {"maxBall_bruteforce", brute.count.get_str()},
              {"ballFormula", formula.count.get_str()},
              {"formula_in_range", formula.formula_in_range},
              {"greedySize", s.size()},
              {"unionBoundFloor", floor_bound.get_str()},
              {"valid", rep.valid}};
    out = json{{"certificate", cert}, {"configuration", to_json(to_configuration(s))}};
    if (!rep.valid) {
      emit(out, g);
      std::cerr << "assertion failed: greedy subset failed verification\n";
      return 1;
    }
  } else {
    out = to_json(to_configuration(x));
  }
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    f << out.dump(2) << "\n";
    std::cout << "{\"written\": \"" << out_file << "\"}\n";
    return 0;
  }
  emit(out, g);
  return 0;
}

int cmd_bounds(const GlobalOptions& g, int n) {
  json out{{"n", n},
           {"hadwiger", hadwiger_bound(n).get_str()},
           {"lattice_upper", lattice_kissing_upper_bound(n).get_str()}};
  std::string text = "hadwiger (3^n - 1):      " + hadwiger_bound(n).get_str() +
                     "\nlattice bound 12(2^n-1): " + lattice_kissing_upper_bound(n).get_str() + "\n";
  emit(out, g, text);
  return 0;
}

int cmd_rates_lower(const GlobalOptions& g, double z1, double z2, int grid) {
  LowerRateParams params{z1, z2};
  RateReport sup = sup_f(params, grid);
  RateReport rep = lower_bound_rate(params, grid);
  json out = to_json(rep);
  out["params"] = json{{"z1", z1}, {"z2", z2}};
  out["sup_f"] = to_json(sup);
  out["rate"] = rep.value;
  emit(out, g);
  return 0;
}

int cmd_rates_upper(const GlobalOptions& g, double b, double c, double big_r) {
  UpperRateParams params{b, c, big_r};
  UpperBoundReport rep = upper_bound_rate(params);
  json out = to_json(rep);
  out["params"] = json{{"b", b}, {"c", c}, {"R", big_r}};
  emit(out, g);
  return 0;
}

int cmd_rates_sweep(const GlobalOptions&, const std::string& out_file, int nb, int nc, int nr) {
  std::ofstream f(out_file);
  if (!f) throw std::runtime_error("cannot open output file: " + out_file);
  f << "b,c,R,alpha,feasible,xprime,blichfeldt,upper\n";
  char line[256];
  for (int ib = 0; ib < nb; ++ib) {
    for (int ic = 0; ic < nc; ++ic) {
      for (int ir = 0; ir < nr; ++ir) {
        double b = 0.30 + (0.37 - 0.30) * ib / (nb - 1);
        double c = 0.26 + (0.33 - 0.26) * ic / (nc - 1);
        double big_r = 1.52 + (1.62 - 1.52) * ir / (nr - 1);
        UpperRateParams params{b, c, big_r};
        RateReport alpha = alpha_sup(params);
        double xp = xprime_complement_rate(params);
        double bl = blichfeldt_rate(big_r);
        std::snprintf(line, sizeof(line), "%.6f,%.6f,%.6f,%.10g,%d,%.10g,%.10g,%.10g\n", b, c, big_r,
                      alpha.value, alpha.feasible ? 1 : 0, xp, bl,
                      alpha.feasible ? std::max(xp, bl) : std::nan(""));
        f << line;
      }
    }
  }
  std::cout << "{\"written\": \"" << out_file << "\", \"rows\": " << nb * nc * nr << "}\n";
  return 0;
}

int cmd_rates_identity(const GlobalOptions& g, int n) {
  auto check = blichfeldt_integral_identity(n);
  emit(to_json(check), g);
  return check.exact_match ? 0 : 1;
}

int cmd_reproduce(const GlobalOptions& g) {
  ReproduceOptions opts;
  opts.cli_path = g.argv0;
  opts.seed = g.seed;
  ReproductionReport report = run_reproduction(opts);
  if (g.format == "text") {
    std::cout << reproduction_table(report);
  } else {
    json criteria = json::array();
    for (const auto& c : report.criteria) {
      json items = json::array();
      for (const auto& item : c.items)
        items.push_back(json{{"label", item.label},
                             {"expected", item.expected},
                             {"computed", item.computed},
                             {"pass", item.pass}});
      criteria.push_back(json{{"number", c.number}, {"name", c.name}, {"pass", c.pass}, {"items", items}});
    }
    std::cout << json{{"criteria", criteria}, {"pass", report.all_pass}}.dump(2) << "\n";
  }
  if (!report.all_pass) {
    for (const auto& c : report.criteria)
      for (const auto& item : c.items)
        if (!item.pass) std::cerr << "assertion failed: " << item.label << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOptions g;
  g.argv0 = argv[0];

  CLI::App app{"exact toolkit for l1 (cross-polytope) lattice kissing configurations"};
  app.require_subcommand(1);
  app.add_option("--threads", g.threads, "worker thread cap")->envname("CROSSKISS_THREADS");
  app.add_option("--seed", g.seed, "seed for randomized checks (default 0)");
  app.add_option("--format", g.format, "output format: json (default), text, csv")
      ->check(CLI::IsMember({"json", "text", "csv"}));
  app.fallthrough();

  // lattice
  auto* lattice = app.add_subcommand("lattice", "exact lattice computations");
  lattice->require_subcommand(1);
  std::string name, basis_file, key_a, key_b, point;
  int dim = 0;

  auto* minvec = lattice->add_subcommand("min-vectors", "minimal-vector set under the l1 norm");
  minvec->add_option("--name", name, "catalog key (zn, dn, dn_plus, half_d4_plus, h2, h2_sum_h2, l_prime, l0, l1, l1_prime)");
  minvec->add_option("--basis", basis_file, "lattice JSON file {\"n\":int, \"basis\":[[\"p/q\",..],..]}");
  minvec->add_option("--n", dim, "dimension for parametric catalog keys");

  auto* equiv = lattice->add_subcommand("equiv", "signed-permutation equivalence search");
  equiv->add_option("--a", key_a, "first catalog key")->required();
  equiv->add_option("--b", key_b, "second catalog key")->required();
  equiv->add_option("--n", dim, "dimension for parametric catalog keys");

  auto* deephole = lattice->add_subcommand("deep-hole", "deep-hole test against H2 (+) H2");
  deephole->add_option("--point", point, "comma-separated rational coordinates, e.g. 1/4,1/4,1/4,1/4")->required();

  lattice->add_subcommand("covering-h2sum", "certified covering radius of H2 (+) H2");

  // kissing
  auto* kissing = app.add_subcommand("kissing", "kissing configurations and bounds");
  kissing->require_subcommand(1);
  std::string config_file, out_file;
  int n = 0, m1 = 0, m2 = 0;
  bool greedy = false;

  auto* verify = kissing->add_subcommand("verify", "verify a configuration file");
  verify->add_option("--config", config_file, "configuration JSON file")->required();

  auto* build = kissing->add_subcommand("build", "build the {0,+-1,+-2} candidate set (optionally greedy-filtered)");
  build->add_option("--n", n, "dimension")->required();
  build->add_option("--m1", m1, "count of +-1 coordinates")->required();
  build->add_option("--m2", m2, "count of +-2 coordinates")->required();
  build->add_flag("--greedy", greedy, "extract a greedy kissing subset with certificate");
  build->add_option("--out", out_file, "write the result to a file instead of stdout");

  auto* boundscmd = kissing->add_subcommand("bounds", "Hadwiger and lattice kissing bounds");
  boundscmd->add_option("--n", n, "dimension")->required();

  // rates
  auto* rates = app.add_subcommand("rates", "rate-function evaluation and optimization");
  rates->require_subcommand(1);
  double z1 = 0.19, z2 = 0.09, b = 0.334, c = 0.296, big_r = 1.5675;
  int grid = 400, nb = 8, nc = 8, nr = 11;

  auto* lower = rates->add_subcommand("lower", "lower-bound rate (entropy optimization)");
  lower->add_option("--z1", z1, "z1 parameter (default 0.19)");
  lower->add_option("--z2", z2, "z2 parameter (default 0.09)");
  lower->add_option("--grid", grid, "grid resolution (default 400)");

  auto* upper = rates->add_subcommand("upper", "upper-bound rate (enlargement argument)");
  upper->add_option("--b", b, "b parameter (default 0.334)");
  upper->add_option("--c", c, "c parameter (default 0.296)");
  upper->add_option("--R", big_r, "R parameter (default 1.5675)");

  auto* sweep = rates->add_subcommand("sweep", "CSV sweep over the (b, c, R) box");
  sweep->add_option("--out", out_file, "output CSV path")->required();
  sweep->add_option("--nb", nb, "steps in b (default 8)");
  sweep->add_option("--nc", nc, "steps in c (default 8)");
  sweep->add_option("--nr", nr, "steps in R (default 11)");

  auto* identity = rates->add_subcommand("identity", "exact enlargement density identity");
  identity->add_option("--n", n, "dimension")->required();

  // reproduce
  auto* reproduce = app.add_subcommand("reproduce", "re-run the full verification battery");
  reproduce->require_subcommand(1);
  reproduce->add_subcommand("all", "all criteria, with a value table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (g.threads > 0) set_worker_count(g.threads);

  try {
    if (minvec->parsed()) return cmd_min_vectors(g, name, basis_file, dim);
    if (equiv->parsed()) return cmd_equiv(g, key_a, key_b, dim);
    if (deephole->parsed()) return cmd_deep_hole(g, point);
    if (lattice->got_subcommand("covering-h2sum")) return cmd_covering(g);
    if (verify->parsed()) return cmd_verify(g, config_file);
    if (build->parsed()) return cmd_build(g, n, m1, m2, greedy, out_file);
    if (boundscmd->parsed()) return cmd_bounds(g, n);
    if (lower->parsed()) return cmd_rates_lower(g, z1, z2, grid);
    if (upper->parsed()) return cmd_rates_upper(g, b, c, big_r);
    if (sweep->parsed()) return cmd_rates_sweep(g, out_file, nb, nc, nr);
    if (identity->parsed()) return cmd_rates_identity(g, n);
    if (reproduce->parsed()) return cmd_reproduce(g);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "unknown subcommand\n";
  return 2;
}
