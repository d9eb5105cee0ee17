#include "crosskiss/json_io.hpp"

#include <nlohmann/json.hpp>

namespace crosskiss {

using nlohmann::json;

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return Rational::parse(j.get<std::string>());
}

json to_json(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

RatVec ratvec_from_json(const json& j) {
  std::vector<Rational> coords;
  for (const auto& x : j) coords.push_back(rational_from_json(x));
  return RatVec(std::move(coords));
}

json lattice_to_json(const Lattice& lattice) {
  json basis = json::array();
  for (const auto& row : lattice.basis()) basis.push_back(to_json(row));
  return json{{"n", lattice.dim()}, {"basis", basis}};
}

Lattice lattice_from_json(const json& j) {
  int n = j.at("n").get<int>();
  RatMatrix rows;
  for (const auto& row : j.at("basis")) rows.push_back(ratvec_from_json(row));
  if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("lattice file: basis row count != n");
  return Lattice::from_basis(std::move(rows));
}

json to_json(const MinimalVectorSet& s) {
  json vecs = json::array();
  for (const auto& v : s.vectors) vecs.push_back(to_json(v));
  return json{{"minimum", s.minimum.str()}, {"count", s.vectors.size()}, {"vectors", vecs}};
}

json to_json(const ModTwoClasses& c) {
  json reps = json::array();
  for (const auto& v : c.representatives) reps.push_back(to_json(v));
  json classes = json::array();
  for (const auto& cls : c.classes) {
    json members = json::array();
    for (int idx : cls) members.push_back(idx + 1);  // 1-based on the wire
    classes.push_back(members);
  }
  return json{{"representatives", reps}, {"classes", classes}, {"class_sizes", c.class_sizes()}};
}

json to_json(const SignedPermutation& sigma) {
  json perm = json::array();
  for (int p : sigma.perm) perm.push_back(p + 1);
  return json{{"perm", perm}, {"signs", sigma.signs}};
}

json to_json(const KissingConfiguration& cfg) {
  json pts = json::array();
  for (const auto& p : cfg.points) pts.push_back(to_json(p));
  json out{{"n", cfg.n}, {"scale", cfg.scale.str()}, {"points", pts}};
  if (cfg.verified_valid) out["valid"] = *cfg.verified_valid;
  return out;
}

KissingConfiguration configuration_from_json(const json& j) {
  KissingConfiguration cfg;
  cfg.n = j.at("n").get<int>();
  cfg.scale = rational_from_json(j.at("scale"));
  for (const auto& p : j.at("points")) cfg.points.push_back(ratvec_from_json(p));
  if (j.contains("valid")) cfg.verified_valid = j.at("valid").get<bool>();
  return cfg;
}

json to_json(const ValidityReport& rep) {
  json out{{"valid", rep.valid}, {"points", rep.point_count}, {"pairs", rep.pair_count}};
  if (rep.bad_point) {
    out["violation"] = json{{"type", "point"},
                            {"index", *rep.bad_point + 1},
                            {"norm", rep.bad_point_norm.str()}};
  } else if (rep.bad_pair) {
    out["violation"] = json{{"type", "pair"},
                            {"i", rep.bad_pair->first + 1},
                            {"j", rep.bad_pair->second + 1},
                            {"distance", rep.bad_pair_distance.str()}};
  }
  return out;
}

json to_json(const ClosestPointResult& r) {
  return json{{"nearest", to_json(r.point)}, {"distance", r.distance.str()}};
}

json to_json(const CoveringCertificate& cert) {
  json steps = json::array();
  for (const auto& s : cert.steps)
    steps.push_back(json{{"name", s.name}, {"statement", s.statement}, {"verified", s.verified}});
  return json{{"covering_radius", cert.value.str()}, {"steps", steps}, {"verified", cert.all_verified}};
}

json to_json(const BallCount& b) {
  json out{{"n", b.params.n},
           {"m1", b.params.m1},
           {"m2", b.params.m2},
           {"count", b.count.get_str()},
           {"method", b.method == BallMethod::bruteforce ? "bruteforce" : "formula"}};
  if (b.method == BallMethod::formula) out["formula_in_range"] = b.formula_in_range;
  if (!b.center.empty()) {
    json c = json::array();
    for (auto x : b.center) c.push_back(static_cast<int>(x));
    out["center"] = c;
  }
  return out;
}

json to_json(const LowerBoundCertificate& cert) {
  return json{{"params", json{{"n", cert.params.n}, {"m1", cert.params.m1}, {"m2", cert.params.m2}, {"m", cert.params.m()}}},
              {"sizeX", cert.size_x.get_str()},
              {"maxBall_bruteforce", cert.max_ball_bruteforce.get_str()},
              {"ballFormula", cert.ball_formula.get_str()},
              {"formula_in_range", cert.formula_in_range},
              {"greedySize", cert.greedy_size},
              {"unionBoundFloor", cert.union_bound_floor.get_str()},
              {"valid", cert.valid},
              {"log2_rate", cert.log2_rate}};
}

json to_json(const RateReport& rep) {
  json out{{"function", rep.function}, {"value", rep.value}, {"feasible", rep.feasible}};
  if (rep.base) out["base"] = *rep.base;
  if (!rep.argmax.empty()) out["argmax"] = rep.argmax;
  if (rep.grid > 0) out["grid"] = rep.grid;
  if (rep.tolerance > 0) out["tolerance"] = rep.tolerance;
  if (!rep.note.empty()) out["note"] = rep.note;
  return out;
}

json to_json(const UpperBoundReport& rep) {
  return json{{"function", "upper_bound_rate"},
              {"value", rep.value},
              {"xprime", rep.xprime},
              {"blichfeldt", rep.blichfeldt},
              {"alpha", to_json(rep.alpha)}};
}

json to_json(const IdentityCheck& c) {
  return json{{"n", c.n}, {"factor", c.factor.str()}, {"expected", c.expected.str()}, {"exact", c.exact_match}};
}

json to_json(const CapCheck& c) {
  return json{{"estimate", c.estimate},
              {"sigma", c.sigma},
              {"cylinder", c.cylinder},
              {"samples", c.samples},
              {"ok", c.ok}};
}

}  // namespace crosskiss
