#include "crosskiss/catalog.hpp"

#include <algorithm>
#include <cctype>

namespace crosskiss {

namespace {

RatVec unit(int n, int i) {
  RatVec v(n);
  v[i] = Rational(1);
  return v;
}

std::vector<RatVec> dn_rows(int n) {
  if (n < 1) throw std::invalid_argument("dn requires n >= 1");
  if (n == 1) return {RatVec{Rational(2)}};
  std::vector<RatVec> rows;
  RatVec r0(n);
  r0[0] = Rational(1);
  r0[1] = Rational(1);
  rows.push_back(r0);
  RatVec r1(n);
  r1[0] = Rational(1);
  r1[1] = Rational(-1);
  rows.push_back(r1);
  for (int i = 1; i + 1 < n; ++i) {
    RatVec r(n);
    r[i] = Rational(1);
    r[i + 1] = Rational(1);
    rows.push_back(r);
  }
  return rows;
}

RatVec glue(int n) {
  RatVec g(n);
  for (int i = 0; i < n; ++i) g[i] = Rational(1, 2);
  return g;
}

Lattice dn_plus(int n) {
  if (!dn_plus_closure_check(n)) {
    RatVec g = glue(n);
    throw NotALattice("Dn_plus is not a lattice for odd n=" + std::to_string(n) +
                          ": witness (" + g.str() + ") + (" + g.str() + ") = (" +
                          (g + g).str() + ") is not in D_n union (D_n + glue)",
                      g, g);
  }
  auto gens = dn_rows(n);
  gens.push_back(glue(n));
  return Lattice::from_generators(gens);
}

Lattice l_prime() {
  std::vector<RatVec> gens;
  for (int i = 0; i < 4; ++i) gens.push_back(unit(4, i));
  gens.push_back(RatVec{Rational(1, 2), Rational(1, 2), Rational(0), Rational(0)});
  gens.push_back(RatVec{Rational(0), Rational(0), Rational(1, 2), Rational(1, 2)});
  gens.push_back(RatVec{Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)});
  return Lattice::from_generators(gens);
}

Lattice join(const Lattice& base, const RatVec& extra) {
  std::vector<RatVec> gens = base.basis();
  gens.push_back(extra);
  return Lattice::from_generators(gens);
}

}  // namespace

bool dn_plus_closure_check(int n) {
  if (n < 1) throw std::invalid_argument("n >= 1 required");
  // doubling the glue vector gives (1,...,1); closure holds iff it is in D_n
  RatVec doubled = glue(n) + glue(n);
  Lattice dn = Lattice::from_basis(dn_rows(n));
  return dn.contains(doubled);
}

std::vector<std::string> catalog_keys() {
  return {"zn", "dn", "dn_plus", "half_d4_plus", "h2", "h2_sum_h2", "l_prime", "l0", "l1", "l1_prime"};
}

Lattice named_lattice(const std::string& key, int n) {
  std::string k;
  for (char c : key) k += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

  auto need_dim = [&](int required) {
    if (n != 0 && n != required)
      throw std::invalid_argument("lattice '" + k + "' has fixed dimension " + std::to_string(required));
  };

  if (k == "zn") {
    if (n < 1) throw std::invalid_argument("zn requires n >= 1");
    return Lattice::from_basis(identity_matrix(n));
  }
  if (k == "dn") {
    if (n < 1) throw std::invalid_argument("dn requires n >= 1");
    return Lattice::from_basis(dn_rows(n));
  }
  if (k == "dn_plus") {
    if (n < 1) throw std::invalid_argument("dn_plus requires n >= 1");
    return dn_plus(n);
  }
  if (k == "half_d4_plus") {
    need_dim(4);
    return dn_plus(4).scaled(Rational(1, 2));
  }
  if (k == "h2") {
    need_dim(2);
    return Lattice::from_basis({RatVec{Rational(1), Rational(0)}, RatVec{Rational(1, 2), Rational(1, 2)}});
  }
  if (k == "h2_sum_h2") {
    need_dim(4);
    Lattice h2 = named_lattice("h2");
    return Lattice::direct_sum(h2, h2);
  }
  if (k == "l_prime") {
    need_dim(4);
    return l_prime();
  }
  if (k == "l0") {
    need_dim(4);
    return join(l_prime(), RatVec{Rational(1, 4), Rational(-1, 4), Rational(0), Rational(1, 2)});
  }
  if (k == "l1") {
    need_dim(4);
    return join(l_prime(), RatVec{Rational(1, 8), Rational(-3, 8), Rational(1, 8), Rational(-3, 8)});
  }
  if (k == "l1_prime") {
    need_dim(4);
    return join(l_prime(), RatVec{Rational(1, 8), Rational(-3, 8), Rational(3, 8), Rational(-1, 8)});
  }
  throw std::invalid_argument("unknown lattice key '" + key + "'");
}

}  // namespace crosskiss
