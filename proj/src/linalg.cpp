#include "crosskiss/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace crosskiss {

RatMatrix identity_matrix(int n) {
  RatMatrix m(static_cast<std::size_t>(n), RatVec(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][i] = Rational(1);
  return m;
}

RatVec mul_row(const RatVec& u, const RatMatrix& m) {
  if (m.empty() || u.size() != static_cast<int>(m.size()))
    throw std::invalid_argument("dimension mismatch");
  int n = m[0].size();
  RatVec out(n);
  for (int j = 0; j < u.size(); ++j) {
    if (u[j].is_zero()) continue;
    const RatVec& row = m[static_cast<std::size_t>(j)];
    for (int i = 0; i < n; ++i) out[i] += u[j] * row[i];
  }
  return out;
}

std::optional<RatMatrix> invert(const RatMatrix& m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != static_cast<int>(n)) throw std::invalid_argument("matrix not square");
  // augmented [m | I], eliminate to [I | inv]
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][static_cast<int>(j)];
    a[i][n + i] = Rational(1);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[c], a[p]);
    Rational pivot = a[c][c];
    for (auto& x : a[c]) x /= pivot;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Rational f = a[r][c];
      for (std::size_t j = c; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  RatMatrix inv(n, RatVec(static_cast<int>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][static_cast<int>(j)] = a[i][n + j];
  return inv;
}

Rational determinant(RatMatrix m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != static_cast<int>(n)) throw std::invalid_argument("matrix not square");
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][static_cast<int>(c)].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(m[c], m[p]);
      det = -det;
    }
    Rational pivot = m[c][static_cast<int>(c)];
    det *= pivot;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][static_cast<int>(c)].is_zero()) continue;
      Rational f = m[r][static_cast<int>(c)] / pivot;
      for (std::size_t j = c; j < n; ++j)
        m[r][static_cast<int>(j)] -= f * m[c][static_cast<int>(j)];
    }
  }
  return det;
}

namespace {

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return a / g * b;
}

}  // namespace

std::vector<RatVec> hnf_basis_from_generators(const std::vector<RatVec>& gens) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  std::size_t n = static_cast<std::size_t>(gens[0].size());
  for (const auto& g : gens)
    if (static_cast<std::size_t>(g.size()) != n) throw std::invalid_argument("ragged generator list");

  mpz_class d(1);
  for (const auto& g : gens)
    for (const auto& x : g) d = lcm(d, x.den());

  std::vector<std::vector<mpz_class>> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) {
    std::vector<mpz_class> r(n);
    for (std::size_t j = 0; j < n; ++j) {
      Rational scaled = g[static_cast<int>(j)] * Rational(d);
      r[j] = scaled.num();  // exact: d is a common denominator
    }
    rows.push_back(std::move(r));
  }

  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    // gcd-reduce column c below row r until a single pivot remains
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        if (best == rows.size() || cmp(abs(rows[i][c]), abs(rows[best][c])) < 0) best = i;
      }
      if (best == rows.size()) break;  // column is zero below r
      std::swap(rows[r], rows[best]);
      if (sgn(rows[r][c]) < 0)
        for (auto& x : rows[r]) x = -x;
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (sgn(rows[i][c]) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(rows[r][c]) != 0) {
      // reduce entries above the pivot into [0, pivot)
      for (std::size_t i = 0; i < r; ++i) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        if (sgn(q) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
      }
      ++r;
    }
  }
  if (r < n) throw std::invalid_argument("degenerate basis: generators do not span full rank");

  std::vector<RatVec> basis;
  basis.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RatVec row(static_cast<int>(n));
    for (std::size_t j = 0; j < n; ++j) row[static_cast<int>(j)] = Rational(rows[i][j], d);
    basis.push_back(std::move(row));
  }
  return basis;
}

}  // namespace crosskiss
