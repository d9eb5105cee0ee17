#include "crosskiss/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace crosskiss {

namespace {

constexpr long kBoxLimit = 1000000;  // per-coordinate guard for enumeration boxes

std::vector<Rational> column_max_abs(const RatMatrix& inv) {
  std::size_t n = inv.size();
  std::vector<Rational> colmax(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational a = abs(inv[j][static_cast<int>(i)]);
      if (a > colmax[i]) colmax[i] = a;
    }
  }
  return colmax;
}

long bounded_floor(const Rational& r) {
  mpz_class f = r.floor();
  if (!f.fits_slong_p() || f > kBoxLimit)
    throw std::runtime_error("enumeration box too large (coordinate bound > 1e6)");
  return f.get_si();
}

}  // namespace

Lattice::Lattice(int n, RatMatrix basis, RatMatrix inverse)
    : n_(n), basis_(std::move(basis)), inverse_(std::move(inverse)) {
  det_ = determinant(basis_);
  colmax_ = column_max_abs(inverse_);
}

Lattice Lattice::from_basis(RatMatrix rows) {
  if (rows.empty()) throw std::invalid_argument("empty basis");
  int n = static_cast<int>(rows.size());
  for (const auto& r : rows)
    if (r.size() != n) throw std::invalid_argument("dimension error: basis must be square");
  auto inv = invert(rows);
  if (!inv) throw std::invalid_argument("degenerate basis");
  return Lattice(n, std::move(rows), std::move(*inv));
}

Lattice Lattice::from_generators(const std::vector<RatVec>& gens) {
  return from_basis(hnf_basis_from_generators(gens));
}

bool Lattice::contains(const RatVec& v) const {
  if (v.size() != n_) throw std::invalid_argument("dimension mismatch");
  for (int i = 0; i < n_; ++i) {
    Rational u;
    for (int j = 0; j < n_; ++j) u += v[j] * inverse_[static_cast<std::size_t>(j)][i];
    if (!u.is_integer()) return false;
  }
  return true;
}

RatVec Lattice::coefficients(const RatVec& v) const {
  if (v.size() != n_) throw std::invalid_argument("dimension mismatch");
  return mul_row(v, inverse_);
}

bool Lattice::contains_lattice(const Lattice& other) const {
  if (other.dim() != n_) throw std::invalid_argument("dimension mismatch");
  for (const auto& row : other.basis_)
    if (!contains(row)) return false;
  return true;
}

bool Lattice::equals(const Lattice& other) const {
  return contains_lattice(other) && other.contains_lattice(*this);
}

Lattice Lattice::scaled(const Rational& c) const {
  if (c.is_zero()) throw std::invalid_argument("zero scale");
  RatMatrix rows;
  rows.reserve(basis_.size());
  for (const auto& r : basis_) rows.push_back(r.scaled(c));
  return from_basis(std::move(rows));
}

Lattice Lattice::direct_sum(const Lattice& a, const Lattice& b) {
  int n = a.dim() + b.dim();
  RatMatrix rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (const auto& r : a.basis_) {
    RatVec row(n);
    for (int i = 0; i < a.dim(); ++i) row[i] = r[i];
    rows.push_back(std::move(row));
  }
  for (const auto& r : b.basis_) {
    RatVec row(n);
    for (int i = 0; i < b.dim(); ++i) row[a.dim() + i] = r[i];
    rows.push_back(std::move(row));
  }
  return from_basis(std::move(rows));
}

namespace {

// Depth-first walk over the coefficient box |u_i| <= bound * colmax_i.
// `bound` may shrink while enumerating (loop limits re-check it each step),
// which is sound: |u_i| > bound * colmax_i forces l1_norm > bound.
struct BoxWalker {
  const Lattice& lattice;
  Rational& bound;
  const std::function<void(const RatVec&, const Rational&)>& visit;
  std::vector<RatVec> partial;  // partial[i] = sum_{j<i} u_j * basis row j

  void run() {
    int n = lattice.dim();
    partial.assign(static_cast<std::size_t>(n) + 1, RatVec(n));
    descend(0, false);
  }

  void descend(int level, bool nonzero_seen) {
    int n = lattice.dim();
    if (level == n) {
      if (!nonzero_seen) return;
      Rational norm = l1_norm(partial[static_cast<std::size_t>(n)]);
      if (norm <= bound) visit(partial[static_cast<std::size_t>(n)], norm);
      return;
    }
    const RatVec& row = lattice.basis()[static_cast<std::size_t>(level)];
    const Rational& cm = lattice.coefficient_column_max()[static_cast<std::size_t>(level)];
    long hi = bounded_floor(bound * cm);
    long lo = nonzero_seen ? -hi : 0;  // first nonzero coefficient positive

    RatVec& acc = partial[static_cast<std::size_t>(level) + 1];
    acc = partial[static_cast<std::size_t>(level)];
    if (lo != 0) acc += row.scaled(Rational(lo));
    for (long u = lo; u <= hi; ++u) {
      // prune against the possibly shrunk bound: |u| <= bound * colmax
      if (Rational(u < 0 ? -u : u) <= bound * cm) descend(level + 1, nonzero_seen || u != 0);
      acc += row;
    }
  }
};

}  // namespace

void enumerate_up_to(const Lattice& lattice, const Rational& bound,
                     const std::function<void(const RatVec&, const Rational&)>& visit) {
  Rational b = bound;
  BoxWalker{lattice, b, visit, {}}.run();
}

Rational l1_minimum(const Lattice& lattice) {
  Rational best;
  for (const auto& row : lattice.basis()) {
    Rational n = l1_norm(row);
    if (best.is_zero() || n < best) best = n;
  }
  std::function<void(const RatVec&, const Rational&)> visit = [&best](const RatVec&, const Rational& norm) {
    if (norm < best) best = norm;
  };
  BoxWalker{lattice, best, visit, {}}.run();
  return best;
}

MinimalVectorSet minimal_vectors(const Lattice& lattice) {
  MinimalVectorSet out;
  out.minimum = l1_minimum(lattice);
  enumerate_up_to(lattice, out.minimum, [&out](const RatVec& v, const Rational& norm) {
    if (norm == out.minimum) out.vectors.push_back(sign_normalized(v));
  });
  std::size_t reps = out.vectors.size();
  out.vectors.reserve(2 * reps);
  for (std::size_t i = 0; i < reps; ++i) out.vectors.push_back(-out.vectors[i]);
  std::sort(out.vectors.begin(), out.vectors.end(),
            [](const RatVec& a, const RatVec& b) { return canonical_less(a, b); });
  return out;
}

std::vector<int> ModTwoClasses::class_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(classes.size());
  for (const auto& c : classes) sizes.push_back(static_cast<int>(c.size()));
  return sizes;
}

ModTwoClasses mod_2l_classes(const Lattice& lattice, const MinimalVectorSet& s) {
  ModTwoClasses out;
  for (const auto& v : s.vectors) {
    if (!lattice.contains(v)) throw std::invalid_argument("minimal vector set does not belong to the lattice");
    RatVec rep = sign_normalized(v);
    if (rep == v) out.representatives.push_back(rep);  // keep one of each +- pair
  }
  std::sort(out.representatives.begin(), out.representatives.end(),
            [](const RatVec& a, const RatVec& b) { return canonical_less(a, b); });

  std::map<std::vector<int>, std::vector<int>> by_coset;
  for (std::size_t i = 0; i < out.representatives.size(); ++i) {
    RatVec u = lattice.coefficients(out.representatives[i]);
    std::vector<int> key(static_cast<std::size_t>(u.size()));
    for (int j = 0; j < u.size(); ++j) {
      if (!u[j].is_integer()) throw std::logic_error("non-integral coefficients for lattice vector");
      mpz_class r = u[j].num() % 2;
      key[static_cast<std::size_t>(j)] = static_cast<int>(::abs(r.get_si()));
    }
    by_coset[key].push_back(static_cast<int>(i));
  }
  // deterministic class order: by smallest representative index
  std::vector<std::vector<int>> classes;
  classes.reserve(by_coset.size());
  for (auto& [key, members] : by_coset) classes.push_back(std::move(members));
  std::sort(classes.begin(), classes.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  out.classes = std::move(classes);
  return out;
}

}  // namespace crosskiss
