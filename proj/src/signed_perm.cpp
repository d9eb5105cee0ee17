#include "crosskiss/signed_perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace crosskiss {

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation s;
  s.perm.resize(static_cast<std::size_t>(n));
  std::iota(s.perm.begin(), s.perm.end(), 0);
  s.signs.assign(static_cast<std::size_t>(n), 1);
  return s;
}

RatVec SignedPermutation::apply(const RatVec& v) const {
  if (v.size() != dim()) throw std::invalid_argument("dimension mismatch");
  RatVec out(dim());
  for (int i = 0; i < dim(); ++i) {
    const Rational& x = v[perm[static_cast<std::size_t>(i)]];
    out[i] = signs[static_cast<std::size_t>(i)] < 0 ? -x : x;
  }
  return out;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation inv;
  inv.perm.resize(perm.size());
  inv.signs.resize(perm.size());
  for (int i = 0; i < dim(); ++i) {
    int src = perm[static_cast<std::size_t>(i)];
    inv.perm[static_cast<std::size_t>(src)] = i;
    inv.signs[static_cast<std::size_t>(src)] = signs[static_cast<std::size_t>(i)];
  }
  return inv;
}

Lattice apply(const SignedPermutation& sigma, const Lattice& lattice) {
  RatMatrix rows;
  rows.reserve(lattice.basis().size());
  for (const auto& r : lattice.basis()) rows.push_back(sigma.apply(r));
  return Lattice::from_basis(std::move(rows));
}

namespace {

std::vector<int> support_size_multiset(const MinimalVectorSet& m) {
  std::vector<int> sizes;
  sizes.reserve(m.vectors.size());
  for (const auto& v : m.vectors) sizes.push_back(static_cast<int>(support(v).size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool maps_onto(const SignedPermutation& sigma, const Lattice& from, const Lattice& to) {
  for (const auto& row : from.basis())
    if (!to.contains(sigma.apply(row))) return false;
  return true;
}

}  // namespace

std::optional<SignedPermutation> find_signed_permutation_equivalence(const Lattice& a, const Lattice& b,
                                                                     int max_dim) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  int n = a.dim();
  if (n > max_dim)
    throw std::invalid_argument("search infeasible: n=" + std::to_string(n) + " exceeds threshold " +
                                std::to_string(max_dim) + " (group order 2^n n!)");

  // equivalence-class invariants first
  MinimalVectorSet ma = minimal_vectors(a);
  MinimalVectorSet mb = minimal_vectors(b);
  if (ma.minimum != mb.minimum) return std::nullopt;
  if (ma.vectors.size() != mb.vectors.size()) return std::nullopt;
  if (support_size_multiset(ma) != support_size_multiset(mb)) return std::nullopt;

  SignedPermutation sigma;
  sigma.perm.resize(static_cast<std::size_t>(n));
  std::iota(sigma.perm.begin(), sigma.perm.end(), 0);
  sigma.signs.assign(static_cast<std::size_t>(n), 1);
  do {
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
      for (int i = 0; i < n; ++i) sigma.signs[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
      // verify sigma(b) == a by mutual basis membership
      if (!maps_onto(sigma, b, a)) continue;
      SignedPermutation inv = sigma.inverse();
      if (maps_onto(inv, a, b)) return sigma;
    }
  } while (std::next_permutation(sigma.perm.begin(), sigma.perm.end()));
  return std::nullopt;
}

}  // namespace crosskiss
