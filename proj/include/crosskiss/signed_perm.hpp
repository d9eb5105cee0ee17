#pragma once

#include <optional>
#include <vector>

#include "crosskiss/lattice.hpp"

namespace crosskiss {

/// Element of the symmetry group of the cross-polytope (order 2^n n!):
/// (sigma v)_i = signs[i] * v[perm[i]]. Preserves the l1 norm of every
/// vector, hence maps lattices to lattices of equal l1 minimum.
struct SignedPermutation {
  std::vector<int> perm;   // source index per target coordinate, 0-based
  std::vector<int> signs;  // +1 / -1 per target coordinate

  static SignedPermutation identity(int n);
  int dim() const { return static_cast<int>(perm.size()); }
  RatVec apply(const RatVec& v) const;
  SignedPermutation inverse() const;
};

/// Applies sigma to every basis row (a bijective linear image is again a basis).
Lattice apply(const SignedPermutation& sigma, const Lattice& lattice);

/// Searches for sigma with sigma(b) == a. Candidates are pruned by equal l1
/// minimum, equal minimal-vector count and matching support-size multiset
/// before the 2^n n! sweep; each hit is verified by mutual basis membership.
/// Only feasible for small n; throws for n > max_dim.
std::optional<SignedPermutation> find_signed_permutation_equivalence(const Lattice& a, const Lattice& b,
                                                                     int max_dim = 6);

}  // namespace crosskiss
