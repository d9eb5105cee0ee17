#pragma once

#include <optional>
#include <vector>

#include "crosskiss/ratvec.hpp"

namespace crosskiss {

using RatMatrix = std::vector<RatVec>;  // rows

RatMatrix identity_matrix(int n);

/// Row vector times matrix: (u M)_i = sum_j u_j M[j][i].
RatVec mul_row(const RatVec& u, const RatMatrix& m);

/// Exact Gauss-Jordan inverse; nullopt when singular. Requires square input.
std::optional<RatMatrix> invert(const RatMatrix& m);

Rational determinant(RatMatrix m);

/// Basis of the lattice spanned by the given generator rows (>= n of them,
/// each of length n, spanning full rank). Computed as a row-style Hermite
/// normal form on the common-denominator integer matrix: upper triangular,
/// positive diagonal, entries above each pivot reduced into [0, pivot).
/// Deterministic, so catalog bases are reproducible. Throws
/// std::invalid_argument on rank deficiency or ragged input.
std::vector<RatVec> hnf_basis_from_generators(const std::vector<RatVec>& gens);

}  // namespace crosskiss
