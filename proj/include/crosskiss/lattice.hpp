#pragma once

#include <functional>
#include <string>
#include <vector>

#include "crosskiss/linalg.hpp"

namespace crosskiss {

/// Full-rank rational lattice given by basis rows, with the exact inverse
/// cached at construction. Immutable after construction; all operations on
/// it are pure.
class Lattice {
public:
  /// Uses the rows as-is (they become the documented basis).
  static Lattice from_basis(RatMatrix rows);

  /// Spanning set of m >= n rational vectors; basis derived by HNF.
  static Lattice from_generators(const std::vector<RatVec>& gens);

  int dim() const { return n_; }
  const RatMatrix& basis() const { return basis_; }
  const RatMatrix& inverse() const { return inverse_; }
  const Rational& det() const { return det_; }

  /// Exact membership: v in L iff v * inverse is integral.
  bool contains(const RatVec& v) const;

  /// Coefficient vector u with u * basis == v (rational in general).
  RatVec coefficients(const RatVec& v) const;

  bool contains_lattice(const Lattice& other) const;
  bool equals(const Lattice& other) const;

  Lattice scaled(const Rational& c) const;
  static Lattice direct_sum(const Lattice& a, const Lattice& b);

  /// Per-coordinate max |inverse[j][i]| over rows j. If l1_norm(v) <= B then
  /// the coefficients of v satisfy |u_i| <= B * column_max[i], which bounds
  /// the enumeration box.
  const std::vector<Rational>& coefficient_column_max() const { return colmax_; }

private:
  Lattice(int n, RatMatrix basis, RatMatrix inverse);
  int n_ = 0;
  RatMatrix basis_;
  RatMatrix inverse_;
  Rational det_;
  std::vector<Rational> colmax_;
};

/// All vectors of minimal positive l1 norm. Negation-closed, no duplicates,
/// canonically sorted.
struct MinimalVectorSet {
  Rational minimum;
  std::vector<RatVec> vectors;
};

/// Exact l1 lambda_1 by box enumeration. The budget starts at the shortest
/// basis row norm and shrinks as shorter vectors are found.
Rational l1_minimum(const Lattice& lattice);

MinimalVectorSet minimal_vectors(const Lattice& lattice);

/// One representative per +- pair of S, grouped by coset in L/2L.
struct ModTwoClasses {
  std::vector<RatVec> representatives;        // first nonzero coordinate positive, sorted
  std::vector<std::vector<int>> classes;      // indices into representatives, grouped by coset
  std::vector<int> class_sizes() const;
};

ModTwoClasses mod_2l_classes(const Lattice& lattice, const MinimalVectorSet& s);

/// Visits one representative of each +- pair of nonzero lattice vectors v
/// with l1_norm(v) <= bound (normalized by first nonzero coefficient > 0).
void enumerate_up_to(const Lattice& lattice, const Rational& bound,
                     const std::function<void(const RatVec&, const Rational&)>& visit);

}  // namespace crosskiss
