#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "crosskiss/lattice.hpp"

namespace crosskiss {

/// Thrown when a requested generating set is not closed under addition
/// (D_n^+ with odd n). Carries an explicit witness: x + y not in the set.
class NotALattice : public std::domain_error {
public:
  NotALattice(std::string msg, RatVec x, RatVec y)
      : std::domain_error(std::move(msg)), witness_x(std::move(x)), witness_y(std::move(y)) {}
  RatVec witness_x;
  RatVec witness_y;
};

/// Catalog keys: zn, dn, dn_plus, half_d4_plus, h2, h2_sum_h2, l_prime, l0,
/// l1, l1_prime. The n argument applies to zn/dn/dn_plus; the rest have a
/// fixed dimension (h2 is planar, the others live in dimension 4).
///
/// Bases: zn is the standard basis. dn uses rows
/// (1,1,0,..),(1,-1,0,..),(0,1,1,0,..),..,(0,..,1,1); d1 is 2Z. h2 uses rows
/// (1,0),(1/2,1/2). h2_sum_h2 is the block sum. The glue-vector lattices
/// (dn_plus, half_d4_plus, l_prime, l0, l1, l1_prime) are built from their
/// defining generating sets via HNF, so their bases are deterministic.
Lattice named_lattice(const std::string& key, int n = 0);

std::vector<std::string> catalog_keys();

/// True iff {D_n generators, (1/2,...,1/2)} spans a set closed under
/// addition, i.e. (1,...,1) lands in D_n. Holds exactly for even n.
bool dn_plus_closure_check(int n);

}  // namespace crosskiss
