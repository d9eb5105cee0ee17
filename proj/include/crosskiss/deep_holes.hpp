#pragma once

#include <string>
#include <vector>

#include "crosskiss/lattice.hpp"

namespace crosskiss {

struct ClosestPointResult {
  RatVec point;
  Rational distance;
};

/// Exact l1 nearest lattice point. Enumerates the coefficient box around
/// y * inverse whose radius comes from an initial rounding candidate; ties
/// are broken by the canonical vector order, so the result is deterministic.
ClosestPointResult closest_point_l1(const Lattice& lattice, const RatVec& y);

/// Deep-hole test for H2 (+) H2: closest-point distance exactly 1,
/// cross-checked against the closed-form family
/// (x1, +-(1/2-x1), x2, +-(1/2-x2)) + H2 (+) H2.
bool is_deep_hole_h2sum(const RatVec& y);

/// The four parametrized families of points at l1 distance 1 from
/// H2 (+) H2, parameters in [0, 1/2].
enum class DeepHoleKind { v1, v2, v2prime, v3 };

RatVec deep_hole_point(DeepHoleKind kind, const Rational& x1, const Rational& x2);
const char* deep_hole_kind_name(DeepHoleKind kind);

struct CoveringStep {
  std::string name;
  std::string statement;
  bool verified = false;
};

struct CoveringCertificate {
  Rational value;
  std::vector<CoveringStep> steps;
  bool all_verified = false;
};

/// Covering radius of H2 (+) H2 under l1, computed via the blockwise
/// transform reduction rather than hard-coded. The certificate chain records
/// each verified step: the l1->linf isometry onto Z^2, the linf covering
/// radius 1/2 of Z^2, blockwise additivity of l1 distance, and the equality
/// witness (1/4,1/4,1/4,1/4).
CoveringCertificate covering_radius_h2sum();

}  // namespace crosskiss
