#pragma once

#include <nlohmann/json_fwd.hpp>

#include "crosskiss/deep_holes.hpp"
#include "crosskiss/kissing.hpp"
#include "crosskiss/lattice.hpp"
#include "crosskiss/rates.hpp"
#include "crosskiss/signed_perm.hpp"

namespace crosskiss {

// Exact values serialize as "p/q" strings; index sets and permutations are
// 1-based on the wire. nlohmann objects keep keys sorted, so dumps are
// byte-stable.

nlohmann::json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RatVec& v);
RatVec ratvec_from_json(const nlohmann::json& j);

nlohmann::json lattice_to_json(const Lattice& lattice);         // {"n", "basis"}
Lattice lattice_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MinimalVectorSet& s);              // {"minimum", "count", "vectors"}
nlohmann::json to_json(const ModTwoClasses& c);

nlohmann::json to_json(const SignedPermutation& sigma);
nlohmann::json to_json(const KissingConfiguration& cfg);        // {"n", "scale", "points"}
KissingConfiguration configuration_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ValidityReport& rep);
nlohmann::json to_json(const ClosestPointResult& r);
nlohmann::json to_json(const CoveringCertificate& cert);
nlohmann::json to_json(const BallCount& b);
nlohmann::json to_json(const LowerBoundCertificate& cert);
nlohmann::json to_json(const RateReport& rep);
nlohmann::json to_json(const UpperBoundReport& rep);
nlohmann::json to_json(const IdentityCheck& c);
nlohmann::json to_json(const CapCheck& c);

}  // namespace crosskiss
