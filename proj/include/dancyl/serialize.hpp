#pragma once

// JSON reports and proof objects. Rationals are strings "p/q", polynomials are
// canonical text over an explicit variable list.

#include <string>
#include <vector>

#include "dancyl/cylinder.hpp"
#include "json.hpp"

namespace dancyl {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json surface_json(const DanielewskiSurface& s);
Json curve_json(const MultifoldCurve& c);
Json class_json(const CechClass& c);
Json profile_json(const std::vector<PoleEntry>& profile);

/// Smoothness, fibers, quotient, class, Picard group and classification.
Json analyze_report(const DanielewskiSurface& s);

/// Everything `verify` needs: surfaces, splittings per step and the certificate
/// with its witnesses and reduced bases.
Json proof_json(const CylinderIso& iso);
Json proof_json(const CounterexamplePair& pair);

struct ProofCheck {
  bool ok = false;
  std::vector<std::string> failures;
  IsoCertificate certificate;
};

/// Replays a proof object: re-runs every membership check and every splitting
/// identity and compares the recorded flags. Throws Error when the document is
/// malformed or has an unknown schema version.
ProofCheck verify_proof(const Json& proof);

}  // namespace dancyl
