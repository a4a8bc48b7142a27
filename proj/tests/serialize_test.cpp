#include "dancyl/serialize.hpp"

#include "dancyl/surface_text.hpp"
#include "doctest.h"

using namespace dancyl;

namespace {

const DanielewskiSurface kS0 = surface_from_text("x^1 z = (y - 1)^1 (y + 1)^1");
const DanielewskiSurface kS1 = surface_from_text("x^2 z = (y - 1)^1 (y + 1)^1");

Json round_trip(const Json& j) { return Json::parse(j.dump()); }

}  // namespace

TEST_CASE("analysis report of the double-origin surface") {
  const Json r = analyze_report(kS0);
  CHECK(r["schema_version"] == kSchemaVersion);
  CHECK(r["smooth"] == true);
  CHECK(r["fibers"].size() == 1);
  CHECK(r["fibers"][0]["reduced"] == true);
  CHECK(r["fibers"][0]["irreducible"] == false);
  CHECK(r["fibers"][0]["components"].size() == 2);
  CHECK(r["quotient"]["marked_points"][0]["branches"].size() == 2);
  CHECK(r["cocycle_class"]["text"] == "2*x^-1");
  CHECK(r["picard_group"]["text"] == "Z");
  CHECK(r["classification"] == "CounterexampleCandidate");
}

TEST_CASE("analysis report of other shapes") {
  const Json line = analyze_report(surface_from_text("x z = (y - 3)"));
  CHECK(line["classification"] == "LineBundle");
  CHECK(line["quotient"]["marked_points"].empty());
  CHECK(line["picard_group"]["text"] == "0");

  const Json mult = analyze_report(surface_from_text("x^2 z = y^2 - x"));
  CHECK(mult["cocycle_class"].is_null());
  CHECK(mult["quotient"]["is_scheme"] == false);
  CHECK(mult["picard_group"]["text"] == "Z_2");
  CHECK(mult["equivariant_class"]["cover_class"]["text"] == "2*y^-2");
  CHECK(mult["equivariant_class"]["compatible"] == true);
}

TEST_CASE("proof objects replay") {
  const Json proof = round_trip(proof_json(cylinder_iso(kS0, kS1)));
  const ProofCheck ok = verify_proof(proof);
  CHECK(ok.ok);
  CHECK(ok.failures.empty());
  CHECK(ok.certificate.valid());

  const Json pair = round_trip(proof_json(counterexample_pair(kS0)));
  CHECK(pair["kind"] == "counterexample");
  CHECK(pair["invariant_report"]["profiles_differ"] == true);
  CHECK(pair["invariant_report"]["orbit_equivalent"] == false);
  CHECK(verify_proof(pair).ok);

  CylinderOptions via;
  via.auxiliary_shift = 1;
  CHECK(verify_proof(round_trip(proof_json(cylinder_iso(kS0, kS1, via)))).ok);
}

TEST_CASE("tampered proof objects are rejected") {
  const Json proof = round_trip(proof_json(cylinder_iso(kS0, kS1)));

  Json image = proof;
  image["certificate"]["backward"]["w"] = "x*w";
  const ProofCheck bad = verify_proof(image);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.failures.empty());

  Json swapped = proof;
  swapped["target"]["text"] = "x^3 z = (y - 1)^1 (y + 1)^1";
  CHECK_FALSE(verify_proof(swapped).ok);

  Json split = proof;
  split["steps"][0]["h"]["charts"][1] = "v^2";
  const ProofCheck s = verify_proof(split);
  CHECK_FALSE(s.ok);
  CHECK(s.certificate.valid());

  Json flags = proof;
  flags["certificate"]["flags"]["forward_well_defined"] = false;
  CHECK_FALSE(verify_proof(flags).ok);

  Json version = proof;
  version["schema_version"] = 99;
  CHECK_THROWS_AS(verify_proof(version), Error);

  Json missing = proof;
  missing.erase("certificate");
  CHECK_THROWS_AS(verify_proof(missing), Error);
}

TEST_CASE("serialization is deterministic") {
  CHECK(proof_json(cylinder_iso(kS0, kS1)).dump() == proof_json(cylinder_iso(kS0, kS1)).dump());
  CHECK(analyze_report(kS0).dump() == analyze_report(kS0).dump());
}
