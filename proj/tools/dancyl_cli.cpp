// dancyl: analyze surfaces, build and verify cylinder isomorphisms, and work with
// cocycle classes from the command line.
//
// Exit codes: 0 success, 1 mathematical negative, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dancyl/serialize.hpp"
#include "dancyl/surface_text.hpp"

using namespace dancyl;

namespace {

constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

struct Settings {
  std::string out;
  int degree_bound = 0;
  int auxiliary_shift = 0;
  int step = 1;
  int branches = 0;
  std::string surface, surface2, proof_path, class_a, class_b, push_by;
};

void emit(const Json& doc, const std::string& out) {
  const std::string text = doc.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + out);
  f << text;
}

DanielewskiSurface surface_arg(const std::string& text) {
  try {
    return surface_from_text(text);
  } catch (const ParseError& e) {
    throw UsageError("cannot parse surface '" + text + "': " + e.what());
  }
}

CylinderOptions options_from(const Settings& s) {
  CylinderOptions o;
  o.auxiliary_shift = s.auxiliary_shift;
  if (s.degree_bound > 0) {
    o.schedule.clear();
    for (int b : default_schedule()) {
      if (b <= s.degree_bound) o.schedule.push_back(b);
    }
    if (o.schedule.empty() || o.schedule.back() != s.degree_bound) o.schedule.push_back(s.degree_bound);
  }
  return o;
}

// "<laurent>" is g_01 on the line with two origins; "0,1: <laurent>; 0,2: <laurent>"
// lists parts explicitly.
CechClass class_arg(const std::string& text, int branches) {
  try {
    RawCochain raw;
    int top = 1;
    if (text.find(':') == std::string::npos) {
      raw.emplace(PartKey{0, 0, 1}, LaurentPoly::parse(text));
    } else {
      std::stringstream parts(text);
      std::string item;
      while (std::getline(parts, item, ';')) {
        const auto colon = item.find(':');
        const auto comma = item.find(',');
        if (colon == std::string::npos || comma == std::string::npos || comma > colon) {
          throw UsageError("expected 'i,j: <laurent>' in '" + item + "'");
        }
        const int i = std::stoi(item.substr(0, comma));
        const int j = std::stoi(item.substr(comma + 1, colon - comma - 1));
        top = std::max({top, i, j});
        raw.emplace(PartKey{0, i, j}, LaurentPoly::parse(item.substr(colon + 1)));
      }
    }
    const int r = branches > 0 ? branches : top + 1;
    return class_normal_form(raw, MultifoldCurve::line_with_origins(r));
  } catch (const ParseError& e) {
    throw UsageError("cannot parse class '" + text + "': " + e.what());
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed branch index in '" + text + "'");
  }
}

int run_verify(const Settings& s) {
  std::ifstream f(s.proof_path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + s.proof_path);
  Json proof;
  try {
    proof = Json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("not JSON: ") + e.what());
  }
  ProofCheck check;
  try {
    check = verify_proof(proof);
  } catch (const Error& e) {
    throw UsageError(std::string("unusable proof object: ") + e.what());
  }
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["kind"] = "verification";
  out["valid"] = check.ok;
  const auto& fl = check.certificate.flags();
  out["flags"] = {{"forward_well_defined", fl.forward_well_defined},
                  {"backward_well_defined", fl.backward_well_defined},
                  {"backward_after_forward", fl.backward_after_forward},
                  {"forward_after_backward", fl.forward_after_backward}};
  out["failures"] = check.failures;
  emit(out, s.out);
  for (const auto& msg : check.failures) std::cerr << "verify: " << msg << "\n";
  return check.ok ? 0 : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Danielewski surfaces, multifold quotients and certified cylinder isomorphisms", "dancyl"};
  app.require_subcommand(1);
  Settings s;

  auto* analyze = app.add_subcommand("analyze", "Smoothness, fibers, quotient, class and classification");
  analyze->add_option("surface", s.surface, "e.g. \"x^1 z = (y - 1)^1 (y + 1)^1\"")->required();
  analyze->add_option("--out", s.out, "Write the report here instead of stdout");

  auto* iso = app.add_subcommand("cylinder-iso", "Certified isomorphism S x A^1 = S' x A^1");
  iso->add_option("source", s.surface)->required();
  iso->add_option("target", s.surface2)->required();
  iso->add_option("--out", s.out, "Write the proof object here instead of stdout");
  iso->add_option("--degree-bound", s.degree_bound, "Largest splitting degree bound to try")->check(CLI::PositiveNumber);
  iso->add_option("--auxiliary-shift", s.auxiliary_shift, "Pass through the surface deepened by N")->check(CLI::NonNegativeNumber);

  auto* cex = app.add_subcommand("counterexample", "Deepened partner with certified isomorphic cylinders");
  cex->add_option("surface", s.surface)->required();
  cex->add_option("--out", s.out, "Write the proof object here instead of stdout");
  cex->add_option("--degree-bound", s.degree_bound, "Largest splitting degree bound to try")->check(CLI::PositiveNumber);
  cex->add_option("--step", s.step, "Deepen the exponent by k")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Replay a proof object");
  verify->add_option("proof", s.proof_path)->required()->check(CLI::ExistingFile);
  verify->add_option("--out", s.out, "Write the verdict here instead of stdout");

  auto* cocycle = app.add_subcommand("cocycle", "Classes on a line with several origins");
  cocycle->require_subcommand(1);
  auto* push = cocycle->add_subcommand("push", "Class of s * g");
  push->add_option("class", s.class_a)->required();
  push->add_option("s", s.push_by, "Polynomial in x")->required();
  auto* orbit = cocycle->add_subcommand("orbit", "Orbit equivalence; exit 1 when inequivalent");
  orbit->add_option("first", s.class_a)->required();
  orbit->add_option("second", s.class_b)->required();
  auto* profile = cocycle->add_subcommand("profile", "Pole profile");
  profile->add_option("class", s.class_a)->required();
  for (auto* sub : {push, orbit, profile}) {
    sub->add_option("--branches", s.branches, "Number of origins (default: from the indices)")->check(CLI::Range(2, 64));
    sub->add_option("--out", s.out, "Write the result here instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*analyze) {
      emit(analyze_report(surface_arg(s.surface)), s.out);
    } else if (*iso) {
      emit(proof_json(cylinder_iso(surface_arg(s.surface), surface_arg(s.surface2), options_from(s))), s.out);
    } else if (*cex) {
      emit(proof_json(counterexample_pair(surface_arg(s.surface), s.step, options_from(s))), s.out);
    } else if (*verify) {
      return run_verify(s);
    } else if (*push) {
      const CechClass c = class_arg(s.class_a, s.branches);
      MultiPoly by;
      try {
        by = MultiPoly::parse(s.push_by, Ring{"x"});
      } catch (const Error& e) {
        throw UsageError("cannot parse polynomial '" + s.push_by + "': " + e.what());
      }
      Json out;
      out["schema_version"] = kSchemaVersion;
      out["kind"] = "push";
      out["class"] = class_json(c);
      out["by"] = by.to_string();
      out["result"] = class_json(h1_push(c, by));
      emit(out, s.out);
    } else if (*orbit) {
      const CechClass a = class_arg(s.class_a, s.branches);
      const CechClass b = class_arg(s.class_b, s.branches);
      const OrbitVerdict v = orbit_test(a, b);
      Json out;
      out["schema_version"] = kSchemaVersion;
      out["kind"] = "orbit";
      out["first"] = class_json(a);
      out["second"] = class_json(b);
      out["equivalent"] = v.equivalent;
      out["permutation"] = v.permutation;
      out["lambda_power"] = v.equivalent ? Json(to_string(v.lambda_power)) : Json(nullptr);
      out["lambda_root"] = v.lambda_root;
      emit(out, s.out);
      return v.equivalent ? 0 : kNegative;
    } else if (*profile) {
      const CechClass c = class_arg(s.class_a, s.branches);
      Json out;
      out["schema_version"] = kSchemaVersion;
      out["kind"] = "profile";
      out["class"] = class_json(c);
      out["profile"] = profile_json(pole_profile(c));
      out["pole_orders"] = pole_orders(c);
      emit(out, s.out);
    }
  } catch (const UsageError& e) {
    std::cerr << "dancyl: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "dancyl: " << e.what() << "\n";
    return kNegative;
  }
  return 0;
}
