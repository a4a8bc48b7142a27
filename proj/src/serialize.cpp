#include "dancyl/serialize.hpp"

#include "dancyl/surface_text.hpp"

namespace dancyl {

namespace {

Json ring_json(const Ring& r) { return r.vars(); }

Ring ring_from(const Json& j) {
  std::vector<std::string> vars;
  for (const auto& v : j) vars.push_back(v.get<std::string>());
  return Ring(vars);
}

Json polys_json(const std::vector<MultiPoly>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

std::vector<MultiPoly> polys_from(const Json& j, const Ring& r) {
  std::vector<MultiPoly> out;
  for (const auto& p : j) out.push_back(MultiPoly::parse(p.get<std::string>(), r));
  return out;
}

Json assignment_json(const Assignment& a, const Ring& target) {
  Json out = Json::object();
  for (std::size_t i = 0; i < target.size(); ++i) out[target.var(i)] = a.at(target.var(i)).to_string();
  return out;
}

Assignment assignment_from(const Json& j, const Ring& source) {
  Assignment a;
  for (const auto& [name, text] : j.items()) a[name] = MultiPoly::parse(text.get<std::string>(), source);
  return a;
}

Json splitting_json(const Splitting& s) {
  Json out;
  out["degree_bound"] = s.degree_bound;
  out["ring"] = s.h.empty() ? Json::array() : ring_json(s.h.front().ring());
  out["charts"] = polys_json(s.h);
  return out;
}

Splitting splitting_from(const Json& j) {
  return Splitting{polys_from(j.at("charts"), ring_from(j.at("ring"))), j.at("degree_bound").get<int>()};
}

Json flags_json(const IsoCertificate::Flags& f) {
  Json out;
  out["forward_well_defined"] = f.forward_well_defined;
  out["backward_well_defined"] = f.backward_well_defined;
  out["backward_after_forward"] = f.backward_after_forward;
  out["forward_after_backward"] = f.forward_after_backward;
  return out;
}

Json report_json(const InvariantReport& r) {
  Json out;
  out["source_profile"] = profile_json(r.source_profile);
  out["target_profile"] = profile_json(r.target_profile);
  out["profiles_differ"] = r.profiles_differ;
  out["orbit_equivalent"] = r.orbit_equivalent;
  out["conditional_on_fibration_uniqueness"] = r.conditional_on_fibration_uniqueness;
  return out;
}

Json picard_json(const PicardGroup& g) {
  Json out;
  out["free_rank"] = g.free_rank;
  out["torsion"] = g.torsion;
  out["text"] = g.to_string();
  return out;
}

Json equivariant_json(const EquivariantClass& e) {
  Json out;
  out["n"] = e.n;
  out["m"] = e.m;
  out["weight"] = e.weight;
  out["pole_order"] = e.pole_order();
  out["cover_class"] = e.symbolic_only ? Json(nullptr) : class_json(e.cover_class);
  Json parts = Json::array();
  for (const auto& p : e.symbolic_parts) {
    parts.push_back({{"i", p.i}, {"j", p.j}, {"pole_order", p.pole_order}, {"coefficient", p.coefficient}});
  }
  out["symbolic_parts"] = std::move(parts);
  out["compatible"] = equivariant_compatible(e);
  return out;
}

}  // namespace

Json surface_json(const DanielewskiSurface& s) {
  Json out;
  out["text"] = print_surface(s);
  out["n"] = s.n();
  Json roots = Json::array();
  for (const auto& r : s.roots()) roots.push_back({{"value", to_string(r.value)}, {"multiplicity", r.multiplicity}});
  out["roots"] = std::move(roots);
  out["variant"] = to_string(s.variant());
  out["generator"] = s.generator().to_string();
  return out;
}

Json curve_json(const MultifoldCurve& c) {
  Json out;
  out["coordinate"] = c.coordinate();
  out["description"] = c.describe();
  out["is_scheme"] = c.is_scheme();
  Json points = Json::array();
  for (const auto& p : c.marked_points()) {
    Json branches = Json::array();
    for (const auto& b : p.branches) branches.push_back({{"id", b.id}, {"multiplicity", b.multiplicity}, {"label", b.label}});
    points.push_back({{"location", to_string(p.location)}, {"branches", std::move(branches)}});
  }
  out["marked_points"] = std::move(points);
  return out;
}

Json class_json(const CechClass& c) {
  Json out;
  out["text"] = c.to_string();
  Json parts = Json::array();
  for (const auto& [key, part] : c.parts()) {
    parts.push_back({{"location", to_string(key.location)}, {"i", key.i}, {"j", key.j}, {"principal_part", part.to_string()}});
  }
  out["parts"] = std::move(parts);
  return out;
}

Json profile_json(const std::vector<PoleEntry>& profile) {
  Json out = Json::array();
  for (const auto& e : profile) {
    out.push_back({{"location", to_string(e.location)}, {"i", e.i}, {"j", e.j}, {"order", e.order}});
  }
  return out;
}

Json analyze_report(const DanielewskiSurface& s) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["kind"] = "analysis";
  out["surface"] = surface_json(s);
  out["smooth"] = s.smooth();

  Json fibers = Json::array();
  for (const auto& f : degenerate_fibers(s)) {
    Json comps = Json::array();
    for (const auto& c : f.components) {
      comps.push_back({{"label", c.label}, {"root", to_string(c.root)}, {"multiplicity", c.multiplicity}});
    }
    fibers.push_back({{"base_point", to_string(f.base_point)},
                      {"reduced", f.reduced},
                      {"irreducible", f.irreducible},
                      {"degenerate", f.degenerate()},
                      {"components", std::move(comps)}});
  }
  out["fibers"] = std::move(fibers);

  const Classification cls = classify_cancellation(s);
  out["quotient"] = curve_json(cls.curve);

  out["cocycle_class"] = nullptr;
  out["pole_profile"] = nullptr;
  if (s.variant() == Variant::PlainFiber && s.all_simple()) {
    const CechClass c = surface_class(s);
    out["cocycle_class"] = class_json(c);
    out["pole_profile"] = profile_json(pole_profile(c));
  }
  out["equivariant_class"] = nullptr;
  if (s.variant() == Variant::ShiftedFiber && s.roots().size() == 1 && s.roots().front().multiplicity >= 2 && s.n() >= 2) {
    out["equivariant_class"] = equivariant_json(equivariant_class(s.n(), s.roots().front().multiplicity));
  }
  try {
    out["picard_group"] = picard_json(pic_group(cls.curve));
  } catch (const UnsupportedError&) {
    out["picard_group"] = nullptr;
  }
  out["classification"] = to_string(cls.kind);
  out["certificate"] = nullptr;
  return out;
}

Json proof_json(const CylinderIso& iso) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["kind"] = "cylinder_iso";
  out["source"] = surface_json(iso.source);
  out["target"] = surface_json(iso.target);
  out["auxiliary_shift"] = iso.auxiliary_shift;

  Json steps = Json::array();
  for (const auto& st : iso.steps) {
    steps.push_back({{"source", print_surface(st.source)},
                     {"target", print_surface(st.target)},
                     {"h", splitting_json(st.h)},
                     {"k", splitting_json(st.k)}});
  }
  out["steps"] = std::move(steps);

  const IsoCertificate& cert = iso.certificate;
  const Ring& ring = cert.forward().source().ring();
  Json c;
  c["ring"] = ring_json(ring);
  c["source_ideal"] = polys_json(cert.forward().source().generators());
  c["target_ideal"] = polys_json(cert.forward().target().generators());
  c["forward"] = assignment_json(cert.forward().assignment(), cert.forward().target().ring());
  c["backward"] = assignment_json(cert.backward().assignment(), cert.backward().target().ring());
  c["flags"] = flags_json(cert.flags());
  Json witnesses = Json::array();
  for (const auto& w : cert.witnesses()) witnesses.push_back({{"check", w.check}, {"normal_form", w.normal_form.to_string()}});
  c["witnesses"] = std::move(witnesses);
  c["source_basis"] = polys_json(cert.source_basis().basis);
  c["target_basis"] = polys_json(cert.target_basis().basis);
  out["certificate"] = std::move(c);
  return out;
}

Json proof_json(const CounterexamplePair& pair) {
  Json out = proof_json(pair.iso);
  out["kind"] = "counterexample";
  out["invariant_report"] = report_json(pair.report);
  return out;
}

ProofCheck verify_proof(const Json& proof) {
  ProofCheck result;
  try {
    if (!proof.is_object() || proof.value("schema_version", -1) != kSchemaVersion) {
      throw Error("unsupported proof schema version");
    }
    const std::string kind = proof.at("kind").get<std::string>();
    if (kind != "cylinder_iso" && kind != "counterexample") throw Error("not a proof object: kind '" + kind + "'");

    const DanielewskiSurface s = surface_from_text(proof.at("source").at("text").get<std::string>());
    const DanielewskiSurface t = surface_from_text(proof.at("target").at("text").get<std::string>());
    const Json& c = proof.at("certificate");
    const Ring ring = ring_from(c.at("ring"));
    const IdealPresentation src(ring, polys_from(c.at("source_ideal"), ring));
    const IdealPresentation tgt(ring, polys_from(c.at("target_ideal"), ring));
    if (ring != cylinder_ring()) result.failures.push_back("certificate ring is not " + cylinder_ring().to_string());
    if (src != cylinder_ideal(s)) result.failures.push_back("source ideal does not present the source cylinder");
    if (tgt != cylinder_ideal(t)) result.failures.push_back("target ideal does not present the target cylinder");

    IsoCertificate cert(PolyMap(src, tgt, assignment_from(c.at("forward"), ring)),
                        PolyMap(tgt, src, assignment_from(c.at("backward"), ring)));
    result.certificate = verify_iso_certificate(std::move(cert));
    for (const auto& w : result.certificate.witnesses()) {
      if (!w.holds()) result.failures.push_back("membership fails: " + w.check + " has normal form " + w.normal_form.to_string());
    }
    if (flags_json(result.certificate.flags()) != c.at("flags")) {
      result.failures.push_back("recorded flags disagree with the recomputed ones");
    }

    const Json& steps = proof.at("steps");
    if (steps.empty()) result.failures.push_back("proof has no construction steps");
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const Json& st = steps[i];
      const DanielewskiSurface a = surface_from_text(st.at("source").get<std::string>());
      const DanielewskiSurface b = surface_from_text(st.at("target").get<std::string>());
      const std::string where = "step " + std::to_string(i) + ": ";
      if (i == 0 && !(a == s)) result.failures.push_back(where + "does not start at the source");
      if (i + 1 == steps.size() && !(b == t)) result.failures.push_back(where + "does not end at the target");
      if (i > 0 && !(a == surface_from_text(steps[i - 1].at("target").get<std::string>()))) {
        result.failures.push_back(where + "does not continue the previous step");
      }
      const CechClass ca = surface_class(a);
      const CechClass cb = surface_class(b);
      if (!splitting_holds(torsor_to_glued(ca), cb, splitting_from(st.at("h")))) {
        result.failures.push_back(where + "splitting h fails its identity");
      }
      if (!splitting_holds(torsor_to_glued(cb), ca, splitting_from(st.at("k")))) {
        result.failures.push_back(where + "splitting k fails its identity");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed proof object: ") + e.what());
  }
  result.ok = result.failures.empty() && result.certificate.valid();
  return result;
}

}  // namespace dancyl
