#include <utility>

#include "dancyl/ideals.hpp"

namespace dancyl {

PolyMap::PolyMap(IdealPresentation source, IdealPresentation target, const Assignment& images)
    : source_(std::move(source)), target_(std::move(target)) {
  for (const auto& [name, img] : images) {
    target_.ring().require(name);
    if (img.ring() != source_.ring()) {
      throw RingMismatchError("image of " + name + " is not in the source ring " + source_.ring().to_string());
    }
  }
  for (const auto& name : target_.ring().vars()) {
    auto it = images.find(name);
    if (it == images.end()) throw Error("polynomial map has no image for target variable '" + name + "'");
    images_.push_back(it->second);
  }
}

const MultiPoly& PolyMap::image(std::string_view target_var) const {
  return images_[target_.ring().require(target_var)];
}

Assignment PolyMap::assignment() const {
  Assignment a;
  for (std::size_t i = 0; i < images_.size(); ++i) a.emplace(target_.ring().var(i), images_[i]);
  return a;
}

MultiPoly PolyMap::pull_back(const MultiPoly& g) const {
  if (g.ring() != target_.ring()) throw RingMismatchError("pull_back: polynomial is not in the target ring");
  return substitute(g, assignment(), source_.ring());
}

namespace {

struct PendingCheck {
  std::string label;
  MultiPoly expression;
};

std::vector<PendingCheck> well_defined_checks(const PolyMap& map, const std::string& prefix) {
  std::vector<PendingCheck> out;
  const auto a = map.assignment();
  for (std::size_t i = 0; i < map.target().generators().size(); ++i) {
    const MultiPoly& g = map.target().generators()[i];
    out.push_back({prefix + " maps generator " + std::to_string(i) + " (" + g.to_string() + ") into the source ideal",
                   substitute(g, a, map.source().ring())});
  }
  return out;
}

// For each variable w of first.source: second.image(w) pulled back along first, minus w.
std::vector<PendingCheck> round_trip_checks(const PolyMap& first, const PolyMap& second, const std::string& prefix) {
  std::vector<PendingCheck> out;
  const auto a = first.assignment();
  const Ring& ring = first.source().ring();
  for (const auto& w : ring.vars()) {
    MultiPoly e = substitute(second.image(w), a, ring) - MultiPoly::variable(ring, w);
    out.push_back({prefix + " fixes " + w, std::move(e)});
  }
  return out;
}

std::vector<MembershipWitness> run_checks(std::vector<PendingCheck> checks, const GroebnerBasis& gb, Execution exec) {
  std::vector<MultiPoly> exprs;
  exprs.reserve(checks.size());
  for (auto& c : checks) exprs.push_back(std::move(c.expression));
  auto nfs = normal_forms(exprs, gb, exec);
  std::vector<MembershipWitness> out;
  for (std::size_t i = 0; i < checks.size(); ++i) out.push_back({std::move(checks[i].label), std::move(nfs[i])});
  return out;
}

bool all_hold(const std::vector<MembershipWitness>& ws) {
  for (const auto& w : ws) {
    if (!w.holds()) return false;
  }
  return true;
}

}  // namespace

MorphismCheck check_morphism(const PolyMap& map) {
  const GroebnerBasis gb = groebner_basis(map.source());
  MorphismCheck r;
  r.witnesses = run_checks(well_defined_checks(map, "map"), gb, Execution::Parallel);
  r.ok = all_hold(r.witnesses);
  return r;
}

bool verify_morphism(const PolyMap& map) { return check_morphism(map).ok; }

IsoCertificate::IsoCertificate(PolyMap forward, PolyMap backward)
    : forward_(std::move(forward)), backward_(std::move(backward)) {}

bool IsoCertificate::valid() const {
  return flags_.forward_well_defined && flags_.backward_well_defined && flags_.backward_after_forward &&
         flags_.forward_after_backward;
}

IsoCertificate verify_iso_certificate(IsoCertificate cert, Execution exec) {
  const PolyMap& f = cert.forward_;
  const PolyMap& b = cert.backward_;
  if (f.source() != b.target() || f.target() != b.source()) {
    throw Error("isomorphism certificate: forward and backward maps do not share presentations");
  }
  cert.source_gb_ = groebner_basis(f.source());
  cert.target_gb_ = groebner_basis(f.target());

  auto fw = run_checks(well_defined_checks(f, "forward"), cert.source_gb_, exec);
  auto bw = run_checks(well_defined_checks(b, "backward"), cert.target_gb_, exec);
  auto bf = run_checks(round_trip_checks(f, b, "backward after forward"), cert.source_gb_, exec);
  auto fb = run_checks(round_trip_checks(b, f, "forward after backward"), cert.target_gb_, exec);

  cert.flags_ = {all_hold(fw), all_hold(bw), all_hold(bf), all_hold(fb)};
  cert.witnesses_.clear();
  for (auto* group : {&fw, &bw, &bf, &fb}) {
    for (auto& w : *group) cert.witnesses_.push_back(std::move(w));
  }
  return cert;
}

}  // namespace dancyl
