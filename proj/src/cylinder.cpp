#include "dancyl/cylinder.hpp"

#include <algorithm>
#include <functional>

#include "dancyl/linsolve.hpp"

namespace dancyl {

namespace {

const Ring& chart_cylinder_ring() {
  static const Ring ring{"x", "v", "w"};
  return ring;
}

void require_single_point_at_origin(const MultifoldCurve& curve) {
  if (curve.marked_points().size() > 1) throw UnsupportedError("chart models support a single marked point");
  if (!curve.marked_points().empty() && curve.marked_points().front().location != 0) {
    throw UnsupportedError("chart models expect the marked point at the origin");
  }
}

// All exponent vectors of total degree <= bound, smallest first in grevlex.
std::vector<Exponents> monomials_up_to(std::size_t nvars, int bound) {
  std::vector<Exponents> out;
  Exponents e(nvars, 0);
  // Odometer over bounded compositions.
  std::function<void(std::size_t, int)> rec = [&](std::size_t var, int left) {
    if (var == nvars) {
      out.push_back(e);
      return;
    }
    for (int d = 0; d <= left; ++d) {
      e[var] = d;
      rec(var + 1, left - d);
    }
    e[var] = 0;
  };
  rec(0, bound);
  std::sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) {
    return compare_monomials(a, b, TermOrder::Grevlex) < 0;
  });
  return out;
}

LaurentMulti target_part(const GluedModel& model, const CechClass& target, int i, int j) {
  return target.part(0, i, j).to_multi(model.chart_ring(), model.curve().coordinate());
}

}  // namespace

GluedModel GluedModel::base(const MultifoldCurve& curve) {
  GluedModel m = torsor_to_glued(CechClass::zero(curve));
  m.has_fiber_ = false;
  m.ring_ = Ring{curve.coordinate()};
  return m;
}

LaurentAssignment GluedModel::transition(int i, int j) const {
  if (!has_fiber_) return {};
  if (i == j || curve_.marked_points().empty()) return {{"v", LaurentMulti::variable(ring_, "v")}};
  const LaurentMulti g = class_.part(0, i, j).to_multi(ring_, curve_.coordinate());
  return {{"v", LaurentMulti::variable(ring_, "v") + g}};
}

LaurentMulti GluedModel::move(const MultiPoly& f_on_i, int i, int j) const {
  if (f_on_i.ring() != ring_) throw RingMismatchError("chart expression is not in the chart ring " + ring_.to_string());
  return substitute(f_on_i, transition(j, i), ring_);
}

bool GluedModel::glues(const std::vector<MultiPoly>& f) const {
  if (static_cast<int>(f.size()) != charts_) return false;
  for (int i = 0; i < charts_; ++i) {
    for (int j = i + 1; j < charts_; ++j) {
      // f_j(x, v + g_ij) on chart i must equal f_i.
      if (move(f[static_cast<std::size_t>(j)], j, i) != LaurentMulti(f[static_cast<std::size_t>(i)])) return false;
    }
  }
  return true;
}

GluedModel torsor_to_glued(const CechClass& c, const std::vector<std::string>& extra) {
  require_single_point_at_origin(c.curve());
  GluedModel m;
  m.curve_ = c.curve();
  m.class_ = c;
  std::vector<std::string> vars{c.curve().coordinate(), "v"};
  for (const auto& e : extra) {
    if (std::find(vars.begin(), vars.end(), e) != vars.end()) throw Error("chart coordinate '" + e + "' repeated");
    vars.push_back(e);
  }
  m.ring_ = Ring(vars);
  m.charts_ = c.curve().marked_points().empty() ? 1 : static_cast<int>(c.curve().marked_points().front().branches.size());
  return m;
}

GluedModel attach_surface_functions(GluedModel model, const DanielewskiSurface& s) {
  if (!model.has_fiber_ || model.class_ != surface_class(s)) {
    throw Error("model was not built from the class of " + s.generator().to_string());
  }
  const Ring& r = model.ring_;
  const MultiPoly x = MultiPoly::variable(r, model.curve_.coordinate());
  const MultiPoly v = MultiPoly::variable(r, "v");
  const MultiPoly xn = x.pow(static_cast<unsigned>(s.n()));
  std::vector<MultiPoly> fx, fy, fz;
  for (int i = 0; i < model.charts_; ++i) {
    const Rational& yi = s.roots()[static_cast<std::size_t>(i)].value;
    fx.push_back(x);
    fy.push_back(MultiPoly::constant(r, yi) + xn * v);
    MultiPoly z = v;
    for (std::size_t j = 0; j < s.roots().size(); ++j) {
      if (static_cast<int>(j) != i) z *= MultiPoly::constant(r, yi - s.roots()[j].value) + xn * v;
    }
    fz.push_back(std::move(z));
  }
  for (const auto* f : {&fx, &fy, &fz}) {
    if (!model.glues(*f)) throw CertificateError("surface functions do not glue on " + s.generator().to_string());
  }
  model.globals_["x"] = std::move(fx);
  model.globals_["y"] = std::move(fy);
  model.globals_["z"] = std::move(fz);
  return model;
}

const std::vector<int>& default_schedule() {
  static const std::vector<int> schedule{2, 4, 6, 8};
  return schedule;
}

bool splitting_holds(const GluedModel& model, const CechClass& target, const Splitting& s) {
  if (static_cast<int>(s.h.size()) != model.charts()) return false;
  for (int i = 0; i < model.charts(); ++i) {
    for (int j = i + 1; j < model.charts(); ++j) {
      const LaurentMulti lhs = model.move(s.h[static_cast<std::size_t>(j)], j, i) - LaurentMulti(s.h[static_cast<std::size_t>(i)]);
      if (lhs != target_part(model, target, i, j)) return false;
    }
  }
  return true;
}

Splitting splitting_solve(const GluedModel& model, const CechClass& target, const std::vector<int>& schedule) {
  if (target.curve() != model.curve()) throw NotComparableError("target class lives on a different curve");
  const Ring& ring = model.chart_ring();
  const std::size_t xvar = ring.require(model.curve().coordinate());
  if (model.charts() == 1) {
    Splitting s{{MultiPoly(ring)}, 0};
    if (!splitting_holds(model, target, s)) throw CertificateError("splitting over a single chart failed");
    return s;
  }
  std::vector<int> attempted;
  for (int bound : schedule) {
    attempted.push_back(bound);
    const auto monos = monomials_up_to(ring.size(), bound);
    LinearSystem sys(static_cast<int>(monos.size()));
    for (int i = 1; i < model.charts(); ++i) {
      // h_0(x, v + g_i0) - h_i(x, v) = target_i0 with h_i polynomial: principal parts match.
      std::map<Exponents, SparseRow> rows;
      for (std::size_t k = 0; k < monos.size(); ++k) {
        const LaurentMulti moved = model.move(MultiPoly::monomial(ring, monos[k]), 0, i).principal_part(xvar);
        for (const auto& [e, c] : moved.terms()) rows[e][static_cast<int>(k)] += c;
      }
      const LaurentMulti rhs = target_part(model, target, i, 0);
      for (const auto& [e, c] : rhs.terms()) rows[e];
      for (auto& [e, row] : rows) {
        Rational b = 0;
        auto it = rhs.terms().find(e);
        if (it != rhs.terms().end()) b = it->second;
        sys.add_equation(std::move(row), b);
      }
    }
    auto sol = sys.solve();
    if (!sol) continue;
    MultiPoly h0(ring);
    for (std::size_t k = 0; k < monos.size(); ++k) {
      if ((*sol)[k] != 0) h0.add_term(monos[k], (*sol)[k]);
    }
    Splitting s;
    s.degree_bound = bound;
    s.h.push_back(h0);
    for (int i = 1; i < model.charts(); ++i) {
      s.h.push_back((model.move(h0, 0, i) - target_part(model, target, i, 0)).to_poly());
    }
    if (!splitting_holds(model, target, s)) throw CertificateError("splitting failed its re-verification");
    return s;
  }
  throw NoSplittingFound(attempted);
}

const Ring& cylinder_ring() {
  static const Ring ring{"x", "y", "z", "w"};
  return ring;
}

IdealPresentation cylinder_ideal(const DanielewskiSurface& s) {
  return IdealPresentation(cylinder_ring(), {s.generator().in_ring(cylinder_ring())});
}

MultiPoly express_on_cylinder(const MultiPoly& chart0, const DanielewskiSurface& s) {
  const Ring& c = chart_cylinder_ring();
  const Ring& r = cylinder_ring();
  const MultiPoly f = chart0.in_ring(c);
  const LaurentMulti y = LaurentMulti::variable(r, "y");
  const LaurentMulti v = (y - LaurentMulti::constant(r, s.roots().front().value)).shifted(0, -s.n());
  const LaurentMulti g = substitute(f, {{"x", LaurentMulti::variable(r, "x")}, {"v", v}, {"w", LaurentMulti::variable(r, "w")}}, r);
  const int k = std::max(0, -g.min_exponent(0));
  MultiPoly G = g.shifted(0, k).to_poly();

  // G / x^k is regular on S x A^1. G vanishes on the fiber x = 0, where P(y) = 0 is
  // reduced, so G(0, y, z, w) = P(y) Q and P(y) = x^n z on S.
  const MultiPoly p = s.p().in_ring(r);
  const MultiPoly x = MultiPoly::variable(r, "x");
  const MultiPoly shift_z = x.pow(static_cast<unsigned>(s.n() - 1)) * MultiPoly::variable(r, "z");
  for (int step = 0; step < k; ++step) {
    MultiPoly g0(r), rest(r);
    for (const auto& [e, coeff] : G.terms()) {
      if (e[0] == 0) {
        g0.add_term(e, coeff);
      } else {
        Exponents lower = e;
        lower[0] -= 1;
        rest.add_term(lower, coeff);
      }
    }
    Reduction q = divide(g0, {p}, TermOrder::Grevlex);
    if (!q.remainder.is_zero()) {
      throw CertificateError("chart function is not regular on the cylinder over " + s.generator().to_string());
    }
    G = rest + shift_z * q.quotients.front();
  }
  return G;
}

namespace {

struct StepMaps {
  Assignment forward;
  Assignment backward;
};

// Fiber coordinate v_0 and its partner functions on chart 0 of S x A^1.
struct SurfaceChart {
  MultiPoly y;
  MultiPoly z;
};

SurfaceChart surface_chart(const DanielewskiSurface& s, const MultiPoly& fiber) {
  const Ring& c = chart_cylinder_ring();
  const MultiPoly xn = MultiPoly::variable(c, "x").pow(static_cast<unsigned>(s.n()));
  const Rational& y0 = s.roots().front().value;
  SurfaceChart out{MultiPoly::constant(c, y0) + xn * fiber, fiber};
  for (std::size_t j = 1; j < s.roots().size(); ++j) {
    out.z *= MultiPoly::constant(c, y0 - s.roots()[j].value) + xn * fiber;
  }
  return out;
}

StepMaps direct_step(const DanielewskiSurface& s, const DanielewskiSurface& t, const CylinderOptions& opt,
                     CylinderStep& record) {
  const CechClass c = surface_class(s);
  const CechClass ct = surface_class(t);
  if (c.curve() != ct.curve()) {
    throw NotComparableError("quotient curves differ: " + c.curve().describe() + " vs " + ct.curve().describe());
  }
  record.source = s;
  record.target = t;
  record.h = splitting_solve(torsor_to_glued(c), ct, opt.schedule);
  record.k = splitting_solve(torsor_to_glued(ct), c, opt.schedule);

  const Ring& cr = chart_cylinder_ring();
  const MultiPoly v = MultiPoly::variable(cr, "v");
  const MultiPoly w = MultiPoly::variable(cr, "w");
  const MultiPoly h0 = record.h.h.front().in_ring(cr);
  const MultiPoly k0 = record.k.h.front().in_ring(cr);

  StepMaps maps;
  const MultiPoly& x4 = MultiPoly::variable(cylinder_ring(), "x");
  {
    // On chart 0 of S: v'_0 = w + h_0(x, v_0) and u = v_0 - k_0(x, v'_0).
    const MultiPoly vt = w + h0;
    const SurfaceChart img = surface_chart(t, vt);
    const MultiPoly u = v - substitute(k0, {{"v", vt}}, cr);
    maps.forward = {{"x", x4},
                    {"y", express_on_cylinder(img.y, s)},
                    {"z", express_on_cylinder(img.z, s)},
                    {"w", express_on_cylinder(u, s)}};
  }
  {
    // On chart 0 of S': v_0 = u + k_0(x, v'_0) and w = v'_0 - h_0(x, v_0).
    const MultiPoly vs = w + k0;
    const SurfaceChart img = surface_chart(s, vs);
    const MultiPoly back_w = v - substitute(h0, {{"v", vs}}, cr);
    maps.backward = {{"x", x4},
                     {"y", express_on_cylinder(img.y, t)},
                     {"z", express_on_cylinder(img.z, t)},
                     {"w", express_on_cylinder(back_w, t)}};
  }
  return maps;
}

Assignment compose(const Assignment& outer, const Assignment& inner) {
  Assignment out;
  for (const auto& [name, img] : outer) out[name] = substitute(img, inner, cylinder_ring());
  return out;
}

Assignment reduce_images(Assignment a, const GroebnerBasis& gb) {
  for (auto& [name, img] : a) img = gb.normal_form(img);
  return a;
}

}  // namespace

CylinderIso cylinder_iso(const DanielewskiSurface& s, const DanielewskiSurface& s_prime, const CylinderOptions& options) {
  if (options.auxiliary_shift < 0) throw Error("auxiliary shift must be non-negative");
  CylinderIso iso;
  iso.source = s;
  iso.target = s_prime;
  iso.auxiliary_shift = options.auxiliary_shift;

  std::vector<DanielewskiSurface> chain{s};
  if (options.auxiliary_shift > 0) chain.push_back(s.deepened(options.auxiliary_shift));
  chain.push_back(s_prime);

  Assignment forward, backward;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    CylinderStep step;
    StepMaps m = direct_step(chain[i], chain[i + 1], options, step);
    iso.steps.push_back(std::move(step));
    if (i == 0) {
      forward = std::move(m.forward);
      backward = std::move(m.backward);
    } else {
      forward = compose(m.forward, forward);
      backward = compose(backward, m.backward);
    }
  }

  const IdealPresentation src = cylinder_ideal(s);
  const IdealPresentation tgt = cylinder_ideal(s_prime);
  forward = reduce_images(std::move(forward), groebner_basis(src));
  backward = reduce_images(std::move(backward), groebner_basis(tgt));
  iso.certificate = verify_iso_certificate(IsoCertificate(PolyMap(src, tgt, forward), PolyMap(tgt, src, backward)),
                                           options.exec);
  if (!iso.certificate.valid()) {
    std::string failed;
    for (const auto& wit : iso.certificate.witnesses()) {
      if (!wit.holds()) failed += "\n  " + wit.check;
    }
    throw CertificateError("cylinder isomorphism failed its certificate:" + failed);
  }
  return iso;
}

CounterexamplePair counterexample_pair(const DanielewskiSurface& s, int k, const CylinderOptions& options) {
  if (classify_cancellation(s).kind == Classification::Kind::LineBundle) {
    throw LineBundleError("x^n z = P(y) with no degenerate fiber is a line bundle; cancellation holds");
  }
  if (k < 1) throw Error("deepening step must be positive");
  CounterexamplePair out{s, s.deepened(k), {}, {}};
  out.iso = cylinder_iso(s, out.partner, options);
  const CechClass c = surface_class(s);
  const CechClass cp = surface_class(out.partner);
  out.report.source_profile = pole_profile(c);
  out.report.target_profile = pole_profile(cp);
  out.report.profiles_differ = out.report.source_profile != out.report.target_profile;
  out.report.orbit_equivalent = orbit_equivalent(c, cp);
  return out;
}

}  // namespace dancyl
