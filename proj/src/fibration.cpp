#include "dancyl/fibration.hpp"

#include <algorithm>
#include <set>

namespace dancyl {

std::string to_string(Variant v) { return v == Variant::PlainFiber ? "PlainFiber" : "ShiftedFiber"; }

std::string to_string(Classification::Kind k) {
  return k == Classification::Kind::LineBundle ? "LineBundle" : "CounterexampleCandidate";
}

const Ring& surface_ring() {
  static const Ring ring{"x", "y", "z"};
  return ring;
}

namespace {

MultiPoly p_of(const std::vector<Root>& roots) {
  const Ring& r = surface_ring();
  MultiPoly p = MultiPoly::constant(r, 1);
  const MultiPoly y = MultiPoly::variable(r, "y");
  for (const auto& root : roots) p *= (y - MultiPoly::constant(r, root.value)).pow(root.multiplicity);
  return p;
}

std::string root_label(const Rational& a) { return "y = " + to_string(a); }

}  // namespace

bool DanielewskiSurface::all_simple() const {
  return std::all_of(roots_.begin(), roots_.end(), [](const Root& r) { return r.multiplicity == 1; });
}

MultiPoly DanielewskiSurface::p() const { return p_of(roots_); }

DanielewskiSurface DanielewskiSurface::deepened(int k) const {
  if (k < 1) throw Error("deepening step must be positive");
  return build_surface(n_ + k, roots_, variant_);
}

DanielewskiSurface build_surface(int n, std::vector<Root> roots, Variant variant) {
  if (n < 1) throw Error("exponent n must be at least 1, got " + std::to_string(n));
  if (roots.empty()) throw Error("P(y) needs at least one root");
  std::set<Rational> seen;
  for (auto& r : roots) {
    r.value.canonicalize();
    if (r.multiplicity < 1) throw Error("root multiplicity must be positive");
    if (!seen.insert(r.value).second) throw Error("duplicate root y = " + to_string(r.value));
  }

  DanielewskiSurface s;
  s.n_ = n;
  s.roots_ = std::move(roots);
  s.variant_ = variant;
  if (variant == Variant::PlainFiber && !s.all_simple()) {
    throw SingularInputError("x^n z = P(y) with a multiple root of P is singular along the fiber x = 0");
  }

  const Ring& r = surface_ring();
  MultiPoly f = MultiPoly::variable(r, "x").pow(n) * MultiPoly::variable(r, "z") - p_of(s.roots_);
  if (variant == Variant::ShiftedFiber) f += MultiPoly::variable(r, "x");
  s.presentation_ = {IdealPresentation(r, {f}), "x"};
  s.smooth_ = jacobian_smooth(f);
  if (!s.smooth_) throw SingularInputError("surface " + f.to_string() + " = 0 is singular");
  return s;
}

std::vector<FiberDecomposition> degenerate_fibers(const DanielewskiSurface& s) {
  FiberDecomposition fib;
  fib.base_point = 0;
  for (const auto& root : s.roots()) {
    fib.components.push_back({root_label(root.value), root.value, root.multiplicity});
    if (root.multiplicity > 1) fib.reduced = false;
  }
  fib.irreducible = fib.components.size() == 1;
  return {fib};
}

MultifoldCurve::MultifoldCurve(std::vector<MarkedPoint> points, std::string coordinate)
    : coordinate_(std::move(coordinate)), points_(std::move(points)) {
  std::set<Rational> seen;
  for (auto& p : points_) {
    p.location.canonicalize();
    if (!seen.insert(p.location).second) throw Error("marked point " + to_string(p.location) + " repeated");
    if (p.branches.empty()) throw Error("marked point " + to_string(p.location) + " has no branches");
    for (const auto& b : p.branches) {
      if (b.multiplicity < 1) throw Error("branch multiplicity must be positive");
    }
  }
}

MultifoldCurve MultifoldCurve::line_with_origins(int r, const Rational& location, std::string coordinate) {
  if (r < 1) throw Error("need at least one branch");
  MarkedPoint p{location, {}};
  for (int i = 0; i < r; ++i) p.branches.push_back({i, 1, "b" + std::to_string(i)});
  return MultifoldCurve({p}, std::move(coordinate));
}

MultifoldCurve MultifoldCurve::multiple_point(int m, const Rational& location, std::string coordinate) {
  if (m < 1) throw Error("multiplicity must be positive");
  return MultifoldCurve({MarkedPoint{location, {Branch{0, m, "b0"}}}}, std::move(coordinate));
}

const MarkedPoint* MultifoldCurve::point_at(const Rational& location) const {
  for (const auto& p : points_) {
    if (p.location == location) return &p;
  }
  return nullptr;
}

bool MultifoldCurve::is_scheme() const {
  for (const auto& p : points_) {
    for (const auto& b : p.branches) {
      if (b.multiplicity != 1) return false;
    }
  }
  return true;
}

bool MultifoldCurve::is_base() const {
  for (const auto& p : points_) {
    if (p.branches.size() != 1 || p.branches.front().multiplicity != 1) return false;
  }
  return true;
}

std::string MultifoldCurve::describe() const {
  if (points_.empty()) return "A^1";
  std::string s = "A^1 with";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    s += i ? "; " : " ";
    s += to_string(p.location) + " replaced by [";
    for (std::size_t j = 0; j < p.branches.size(); ++j) {
      if (j) s += ", ";
      s += p.branches[j].label;
      if (p.branches[j].multiplicity != 1) s += " (multiplicity " + std::to_string(p.branches[j].multiplicity) + ")";
    }
    s += "]";
  }
  return s;
}

MultifoldCurve relatively_connected_quotient(const DanielewskiSurface& s) {
  std::vector<MarkedPoint> points;
  for (const auto& fib : degenerate_fibers(s)) {
    if (!fib.degenerate()) continue;
    MarkedPoint p{fib.base_point, {}};
    for (std::size_t i = 0; i < fib.components.size(); ++i) {
      p.branches.push_back({static_cast<int>(i), fib.components[i].multiplicity, fib.components[i].label});
    }
    points.push_back(std::move(p));
  }
  return MultifoldCurve(std::move(points), "x");
}

Classification classify_cancellation(const DanielewskiSurface& s) {
  MultifoldCurve c = relatively_connected_quotient(s);
  const bool bundle = c.marked_points().empty();
  return {bundle ? Classification::Kind::LineBundle : Classification::Kind::CounterexampleCandidate, std::move(c)};
}

}  // namespace dancyl
