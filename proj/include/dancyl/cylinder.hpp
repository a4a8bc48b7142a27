#pragma once

// Chart models of G_a-torsors over lines with several origins, the splitting
// solver, and certified isomorphisms S x A^1 = S' x A^1 built from fiber products.

#include <map>
#include <string>
#include <vector>

#include "dancyl/cech.hpp"

namespace dancyl {

/// One chart per branch of a single marked point (or one chart over an unmarked
/// line). Chart i has coordinates (x, v, extra...) where v stands for v_i, and
/// v_j = v_i + g_ij(x) on overlaps; the extra coordinates glue by the identity.
class GluedModel {
 public:
  /// The curve itself: charts carry only the base coordinate.
  static GluedModel base(const MultifoldCurve& curve);

  const MultifoldCurve& curve() const { return curve_; }
  const CechClass& transition_class() const { return class_; }
  bool has_fiber() const { return has_fiber_; }
  const Ring& chart_ring() const { return ring_; }
  int charts() const { return charts_; }

  /// v -> v + g_ij as a Laurent substitution in the chart ring (empty for base models).
  LaurentAssignment transition(int i, int j) const;
  /// f_i(x, v) viewed on chart j: f_i(x, v + g_ji).
  LaurentMulti move(const MultiPoly& f_on_i, int i, int j) const;

  /// Named global functions, one chart expression per chart.
  const std::map<std::string, std::vector<MultiPoly>>& global_functions() const { return globals_; }
  /// Exact agreement of the chart expressions under every transition.
  bool glues(const std::vector<MultiPoly>& chart_expressions) const;

 private:
  friend GluedModel torsor_to_glued(const CechClass& c, const std::vector<std::string>& extra);
  friend GluedModel attach_surface_functions(GluedModel model, const DanielewskiSurface& s);

  MultifoldCurve curve_;
  CechClass class_;
  bool has_fiber_ = true;
  Ring ring_;
  int charts_ = 1;
  std::map<std::string, std::vector<MultiPoly>> globals_;
};

/// Scheme curves with at most one marked point; extra coordinates are appended
/// to every chart ring.
GluedModel torsor_to_glued(const CechClass& c, const std::vector<std::string>& extra = {});

/// Adds x, y = y_i + x^n v and z = v prod_{j != i}(y_i - y_j + x^n v) on chart i.
/// The model must come from surface_class(s); gluing is verified exactly.
GluedModel attach_surface_functions(GluedModel model, const DanielewskiSurface& s);

/// h_j(x, v + g_ij) - h_i(x, v) = target_ij on every overlap.
struct Splitting {
  std::vector<MultiPoly> h;
  int degree_bound = 0;
};

const std::vector<int>& default_schedule();

/// Ansatz: h_0 ranges over monomials of total degree <= B in the chart variables;
/// the other h_i are forced. B runs through `schedule`; NoSplittingFound when every
/// bound fails. The returned splitting is re-verified by direct expansion.
Splitting splitting_solve(const GluedModel& model, const CechClass& target,
                          const std::vector<int>& schedule = default_schedule());

/// Re-checks the defining identity of a splitting by Laurent expansion.
bool splitting_holds(const GluedModel& model, const CechClass& target, const Splitting& s);

/// The cylinder ring (x, y, z, w).
const Ring& cylinder_ring();

/// Rewrites a function given on chart 0 of S x A^1 in the coordinates (x, v, w),
/// v = (y - y_0)/x^n, as a polynomial in (x, y, z, w). Throws CertificateError when
/// the function is not regular.
MultiPoly express_on_cylinder(const MultiPoly& chart0, const DanielewskiSurface& s);

IdealPresentation cylinder_ideal(const DanielewskiSurface& s);

struct CylinderOptions {
  std::vector<int> schedule = default_schedule();
  /// 0 glues S and S' directly; N >= 1 passes through S deepened by N.
  int auxiliary_shift = 0;
  Execution exec = Execution::Parallel;
};

/// One fiber-product step S x A^1 = W = S' x A^1.
struct CylinderStep {
  DanielewskiSurface source;
  DanielewskiSurface target;
  Splitting h;  // on source charts, splits the target class
  Splitting k;  // on target charts, splits the source class
};

struct CylinderIso {
  DanielewskiSurface source;
  DanielewskiSurface target;
  int auxiliary_shift = 0;
  std::vector<CylinderStep> steps;
  IsoCertificate certificate;  // verified
};

/// Requires surface classes on the same multifold curve (NotComparableError
/// otherwise). A certificate that fails its own check raises CertificateError.
CylinderIso cylinder_iso(const DanielewskiSurface& s, const DanielewskiSurface& s_prime,
                         const CylinderOptions& options = {});

struct InvariantReport {
  std::vector<PoleEntry> source_profile;
  std::vector<PoleEntry> target_profile;
  bool profiles_differ = false;
  bool orbit_equivalent = false;
  /// Non-isomorphism of the surfaces also needs uniqueness of the A^1-fibration,
  /// which is not checked here.
  bool conditional_on_fibration_uniqueness = true;
};

struct CounterexamplePair {
  DanielewskiSurface source;
  DanielewskiSurface partner;
  CylinderIso iso;
  InvariantReport report;
};

/// Partner x^(n+k) z = P(y). LineBundleError when cancellation holds for S.
CounterexamplePair counterexample_pair(const DanielewskiSurface& s, int k = 1, const CylinderOptions& options = {});

}  // namespace dancyl
