#pragma once

// Danielewski-type A^1-fibered surfaces x^n z = P(y) and x^n z = P(y) - x over
// the affine line, their fibers over the origin and the multifold quotient curve.

#include <string>
#include <vector>

#include "dancyl/ideals.hpp"

namespace dancyl {

enum class Variant { PlainFiber, ShiftedFiber };

std::string to_string(Variant v);

struct Root {
  Rational value;
  int multiplicity = 1;

  bool operator==(const Root&) const = default;
};

/// The ring (x, y, z) every surface lives in.
const Ring& surface_ring();

struct SurfacePresentation {
  IdealPresentation ideal;
  std::string fibration_variable = "x";

  const MultiPoly& generator() const { return ideal.generators().front(); }
};

class DanielewskiSurface {
 public:
  int n() const { return n_; }
  const std::vector<Root>& roots() const { return roots_; }
  Variant variant() const { return variant_; }
  const SurfacePresentation& presentation() const { return presentation_; }
  const MultiPoly& generator() const { return presentation_.generator(); }
  bool smooth() const { return smooth_; }
  bool all_simple() const;

  /// P(y) = prod (y - a)^m as a polynomial in the surface ring.
  MultiPoly p() const;

  /// Same roots and variant with exponent n + k.
  DanielewskiSurface deepened(int k) const;

  bool operator==(const DanielewskiSurface& other) const {
    return n_ == other.n_ && roots_ == other.roots_ && variant_ == other.variant_;
  }

 private:
  friend DanielewskiSurface build_surface(int n, std::vector<Root> roots, Variant variant);

  int n_ = 1;
  std::vector<Root> roots_;
  Variant variant_ = Variant::PlainFiber;
  SurfacePresentation presentation_;
  bool smooth_ = false;
};

/// Validates the data and checks smoothness with the Jacobian criterion.
/// Throws SingularInputError for singular surfaces, Error for malformed input.
DanielewskiSurface build_surface(int n, std::vector<Root> roots, Variant variant);

struct FiberComponent {
  std::string label;  // "y = a"
  Rational root;
  int multiplicity = 1;
};

struct FiberDecomposition {
  Rational base_point;
  std::vector<FiberComponent> components;
  bool reduced = true;
  bool irreducible = true;

  bool degenerate() const { return !reduced || !irreducible; }
};

/// The fiber over x = 0, the only place a fiber can degenerate in both families.
/// It is reported even when it is reduced and irreducible.
std::vector<FiberDecomposition> degenerate_fibers(const DanielewskiSurface& s);

struct Branch {
  int id = 0;
  int multiplicity = 1;
  std::string label;  // display only; ignored by equality

  bool operator==(const Branch& o) const { return id == o.id && multiplicity == o.multiplicity; }
};

struct MarkedPoint {
  Rational location;
  std::vector<Branch> branches;

  bool operator==(const MarkedPoint&) const = default;
};

/// The affine line with finitely many points replaced by several branches.
class MultifoldCurve {
 public:
  MultifoldCurve() = default;
  /// Throws Error on repeated locations, empty branch lists or bad multiplicities.
  explicit MultifoldCurve(std::vector<MarkedPoint> points, std::string coordinate = "x");

  /// r reduced branches over `location`.
  static MultifoldCurve line_with_origins(int r, const Rational& location = 0, std::string coordinate = "x");
  /// One branch of multiplicity m over `location`.
  static MultifoldCurve multiple_point(int m, const Rational& location = 0, std::string coordinate = "x");

  const std::string& coordinate() const { return coordinate_; }
  const std::vector<MarkedPoint>& marked_points() const { return points_; }
  const MarkedPoint* point_at(const Rational& location) const;

  bool is_scheme() const;
  bool is_base() const;
  std::string describe() const;

  bool operator==(const MultifoldCurve&) const = default;

 private:
  std::string coordinate_ = "x";
  std::vector<MarkedPoint> points_;
};

/// One marked point per degenerate fiber, one branch per component (in root order).
MultifoldCurve relatively_connected_quotient(const DanielewskiSurface& s);

struct Classification {
  enum class Kind { LineBundle, CounterexampleCandidate };
  Kind kind = Kind::LineBundle;
  MultifoldCurve curve;
};

std::string to_string(Classification::Kind k);

Classification classify_cancellation(const DanielewskiSurface& s);

}  // namespace dancyl
