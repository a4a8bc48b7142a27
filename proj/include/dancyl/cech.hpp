#pragma once

// H^1 of the structure sheaf (and of units) on lines with several origins, in
// principal-part normal form, plus the mu_m-equivariant cover model.

#include <compare>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "dancyl/fibration.hpp"

namespace dancyl {

/// Transition datum g_ij at a marked point. Raw data may use i > j; stored classes
/// always have i < j, and g_ji = -g_ij.
struct PartKey {
  Rational location;
  int i = 0;
  int j = 1;

  auto operator<=>(const PartKey& o) const {
    if (location != o.location) return location < o.location ? std::strong_ordering::less : std::strong_ordering::greater;
    if (i != o.i) return i <=> o.i;
    return j <=> o.j;
  }
  bool operator==(const PartKey&) const = default;
};

using RawCochain = std::map<PartKey, LaurentPoly>;

/// A class in H^1(curve, O). Transitions read v_j = v_i + g_ij on chart overlaps.
class CechClass {
 public:
  CechClass() = default;
  static CechClass zero(const MultifoldCurve& curve);

  const MultifoldCurve& curve() const { return curve_; }
  /// Nonzero parts only, keyed with i < j.
  const std::map<PartKey, LaurentPoly>& parts() const { return parts_; }
  /// g_ij for any ordered pair of branches at `location` (zero when i == j).
  LaurentPoly part(const Rational& location, int i, int j) const;
  bool is_zero() const { return parts_.empty(); }

  CechClass operator-() const;
  friend CechClass operator+(const CechClass& a, const CechClass& b);
  friend CechClass operator-(const CechClass& a, const CechClass& b) { return a + (-b); }
  friend CechClass operator*(const Rational& s, const CechClass& c);

  bool operator==(const CechClass& other) const { return curve_ == other.curve_ && parts_ == other.parts_; }

  /// "0", "2*x^-1", or "g01 at 0 = 2*x^-2; g02 at 0 = ..." for several parts.
  std::string to_string() const;

 private:
  friend CechClass class_normal_form(const RawCochain& raw, const MultifoldCurve& curve);

  MultifoldCurve curve_;
  std::map<PartKey, LaurentPoly> parts_;
};

/// Principal parts of a raw cocycle. Pairs missing from `raw` are filled in from the
/// cocycle condition; a marked point with no entries carries the zero class.
/// Throws CocycleError on inconsistent or underdetermined data, UnsupportedError
/// when the curve is not a scheme.
CechClass class_normal_form(const RawCochain& raw, const MultifoldCurve& curve);

/// The class of the cocycle s * g_ij. `s` is a polynomial in the curve coordinate.
CechClass h1_push(const CechClass& c, const MultiPoly& s);

struct PoleEntry {
  Rational location;
  int i = 0;
  int j = 1;
  int order = 0;

  auto operator<=>(const PoleEntry& o) const {
    if (location != o.location) return location < o.location ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::tie(i, j, order) <=> std::tie(o.i, o.j, o.order);
  }
  bool operator==(const PoleEntry&) const = default;
};

/// Pole order of every nonzero part, sorted.
std::vector<PoleEntry> pole_profile(const CechClass& c);

/// Pole orders alone, sorted; invariant under branch relabelling.
std::vector<int> pole_orders(const CechClass& c);

// Generators of the automorphism action used by orbit_equivalent.

/// Branch b moves to perm[b] at every marked point.
CechClass permute_branches(const CechClass& c, const std::vector<int>& perm);
/// Pull-back along x -> c + lambda (x - c) around each marked point c.
CechClass scale_base(const CechClass& c, const Rational& lambda);

struct OrbitVerdict {
  bool equivalent = false;
  /// Branch relabelling that realizes the equivalence (empty when not equivalent).
  std::vector<int> permutation;
  /// lambda^g is rational; lambda itself may need a g-th root.
  Rational lambda_power;
  int lambda_root = 1;
};

/// Orbit test under branch permutations, base scalings fixing the marked point and
/// global rescaling, with lambda ranging over the complex numbers. Only curves
/// with a single marked point are supported.
OrbitVerdict orbit_test(const CechClass& a, const CechClass& b);
bool orbit_equivalent(const CechClass& a, const CechClass& b);

/// Transition units lambda (x - c)^k of a line bundle.
struct Unit {
  Rational scalar = 1;
  int winding = 0;

  bool operator==(const Unit&) const = default;
};

class UnitClass {
 public:
  /// Validates the multiplicative cocycle condition (missing pairs are derived,
  /// like class_normal_form) and normalizes scalars to 1, the constant units of
  /// each chart being coboundaries.
  static UnitClass normal_form(const std::map<PartKey, Unit>& raw, const MultifoldCurve& curve);

  const MultifoldCurve& curve() const { return curve_; }
  /// Winding of g_0b for every branch b != 0 at each point, in branch order.
  const std::map<Rational, std::vector<int>>& windings() const { return windings_; }
  bool is_trivial() const;

  friend UnitClass operator*(const UnitClass& a, const UnitClass& b);
  UnitClass pow(int k) const;
  bool operator==(const UnitClass& other) const {
    return curve_ == other.curve_ && windings_ == other.windings_;
  }

 private:
  MultifoldCurve curve_;
  std::map<Rational, std::vector<int>> windings_;
};

struct PicardGroup {
  int free_rank = 0;
  std::vector<int> torsion;  // cyclic factor orders, each >= 2

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z^2", "Z_2", "Z + Z_2", ...
  std::string to_string() const;
  bool operator==(const PicardGroup&) const = default;
};

/// Computed pointwise; mixed multiplicities at one point raise UnsupportedError.
PicardGroup pic_group(const MultifoldCurve& curve);

/// g_ij = (y_i - y_j) x^-n on the quotient of x^n z = P(y), simple roots only.
CechClass surface_class(const DanielewskiSurface& s);

/// Coefficient of a symbolic part: eps^i - eps^j for a primitive m-th root eps.
struct SymbolicPart {
  int i = 0;
  int j = 1;
  int pole_order = 0;
  std::string coefficient;
};

/// Cover torsor of y^((n-1)m) z = u^m - 1 over the line with m origins (coordinate y),
/// with the weight of the mu_m-linearization. Only m = 2 has rational coefficients.
struct EquivariantClass {
  int n = 2;
  int m = 2;
  int weight = 1;
  bool symbolic_only = false;
  CechClass cover_class;                     // filled when !symbolic_only
  std::vector<SymbolicPart> symbolic_parts;  // always filled

  int pole_order() const { return (n - 1) * m; }
};

EquivariantClass equivariant_class(int n, int m);

/// g_{i+1, j+1}(y) = eps^weight * g_ij(eps y) for all pairs. Exact for m = 2; for
/// larger m only the rotation invariance of the pole supports is checked.
bool equivariant_compatible(const EquivariantClass& e);
/// The exact m = 2 check for any class on a line with two origins.
bool mu2_compatible(const CechClass& cover, int weight);

/// Same m and weight, and orbit-equivalent cover classes (m = 2) or identical
/// symbolic supports (m > 2).
bool equivariant_equivalent(const EquivariantClass& a, const EquivariantClass& b);

}  // namespace dancyl
