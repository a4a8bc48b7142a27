#pragma once

// Certificate engine: reduced Gröbner bases, ideal membership, the Jacobian
// smoothness criterion and checked polynomial maps between presented varieties.

#include <string>
#include <string_view>
#include <vector>

#include "dancyl/ratpoly.hpp"

namespace dancyl {

class IdealPresentation {
 public:
  IdealPresentation() = default;
  /// Zero generators are dropped; every generator must live in `ring`.
  IdealPresentation(Ring ring, std::vector<MultiPoly> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<MultiPoly>& generators() const { return generators_; }

  bool operator==(const IdealPresentation& other) const {
    return ring_ == other.ring_ && generators_ == other.generators_;
  }
  bool operator!=(const IdealPresentation& other) const { return !(*this == other); }

 private:
  Ring ring_;
  std::vector<MultiPoly> generators_;
};

struct Reduction {
  std::vector<MultiPoly> quotients;
  MultiPoly remainder;
};

/// Multivariate division by an ordered list of divisors (no Gröbner assumption):
/// f = sum quotients[i] * divisors[i] + remainder, with no term of the remainder
/// divisible by any leading monomial.
Reduction divide(const MultiPoly& f, const std::vector<MultiPoly>& divisors, TermOrder order);

/// A reduced Gröbner basis: monic, inter-reduced, sorted by increasing leading monomial.
struct GroebnerBasis {
  Ring ring;
  TermOrder order = TermOrder::Grevlex;
  std::vector<MultiPoly> basis;

  bool is_unit() const;
  MultiPoly normal_form(const MultiPoly& f) const;
  Reduction reduce(const MultiPoly& f) const;
  bool contains(const MultiPoly& f) const { return normal_form(f).is_zero(); }
};

GroebnerBasis groebner_basis(const IdealPresentation& ideal, TermOrder order = TermOrder::Grevlex);

/// Buchberger's criterion: every S-polynomial of `basis` reduces to zero.
bool is_groebner_basis(const std::vector<MultiPoly>& basis, TermOrder order);

bool ideal_member(const MultiPoly& f, const IdealPresentation& ideal);

/// 1 lies in (f, df/dx, df/dy, df/dz). Membership of 1 does not depend on the
/// field extension, so a Q computation decides smoothness over the algebraic closure.
bool jacobian_smooth(const MultiPoly& f);

enum class Execution { Serial, Parallel };

/// Batch normal forms; the parallel path distributes polynomials over OpenMP threads.
std::vector<MultiPoly> normal_forms(const std::vector<MultiPoly>& polys, const GroebnerBasis& gb,
                                    Execution exec = Execution::Parallel);

/// A polynomial map Spec(source) -> Spec(target), given by the image in the source
/// ring of every target variable. Well-definedness is checked, never assumed.
class PolyMap {
 public:
  PolyMap() = default;
  PolyMap(IdealPresentation source, IdealPresentation target, const Assignment& images);

  const IdealPresentation& source() const { return source_; }
  const IdealPresentation& target() const { return target_; }
  /// Images aligned with the target ring's variables.
  const std::vector<MultiPoly>& images() const { return images_; }
  const MultiPoly& image(std::string_view target_var) const;
  Assignment assignment() const;

  /// Pulls back a polynomial in the target ring to the source ring.
  MultiPoly pull_back(const MultiPoly& g) const;

 private:
  IdealPresentation source_;
  IdealPresentation target_;
  std::vector<MultiPoly> images_;
};

struct MembershipWitness {
  std::string check;
  MultiPoly normal_form;
  bool holds() const { return normal_form.is_zero(); }
};

struct MorphismCheck {
  bool ok = false;
  std::vector<MembershipWitness> witnesses;
};

MorphismCheck check_morphism(const PolyMap& map);
bool verify_morphism(const PolyMap& map);

class IsoCertificate {
 public:
  struct Flags {
    bool forward_well_defined = false;
    bool backward_well_defined = false;
    bool backward_after_forward = false;
    bool forward_after_backward = false;
  };

  IsoCertificate() = default;
  /// Unchecked certificate; all flags false until verify_iso_certificate runs.
  IsoCertificate(PolyMap forward, PolyMap backward);

  const PolyMap& forward() const { return forward_; }
  const PolyMap& backward() const { return backward_; }
  const Flags& flags() const { return flags_; }
  const std::vector<MembershipWitness>& witnesses() const { return witnesses_; }
  bool valid() const;

  /// The reduced bases used for the membership checks (empty before verification).
  const GroebnerBasis& source_basis() const { return source_gb_; }
  const GroebnerBasis& target_basis() const { return target_gb_; }

 private:
  friend IsoCertificate verify_iso_certificate(IsoCertificate cert, Execution exec);

  PolyMap forward_;
  PolyMap backward_;
  Flags flags_;
  std::vector<MembershipWitness> witnesses_;
  GroebnerBasis source_gb_;
  GroebnerBasis target_gb_;
};

/// Computes all four flags and records every normal form as a witness.
IsoCertificate verify_iso_certificate(IsoCertificate cert, Execution exec = Execution::Parallel);

}  // namespace dancyl
