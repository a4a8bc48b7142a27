#pragma once

// Exact arithmetic: GMP rationals, sparse multivariate polynomials, multivariate
// Laurent polynomials (signed exponents) and centered univariate Laurent
// polynomials with principal-part extraction.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dancyl/errors.hpp"

namespace dancyl {

using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/// Ordered list of variable names. Cheap to copy; equality compares names.
class Ring {
 public:
  Ring();
  explicit Ring(std::vector<std::string> vars);
  Ring(std::initializer_list<std::string> vars);

  std::size_t size() const { return vars_->size(); }
  const std::string& var(std::size_t i) const { return (*vars_)[i]; }
  const std::vector<std::string>& vars() const { return *vars_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws UnknownVariableError.
  std::size_t require(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  /// This ring's variables followed by the new ones of `other`, in order.
  Ring merged(const Ring& other) const;

  bool operator==(const Ring& other) const {
    return vars_ == other.vars_ || *vars_ == *other.vars_;
  }
  bool operator!=(const Ring& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  std::shared_ptr<const std::vector<std::string>> vars_;
};

using Exponents = std::vector<int>;

enum class TermOrder { Grevlex, Lex };

/// Three-way comparison of two exponent vectors of equal length.
int compare_monomials(const Exponents& a, const Exponents& b, TermOrder order);

/// Orders terms from largest to smallest in grevlex; the canonical storage order.
struct CanonicalOrder {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return compare_monomials(a, b, TermOrder::Grevlex) > 0;
  }
};

using TermMap = std::map<Exponents, Rational, CanonicalOrder>;

namespace detail {
void add_term(TermMap& terms, const Exponents& e, const Rational& c);
void add_scaled(TermMap& into, const TermMap& other, const Rational& scale);
void add_shifted_scaled(TermMap& into, const TermMap& other, const Exponents& shift,
                        const Rational& scale);
std::string format_terms(const TermMap& terms, const std::vector<std::string>& names);
}  // namespace detail

enum class ArithOp { Add, Sub, Mul };

class LaurentMulti;

/// Sparse polynomial over Q with non-negative exponents in a named ring.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(Ring ring) : ring_(std::move(ring)) {}
  MultiPoly(Ring ring, TermMap terms);

  static MultiPoly constant(const Ring& ring, const Rational& c);
  static MultiPoly variable(const Ring& ring, std::string_view name);
  static MultiPoly monomial(const Ring& ring, Exponents e, const Rational& c = 1);
  /// Parses the canonical text form (or any sum of products of powers).
  static MultiPoly parse(std::string_view text, const Ring& ring);

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  Rational coefficient(const Exponents& e) const;
  Rational constant_term() const;

  /// Leading (exponents, coefficient); throws on zero.
  std::pair<Exponents, Rational> leading_term(TermOrder order = TermOrder::Grevlex) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

  MultiPoly pow(unsigned k) const;
  /// The same polynomial viewed in a ring containing all of this ring's variables.
  MultiPoly in_ring(const Ring& wider) const;
  /// Divides by the leading coefficient in the given order.
  MultiPoly monic(TermOrder order = TermOrder::Grevlex) const;

  bool operator==(const MultiPoly& other) const;
  bool operator!=(const MultiPoly& other) const { return !(*this == other); }

  void add_term(const Exponents& e, const Rational& c);
  std::string to_string() const;

 private:
  void check_ring(const MultiPoly& other, const char* what) const;

  Ring ring_;
  TermMap terms_;
};

MultiPoly poly_arith(const MultiPoly& lhs, const MultiPoly& rhs, ArithOp op);
MultiPoly partial_derivative(const MultiPoly& f, std::string_view var);

using Assignment = std::map<std::string, MultiPoly>;

/// Replaces variables by polynomials. Unassigned variables map to themselves; the
/// result lives in the merge of the image rings followed by f's unassigned variables.
MultiPoly substitute(const MultiPoly& f, const Assignment& assignment);
/// As above with an explicit target ring (every image and unassigned variable must embed).
MultiPoly substitute(const MultiPoly& f, const Assignment& assignment, const Ring& target);

/// Polynomial with signed exponents. Used for chart transitions where the base
/// coordinate is inverted on overlaps.
class LaurentMulti {
 public:
  LaurentMulti() = default;
  explicit LaurentMulti(Ring ring) : ring_(std::move(ring)) {}
  LaurentMulti(Ring ring, TermMap terms);
  explicit LaurentMulti(const MultiPoly& p) : ring_(p.ring()), terms_(p.terms()) {}

  static LaurentMulti constant(const Ring& ring, const Rational& c);
  static LaurentMulti variable(const Ring& ring, std::string_view name);
  static LaurentMulti monomial(const Ring& ring, Exponents e, const Rational& c = 1);
  static LaurentMulti parse(std::string_view text, const Ring& ring);

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Smallest exponent of `var` among terms (0 for the zero element).
  int min_exponent(std::size_t var) const;

  LaurentMulti operator-() const;
  LaurentMulti& operator+=(const LaurentMulti& rhs);
  LaurentMulti& operator-=(const LaurentMulti& rhs);
  LaurentMulti& operator*=(const Rational& c);
  friend LaurentMulti operator+(LaurentMulti a, const LaurentMulti& b) { return a += b; }
  friend LaurentMulti operator-(LaurentMulti a, const LaurentMulti& b) { return a -= b; }
  friend LaurentMulti operator*(const LaurentMulti& a, const LaurentMulti& b);
  friend LaurentMulti operator*(LaurentMulti a, const Rational& c) { return a *= c; }

  LaurentMulti pow(unsigned k) const;
  LaurentMulti in_ring(const Ring& wider) const;

  /// Terms with a negative exponent in `var`.
  LaurentMulti principal_part(std::size_t var) const;
  /// Terms with a non-negative exponent in `var`.
  LaurentMulti regular_part(std::size_t var) const;
  bool is_polynomial() const;
  /// Throws Error if some exponent is negative.
  MultiPoly to_poly() const;
  /// Multiplies by var^k (k may be negative).
  LaurentMulti shifted(std::size_t var, int k) const;

  bool operator==(const LaurentMulti& other) const;
  bool operator!=(const LaurentMulti& other) const { return !(*this == other); }

  void add_term(const Exponents& e, const Rational& c);
  std::string to_string() const;

 private:
  void check_ring(const LaurentMulti& other, const char* what) const;

  Ring ring_;
  TermMap terms_;
};

using LaurentAssignment = std::map<std::string, LaurentMulti>;

/// Substitutes Laurent images into a polynomial; the result lives in `target`.
LaurentMulti substitute(const MultiPoly& f, const LaurentAssignment& assignment, const Ring& target);

/// Univariate Laurent polynomial in (var - center).
class LaurentPoly {
 public:
  explicit LaurentPoly(std::string var = "x", Rational center = 0);

  static LaurentPoly monomial(const Rational& coeff, int exponent, std::string var = "x",
                              Rational center = 0);
  /// Taylor expansion of a univariate polynomial in `var` around `center`.
  static LaurentPoly from_poly(const MultiPoly& s, std::string_view var, const Rational& center);
  /// Parses text in the local coordinate, e.g. "2*x^-1 + 3" (the symbol stands for var - center).
  static LaurentPoly parse(std::string_view text, std::string var = "x", Rational center = 0);

  const std::string& var() const { return var_; }
  const Rational& center() const { return center_; }
  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int exponent) const;
  /// Largest k with a nonzero x^{-k} term; 0 when there is no principal part.
  int pole_order() const;
  int min_exponent() const;
  int max_exponent() const;

  LaurentPoly principal() const;
  LaurentPoly regular() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }

  bool operator==(const LaurentPoly& other) const;
  bool operator!=(const LaurentPoly& other) const { return !(*this == other); }

  void add_term(int exponent, const Rational& c);
  /// As an element of Q[var^{±1}] in the ring {var}; only valid for center 0 semantics
  /// (the variable then denotes the local coordinate).
  LaurentMulti to_multi(const Ring& ring, std::string_view local_var) const;

  /// "2*x^-1"; with a nonzero center the base is printed as "(x - c)".
  std::string to_string() const;

 private:
  void check_compatible(const LaurentPoly& other) const;

  std::string var_;
  Rational center_;
  std::map<int, Rational> terms_;
};

struct LaurentSplit {
  LaurentPoly regular;
  LaurentPoly principal;
};

LaurentSplit laurent_split(const LaurentPoly& f);

}  // namespace dancyl
