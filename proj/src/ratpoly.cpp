#include "dancyl/ratpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dancyl/kernels.hpp"

namespace dancyl {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational", 0);
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw ParseError("malformed rational '" + s + "'", 0);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- Ring

Ring::Ring() : vars_(std::make_shared<const std::vector<std::string>>()) {}

Ring::Ring(std::vector<std::string> vars) {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].empty()) throw Error("empty variable name");
    for (std::size_t j = 0; j < i; ++j) {
      if (vars[i] == vars[j]) throw Error("duplicate variable '" + vars[i] + "' in ring");
    }
  }
  vars_ = std::make_shared<const std::vector<std::string>>(std::move(vars));
}

Ring::Ring(std::initializer_list<std::string> vars) : Ring(std::vector<std::string>(vars)) {}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    if ((*vars_)[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Ring::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw UnknownVariableError("unknown variable '" + std::string(name) + "' in ring " + to_string());
}

Ring Ring::merged(const Ring& other) const {
  if (*this == other) return *this;
  std::vector<std::string> vars = *vars_;
  for (const auto& v : other.vars()) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  }
  return Ring(std::move(vars));
}

std::string Ring::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    if (i) s += ", ";
    s += (*vars_)[i];
  }
  return s + ")";
}

// ---------------------------------------------------------------- monomial orders

int compare_monomials(const Exponents& a, const Exponents& b, TermOrder order) {
  if (order == TermOrder::Grevlex) {
    const long da = std::accumulate(a.begin(), a.end(), 0L);
    const long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

namespace detail {

void add_term(TermMap& terms, const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

void add_scaled(TermMap& into, const TermMap& other, const Rational& scale) {
  if (scale == 0) return;
  for (const auto& [e, c] : other) add_term(into, e, scale == 1 ? c : Rational(c * scale));
}

void add_shifted_scaled(TermMap& into, const TermMap& other, const Exponents& shift,
                        const Rational& scale) {
  if (scale == 0) return;
  Exponents e(shift.size());
  for (const auto& [eo, c] : other) {
    for (std::size_t i = 0; i < shift.size(); ++i) e[i] = eo[i] + shift[i];
    add_term(into, e, c * scale);
  }
}

std::string format_terms(const TermMap& terms, const std::vector<std::string>& names) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace detail

namespace {

Exponents zero_exponents(const Ring& ring) { return Exponents(ring.size(), 0); }

// Re-indexes exponents from `from` into the wider ring `to`.
TermMap embed_terms(const TermMap& terms, const Ring& from, const Ring& to) {
  if (from == to) return terms;
  std::vector<std::size_t> map(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto j = to.index_of(from.var(i));
    if (!j) throw RingMismatchError("cannot embed ring " + from.to_string() + " into " + to.to_string());
    map[i] = *j;
  }
  TermMap out;
  for (const auto& [e, c] : terms) {
    Exponents f(to.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[map[i]] = e[i];
    out.emplace(std::move(f), c);
  }
  return out;
}

template <typename Poly>
Poly power_by_squaring(const Poly& base, unsigned k, Poly one) {
  Poly result = std::move(one);
  Poly b = base;
  while (k) {
    if (k & 1U) result = result * b;
    k >>= 1U;
    if (k) b = b * b;
  }
  return result;
}

}  // namespace

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(Ring ring, TermMap terms) : ring_(std::move(ring)) {
  for (auto& [e, c] : terms) {
    if (e.size() != ring_.size()) throw RingMismatchError("exponent vector length does not match ring arity");
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) {
      throw Error("negative exponent in polynomial");
    }
    detail::add_term(terms_, e, c);
  }
}

MultiPoly MultiPoly::constant(const Ring& ring, const Rational& c) {
  MultiPoly p(ring);
  p.add_term(zero_exponents(ring), c);
  return p;
}

MultiPoly MultiPoly::variable(const Ring& ring, std::string_view name) {
  Exponents e = zero_exponents(ring);
  e[ring.require(name)] = 1;
  return monomial(ring, std::move(e));
}

MultiPoly MultiPoly::monomial(const Ring& ring, Exponents e, const Rational& c) {
  MultiPoly p(ring);
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::parse(std::string_view text, const Ring& ring) {
  return LaurentMulti::parse(text, ring).to_poly();
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                            [](int x) { return x == 0; }));
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  // Grevlex storage puts a term of maximal total degree first.
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coefficient(zero_exponents(ring_)); }

std::pair<Exponents, Rational> MultiPoly::leading_term(TermOrder order) const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  if (order == TermOrder::Grevlex) return {terms_.begin()->first, terms_.begin()->second};
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (compare_monomials(it->first, best->first, order) > 0) best = it;
  }
  return {best->first, best->second};
}

void MultiPoly::check_ring(const MultiPoly& other, const char* what) const {
  if (ring_ != other.ring_) {
    throw RingMismatchError(std::string(what) + ": ring mismatch " + ring_.to_string() + " vs " +
                            other.ring_.to_string());
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p(*this);
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_ring(rhs, "add");
  detail::add_scaled(terms_, rhs.terms_, 1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_ring(rhs, "sub");
  detail::add_scaled(terms_, rhs.terms_, -1);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_ring(b, "mul");
  MultiPoly p(a.ring_);
  p.terms_ = kernels::multiply(a.terms_, b.terms_);
  return p;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

MultiPoly MultiPoly::pow(unsigned k) const { return power_by_squaring(*this, k, constant(ring_, 1)); }

MultiPoly MultiPoly::in_ring(const Ring& wider) const {
  return MultiPoly(wider, embed_terms(terms_, ring_, wider));
}

MultiPoly MultiPoly::monic(TermOrder order) const {
  if (is_zero()) return *this;
  const Rational lc = leading_term(order).second;
  return *this * Rational(1 / lc);
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  return ring_ == other.ring_ && terms_ == other.terms_;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != ring_.size()) throw RingMismatchError("exponent vector length does not match ring arity");
  if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) throw Error("negative exponent in polynomial");
  detail::add_term(terms_, e, c);
}

std::string MultiPoly::to_string() const { return detail::format_terms(terms_, ring_.vars()); }

MultiPoly poly_arith(const MultiPoly& lhs, const MultiPoly& rhs, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return lhs + rhs;
    case ArithOp::Sub: return lhs - rhs;
    case ArithOp::Mul: return lhs * rhs;
  }
  throw Error("unknown arithmetic operation");
}

MultiPoly partial_derivative(const MultiPoly& f, std::string_view var) {
  const std::size_t k = f.ring().require(var);
  MultiPoly d(f.ring());
  for (const auto& [e, c] : f.terms()) {
    if (e[k] == 0) continue;
    Exponents g = e;
    g[k] -= 1;
    d.add_term(g, c * e[k]);
  }
  return d;
}

namespace {

// Evaluates f with per-variable images, caching powers of each image.
template <typename Poly>
Poly evaluate_with(const MultiPoly& f, const std::vector<Poly>& images, const Poly& one) {
  const std::size_t n = f.ring().size();
  std::vector<std::vector<Poly>> powers(n);
  auto power = [&](std::size_t v, int k) -> const Poly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(one);
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[v]);
    return cache[static_cast<std::size_t>(k)];
  };

  Poly result = one * Rational(0);
  for (const auto& [e, c] : f.terms()) {
    Poly term = one * c;
    // Multiply the sparsest factors first.
    for (std::size_t v = 0; v < n; ++v) {
      if (e[v] != 0) term = term * power(v, e[v]);
    }
    result += term;
  }
  return result;
}

}  // namespace

MultiPoly substitute(const MultiPoly& f, const Assignment& assignment, const Ring& target) {
  std::vector<MultiPoly> images;
  images.reserve(f.ring().size());
  for (const auto& name : f.ring().vars()) {
    auto it = assignment.find(name);
    if (it != assignment.end()) {
      images.push_back(it->second.in_ring(target));
    } else {
      images.push_back(MultiPoly::variable(target, name));
    }
  }
  for (const auto& [name, img] : assignment) f.ring().require(name);
  return evaluate_with(f, images, MultiPoly::constant(target, 1));
}

MultiPoly substitute(const MultiPoly& f, const Assignment& assignment) {
  std::optional<Ring> target;
  for (const auto& name : f.ring().vars()) {
    auto it = assignment.find(name);
    if (it == assignment.end()) continue;
    target = target ? target->merged(it->second.ring()) : it->second.ring();
  }
  Ring ring = target ? *target : Ring();
  std::vector<std::string> extra;
  for (const auto& name : f.ring().vars()) {
    if (!assignment.count(name) && !ring.contains(name)) extra.push_back(name);
  }
  if (!extra.empty()) ring = ring.merged(Ring(extra));
  return substitute(f, assignment, ring);
}

// ---------------------------------------------------------------- LaurentMulti

LaurentMulti::LaurentMulti(Ring ring, TermMap terms) : ring_(std::move(ring)) {
  for (auto& [e, c] : terms) {
    if (e.size() != ring_.size()) throw RingMismatchError("exponent vector length does not match ring arity");
    detail::add_term(terms_, e, c);
  }
}

LaurentMulti LaurentMulti::constant(const Ring& ring, const Rational& c) {
  return LaurentMulti(MultiPoly::constant(ring, c));
}

LaurentMulti LaurentMulti::variable(const Ring& ring, std::string_view name) {
  return LaurentMulti(MultiPoly::variable(ring, name));
}

LaurentMulti LaurentMulti::monomial(const Ring& ring, Exponents e, const Rational& c) {
  LaurentMulti p(ring);
  p.add_term(e, c);
  return p;
}

int LaurentMulti::min_exponent(std::size_t var) const {
  if (terms_.empty()) return 0;
  int m = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) m = std::min(m, e[var]);
  return m;
}

void LaurentMulti::check_ring(const LaurentMulti& other, const char* what) const {
  if (ring_ != other.ring_) {
    throw RingMismatchError(std::string(what) + ": ring mismatch " + ring_.to_string() + " vs " +
                            other.ring_.to_string());
  }
}

LaurentMulti LaurentMulti::operator-() const {
  LaurentMulti p(*this);
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentMulti& LaurentMulti::operator+=(const LaurentMulti& rhs) {
  check_ring(rhs, "add");
  detail::add_scaled(terms_, rhs.terms_, 1);
  return *this;
}

LaurentMulti& LaurentMulti::operator-=(const LaurentMulti& rhs) {
  check_ring(rhs, "sub");
  detail::add_scaled(terms_, rhs.terms_, -1);
  return *this;
}

LaurentMulti& LaurentMulti::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

LaurentMulti operator*(const LaurentMulti& a, const LaurentMulti& b) {
  a.check_ring(b, "mul");
  LaurentMulti p(a.ring_);
  p.terms_ = kernels::multiply(a.terms_, b.terms_);
  return p;
}

LaurentMulti LaurentMulti::pow(unsigned k) const {
  return power_by_squaring(*this, k, constant(ring_, 1));
}

LaurentMulti LaurentMulti::in_ring(const Ring& wider) const {
  return LaurentMulti(wider, embed_terms(terms_, ring_, wider));
}

LaurentMulti LaurentMulti::principal_part(std::size_t var) const {
  LaurentMulti p(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] < 0) p.terms_.emplace(e, c);
  }
  return p;
}

LaurentMulti LaurentMulti::regular_part(std::size_t var) const {
  LaurentMulti p(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] >= 0) p.terms_.emplace(e, c);
  }
  return p;
}

bool LaurentMulti::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return std::all_of(t.first.begin(), t.first.end(), [](int x) { return x >= 0; });
  });
}

MultiPoly LaurentMulti::to_poly() const {
  if (!is_polynomial()) throw Error("Laurent expression has negative exponents: " + to_string());
  return MultiPoly(ring_, terms_);
}

LaurentMulti LaurentMulti::shifted(std::size_t var, int k) const {
  Exponents shift(ring_.size(), 0);
  shift[var] = k;
  LaurentMulti p(ring_);
  detail::add_shifted_scaled(p.terms_, terms_, shift, 1);
  return p;
}

bool LaurentMulti::operator==(const LaurentMulti& other) const {
  return ring_ == other.ring_ && terms_ == other.terms_;
}

void LaurentMulti::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != ring_.size()) throw RingMismatchError("exponent vector length does not match ring arity");
  detail::add_term(terms_, e, c);
}

std::string LaurentMulti::to_string() const { return detail::format_terms(terms_, ring_.vars()); }

LaurentMulti substitute(const MultiPoly& f, const LaurentAssignment& assignment, const Ring& target) {
  std::vector<LaurentMulti> images;
  images.reserve(f.ring().size());
  for (const auto& name : f.ring().vars()) {
    auto it = assignment.find(name);
    if (it != assignment.end()) {
      images.push_back(it->second.in_ring(target));
    } else {
      images.push_back(LaurentMulti::variable(target, name));
    }
  }
  return evaluate_with(f, images, LaurentMulti::constant(target, 1));
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(std::string var, Rational center) : var_(std::move(var)), center_(std::move(center)) {}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, int exponent, std::string var, Rational center) {
  LaurentPoly p(std::move(var), std::move(center));
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::from_poly(const MultiPoly& s, std::string_view var, const Rational& center) {
  const std::size_t k = s.ring().require(var);
  for (const auto& [e, c] : s.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != k && e[i] != 0) throw Error("expected a polynomial in " + std::string(var) + " only: " + s.to_string());
    }
  }
  // Expand each x^d = ((x - c) + c)^d binomially.
  LaurentPoly out{std::string(var), center};
  for (const auto& [e, coeff] : s.terms()) {
    const int d = e[k];
    mpz_class binom = 1;
    for (int j = 0; j <= d; ++j) {
      Rational cpow = 1;
      for (int t = 0; t < d - j; ++t) cpow *= center;
      out.add_term(j, coeff * Rational(binom) * cpow);
      binom = binom * (d - j) / (j + 1);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text, std::string var, Rational center) {
  const Ring ring{var};
  const LaurentMulti m = LaurentMulti::parse(text, ring);
  LaurentPoly p(std::move(var), std::move(center));
  for (const auto& [e, c] : m.terms()) p.add_term(e[0], c);
  return p;
}

Rational LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::pole_order() const {
  if (terms_.empty() || terms_.begin()->first >= 0) return 0;
  return -terms_.begin()->first;
}

int LaurentPoly::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentPoly LaurentPoly::principal() const {
  LaurentPoly p(var_, center_);
  for (const auto& [e, c] : terms_) {
    if (e < 0) p.terms_.emplace(e, c);
  }
  return p;
}

LaurentPoly LaurentPoly::regular() const {
  LaurentPoly p(var_, center_);
  for (const auto& [e, c] : terms_) {
    if (e >= 0) p.terms_.emplace(e, c);
  }
  return p;
}

void LaurentPoly::check_compatible(const LaurentPoly& other) const {
  if (var_ != other.var_ || center_ != other.center_) {
    throw RingMismatchError("Laurent polynomials expanded in different coordinates");
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(*this);
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_compatible(b);
  LaurentPoly p(a.var_, a.center_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
  }
  return p;
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
  return var_ == other.var_ && center_ == other.center_ && terms_ == other.terms_;
}

void LaurentPoly::add_term(int exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentMulti LaurentPoly::to_multi(const Ring& ring, std::string_view local_var) const {
  const std::size_t k = ring.require(local_var);
  LaurentMulti m(ring);
  Exponents e(ring.size(), 0);
  for (const auto& [exp, c] : terms_) {
    e[k] = exp;
    m.add_term(e, c);
  }
  return m;
}

std::string LaurentPoly::to_string() const {
  std::string base = var_;
  if (center_ != 0) {
    base = "(" + var_ + (center_ > 0 ? " - " + dancyl::to_string(center_) : " + " + dancyl::to_string(-center_)) + ")";
  }
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Highest exponent first, matching the polynomial text form.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += dancyl::to_string(mag);
      continue;
    }
    std::string mono = base;
    if (e != 1) mono += "^" + std::to_string(e);
    out += mag == 1 ? mono : dancyl::to_string(mag) + "*" + mono;
  }
  return out;
}

LaurentSplit laurent_split(const LaurentPoly& f) { return {f.regular(), f.principal()}; }

}  // namespace dancyl
