// Recursive-descent parser for polynomial text:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/' | <juxtaposition>) unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' ['-'] integer)?
//   atom   := rational | identifier | '(' expr ')'
// Negative powers are accepted only on monomials; division only by constants.

#include <cctype>

#include "dancyl/ratpoly.hpp"

namespace dancyl {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  LaurentMulti parse() {
    LaurentMulti e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_atom() {
    const char c = peek();
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  LaurentMulti expr() {
    LaurentMulti acc = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  LaurentMulti term() {
    LaurentMulti acc = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (c == '/') {
        ++pos_;
        const std::size_t at = pos_;
        LaurentMulti d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        if (d.size() != 1 || !is_constant(d)) throw ParseError("division is only supported by constants", at);
        acc *= Rational(1 / d.terms().begin()->second);
      } else if (starts_atom()) {
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  static bool is_constant(const LaurentMulti& m) {
    for (int x : m.terms().begin()->first) {
      if (x != 0) return false;
    }
    return true;
  }

  LaurentMulti unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  LaurentMulti power() {
    LaurentMulti base = atom();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip_space();
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    if (pos_ - start > 6) throw ParseError("exponent too large", start);
    const int k = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (!negative) return base.pow(static_cast<unsigned>(k));
    if (base.size() != 1) throw ParseError("negative exponent on a non-monomial", start);
    const auto& [e, c] = *base.terms().begin();
    Exponents inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i] * k;
    Rational coeff = 1;
    for (int i = 0; i < k; ++i) coeff /= c;
    return LaurentMulti::monomial(ring_, inv, coeff);
  }

  LaurentMulti atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      LaurentMulti e = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return LaurentMulti::constant(ring_, Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (!ring_.contains(name)) throw ParseError("unknown variable '" + name + "'", start);
      return LaurentMulti::variable(ring_, name);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentMulti LaurentMulti::parse(std::string_view text, const Ring& ring) { return Parser(text, ring).parse(); }

}  // namespace dancyl
