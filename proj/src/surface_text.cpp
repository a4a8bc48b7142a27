#include "dancyl/surface_text.hpp"

#include <cctype>

namespace dancyl {

namespace {

class SurfaceParser {
 public:
  explicit SurfaceParser(std::string_view text) : text_(text) {}

  SurfaceSpec parse() {
    SurfaceSpec spec;
    spec.text = std::string(text_);
    expect('x');
    spec.n = 1;
    if (accept('^')) spec.n = positive_int("exponent of x");
    accept('*');
    expect('z');
    expect('=');

    const std::size_t lead_at = here();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (rational() != 1) throw ParseError("leading coefficient must be 1 (monic P)", lead_at);
      accept('*');
    }
    do {
      const std::size_t at = here();
      Root r = factor();
      for (const auto& seen : spec.roots) {
        if (seen.value == r.value) throw ParseError("root " + to_string(r.value) + " repeated", at);
      }
      spec.roots.push_back(std::move(r));
      accept('*');
    } while (peek() == '(' || peek() == 'y');

    if (accept('-')) {
      expect('x');
      spec.variant = Variant::ShiftedFiber;
    }
    if (peek() != '\0') throw ParseError("unexpected '" + std::string(1, peek()) + "'", here());
    return spec;
  }

 private:
  std::size_t here() {
    skip_space();
    return pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      const std::string got = peek() == '\0' ? "end of input" : "'" + std::string(1, peek()) + "'";
      throw ParseError("expected '" + std::string(1, c) + "', found " + got, here());
    }
  }

  int positive_int(const char* what) {
    const std::size_t start = here();
    std::size_t end = start;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    if (end == start) throw ParseError(std::string("malformed ") + what, start);
    const std::string digits(text_.substr(start, end - start));
    if (digits.size() > 6 || std::stoi(digits) < 1) throw ParseError(std::string(what) + " must be a positive integer", start);
    pos_ = end;
    return std::stoi(digits);
  }

  Rational rational() {
    const std::size_t start = here();
    std::size_t end = start;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    if (end < text_.size() && text_[end] == '/') {
      ++end;
      const std::size_t den = end;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      if (end == den) throw ParseError("malformed rational", start);
    }
    if (end == start) throw ParseError("expected a rational number", start);
    try {
      Rational q = parse_rational(text_.substr(start, end - start));
      pos_ = end;
      return q;
    } catch (const ParseError& e) {
      throw ParseError("malformed rational", start);
    }
  }

  Root factor() {
    Root r{0, 1};
    if (accept('(')) {
      expect('y');
      if (accept('-')) {
        r.value = rational();
      } else if (accept('+')) {
        r.value = -rational();
      }
      expect(')');
    } else {
      expect('y');
    }
    if (accept('^')) r.multiplicity = positive_int("root multiplicity");
    return r;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SurfaceSpec parse_surface(std::string_view text) { return SurfaceParser(text).parse(); }

std::string print_surface(int n, const std::vector<Root>& roots, Variant variant) {
  std::string out = "x^" + std::to_string(n) + " z =";
  for (const auto& r : roots) {
    out += r.value < 0 ? " (y + " + to_string(-r.value) + ")" : " (y - " + to_string(r.value) + ")";
    out += "^" + std::to_string(r.multiplicity);
  }
  if (variant == Variant::ShiftedFiber) out += " - x";
  return out;
}

std::string print_surface(const DanielewskiSurface& s) { return print_surface(s.n(), s.roots(), s.variant()); }

DanielewskiSurface surface_from_text(std::string_view text) {
  SurfaceSpec spec = parse_surface(text);
  return build_surface(spec.n, std::move(spec.roots), spec.variant);
}

}  // namespace dancyl
