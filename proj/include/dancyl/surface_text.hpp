#pragma once

// Concrete syntax for surfaces:
//   x^<n> z = [1] <factor>+ [- x]
//   factor := '(' 'y' ('-' | '+') <rational> ')' ['^' <m>] | 'y' ['^' <m>]
// Factors may be separated by '*'. A bare y stands for (y - 0).

#include <string>
#include <string_view>

#include "dancyl/fibration.hpp"

namespace dancyl {

struct SurfaceSpec {
  std::string text;
  int n = 1;
  std::vector<Root> roots;
  Variant variant = Variant::PlainFiber;
};

/// Throws ParseError with the offending column for malformed, non-monic or
/// repeated-root input.
SurfaceSpec parse_surface(std::string_view text);

/// Canonical text, e.g. "x^1 z = (y - 0)^1 (y + 2)^3 - x".
std::string print_surface(int n, const std::vector<Root>& roots, Variant variant);
std::string print_surface(const DanielewskiSurface& s);

/// parse_surface followed by build_surface.
DanielewskiSurface surface_from_text(std::string_view text);

}  // namespace dancyl
