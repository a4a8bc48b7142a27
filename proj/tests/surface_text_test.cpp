#include "dancyl/surface_text.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace dancyl;

namespace {

std::size_t error_column(const char* text) {
  try {
    parse_surface(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("accepted malformed input: " << text);
  return 0;
}

}  // namespace

TEST_CASE("parse_surface examples") {
  const SurfaceSpec a = parse_surface("x^1 z = (y - 0)^1 (y - 1)^1");
  CHECK(a.n == 1);
  CHECK(a.roots == std::vector<Root>{{0, 1}, {1, 1}});
  CHECK(a.variant == Variant::PlainFiber);

  const SurfaceSpec b = parse_surface("x^2 z = (y - 1)^3 (y + 2)^2 - x");
  CHECK(b.n == 2);
  CHECK(b.roots == std::vector<Root>{{1, 3}, {-2, 2}});
  CHECK(b.variant == Variant::ShiftedFiber);

  CHECK_THROWS_AS(parse_surface("x^1 z = 2 (y-1)^1"), ParseError);
  CHECK(error_column("x^1 z = 2 (y-1)^1") == 8);
}

TEST_CASE("parse_surface shorthand and separators") {
  CHECK(parse_surface("x z = y(y-1)").roots == std::vector<Root>{{0, 1}, {1, 1}});
  CHECK(parse_surface("x^3*z = 1*(y-1/2)^2*(y+3)").roots == std::vector<Root>{{Rational(1, 2), 2}, {-3, 1}});
  CHECK(parse_surface("x^3 z = y^4 - x").roots == std::vector<Root>{{0, 4}});
  CHECK(parse_surface("x z=(y)").roots == std::vector<Root>{{0, 1}});
}

TEST_CASE("parse_surface positioned errors") {
  CHECK(error_column("x^1 z = (y - 1)^1 (y - 1)^2") == 18);
  CHECK(error_column("x^0 z = y") == 2);
  CHECK(error_column("x^ z = y") == 3);
  CHECK(error_column("x^1 z = (y - 1)^") == 16);
  CHECK(error_column("x^1 z = (y - 1") == 14);
  CHECK(error_column("x^1 z = (y - 1)^1 + x") == 18);
  CHECK(error_column("x^1 w = y") == 4);
  CHECK(error_column("x^1 z = ") == 8);
  CHECK(error_column("x^1 z = (y - 1/)") == 13);
}

TEST_CASE("print_surface is canonical") {
  CHECK(print_surface(1, {{0, 1}, {1, 1}}, Variant::PlainFiber) == "x^1 z = (y - 0)^1 (y - 1)^1");
  CHECK(print_surface(2, {{1, 3}, {-2, 2}}, Variant::ShiftedFiber) == "x^2 z = (y - 1)^3 (y + 2)^2 - x");
  CHECK(print_surface(surface_from_text("x z = y(y-1)")) == "x^1 z = (y - 0)^1 (y - 1)^1");
}

TEST_CASE("property: print then parse is idempotent and reproduces the data") {
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 5);
    std::vector<Root> roots;
    const int r = 1 + static_cast<int>(rng() % 4);
    while (static_cast<int>(roots.size()) < r) {
      const Rational a = testing::random_rational(rng, 6);
      bool seen = false;
      for (const auto& x : roots) seen = seen || x.value == a;
      if (!seen) roots.push_back({a, 1 + static_cast<int>(rng() % 3)});
    }
    const Variant v = rng() % 2 ? Variant::ShiftedFiber : Variant::PlainFiber;
    const std::string once = print_surface(n, roots, v);
    const SurfaceSpec back = parse_surface(once);
    CHECK(back.n == n);
    CHECK(back.roots == roots);
    CHECK(back.variant == v);
    CHECK(print_surface(back.n, back.roots, back.variant) == once);
  }
}

TEST_CASE("surface_from_text builds and checks the surface") {
  const DanielewskiSurface s = surface_from_text("x^1 z = (y-1)^1 (y+1)^1");
  CHECK(s.generator() == MultiPoly::parse("x*z - y^2 + 1", surface_ring()));
  CHECK_THROWS_AS(surface_from_text("x^1 z = (y - 1)^2"), SingularInputError);
}
