#include "dancyl/cech.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <set>

namespace dancyl {

namespace {

const MarkedPoint& require_point(const MultifoldCurve& curve, const Rational& location) {
  const MarkedPoint* p = curve.point_at(location);
  if (!p) throw CocycleError("no marked point at " + to_string(location));
  return *p;
}

void check_pair(const MarkedPoint& p, int i, int j) {
  const int r = static_cast<int>(p.branches.size());
  if (i < 0 || j < 0 || i >= r || j >= r) {
    throw CocycleError("branch pair (" + std::to_string(i) + "," + std::to_string(j) + ") out of range at " +
                       to_string(p.location));
  }
  if (i == j) throw CocycleError("transition of a branch with itself");
}

// Edges i -> j carrying values with value(j) = combine(value(i), edge). BFS from
// branch 0 assigns potentials; returns nullopt when some branch is unreachable.
template <class T, class Combine>
std::optional<std::vector<T>> potentials(int r, const std::vector<std::tuple<int, int, T>>& edges, const T& origin,
                                         Combine combine, std::function<T(const T&)> inverse) {
  std::vector<std::vector<std::pair<int, T>>> adj(static_cast<std::size_t>(r));
  for (const auto& [i, j, g] : edges) {
    adj[static_cast<std::size_t>(i)].push_back({j, g});
    adj[static_cast<std::size_t>(j)].push_back({i, inverse(g)});
  }
  std::vector<std::optional<T>> phi(static_cast<std::size_t>(r));
  phi[0] = origin;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    const int a = q.front();
    q.pop();
    for (const auto& [b, g] : adj[static_cast<std::size_t>(a)]) {
      if (phi[static_cast<std::size_t>(b)]) continue;
      phi[static_cast<std::size_t>(b)] = combine(*phi[static_cast<std::size_t>(a)], g);
      q.push(b);
    }
  }
  std::vector<T> out;
  for (auto& v : phi) {
    if (!v) return std::nullopt;
    out.push_back(std::move(*v));
  }
  return out;
}

Rational rational_pow(const Rational& q, long e) {
  Rational base = e < 0 ? Rational(1 / q) : q;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational out = 1;
  while (k) {
    if (k & 1) out *= base;
    base *= base;
    k >>= 1;
  }
  return out;
}

// Extended gcd: returns g and Bezout coefficients with sum coeff[t] * e[t] = g.
long bezout(const std::vector<long>& e, std::vector<long>& coeff) {
  coeff.assign(e.size(), 0);
  long g = 0;
  for (std::size_t t = 0; t < e.size(); ++t) {
    // Solve a*g + b*e[t] = gcd(g, e[t]).
    long old_r = g, r = e[t], old_s = 1, s = 0, old_u = 0, u = 1;
    while (r != 0) {
      const long q = old_r / r;
      old_r = std::exchange(r, old_r - q * r);
      old_s = std::exchange(s, old_s - q * s);
      old_u = std::exchange(u, old_u - q * u);
    }
    for (std::size_t k = 0; k < t; ++k) coeff[k] *= old_s;
    coeff[t] = old_u;
    g = old_r;
  }
  return g;
}

// s and lambda with s * lambda^-k * a_t = b_t for all matched terms, over C.
struct ScalingSolve {
  bool ok = false;
  Rational lambda_power = 1;
  int lambda_root = 1;
};

ScalingSolve solve_scaling(const std::vector<std::pair<int, Rational>>& order_ratio) {
  ScalingSolve out;
  int kmin = order_ratio.front().first;
  Rational rmin = order_ratio.front().second;
  for (const auto& [k, r] : order_ratio) {
    if (k < kmin) {
      kmin = k;
      rmin = r;
    }
  }
  // mu = 1/lambda satisfies mu^(k - kmin) = r / r_min.
  std::map<long, Rational> by_e;
  for (const auto& [k, r] : order_ratio) {
    const long e = k - kmin;
    const Rational q = r / rmin;
    auto [it, fresh] = by_e.emplace(e, q);
    if (!fresh && it->second != q) return out;
  }
  if (by_e.at(0) != 1) return out;
  std::vector<long> es;
  std::vector<Rational> qs;
  for (const auto& [e, q] : by_e) {
    if (e > 0) {
      es.push_back(e);
      qs.push_back(q);
    }
  }
  if (es.empty()) {
    out.ok = true;
    return out;
  }
  std::vector<long> a;
  const long g = bezout(es, a);
  Rational mu_g = 1;
  for (std::size_t t = 0; t < es.size(); ++t) mu_g *= rational_pow(qs[t], a[t]);
  for (std::size_t t = 0; t < es.size(); ++t) {
    if (rational_pow(mu_g, es[t] / g) != qs[t]) return out;
  }
  out.ok = true;
  out.lambda_power = 1 / mu_g;
  out.lambda_root = static_cast<int>(g);
  return out;
}

}  // namespace

CechClass CechClass::zero(const MultifoldCurve& curve) { return class_normal_form({}, curve); }

LaurentPoly CechClass::part(const Rational& location, int i, int j) const {
  const MarkedPoint& p = require_point(curve_, location);
  LaurentPoly zero(curve_.coordinate(), location);
  if (i == j) {
    check_pair(p, i, i == 0 ? 1 : 0);
    return zero;
  }
  check_pair(p, i, j);
  auto it = parts_.find({location, std::min(i, j), std::max(i, j)});
  if (it == parts_.end()) return zero;
  return i < j ? it->second : -it->second;
}

CechClass CechClass::operator-() const { return Rational(-1) * *this; }

CechClass operator+(const CechClass& a, const CechClass& b) {
  if (a.curve_ != b.curve_) throw NotComparableError("classes live on different curves");
  RawCochain raw;
  for (const auto& [k, g] : a.parts_) raw.emplace(k, g);
  for (const auto& [k, g] : b.parts_) {
    auto [it, fresh] = raw.emplace(k, g);
    if (!fresh) it->second += g;
  }
  // Unlisted pairs are zero in both summands.
  for (const auto& p : a.curve_.marked_points()) {
    for (std::size_t i = 0; i < p.branches.size(); ++i) {
      for (std::size_t j = i + 1; j < p.branches.size(); ++j) {
        raw.emplace(PartKey{p.location, static_cast<int>(i), static_cast<int>(j)},
                    LaurentPoly(a.curve_.coordinate(), p.location));
      }
    }
  }
  return class_normal_form(raw, a.curve_);
}

CechClass operator*(const Rational& s, const CechClass& c) {
  CechClass out = CechClass::zero(c.curve_);
  if (s == 0) return out;
  for (const auto& [k, g] : c.parts_) out.parts_.emplace(k, g * s);
  return out;
}

std::string CechClass::to_string() const {
  if (parts_.empty()) return "0";
  if (parts_.size() == 1 && curve_.marked_points().size() == 1) return parts_.begin()->second.to_string();
  std::string s;
  for (const auto& [k, g] : parts_) {
    if (!s.empty()) s += "; ";
    s += "g" + std::to_string(k.i) + std::to_string(k.j) + " at " + dancyl::to_string(k.location) + " = " +
         g.to_string();
  }
  return s;
}

CechClass class_normal_form(const RawCochain& raw, const MultifoldCurve& curve) {
  if (!curve.is_scheme()) throw UnsupportedError("cohomology classes need a scheme curve: " + curve.describe());
  const std::string& var = curve.coordinate();
  std::map<Rational, std::vector<std::tuple<int, int, LaurentPoly>>> edges;
  for (const auto& [key, g] : raw) {
    const MarkedPoint& p = require_point(curve, key.location);
    check_pair(p, key.i, key.j);
    if (g.var() != var || g.center() != key.location) {
      throw Error("transition at " + to_string(key.location) + " must be a Laurent polynomial in (" + var + " - " +
                  to_string(key.location) + ")");
    }
    edges[key.location].emplace_back(key.i, key.j, g);
  }

  CechClass c;
  c.curve_ = curve;
  for (const auto& [location, list] : edges) {
    const MarkedPoint& p = *curve.point_at(location);
    const int r = static_cast<int>(p.branches.size());
    auto phi = potentials<LaurentPoly>(
        r, list, LaurentPoly(var, location), [](const LaurentPoly& a, const LaurentPoly& g) { return a + g; },
        [](const LaurentPoly& g) { return -g; });
    if (!phi) throw CocycleError("transitions at " + to_string(location) + " do not connect all branches");
    for (const auto& [i, j, g] : list) {
      if ((*phi)[static_cast<std::size_t>(j)] - (*phi)[static_cast<std::size_t>(i)] != g) {
        throw CocycleError("cocycle condition fails at " + to_string(location) + " for pair (" + std::to_string(i) +
                           "," + std::to_string(j) + ")");
      }
    }
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) {
        LaurentPoly g = ((*phi)[static_cast<std::size_t>(j)] - (*phi)[static_cast<std::size_t>(i)]).principal();
        if (!g.is_zero()) c.parts_.emplace(PartKey{location, i, j}, std::move(g));
      }
    }
  }
  return c;
}

CechClass h1_push(const CechClass& c, const MultiPoly& s) {
  if (s.is_zero()) throw Error("h1_push needs a nonzero multiplier");
  const std::string& var = c.curve().coordinate();
  RawCochain raw;
  for (const auto& p : c.curve().marked_points()) {
    const LaurentPoly local = s.ring().contains(var) ? LaurentPoly::from_poly(s, var, p.location)
                                                     : LaurentPoly::monomial(s.constant_term(), 0, var, p.location);
    if (!s.ring().contains(var) && !s.is_constant()) throw Error("multiplier must be a polynomial in " + var);
    for (std::size_t i = 0; i < p.branches.size(); ++i) {
      for (std::size_t j = i + 1; j < p.branches.size(); ++j) {
        const int a = static_cast<int>(i), b = static_cast<int>(j);
        raw.emplace(PartKey{p.location, a, b}, local * c.part(p.location, a, b));
      }
    }
  }
  return class_normal_form(raw, c.curve());
}

std::vector<PoleEntry> pole_profile(const CechClass& c) {
  std::vector<PoleEntry> out;
  for (const auto& [k, g] : c.parts()) out.push_back({k.location, k.i, k.j, g.pole_order()});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> pole_orders(const CechClass& c) {
  std::vector<int> out;
  for (const auto& e : pole_profile(c)) out.push_back(e.order);
  std::sort(out.begin(), out.end());
  return out;
}

CechClass permute_branches(const CechClass& c, const std::vector<int>& perm) {
  RawCochain raw;
  for (const auto& p : c.curve().marked_points()) {
    const int r = static_cast<int>(p.branches.size());
    if (static_cast<int>(perm.size()) != r) throw Error("permutation size does not match the branch count");
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int b = 0; b < r; ++b) {
      if (sorted[static_cast<std::size_t>(b)] != b) throw Error("not a permutation of the branches");
    }
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) {
        if (p.branches[static_cast<std::size_t>(i)].multiplicity !=
            p.branches[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])].multiplicity) {
          throw Error("permutation does not preserve multiplicities");
        }
        raw.emplace(PartKey{p.location, perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]},
                    c.part(p.location, i, j));
      }
    }
  }
  return class_normal_form(raw, c.curve());
}

CechClass scale_base(const CechClass& c, const Rational& lambda) {
  if (lambda == 0) throw Error("base scaling must be nonzero");
  RawCochain raw;
  for (const auto& p : c.curve().marked_points()) {
    for (std::size_t i = 0; i < p.branches.size(); ++i) {
      for (std::size_t j = i + 1; j < p.branches.size(); ++j) {
        const int a = static_cast<int>(i), b = static_cast<int>(j);
        LaurentPoly g = c.part(p.location, a, b);
        LaurentPoly out(g.var(), g.center());
        for (const auto& [e, coeff] : g.terms()) out.add_term(e, coeff * rational_pow(lambda, e));
        raw.emplace(PartKey{p.location, a, b}, std::move(out));
      }
    }
  }
  return class_normal_form(raw, c.curve());
}

OrbitVerdict orbit_test(const CechClass& a, const CechClass& b) {
  if (a.curve() != b.curve()) throw NotComparableError("orbit test needs classes on the same curve");
  const auto& points = a.curve().marked_points();
  OrbitVerdict v;
  if (points.size() > 1) throw UnsupportedError("orbit test supports a single marked point");
  if (a.is_zero() || b.is_zero()) {
    v.equivalent = a.is_zero() && b.is_zero();
    return v;
  }
  if (pole_orders(a) != pole_orders(b)) return v;
  // A marked point away from 0 is moved there by a translation; parts are stored in
  // the local coordinate already, so scalings about it act the same way.
  const MarkedPoint& p = points.front();
  std::vector<int> perm(p.branches.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool allowed = true;
    for (std::size_t i = 0; i < perm.size() && allowed; ++i) {
      allowed = p.branches[i].multiplicity == p.branches[static_cast<std::size_t>(perm[i])].multiplicity;
    }
    if (!allowed) continue;
    const CechClass pa = permute_branches(a, perm);
    if (pa.parts().size() != b.parts().size()) continue;
    std::vector<std::pair<int, Rational>> order_ratio;
    bool match = true;
    for (auto ia = pa.parts().begin(), ib = b.parts().begin(); ia != pa.parts().end() && match; ++ia, ++ib) {
      if (ia->first != ib->first || ia->second.terms().size() != ib->second.terms().size()) {
        match = false;
        break;
      }
      for (const auto& [e, coeff] : ia->second.terms()) {
        const Rational other = ib->second.coefficient(e);
        if (other == 0) {
          match = false;
          break;
        }
        order_ratio.emplace_back(-e, other / coeff);
      }
    }
    if (!match) continue;
    ScalingSolve s = solve_scaling(order_ratio);
    if (s.ok) {
      v.equivalent = true;
      v.permutation = perm;
      v.lambda_power = s.lambda_power;
      v.lambda_root = s.lambda_root;
      return v;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return v;
}

bool orbit_equivalent(const CechClass& a, const CechClass& b) { return orbit_test(a, b).equivalent; }

UnitClass UnitClass::normal_form(const std::map<PartKey, Unit>& raw, const MultifoldCurve& curve) {
  if (!curve.is_scheme()) throw UnsupportedError("unit cocycles need a scheme curve: " + curve.describe());
  std::map<Rational, std::vector<std::tuple<int, int, Unit>>> edges;
  for (const auto& [key, u] : raw) {
    check_pair(require_point(curve, key.location), key.i, key.j);
    if (u.scalar == 0) throw Error("transition unit with zero scalar");
    edges[key.location].emplace_back(key.i, key.j, u);
  }
  UnitClass c;
  c.curve_ = curve;
  for (const auto& p : curve.marked_points()) {
    const int r = static_cast<int>(p.branches.size());
    std::vector<int> w(static_cast<std::size_t>(r > 0 ? r - 1 : 0), 0);
    auto it = edges.find(p.location);
    if (it != edges.end()) {
      auto phi = potentials<Unit>(
          r, it->second, Unit{1, 0},
          [](const Unit& a, const Unit& g) { return Unit{a.scalar * g.scalar, a.winding + g.winding}; },
          [](const Unit& g) { return Unit{1 / g.scalar, -g.winding}; });
      if (!phi) throw CocycleError("unit transitions at " + to_string(p.location) + " do not connect all branches");
      for (const auto& [i, j, g] : it->second) {
        const Unit& a = (*phi)[static_cast<std::size_t>(i)];
        const Unit& b = (*phi)[static_cast<std::size_t>(j)];
        if (b.scalar != a.scalar * g.scalar || b.winding != a.winding + g.winding) {
          throw CocycleError("multiplicative cocycle condition fails at " + to_string(p.location));
        }
      }
      for (int k = 1; k < r; ++k) w[static_cast<std::size_t>(k - 1)] = (*phi)[static_cast<std::size_t>(k)].winding;
    }
    c.windings_.emplace(p.location, std::move(w));
  }
  return c;
}

bool UnitClass::is_trivial() const {
  for (const auto& [loc, w] : windings_) {
    for (int k : w) {
      if (k != 0) return false;
    }
  }
  return true;
}

UnitClass operator*(const UnitClass& a, const UnitClass& b) {
  if (a.curve_ != b.curve_) throw NotComparableError("unit classes live on different curves");
  UnitClass c = a;
  for (auto& [loc, w] : c.windings_) {
    const auto& other = b.windings_.at(loc);
    for (std::size_t k = 0; k < w.size(); ++k) w[k] += other[k];
  }
  return c;
}

UnitClass UnitClass::pow(int k) const {
  UnitClass c = *this;
  for (auto& [loc, w] : c.windings_) {
    for (int& x : w) x *= k;
  }
  return c;
}

std::string PicardGroup::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (int t : torsion) parts.push_back("Z_" + std::to_string(t));
  if (parts.empty()) return "0";
  std::string s = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

PicardGroup pic_group(const MultifoldCurve& curve) {
  PicardGroup g;
  for (const auto& p : curve.marked_points()) {
    const bool reduced = std::all_of(p.branches.begin(), p.branches.end(), [](const Branch& b) { return b.multiplicity == 1; });
    if (reduced) {
      g.free_rank += static_cast<int>(p.branches.size()) - 1;
    } else if (p.branches.size() == 1) {
      g.torsion.push_back(p.branches.front().multiplicity);
    } else {
      throw UnsupportedError("Picard group with several branches of mixed multiplicity at " + to_string(p.location));
    }
  }
  std::sort(g.torsion.begin(), g.torsion.end());
  return g;
}

CechClass surface_class(const DanielewskiSurface& s) {
  if (s.variant() != Variant::PlainFiber || !s.all_simple()) {
    throw UnsupportedError("surface_class covers x^n z = P(y) with simple roots; multiple fibers use the equivariant model");
  }
  const MultifoldCurve curve = relatively_connected_quotient(s);
  RawCochain raw;
  for (const auto& p : curve.marked_points()) {
    for (std::size_t i = 0; i < p.branches.size(); ++i) {
      for (std::size_t j = i + 1; j < p.branches.size(); ++j) {
        const Rational d = s.roots()[i].value - s.roots()[j].value;
        raw.emplace(PartKey{p.location, static_cast<int>(i), static_cast<int>(j)},
                    LaurentPoly::monomial(d, -s.n(), curve.coordinate(), p.location));
      }
    }
  }
  return class_normal_form(raw, curve);
}

EquivariantClass equivariant_class(int n, int m) {
  if (n < 2 || m < 2) throw Error("equivariant model needs n >= 2 and m >= 2");
  EquivariantClass e;
  e.n = n;
  e.m = m;
  e.weight = 1;
  e.symbolic_only = m > 2;
  const int order = (n - 1) * m;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      e.symbolic_parts.push_back({i, j, order, "eps^" + std::to_string(i) + " - eps^" + std::to_string(j)});
    }
  }
  const MultifoldCurve cover = MultifoldCurve::line_with_origins(m, 0, "y");
  if (m == 2) {
    // eps = -1: g_01 = (1 - (-1)) y^-order.
    e.cover_class = class_normal_form({{PartKey{0, 0, 1}, LaurentPoly::monomial(2, -order, "y", 0)}}, cover);
  } else {
    e.cover_class = CechClass::zero(cover);
  }
  return e;
}

bool mu2_compatible(const CechClass& cover, int weight) {
  const auto& points = cover.curve().marked_points();
  if (points.size() != 1 || points.front().branches.size() != 2) {
    throw Error("mu_2 check needs a line with two origins");
  }
  const Rational& loc = points.front().location;
  if (loc != 0) throw UnsupportedError("mu_2 acts by y -> -y, fixing only 0");
  const LaurentPoly g = cover.part(loc, 0, 1);
  // Pull back along y -> -y, then twist by the character (-1)^weight.
  LaurentPoly rotated(g.var(), g.center());
  const int sign = weight % 2 == 0 ? 1 : -1;
  for (const auto& [e, c] : g.terms()) rotated.add_term(e, c * ((e % 2 == 0) ? sign : -sign));
  return cover.part(loc, 1, 0) == rotated;
}

bool equivariant_compatible(const EquivariantClass& e) {
  if (!e.symbolic_only) return mu2_compatible(e.cover_class, e.weight);
  std::set<std::tuple<int, int, int>> support;
  for (const auto& p : e.symbolic_parts) support.emplace(p.i, p.j, p.pole_order);
  for (const auto& p : e.symbolic_parts) {
    int a = (p.i + 1) % e.m, b = (p.j + 1) % e.m;
    if (a > b) std::swap(a, b);
    if (!support.count({a, b, p.pole_order})) return false;
  }
  return true;
}

bool equivariant_equivalent(const EquivariantClass& a, const EquivariantClass& b) {
  if (a.m != b.m || a.weight != b.weight) return false;
  if (!a.symbolic_only && !b.symbolic_only) return orbit_equivalent(a.cover_class, b.cover_class);
  return a.pole_order() == b.pole_order();
}

}  // namespace dancyl
