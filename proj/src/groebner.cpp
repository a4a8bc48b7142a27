#include <algorithm>
#include <optional>
#include <tuple>

#include "dancyl/ideals.hpp"

namespace dancyl {

namespace {

TermMap::const_iterator lead(const TermMap& p, TermOrder order) {
  if (order == TermOrder::Grevlex) return p.begin();
  auto best = p.begin();
  for (auto it = p.begin(); it != p.end(); ++it) {
    if (compare_monomials(it->first, best->first, order) > 0) best = it;
  }
  return best;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
  return e;
}

Exponents difference(const Exponents& a, const Exponents& b) {
  Exponents e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] - b[i];
  return e;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

struct Divisor {
  const MultiPoly* poly;
  Exponents lm;
  Rational lc;
};

std::vector<Divisor> make_divisors(const std::vector<MultiPoly>& polys, TermOrder order) {
  std::vector<Divisor> out;
  out.reserve(polys.size());
  for (const auto& p : polys) {
    if (p.is_zero()) throw Error("division by the zero polynomial");
    auto [lm, lc] = p.leading_term(order);
    out.push_back({&p, std::move(lm), std::move(lc)});
  }
  return out;
}

// Full reduction; quotients are accumulated only when requested.
MultiPoly reduce_terms(const MultiPoly& f, const std::vector<Divisor>& divisors, TermOrder order,
                       std::vector<MultiPoly>* quotients) {
  TermMap p = f.terms();
  MultiPoly rem(f.ring());
  while (!p.empty()) {
    auto it = lead(p, order);
    const Exponents e = it->first;
    const Rational c = it->second;
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Divisor& d = divisors[i];
      if (!divides(d.lm, e)) continue;
      const Exponents shift = difference(e, d.lm);
      const Rational scale = c / d.lc;
      if (quotients) (*quotients)[i].add_term(shift, scale);
      detail::add_shifted_scaled(p, d.poly->terms(), shift, -scale);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(e, c);
      p.erase(e);
    }
  }
  return rem;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, TermOrder order) {
  const auto [lf, cf] = f.leading_term(order);
  const auto [lg, cg] = g.leading_term(order);
  const Exponents l = lcm(lf, lg);
  TermMap s;
  detail::add_shifted_scaled(s, f.terms(), difference(l, lf), Rational(1 / cf));
  detail::add_shifted_scaled(s, g.terms(), difference(l, lg), Rational(-1 / cg));
  return MultiPoly(f.ring(), std::move(s));
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Exponents lcm;
};

// Gebauer–Möller installation of a new basis element (Becker–Weispfenning UPDATE).
class Buchberger {
 public:
  Buchberger(Ring ring, TermOrder order) : ring_(std::move(ring)), order_(order) {}

  void update(MultiPoly h) {
    const std::size_t hi = polys_.size();
    leads_.push_back(h.leading_term(order_).first);
    polys_.push_back(std::move(h));
    const Exponents& lh = leads_[hi];

    std::vector<std::size_t> candidates = active_;
    std::vector<Pair> fresh;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const std::size_t g = candidates[c];
      Exponents l = lcm(lh, leads_[g]);
      bool keep = coprime(lh, leads_[g]);
      if (!keep) {
        keep = true;
        for (std::size_t d = 0; d < candidates.size() && keep; ++d) {
          if (d == c) continue;
          const Exponents other = lcm(lh, leads_[candidates[d]]);
          // Drop (h,g) when another pair's lcm properly divides it; break ties by position.
          if (divides(other, l) && (other != l || d < c)) keep = false;
        }
      }
      if (keep) fresh.push_back({g, hi, std::move(l)});
    }
    std::erase_if(fresh, [&](const Pair& p) { return coprime(leads_[p.i], leads_[p.j]); });

    std::erase_if(pairs_, [&](const Pair& p) {
      return divides(lh, p.lcm) && lcm(leads_[p.i], lh) != p.lcm && lcm(lh, leads_[p.j]) != p.lcm;
    });
    for (auto& p : fresh) pairs_.push_back(std::move(p));

    std::erase_if(active_, [&](std::size_t g) { return divides(lh, leads_[g]); });
    active_.push_back(hi);
  }

  std::vector<MultiPoly> run() {
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        const int c = compare_monomials(a.lcm, b.lcm, order_);
        if (c != 0) return c < 0;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
      });
      const Pair p = *best;
      pairs_.erase(best);
      MultiPoly h = normal_form(s_polynomial(polys_[p.i], polys_[p.j], order_));
      if (!h.is_zero()) update(h.monic(order_));
    }
    std::vector<MultiPoly> out;
    for (std::size_t g : active_) out.push_back(polys_[g]);
    return out;
  }

  MultiPoly normal_form(const MultiPoly& f) const {
    std::vector<MultiPoly> basis;
    for (std::size_t g : active_) basis.push_back(polys_[g]);
    return reduce_terms(f, make_divisors(basis, order_), order_, nullptr);
  }

 private:
  Ring ring_;
  TermOrder order_;
  std::vector<MultiPoly> polys_;
  std::vector<Exponents> leads_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

std::vector<MultiPoly> interreduce(std::vector<MultiPoly> g, TermOrder order) {
  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Exponents li = g[i].leading_term(order).first;
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Exponents lj = g[j].leading_term(order).first;
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i].monic(order));
  }
  // Reduce every element by the others.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    if (others.empty()) break;
    minimal[i] = reduce_terms(minimal[i], make_divisors(others, order), order, nullptr).monic(order);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return compare_monomials(a.leading_term(order).first, b.leading_term(order).first, order) < 0;
  });
  return minimal;
}

}  // namespace

IdealPresentation::IdealPresentation(Ring ring, std::vector<MultiPoly> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (g.ring() != ring_) {
      throw RingMismatchError("generator " + g.to_string() + " is not in ring " + ring_.to_string());
    }
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Reduction divide(const MultiPoly& f, const std::vector<MultiPoly>& divisors, TermOrder order) {
  Reduction r;
  r.quotients.assign(divisors.size(), MultiPoly(f.ring()));
  for (const auto& d : divisors) {
    if (d.ring() != f.ring()) throw RingMismatchError("divide: ring mismatch");
  }
  r.remainder = reduce_terms(f, make_divisors(divisors, order), order, &r.quotients);
  return r;
}

bool GroebnerBasis::is_unit() const { return basis.size() == 1 && basis.front().is_constant(); }

MultiPoly GroebnerBasis::normal_form(const MultiPoly& f) const {
  if (f.ring() != ring) throw RingMismatchError("normal form: ring mismatch " + f.ring().to_string() + " vs " + ring.to_string());
  return reduce_terms(f, make_divisors(basis, order), order, nullptr);
}

Reduction GroebnerBasis::reduce(const MultiPoly& f) const { return divide(f, basis, order); }

GroebnerBasis groebner_basis(const IdealPresentation& ideal, TermOrder order) {
  GroebnerBasis gb{ideal.ring(), order, {}};
  if (ideal.generators().empty()) return gb;
  Buchberger engine(ideal.ring(), order);
  for (const auto& g : ideal.generators()) {
    MultiPoly h = engine.normal_form(g);
    if (!h.is_zero()) engine.update(h.monic(order));
  }
  gb.basis = interreduce(engine.run(), order);
  return gb;
}

bool is_groebner_basis(const std::vector<MultiPoly>& basis, TermOrder order) {
  if (basis.empty()) return true;
  const auto divisors = make_divisors(basis, order);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (coprime(divisors[i].lm, divisors[j].lm)) continue;
      if (!reduce_terms(s_polynomial(basis[i], basis[j], order), divisors, order, nullptr).is_zero()) return false;
    }
  }
  return true;
}

bool ideal_member(const MultiPoly& f, const IdealPresentation& ideal) {
  if (f.ring() != ideal.ring()) throw RingMismatchError("ideal_member: ring mismatch");
  return groebner_basis(ideal).contains(f);
}

bool jacobian_smooth(const MultiPoly& f) {
  if (f.ring().size() != 3) throw Error("jacobian_smooth expects a polynomial in 3 variables, got ring " + f.ring().to_string());
  if (f.is_constant()) throw Error("jacobian_smooth expects a nonconstant polynomial");
  std::vector<MultiPoly> gens{f};
  for (const auto& v : f.ring().vars()) gens.push_back(partial_derivative(f, v));
  return groebner_basis(IdealPresentation(f.ring(), gens)).is_unit();
}

std::vector<MultiPoly> normal_forms(const std::vector<MultiPoly>& polys, const GroebnerBasis& gb, Execution exec) {
  std::vector<MultiPoly> out(polys.size());
  const long n = static_cast<long>(polys.size());
  if (exec == Execution::Serial) {
    for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = gb.normal_form(polys[static_cast<std::size_t>(i)]);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = gb.normal_form(polys[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace dancyl
