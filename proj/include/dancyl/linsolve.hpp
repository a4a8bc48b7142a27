#pragma once

// Exact sparse linear systems over Q.

#include <map>
#include <optional>
#include <vector>

#include "dancyl/ratpoly.hpp"

namespace dancyl {

using SparseRow = std::map<int, Rational>;

class LinearSystem {
 public:
  explicit LinearSystem(int unknowns) : unknowns_(unknowns) {}

  int unknowns() const { return unknowns_; }
  std::size_t equations() const { return rows_.size(); }
  /// sum_k row[k] * a_k = rhs. Zero entries are dropped.
  void add_equation(SparseRow row, Rational rhs);

  /// Reduced row echelon form with pivots taken left to right; free unknowns are
  /// set to zero. nullopt when inconsistent.
  std::optional<std::vector<Rational>> solve() const;

  /// Substitutes a candidate solution into every equation.
  bool satisfied_by(const std::vector<Rational>& a) const;

 private:
  int unknowns_;
  std::vector<SparseRow> rows_;
  std::vector<Rational> rhs_;
};

}  // namespace dancyl
