#include "dancyl/linsolve.hpp"

#include <algorithm>

namespace dancyl {

void LinearSystem::add_equation(SparseRow row, Rational rhs) {
  std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [k, c] : row) {
    if (k < 0 || k >= unknowns_) throw Error("equation refers to unknown " + std::to_string(k));
  }
  rows_.push_back(std::move(row));
  rhs_.push_back(std::move(rhs));
}

namespace {

// row += scale * other, on both sides.
void axpy(SparseRow& row, Rational& rhs, const SparseRow& other, const Rational& other_rhs, const Rational& scale) {
  for (const auto& [k, c] : other) {
    auto [it, fresh] = row.emplace(k, scale * c);
    if (!fresh) {
      it->second += scale * c;
      if (it->second == 0) row.erase(it);
    }
  }
  rhs += scale * other_rhs;
}

}  // namespace

std::optional<std::vector<Rational>> LinearSystem::solve() const {
  std::vector<SparseRow> rows = rows_;
  std::vector<Rational> rhs = rhs_;
  // pivot column -> row index, kept fully reduced.
  std::map<int, std::size_t> pivots;
  std::vector<std::size_t> pivot_rows;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    // Eliminate existing pivots from the new row.
    for (auto it = rows[r].begin(); it != rows[r].end();) {
      auto p = pivots.find(it->first);
      if (p == pivots.end()) {
        ++it;
        continue;
      }
      const Rational scale = -it->second;
      const std::size_t pr = p->second;
      const int col = it->first;
      axpy(rows[r], rhs[r], rows[pr], rhs[pr], scale);
      it = rows[r].upper_bound(col);
    }
    if (rows[r].empty()) {
      if (rhs[r] != 0) return std::nullopt;
      continue;
    }
    const int col = rows[r].begin()->first;
    const Rational inv = 1 / rows[r].begin()->second;
    for (auto& [k, c] : rows[r]) c *= inv;
    rhs[r] *= inv;
    // Back-substitute into earlier pivot rows.
    for (std::size_t pr : pivot_rows) {
      auto it = rows[pr].find(col);
      if (it == rows[pr].end()) continue;
      const Rational scale = -it->second;
      axpy(rows[pr], rhs[pr], rows[r], rhs[r], scale);
    }
    pivots.emplace(col, r);
    pivot_rows.push_back(r);
  }
  std::vector<Rational> a(static_cast<std::size_t>(unknowns_), Rational(0));
  for (const auto& [col, r] : pivots) a[static_cast<std::size_t>(col)] = rhs[r];
  return a;
}

bool LinearSystem::satisfied_by(const std::vector<Rational>& a) const {
  if (a.size() != static_cast<std::size_t>(unknowns_)) return false;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rational s = 0;
    for (const auto& [k, c] : rows_[r]) s += c * a[static_cast<std::size_t>(k)];
    if (s != rhs_[r]) return false;
  }
  return true;
}

}  // namespace dancyl
