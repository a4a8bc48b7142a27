#include "dancyl/kernels.hpp"

#include <algorithm>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dancyl::kernels {

namespace {

Exponents sum_exponents(const Exponents& a, const Exponents& b) {
  Exponents e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
  return e;
}

void accumulate_row(TermMap& out, const Exponents& e, const Rational& c, const TermMap& b) {
  for (const auto& [eb, cb] : b) detail::add_term(out, sum_exponents(e, eb), c * cb);
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

TermMap multiply_serial(const TermMap& a, const TermMap& b) {
  TermMap out;
  for (const auto& [ea, ca] : a) accumulate_row(out, ea, ca, b);
  return out;
}

TermMap multiply_parallel(const TermMap& a, const TermMap& b) {
  std::vector<const TermMap::value_type*> rows;
  rows.reserve(a.size());
  for (const auto& term : a) rows.push_back(&term);

  const int chunks = std::max(1, std::min<int>(max_threads() * 4, static_cast<int>(rows.size())));
  std::vector<TermMap> partial(static_cast<std::size_t>(chunks));

#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < chunks; ++c) {
    const std::size_t lo = rows.size() * static_cast<std::size_t>(c) / chunks;
    const std::size_t hi = rows.size() * static_cast<std::size_t>(c + 1) / chunks;
    TermMap& out = partial[static_cast<std::size_t>(c)];
    for (std::size_t i = lo; i < hi; ++i) accumulate_row(out, rows[i]->first, rows[i]->second, b);
  }

  TermMap out = std::move(partial.front());
  for (std::size_t c = 1; c < partial.size(); ++c) detail::add_scaled(out, partial[c], 1);
  return out;
}

TermMap multiply(const TermMap& a, const TermMap& b) {
  if (a.size() * b.size() >= kParallelProductThreshold && max_threads() > 1) {
    return a.size() >= b.size() ? multiply_parallel(a, b) : multiply_parallel(b, a);
  }
  return a.size() <= b.size() ? multiply_serial(a, b) : multiply_serial(b, a);
}

}  // namespace dancyl::kernels
