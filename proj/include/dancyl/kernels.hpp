#pragma once

// Data-parallel polynomial kernels. Each OpenMP kernel has a serial reference
// kept for testing and benchmarking; results are identical term for term
// because all arithmetic is exact and partial results merge in a fixed order.

#include <cstddef>

#include "dancyl/ratpoly.hpp"

namespace dancyl::kernels {

/// Products below this many term pairs run serially in `multiply`.
inline constexpr std::size_t kParallelProductThreshold = 1 << 14;

TermMap multiply_serial(const TermMap& a, const TermMap& b);
TermMap multiply_parallel(const TermMap& a, const TermMap& b);
/// Picks the parallel kernel for large products when more than one thread is available.
TermMap multiply(const TermMap& a, const TermMap& b);

int max_threads();

}  // namespace dancyl::kernels
