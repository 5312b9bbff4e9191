#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fmos {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int t) {
#ifdef _OPENMP
  if (t > 0) omp_set_num_threads(t);
#else
  (void)t;
#endif
}

// Fixed-order blocked reduction.  [0, count) is split into contiguous blocks;
// per_block(lo, hi) produces each block's partial sum independently and the
// partials are combined in block order.  The result is bitwise identical for
// any worker count (it depends only on the block size).
template <class PerBlock>
double deterministic_block_sum(std::size_t count, std::size_t block,
                               PerBlock&& per_block) {
  if (block == 0) block = 1;
  const std::size_t nblocks = (count + block - 1) / block;
  std::vector<double> partial(nblocks, 0.0);
#pragma omp parallel for schedule(dynamic)
  for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * block;
    const std::size_t hi = std::min(count, lo + block);
    partial[static_cast<std::size_t>(b)] = per_block(lo, hi);
  }
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

}  // namespace fmos
