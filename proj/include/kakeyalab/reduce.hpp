#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace kl {

/// Sum of f(0) + ... + f(n-1) in fixed blocks, combined in block order, so
/// the rounding does not depend on the thread count.
template <class F>
double ordered_sum(std::size_t n, F&& f, std::size_t block = 4096) {
  const std::size_t blocks = (n + block - 1) / block;
  std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::size_t b = 0; b < blocks; ++b) {
    double s = 0.0;
    const std::size_t end = std::min(n, (b + 1) * block);
    for (std::size_t i = b * block; i < end; ++i) s += f(i);
    partial[b] = s;
  }
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

}  // namespace kl
