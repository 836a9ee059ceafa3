#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "treedepth/epsilon.hpp"

namespace td {

// Binomial coefficient, saturating at UINT64_MAX.
inline uint64_t binomial(uint32_t n, uint32_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (uint32_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<uint64_t>::max())
      return std::numeric_limits<uint64_t>::max();
  }
  return static_cast<uint64_t>(r);
}

// Combinatorial cap on the number of stored states: (n+1)^2 * C(n, t) with
// t = floor((1/2 - eps) * n). Saturating.
inline uint64_t state_space_bound(uint32_t n, Epsilon eps) {
  uint64_t c = binomial(n, eps.half_minus_eps_floor(n));
  unsigned __int128 b = (unsigned __int128)(n + 1) * (n + 1) * c;
  if (b > std::numeric_limits<uint64_t>::max())
    return std::numeric_limits<uint64_t>::max();
  return static_cast<uint64_t>(b);
}

// Calls fn(idx) for every strictly increasing index vector of length k over
// {0..n-1}, in lexicographic order. k = 0 yields one empty vector.
template <typename Fn>
void for_each_combination(uint32_t n, uint32_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<uint32_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0u);
  while (true) {
    fn(const_cast<const std::vector<uint32_t>&>(idx));
    int32_t i = static_cast<int32_t>(k) - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (uint32_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace td
