#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "treedepth/graph.hpp"

namespace td {

inline Graph make_path(uint32_t n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<std::pair<uint32_t, uint32_t>> e;
  for (uint32_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph make_cycle(uint32_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::pair<uint32_t, uint32_t>> e;
  for (uint32_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n - 1, 0);
  return Graph::from_edges(n, e);
}

inline Graph make_complete(uint32_t n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<std::pair<uint32_t, uint32_t>> e;
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

// Star with center 0 and `leaves` leaves (n = leaves + 1).
inline Graph make_star(uint32_t leaves) {
  std::vector<std::pair<uint32_t, uint32_t>> e;
  for (uint32_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

// rows x cols grid, vertex (r, c) = r*cols + c.
inline Graph make_grid(uint32_t rows, uint32_t cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs rows, cols >= 1");
  std::vector<std::pair<uint32_t, uint32_t>> e;
  for (uint32_t r = 0; r < rows; ++r)
    for (uint32_t c = 0; c < cols; ++c) {
      uint32_t v = r * cols + c;
      if (c + 1 < cols) e.emplace_back(v, v + 1);
      if (r + 1 < rows) e.emplace_back(v, v + cols);
    }
  return Graph::from_edges(rows * cols, e);
}

// Erdos-Renyi G(n, p). The engine is mt19937_64 seeded directly and the
// per-pair coin uses the raw stream, so outputs are identical across
// platforms for a fixed seed.
inline Graph make_gnp(uint32_t n, double p, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gnp needs n >= 1");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp needs 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<uint32_t, uint32_t>> e;
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v) {
      double coin = (rng() >> 11) * 0x1.0p-53;
      if (coin < p) e.emplace_back(u, v);
    }
  return Graph::from_edges(n, e);
}

}  // namespace td
