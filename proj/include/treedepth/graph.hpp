#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "treedepth/vertex_set.hpp"

namespace td {

// Immutable simple undirected graph with one adjacency bitset per vertex.
class Graph {
public:
  Graph() = default;

  static Graph from_edges(uint32_t n,
                          const std::vector<std::pair<uint32_t, uint32_t>>& edges) {
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, VertexSet(n));
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n)
        throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") out of range for n=" +
                                    std::to_string(n));
      if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
      if (!g.adj_[u].test(v)) {
        g.adj_[u].set(v);
        g.adj_[v].set(u);
        ++g.m_;
      }
    }
    return g;
  }

  uint32_t n() const { return n_; }
  uint64_t m() const { return m_; }

  const VertexSet& adj(uint32_t v) const { return adj_[v]; }

  bool has_edge(uint32_t u, uint32_t v) const { return adj_[u].test(v); }

  VertexSet vertices() const { return VertexSet::full(n_); }

  // Edge list with u < v, sorted; the canonical form used by serializers.
  std::vector<std::pair<uint32_t, uint32_t>> edge_list() const {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    out.reserve(m_);
    for (uint32_t u = 0; u < n_; ++u)
      for (uint32_t v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

private:
  uint32_t n_ = 0;
  uint64_t m_ = 0;
  std::vector<VertexSet> adj_;
};

// Open neighborhood of s: all vertices outside s adjacent to some vertex of s.
inline VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet nb(g.n());
  for (uint32_t v : s) nb |= g.adj(v);
  nb -= s;
  return nb;
}

namespace detail {

// Grows the connected component of g[s] containing seed.
inline VertexSet grow_component(const Graph& g, const VertexSet& s, uint32_t seed) {
  VertexSet comp(g.n());
  comp.set(seed);
  VertexSet frontier = comp;
  while (!frontier.empty()) {
    VertexSet next(g.n());
    for (uint32_t v : frontier) next |= g.adj(v);
    next &= s;
    next -= comp;
    comp |= next;
    frontier = std::move(next);
  }
  return comp;
}

}  // namespace detail

// Connected components of the induced subgraph g[s], ordered by smallest
// contained vertex id.
inline void components_into(const Graph& g, const VertexSet& s,
                            std::vector<VertexSet>& out) {
  out.clear();
  VertexSet remaining = s;
  while (!remaining.empty()) {
    VertexSet comp = detail::grow_component(g, remaining, remaining.front());
    remaining -= comp;
    out.push_back(std::move(comp));
  }
}

inline std::vector<VertexSet> components(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  components_into(g, s, out);
  return out;
}

// True iff g[s] has exactly one connected component. The empty set is not
// connected; singletons are.
inline bool is_connected(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  return detail::grow_component(g, s, s.front()).count() == s.count();
}

inline bool is_connected(const Graph& g) {
  if (g.n() == 0) return false;
  return is_connected(g, g.vertices());
}

// Subgraph induced by s, relabeled to dense ids 0..|s|-1. Second element maps
// new ids back to the original ones (ascending).
inline std::pair<Graph, std::vector<uint32_t>> induced_subgraph(const Graph& g,
                                                                const VertexSet& s) {
  std::vector<uint32_t> new_to_old(s.begin(), s.end());
  std::vector<uint32_t> old_to_new(g.n(), 0);
  for (uint32_t i = 0; i < new_to_old.size(); ++i) old_to_new[new_to_old[i]] = i;
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t u : s)
    for (uint32_t v : g.adj(u) & s)
      if (u < v) edges.emplace_back(old_to_new[u], old_to_new[v]);
  return {Graph::from_edges(static_cast<uint32_t>(new_to_old.size()), edges),
          std::move(new_to_old)};
}

}  // namespace td
