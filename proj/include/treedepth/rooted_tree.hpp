#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "treedepth/errors.hpp"
#include "treedepth/graph.hpp"
#include "treedepth/vertex_set.hpp"

namespace td {

// counts[i] = number of vertices at height i+1 (the root sits at height 1).
using LevelSequence = std::vector<uint32_t>;

// Strict order on level sequences: a < b iff some position i has a[i] < b[i]
// while all positions above i agree (missing entries read as 0). Distinct
// sequences are always comparable; equal ones are not.
inline bool prec(const LevelSequence& a, const LevelSequence& b) {
  size_t m = std::max(a.size(), b.size());
  for (size_t i = m; i-- > 0;) {
    uint32_t x = i < a.size() ? a[i] : 0;
    uint32_t y = i < b.size() ? b[i] : 0;
    if (x != y) return x < y;
  }
  return false;
}

// Rooted tree over a subset of a fixed id universe {0..universe-1}. Vertices
// keep their original ids under subtree extraction, so witnesses remain
// directly comparable against the input graph.
class RootedTree {
public:
  RootedTree() = default;

  // Tree spanning a whole universe; parent[v] = -1 exactly at the root.
  static RootedTree from_parents(const std::vector<int32_t>& parent) {
    uint32_t n = static_cast<uint32_t>(parent.size());
    int64_t root = -1;
    for (uint32_t v = 0; v < n; ++v) {
      if (parent[v] < 0) {
        if (root >= 0)
          throw std::invalid_argument("parent array has more than one root");
        root = v;
      }
    }
    if (root < 0) throw std::invalid_argument("parent array has no root");
    return over_subset(n, VertexSet::full(n), parent, static_cast<uint32_t>(root));
  }

  static RootedTree over_subset(uint32_t universe, const VertexSet& verts,
                                const std::vector<int32_t>& parent, uint32_t root) {
    RootedTree t;
    t.universe_ = universe;
    t.verts_ = verts;
    t.root_ = root;
    t.parent_.assign(universe, -1);
    if (verts.empty()) throw std::invalid_argument("tree has no vertices");
    if (root >= universe || !verts.test(root))
      throw std::invalid_argument("root is not a tree vertex");
    const uint32_t nv = verts.count();
    for (uint32_t v : verts) {
      int32_t p = parent[v];
      if (v == root) {
        if (p >= 0) throw std::invalid_argument("root must have parent -1");
        continue;
      }
      if (p < 0 || static_cast<uint32_t>(p) >= universe || !verts.test(p) ||
          static_cast<uint32_t>(p) == v)
        throw std::invalid_argument("bad parent " + std::to_string(p) +
                                    " for vertex " + std::to_string(v));
      t.parent_[v] = p;
    }
    // every vertex must reach the root without cycling
    for (uint32_t v : verts) {
      uint32_t cur = v, steps = 0;
      while (cur != root) {
        cur = static_cast<uint32_t>(t.parent_[cur]);
        if (++steps > nv)
          throw std::invalid_argument("parent pointers contain a cycle");
      }
    }
    t.compute_heights();
    return t;
  }

  static RootedTree single(uint32_t universe, uint32_t v) {
    VertexSet s(universe);
    s.set(v);
    return over_subset(universe, s, std::vector<int32_t>(universe, -1), v);
  }

  uint32_t universe() const { return universe_; }
  const VertexSet& vertex_set() const { return verts_; }
  uint32_t size() const { return verts_.count(); }
  uint32_t root() const { return root_; }
  bool contains(uint32_t v) const { return v < universe_ && verts_.test(v); }
  bool spans_universe() const { return verts_.count() == universe_; }

  // -1 for the root.
  int32_t parent(uint32_t v) const {
    assert(contains(v));
    return parent_[v];
  }

  // Number of vertices on the path from the root to v, inclusive.
  uint32_t height_of(uint32_t v) const {
    assert(contains(v));
    return height_[v];
  }

  uint32_t height() const { return max_height_; }

  VertexSet path_to_root(uint32_t v) const {
    assert(contains(v));
    VertexSet p(universe_);
    uint32_t cur = v;
    while (true) {
      p.set(cur);
      if (cur == root_) break;
      cur = static_cast<uint32_t>(parent_[cur]);
    }
    return p;
  }

  std::vector<uint32_t> children(uint32_t v) const {
    std::vector<uint32_t> out;
    for (uint32_t u : verts_)
      if (u != root_ && static_cast<uint32_t>(parent_[u]) == v) out.push_back(u);
    return out;
  }

  uint32_t child_count(uint32_t v) const {
    uint32_t c = 0;
    for (uint32_t u : verts_)
      if (u != root_ && static_cast<uint32_t>(parent_[u]) == v) ++c;
    return c;
  }

  // Vertex set of the maximal subtree rooted at v.
  VertexSet subtree_set(uint32_t v) const {
    assert(contains(v));
    VertexSet out(universe_);
    for (uint32_t u : verts_) {
      uint32_t cur = u;
      while (true) {
        if (cur == v) {
          out.set(u);
          break;
        }
        if (cur == root_) break;
        cur = static_cast<uint32_t>(parent_[cur]);
      }
    }
    return out;
  }

  RootedTree subtree(uint32_t v) const {
    VertexSet sub = subtree_set(v);
    std::vector<int32_t> p = parent_;
    p[v] = -1;
    return over_subset(universe_, sub, p, v);
  }

  // Graph on the same universe joining every vertex with each of its strict
  // ancestors.
  Graph closure() const {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t v : verts_) {
      uint32_t cur = v;
      while (cur != root_) {
        cur = static_cast<uint32_t>(parent_[cur]);
        edges.emplace_back(cur, v);
      }
    }
    return Graph::from_edges(universe_, edges);
  }

  LevelSequence level_sequence() const {
    LevelSequence counts(max_height_, 0);
    for (uint32_t v : verts_) ++counts[height_[v] - 1];
    return counts;
  }

private:
  void compute_heights() {
    height_.assign(universe_, 0);
    height_[root_] = 1;
    max_height_ = 1;
    std::vector<uint32_t> chain;
    for (uint32_t v : verts_) {
      if (height_[v]) continue;
      chain.clear();
      uint32_t cur = v;
      while (height_[cur] == 0) {
        chain.push_back(cur);
        cur = static_cast<uint32_t>(parent_[cur]);
      }
      uint32_t h = height_[cur];
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        height_[*it] = ++h;
        max_height_ = std::max(max_height_, h);
      }
    }
  }

  uint32_t universe_ = 0;
  uint32_t root_ = 0;
  uint32_t max_height_ = 0;
  VertexSet verts_;
  std::vector<int32_t> parent_;
  std::vector<uint32_t> height_;
};

namespace detail {

// First edge of g with both ends in t whose endpoints are not in
// ancestor-descendant relation, scanning edges (u,v), u < v, in ascending
// order.
inline std::optional<std::pair<uint32_t, uint32_t>> violating_edge_within(
    const Graph& g, const RootedTree& t) {
  const VertexSet& verts = t.vertex_set();
  std::vector<VertexSet> path(g.n());
  for (uint32_t v : verts) path[v] = t.path_to_root(v);
  for (uint32_t u : verts)
    for (uint32_t v : g.adj(u) & verts) {
      if (v <= u) continue;
      if (!path[v].test(u) && !path[u].test(v)) return std::make_pair(u, v);
    }
  return std::nullopt;
}

}  // namespace detail

// True iff every edge of g joins an ancestor-descendant pair of t; t must
// span g's vertex set.
inline std::optional<std::pair<uint32_t, uint32_t>> first_violating_edge(
    const Graph& g, const RootedTree& t) {
  if (g.n() != t.universe() || !t.spans_universe())
    throw std::invalid_argument("tree does not span the graph's vertex set");
  return detail::violating_edge_within(g, t);
}

inline bool embeds(const Graph& g, const RootedTree& t) {
  return !first_violating_edge(g, t).has_value();
}

// Embedding check restricted to edges inside t's vertex set; used to validate
// witnesses for induced subgraphs.
inline bool embeds_induced(const Graph& g, const RootedTree& t) {
  if (g.n() != t.universe())
    throw std::invalid_argument("universe mismatch");
  return !detail::violating_edge_within(g, t).has_value();
}

// Path-tree on z_order (front is the root) with each attachment's root made a
// child of z_order[attach_index-1]; attach indices are 1-based. The z_order
// vertices and attachment vertex sets must partition the universe.
inline RootedTree assemble(
    uint32_t universe, const std::vector<uint32_t>& z_order,
    const std::vector<std::pair<RootedTree, uint32_t>>& attachments) {
  if (z_order.empty()) throw std::invalid_argument("empty spine");
  VertexSet cover(universe);
  std::vector<int32_t> parent(universe, -1);
  for (size_t i = 0; i < z_order.size(); ++i) {
    uint32_t v = z_order[i];
    if (v >= universe || cover.test(v))
      throw std::invalid_argument("spine vertices overlap or out of range");
    cover.set(v);
    if (i > 0) parent[v] = static_cast<int32_t>(z_order[i - 1]);
  }
  for (const auto& [tree, attach_index] : attachments) {
    if (tree.universe() != universe)
      throw std::invalid_argument("attachment universe mismatch");
    if (attach_index < 1 || attach_index > z_order.size())
      throw std::invalid_argument("attach index out of range");
    if (tree.vertex_set().intersects(cover))
      throw std::invalid_argument("attachment overlaps previously placed vertices");
    cover |= tree.vertex_set();
    for (uint32_t v : tree.vertex_set()) parent[v] = tree.parent(v);
    parent[tree.root()] = static_cast<int32_t>(z_order[attach_index - 1]);
  }
  if (cover.count() != universe)
    throw std::invalid_argument("vertex partition does not cover the universe");
  return RootedTree::from_parents(parent);
}

// Disjoint union of rooted trees covering a universe; the witness shape for
// disconnected inputs.
struct RootedForest {
  uint32_t universe = 0;
  std::vector<RootedTree> trees;

  uint32_t height() const {
    uint32_t h = 0;
    for (const auto& t : trees) h = std::max(h, t.height());
    return h;
  }

  uint32_t size() const {
    uint32_t s = 0;
    for (const auto& t : trees) s += t.size();
    return s;
  }

  std::vector<int32_t> parent_array() const {
    std::vector<int32_t> p(universe, -1);
    for (const auto& t : trees)
      for (uint32_t v : t.vertex_set()) p[v] = t.parent(v);
    return p;
  }
};

// Splits a parent array (-1 marks roots) into its trees, ordered by root id.
inline RootedForest forest_from_parents(const std::vector<int32_t>& parent) {
  uint32_t n = static_cast<uint32_t>(parent.size());
  RootedForest f;
  f.universe = n;
  std::vector<uint32_t> root_of(n, n);
  for (uint32_t v = 0; v < n; ++v) {
    uint32_t cur = v, steps = 0;
    while (parent[cur] >= 0) {
      if (static_cast<uint32_t>(parent[cur]) >= n)
        throw std::invalid_argument("parent id out of range");
      cur = static_cast<uint32_t>(parent[cur]);
      if (++steps > n) throw std::invalid_argument("parent pointers contain a cycle");
    }
    root_of[v] = cur;
  }
  for (uint32_t r = 0; r < n; ++r) {
    if (parent[r] >= 0) continue;
    VertexSet verts(n);
    for (uint32_t v = 0; v < n; ++v)
      if (root_of[v] == r) verts.set(v);
    f.trees.push_back(RootedTree::over_subset(n, verts, parent, r));
  }
  return f;
}

inline std::optional<std::pair<uint32_t, uint32_t>> first_violating_edge(
    const Graph& g, const RootedForest& f) {
  if (g.n() != f.universe || f.size() != f.universe)
    throw std::invalid_argument("forest does not span the graph's vertex set");
  std::vector<uint32_t> tree_of(g.n(), 0);
  for (uint32_t i = 0; i < f.trees.size(); ++i)
    for (uint32_t v : f.trees[i].vertex_set()) tree_of[v] = i;
  for (uint32_t u = 0; u < g.n(); ++u)
    for (uint32_t v : g.adj(u)) {
      if (v <= u) continue;
      if (tree_of[u] != tree_of[v]) return std::make_pair(u, v);
    }
  for (const auto& t : f.trees)
    if (auto e = detail::violating_edge_within(g, t)) return e;
  return std::nullopt;
}

inline bool embeds(const Graph& g, const RootedForest& f) {
  return !first_violating_edge(g, f).has_value();
}

// --- tree file formats -----------------------------------------------------

// DOT with directed parent->child edges; roots are double circled.
inline std::string to_dot(const RootedForest& f) {
  std::ostringstream os;
  os << "digraph elimination_tree {\n  node [shape=circle];\n";
  for (const auto& t : f.trees)
    os << "  " << t.root() << " [shape=doublecircle];\n";
  for (const auto& t : f.trees)
    for (uint32_t v : t.vertex_set())
      if (v != t.root())
        os << "  " << t.parent(v) << " -> " << v << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const RootedTree& t) {
  RootedForest f;
  f.universe = t.universe();
  f.trees.push_back(t);
  return to_dot(f);
}

// One `v parent` pair per line, root parent -1.
inline std::string to_parent_text(const RootedForest& f) {
  std::vector<int32_t> p = f.parent_array();
  std::ostringstream os;
  for (uint32_t v = 0; v < f.universe; ++v) os << v << " " << p[v] << "\n";
  return os.str();
}

inline std::string to_parent_text(const RootedTree& t) {
  RootedForest f;
  f.universe = t.universe();
  f.trees.push_back(t);
  return to_parent_text(f);
}

namespace detail {

inline RootedForest parse_dot_tree(const std::string& text, uint32_t n) {
  std::vector<int32_t> parent(n, -1);
  std::vector<bool> has_parent(n, false);
  std::istringstream in(text);
  std::string line;
  uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto arrow = line.find("->");
    if (arrow == std::string::npos) continue;
    long src = 0, dst = 0;
    try {
      src = std::stol(line.substr(0, arrow));
      dst = std::stol(line.substr(arrow + 2));
    } catch (const std::exception&) {
      throw ParseError("malformed edge", line_no);
    }
    if (src < 0 || dst < 0 || src >= n || dst >= n)
      throw ParseError("vertex id out of range (graph has " + std::to_string(n) +
                           " vertices)",
                       line_no);
    if (has_parent[dst]) throw ParseError("vertex " + std::to_string(dst) +
                                              " has two parents",
                                          line_no);
    has_parent[dst] = true;
    parent[dst] = static_cast<int32_t>(src);
  }
  try {
    return forest_from_parents(parent);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

inline RootedForest parse_parent_text_tree(const std::string& text, uint32_t n) {
  std::vector<int32_t> parent(n, -1);
  std::vector<bool> seen(n, false);
  std::istringstream in(text);
  std::string line;
  uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    long v, p;
    if (!(ls >> v)) continue;  // blank
    if (!(ls >> p)) throw ParseError("expected `vertex parent` pair", line_no);
    if (v < 0 || v >= n)
      throw ParseError("vertex id out of range (graph has " + std::to_string(n) +
                           " vertices)",
                       line_no);
    if (p < -1 || p >= n) throw ParseError("parent id out of range", line_no);
    if (seen[v]) throw ParseError("vertex " + std::to_string(v) + " listed twice",
                                  line_no);
    seen[v] = true;
    parent[v] = static_cast<int32_t>(p);
  }
  for (uint32_t v = 0; v < n; ++v)
    if (!seen[v])
      throw ParseError("vertex " + std::to_string(v) + " missing from tree file");
  try {
    return forest_from_parents(parent);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace detail

// Reads a tree/forest over exactly n vertices from either format (DOT or
// parent-array text, detected by content).
inline RootedForest parse_tree_file(std::istream& in, uint32_t n) {
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (text.find("digraph") != std::string::npos ||
      text.find("->") != std::string::npos)
    return detail::parse_dot_tree(text, n);
  return detail::parse_parent_text_tree(text, n);
}

}  // namespace td
