#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "treedepth/errors.hpp"
#include "treedepth/graph.hpp"

namespace td {

enum class GraphFormat { autodetect, dimacs, edgelist };

inline GraphFormat graph_format_from_name(const std::string& name) {
  if (name == "auto") return GraphFormat::autodetect;
  if (name == "dimacs") return GraphFormat::dimacs;
  if (name == "edgelist") return GraphFormat::edgelist;
  throw std::invalid_argument("unknown graph format: " + name);
}

namespace detail {

// DIMACS: `c` comments, one `p edge <n> <m>` header, `e <u> <v>` edges with
// 1-based ids. Duplicate edges collapse.
inline Graph parse_dimacs(std::istream& in) {
  std::string line;
  uint64_t line_no = 0;
  bool have_header = false;
  uint32_t n = 0;
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_header) throw ParseError("duplicate problem line", line_no);
      std::string kind;
      long nn = -1, mm = -1;
      if (!(ls >> kind >> nn >> mm) || kind != "edge" || nn < 0 || mm < 0)
        throw ParseError("malformed header, expected `p edge <n> <m>`", line_no);
      n = static_cast<uint32_t>(nn);
      have_header = true;
      continue;
    }
    if (tag == "e") {
      if (!have_header) throw ParseError("edge before problem line", line_no);
      long u, v;
      if (!(ls >> u >> v)) throw ParseError("malformed edge line", line_no);
      if (u < 1 || v < 1 || u > n || v > n)
        throw ParseError("vertex id out of range [1," + std::to_string(n) + "]",
                         line_no);
      if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u),
                                   line_no);
      edges.emplace_back(static_cast<uint32_t>(u - 1), static_cast<uint32_t>(v - 1));
      continue;
    }
    throw ParseError("unrecognized line tag `" + tag + "`", line_no);
  }
  if (!have_header) throw ParseError("missing `p edge <n> <m>` header");
  return Graph::from_edges(n, edges);
}

// Edge list: `#` comments, optional leading `n <count>` line, `<u> <v>` pairs
// with 0-based ids. Without the header n = max id + 1.
inline Graph parse_edgelist(std::istream& in) {
  std::string line;
  uint64_t line_no = 0;
  bool have_n = false, first_data = true;
  long n = -1;
  long max_id = -1;
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  std::vector<uint64_t> edge_lines;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first_data && first == "n") {
      if (!(ls >> n) || n < 0) throw ParseError("malformed `n <count>` line", line_no);
      have_n = true;
      first_data = false;
      continue;
    }
    first_data = false;
    long u, v;
    try {
      u = std::stol(first);
    } catch (const std::exception&) {
      throw ParseError("malformed edge line", line_no);
    }
    if (!(ls >> v)) throw ParseError("malformed edge line", line_no);
    if (u < 0 || v < 0) throw ParseError("negative vertex id", line_no);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
    if (have_n && (u >= n || v >= n))
      throw ParseError("vertex id out of range [0," + std::to_string(n - 1) + "]",
                       line_no);
    max_id = std::max({max_id, u, v});
    edges.emplace_back(static_cast<uint32_t>(u), static_cast<uint32_t>(v));
    edge_lines.push_back(line_no);
  }
  if (!have_n) n = max_id + 1;
  return Graph::from_edges(static_cast<uint32_t>(n), edges);
}

}  // namespace detail

inline Graph parse_graph(std::istream& in, GraphFormat fmt = GraphFormat::autodetect) {
  if (fmt == GraphFormat::autodetect) {
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::istringstream again(text);
    std::string line, tag;
    GraphFormat detected = GraphFormat::edgelist;
    std::istringstream scan(text);
    while (std::getline(scan, line)) {
      std::istringstream ls(line);
      if (!(ls >> tag)) continue;
      if (tag == "c" || tag == "p" || tag == "e") detected = GraphFormat::dimacs;
      break;
    }
    return parse_graph(again, detected);
  }
  return fmt == GraphFormat::dimacs ? detail::parse_dimacs(in)
                                    : detail::parse_edgelist(in);
}

inline Graph parse_graph(const std::string& text,
                         GraphFormat fmt = GraphFormat::autodetect) {
  std::istringstream in(text);
  return parse_graph(in, fmt);
}

inline Graph load_graph_file(const std::string& path,
                             GraphFormat fmt = GraphFormat::autodetect) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_graph(in, fmt);
}

inline std::string to_dimacs(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.n() << " " << g.m() << "\n";
  for (const auto& [u, v] : g.edge_list()) os << "e " << u + 1 << " " << v + 1 << "\n";
  return os.str();
}

inline std::string to_edgelist(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.n() << "\n";
  for (const auto& [u, v] : g.edge_list()) os << u << " " << v << "\n";
  return os.str();
}

}  // namespace td
