#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperalloc/allocation.hpp"
#include "hyperalloc/interference.hpp"
#include "hyperalloc/op_counter.hpp"
#include "hyperalloc/radio.hpp"
#include "hyperalloc/random.hpp"
#include "hyperalloc/scenario.hpp"

namespace hyperalloc {

/// Undirected pairwise interference graph over the shared vertex layout.
class ConflictGraph {
 public:
  ConflictGraph() = default;
  explicit ConflictGraph(VertexLayout layout)
      : layout_(layout), adjacency_(layout.size() * layout.size(), 0), neighbors_(layout.size()) {}
  explicit ConflictGraph(std::size_t n_vertices) : ConflictGraph(VertexLayout{0, n_vertices}) {}

  const VertexLayout& layout() const { return layout_; }
  std::size_t n_vertices() const { return layout_.size(); }
  std::size_t n_edges() const { return n_edges_; }

  bool has_edge(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return adjacency_[u * n_vertices() + v] != 0;
  }

  /// Returns false if the edge already existed. Self-loops are rejected.
  bool add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("ConflictGraph: self-loop on vertex " + std::to_string(u));
    if (has_edge(u, v)) return false;
    adjacency_[u * n_vertices() + v] = 1;
    adjacency_[v * n_vertices() + u] = 1;
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
    ++n_edges_;
    return true;
  }

  const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_.at(v); }
  std::size_t degree(Vertex v) const { return neighbors_.at(v).size(); }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (const auto& adj : neighbors_) best = std::max(best, adj.size());
    return best;
  }

  /// Edges as (u, v) with u < v, lexicographic.
  std::vector<VertexPair> edges() const {
    std::vector<VertexPair> out;
    out.reserve(n_edges_);
    for (Vertex u = 0; u < n_vertices(); ++u) {
      for (Vertex v = u + 1; v < n_vertices(); ++v) {
        if (adjacency_[u * n_vertices() + v]) out.emplace_back(u, v);
      }
    }
    return out;
  }

 private:
  void check(Vertex v) const {
    if (v >= n_vertices()) throw std::out_of_range("ConflictGraph: vertex " + std::to_string(v) + " out of range");
  }

  VertexLayout layout_{};
  std::vector<unsigned char> adjacency_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::size_t n_edges_ = 0;
};

/// Edge-list dump: one "u v" line per edge, u < v.
inline void write_edge_list(std::ostream& out, const ConflictGraph& graph) {
  for (const auto& [u, v] : graph.edges()) out << u << ' ' << v << '\n';
}

inline ConflictGraph read_edge_list(std::istream& in, std::size_t n_vertices) {
  ConflictGraph graph(n_vertices);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    long long u = 0, v = 0;
    if (!(fields >> u)) continue;  // blank line
    if (!(fields >> v) || u < 0 || v < 0) {
      throw std::invalid_argument("edge list: malformed line '" + line + "'");
    }
    graph.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return graph;
}

/// Pairwise conflict graph: cellular clique plus every independent-interferer pair.
inline ConflictGraph build_graph(const LinkGains& gains, const SimConfig& config,
                                 OpCounter* ops = nullptr) {
  ConflictGraph graph(gains.layout());
  for (const auto& [u, v] : independent_pairs(gains, config, ops)) graph.add_edge(u, v);
  return graph;
}

/// Largest-degree-first ordering: pick the maximum-degree vertex of the
/// remaining graph (lowest index on ties), label it next, then break its
/// edges before the next pick.
inline std::vector<Vertex> order_by_max_degree(const ConflictGraph& graph, OpCounter* ops = nullptr) {
  const std::size_t n = graph.n_vertices();
  std::vector<std::size_t> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = graph.degree(v);
  std::vector<bool> examined(n, false);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    bool found = false;
    for (Vertex v = 0; v < n; ++v) {
      if (examined[v]) continue;
      if (!found || degree[v] > degree[best]) {
        best = v;
        found = true;
      }
    }
    examined[best] = true;
    order.push_back(best);
    for (Vertex u : graph.neighbors(best)) {
      if (!examined[u]) {
        --degree[u];
        count_edge_op(ops);
      }
    }
  }
  return order;
}

namespace detail {

inline std::optional<Channel> pick_color(const std::vector<bool>& forbidden, ColorChoice choice,
                                         RandomStream& stream) {
  std::vector<Channel> available;
  for (Channel c = 0; c < forbidden.size(); ++c) {
    if (!forbidden[c]) available.push_back(c);
  }
  if (available.empty()) return std::nullopt;
  if (choice == ColorChoice::kLowest) return available.front();
  return available[stream.uniform_index(available.size())];
}

}  // namespace detail

/// Greedy coloring with k colors in largest-degree-first order. A vertex may
/// not take a color already used by a neighbor in the original graph; it is
/// left unallocated when no color remains.
inline Allocation color_graph(const ConflictGraph& graph, std::size_t k, RandomStream& stream,
                              ColorChoice choice = ColorChoice::kRandom, OpCounter* ops = nullptr) {
  if (k < 1) throw std::invalid_argument("color_graph: need at least one color");
  Allocation alloc(graph.layout());
  for (Vertex x : order_by_max_degree(graph, ops)) {
    std::vector<bool> forbidden(k, false);
    for (Vertex u : graph.neighbors(x)) {
      count_edge_op(ops);
      if (auto c = alloc.channel(u)) forbidden[*c] = true;
    }
    if (auto c = detail::pick_color(forbidden, choice, stream)) alloc.assign(x, *c);
  }
  return alloc;
}

/// Graph-based allocator end to end.
inline Allocation allocate_graph(const LinkGains& gains, const SimConfig& config,
                                 RandomStream& stream, OpCounter* construction_ops = nullptr,
                                 OpCounter* coloring_ops = nullptr) {
  const ConflictGraph graph = build_graph(gains, config, construction_ops);
  return color_graph(graph, config.n_channels, stream, config.color_choice, coloring_ops);
}

}  // namespace hyperalloc
