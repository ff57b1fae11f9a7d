#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperalloc/allocation.hpp"
#include "hyperalloc/op_counter.hpp"
#include "hyperalloc/set_packing.hpp"

namespace hyperalloc {

/// A hyperedge: sorted, duplicate-free, non-empty vertex list.
using Hyperedge = std::vector<Vertex>;

/// Finite hypergraph: a vertex set and an ordered, duplicate-free family of
/// non-empty hyperedges drawn from it. Vertex ids are kept stable under
/// deletion, so a sub-hypergraph may have gaps in its vertex ids.
///
/// Covering (every vertex in some hyperedge) is not enforced on every value:
/// strong deletion routinely leaves uncovered vertices behind. Call
/// complete_with_singletons() where a covering hypergraph is required.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Vertex set {0, ..., n_vertices - 1}, no hyperedges.
  explicit Hypergraph(std::size_t n_vertices) {
    vertices_.resize(n_vertices);
    for (std::size_t v = 0; v < n_vertices; ++v) vertices_[v] = static_cast<Vertex>(v);
    reset_index();
  }

  Hypergraph(std::size_t n_vertices, const std::vector<Hyperedge>& edges)
      : Hypergraph(n_vertices) {
    for (const auto& e : edges) add_edge(e);
  }

  /// Arbitrary vertex set (deduplicated, sorted).
  static Hypergraph on_vertices(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    Hypergraph h;
    h.vertices_ = std::move(vertices);
    h.reset_index();
    return h;
  }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t n_vertices() const { return vertices_.size(); }
  std::size_t n_edges() const { return offsets_.size() - 1; }
  /// One past the largest vertex id that can appear.
  std::size_t vertex_bound() const { return member_.size(); }

  bool contains(Vertex v) const { return v < member_.size() && member_[v]; }

  std::span<const Vertex> edge(std::size_t i) const {
    if (i >= n_edges()) throw std::out_of_range("Hypergraph: edge index out of range");
    return {pins_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::size_t edge_size(std::size_t i) const { return offsets_[i + 1] - offsets_[i]; }

  /// Ids of the hyperedges containing v, ascending.
  const std::vector<std::size_t>& incident(Vertex v) const {
    require_vertex(v);
    return incident_[v];
  }

  /// Adds a hyperedge (sorted and deduplicated internally). Returns its index,
  /// or nullopt when an equal hyperedge is already present.
  std::optional<std::size_t> add_edge(std::span<const Vertex> vertices) {
    Hyperedge e(vertices.begin(), vertices.end());
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.empty()) throw std::invalid_argument("Hypergraph: hyperedges must be non-empty");
    for (Vertex v : e) require_vertex(v);
    if (find_sorted(e)) return std::nullopt;
    const std::size_t id = n_edges();
    pins_.insert(pins_.end(), e.begin(), e.end());
    offsets_.push_back(pins_.size());
    for (Vertex v : e) incident_[v].push_back(id);
    index_.emplace(hash_edge(e), id);
    return id;
  }
  std::optional<std::size_t> add_edge(std::initializer_list<Vertex> vertices) {
    return add_edge(std::span<const Vertex>(vertices.begin(), vertices.size()));
  }
  std::optional<std::size_t> add_edge(const Hyperedge& vertices) {
    return add_edge(std::span<const Vertex>(vertices));
  }

  std::optional<std::size_t> find_edge(Hyperedge e) const {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return find_sorted(e);
  }

  bool covers_all_vertices() const {
    return std::all_of(vertices_.begin(), vertices_.end(),
                       [&](Vertex v) { return !incident_[v].empty(); });
  }

  /// Gives every uncovered vertex its own singleton hyperedge; returns how
  /// many were added.
  std::size_t complete_with_singletons() {
    std::size_t added = 0;
    for (Vertex v : vertices_) {
      if (incident_[v].empty()) {
        add_edge({v});
        ++added;
      }
    }
    return added;
  }

  std::vector<Hyperedge> edge_family() const {
    std::vector<Hyperedge> out;
    out.reserve(n_edges());
    for (std::size_t i = 0; i < n_edges(); ++i) {
      auto e = edge(i);
      out.emplace_back(e.begin(), e.end());
    }
    return out;
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.vertices_ == b.vertices_ && a.offsets_ == b.offsets_ && a.pins_ == b.pins_;
  }

 private:
  void reset_index() {
    const std::size_t bound = vertices_.empty() ? 0 : vertices_.back() + std::size_t{1};
    member_.assign(bound, false);
    for (Vertex v : vertices_) member_[v] = true;
    incident_.assign(bound, {});
    pins_.clear();
    offsets_.assign(1, 0);
    index_.clear();
  }

  void require_vertex(Vertex v) const {
    if (!contains(v)) {
      throw std::out_of_range("Hypergraph: vertex " + std::to_string(v) + " not in vertex set");
    }
  }

  static std::uint64_t hash_edge(const Hyperedge& e) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Vertex v : e) {
      h ^= v;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  std::optional<std::size_t> find_sorted(const Hyperedge& e) const {
    auto [first, last] = index_.equal_range(hash_edge(e));
    for (auto it = first; it != last; ++it) {
      auto stored = edge(it->second);
      if (std::equal(stored.begin(), stored.end(), e.begin(), e.end())) return it->second;
    }
    return std::nullopt;
  }

  std::vector<Vertex> vertices_;
  std::vector<bool> member_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<Vertex> pins_;
  std::vector<std::size_t> offsets_{0};
  std::unordered_multimap<std::uint64_t, std::size_t> index_;
};

/// Vertex-by-hyperedge 0/1 matrix. Rows follow the hypergraph's vertex order.
class IncidenceMatrix {
 public:
  IncidenceMatrix(std::vector<Vertex> row_vertices, std::size_t n_cols)
      : rows_(std::move(row_vertices)), n_cols_(n_cols), entries_(rows_.size() * n_cols, 0) {}

  std::size_t n_rows() const { return rows_.size(); }
  std::size_t n_cols() const { return n_cols_; }
  const std::vector<Vertex>& row_vertices() const { return rows_; }

  bool operator()(std::size_t row, std::size_t col) const { return entries_.at(row * n_cols_ + col) != 0; }
  void set(std::size_t row, std::size_t col, bool value) { entries_.at(row * n_cols_ + col) = value; }

  std::size_t column_sum(std::size_t col) const {
    std::size_t sum = 0;
    for (std::size_t r = 0; r < n_rows(); ++r) sum += (*this)(r, col);
    return sum;
  }

  /// Rebuilds the hypergraph; columns become hyperedges in column order.
  Hypergraph to_hypergraph() const {
    Hypergraph h = Hypergraph::on_vertices(rows_);
    for (std::size_t c = 0; c < n_cols_; ++c) {
      Hyperedge e;
      for (std::size_t r = 0; r < n_rows(); ++r) {
        if ((*this)(r, c)) e.push_back(rows_[r]);
      }
      h.add_edge(e);
    }
    return h;
  }

 private:
  std::vector<Vertex> rows_;
  std::size_t n_cols_;
  std::vector<unsigned char> entries_;
};

inline IncidenceMatrix incidence_matrix(const Hypergraph& h) {
  IncidenceMatrix matrix(h.vertices(), h.n_edges());
  std::vector<std::size_t> row_of(h.vertex_bound(), 0);
  for (std::size_t r = 0; r < h.n_vertices(); ++r) row_of[h.vertices()[r]] = r;
  for (std::size_t c = 0; c < h.n_edges(); ++c) {
    for (Vertex v : h.edge(c)) matrix.set(row_of[v], c, true);
  }
  return matrix;
}

/// E(x): the hyperedges containing x, in family order.
inline std::vector<Hyperedge> edges_at(const Hypergraph& h, Vertex x) {
  std::vector<Hyperedge> out;
  for (std::size_t id : h.incident(x)) {
    auto e = h.edge(id);
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

/// Induced sub-hypergraph on `keep`: the hyperedges lying entirely inside it.
inline Hypergraph induced_subhypergraph(const Hypergraph& h, std::vector<Vertex> keep) {
  Hypergraph sub = Hypergraph::on_vertices(std::move(keep));
  for (Vertex v : sub.vertices()) {
    if (!h.contains(v)) throw std::out_of_range("induced_subhypergraph: vertex not in hypergraph");
  }
  for (std::size_t i = 0; i < h.n_edges(); ++i) {
    auto e = h.edge(i);
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return sub.contains(v); })) sub.add_edge(e);
  }
  return sub;
}

/// Strong deletion: drop x and every hyperedge containing x.
inline Hypergraph strong_delete(const Hypergraph& h, Vertex x) {
  if (!h.contains(x)) throw std::out_of_range("strong_delete: vertex " + std::to_string(x) + " not in hypergraph");
  std::vector<Vertex> keep;
  keep.reserve(h.n_vertices());
  for (Vertex v : h.vertices()) {
    if (v != x) keep.push_back(v);
  }
  return induced_subhypergraph(h, std::move(keep));
}

namespace detail {

// Largest star at x: hyperedges through x whose remainders e \ {x} are
// pairwise disjoint. Singleton hyperedges carry no conflict and are skipped.
template <typename EdgeRange>
std::vector<VertexSet> remainders_at(Vertex x, const EdgeRange& edges) {
  std::vector<VertexSet> remainders;
  for (const auto& e : edges) {
    if (e.size() < 2) continue;
    VertexSet rest;
    rest.reserve(e.size() - 1);
    for (Vertex v : e) {
      if (v != x) rest.push_back(v);
    }
    remainders.push_back(std::move(rest));
  }
  return remainders;
}

template <typename EdgeRange>
std::size_t monodegree_of(Vertex x, const EdgeRange& edges) {
  return max_disjoint_sets(remainders_at(x, edges));
}

}  // namespace detail

/// Monodegree m(x, H): the largest number of hyperedges through x that pairwise
/// meet exactly in {x}. Singleton hyperedges count for nothing, so a vertex
/// covered only by its own singleton has monodegree 0.
inline std::size_t monodegree(const Hypergraph& h, Vertex x) {
  if (!h.contains(x)) throw std::out_of_range("monodegree: vertex " + std::to_string(x) + " not in hypergraph");
  std::vector<std::span<const Vertex>> edges;
  for (std::size_t id : h.incident(x)) edges.push_back(h.edge(id));
  return detail::monodegree_of(x, edges);
}

/// Vertex of minimum monodegree, lowest id on ties.
inline Vertex min_monodegree_vertex(const Hypergraph& h) {
  if (h.n_vertices() == 0) throw std::invalid_argument("min_monodegree_vertex: empty hypergraph");
  Vertex best = h.vertices().front();
  std::size_t best_value = monodegree(h, best);
  for (Vertex v : h.vertices()) {
    const std::size_t value = monodegree(h, v);
    if (value < best_value) {
      best = v;
      best_value = value;
    }
  }
  return best;
}

/// Smallest-last elimination. Entry i of both vectors describes the i-th
/// vertex in coloring order x_1..x_n: the vertex itself and its monodegree in
/// the induced sub-hypergraph on {x_1, ..., x_i}, where it was the minimum.
struct EliminationOrder {
  std::vector<Vertex> coloring_order;
  std::vector<std::size_t> min_monodegrees;

  std::size_t max_min_monodegree() const {
    return min_monodegrees.empty() ? 0 : *std::max_element(min_monodegrees.begin(), min_monodegrees.end());
  }
};

/// Repeatedly takes a minimum-monodegree vertex of the current induced
/// sub-hypergraph (lowest id on ties) and strongly deletes it. The deletion
/// sequence reversed is the coloring order. Only vertices that lost a
/// hyperedge are re-evaluated after each deletion.
inline EliminationOrder smallest_last_order(const Hypergraph& h, OpCounter* ops = nullptr) {
  const std::size_t bound = h.vertex_bound();
  std::vector<bool> alive_vertex(bound, false);
  for (Vertex v : h.vertices()) alive_vertex[v] = true;
  std::vector<bool> alive_edge(h.n_edges(), true);

  auto current_remainders = [&](Vertex v) {
    std::vector<std::span<const Vertex>> edges;
    for (std::size_t id : h.incident(v)) {
      if (alive_edge[id]) edges.push_back(h.edge(id));
    }
    return detail::remainders_at(v, edges);
  };

  // Exact monodegrees are only computed for vertices that can still be the
  // minimum. Deletion never raises a monodegree, so a stale exact value stays
  // an upper bound; a greedy packing is a lower bound.
  std::vector<std::size_t> lower(bound, 0), upper(bound, SIZE_MAX);
  using Key = std::pair<std::size_t, Vertex>;
  std::set<Key> queue;
  auto refresh = [&](Vertex v) {
    queue.erase({lower[v], v});
    lower[v] = greedy_disjoint_sets(current_remainders(v));
    queue.insert({lower[v], v});
  };
  for (Vertex v : h.vertices()) refresh(v);

  EliminationOrder order;
  order.coloring_order.reserve(h.n_vertices());
  order.min_monodegrees.reserve(h.n_vertices());
  std::vector<Vertex> touched;
  std::vector<bool> is_touched(bound, false);
  while (!queue.empty()) {
    auto [value, x] = *queue.begin();
    if (value != upper[x]) {
      queue.erase(queue.begin());
      upper[x] = lower[x] = max_disjoint_sets(current_remainders(x));
      queue.insert({lower[x], x});
      continue;
    }
    queue.erase(queue.begin());
    order.coloring_order.push_back(x);
    order.min_monodegrees.push_back(value);
    alive_vertex[x] = false;

    touched.clear();
    for (std::size_t id : h.incident(x)) {
      if (!alive_edge[id]) continue;
      alive_edge[id] = false;
      count_edge_op(ops);
      for (Vertex u : h.edge(id)) {
        if (alive_vertex[u] && !is_touched[u]) {
          is_touched[u] = true;
          touched.push_back(u);
        }
      }
    }
    for (Vertex u : touched) {
      is_touched[u] = false;
      refresh(u);
    }
  }
  std::reverse(order.coloring_order.begin(), order.coloring_order.end());
  std::reverse(order.min_monodegrees.begin(), order.min_monodegrees.end());
  return order;
}

/// M(H), the largest minimum monodegree over induced sub-hypergraphs, read off
/// the smallest-last elimination.
inline std::size_t max_min_monodegree(const Hypergraph& h) {
  return smallest_last_order(h).max_min_monodegree();
}

/// Fixture text format: a "V E" header line, then one line per hyperedge
/// listing its vertex ids. Vertices are 0..V-1.
inline void write_hypergraph(std::ostream& out, const Hypergraph& h,
                             const std::function<std::string(std::size_t)>& annotate = {}) {
  out << h.vertex_bound() << ' ' << h.n_edges() << '\n';
  for (std::size_t i = 0; i < h.n_edges(); ++i) {
    const auto e = h.edge(i);
    for (std::size_t j = 0; j < e.size(); ++j) out << (j ? " " : "") << e[j];
    if (annotate) out << " # " << annotate(i);
    out << '\n';
  }
}

/// Reads the fixture format; anything after '#' on an edge line is ignored.
inline Hypergraph read_hypergraph(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw std::invalid_argument("hypergraph fixture: missing header");
  std::istringstream header(line);
  long long n_vertices = -1, n_edges = -1;
  if (!(header >> n_vertices >> n_edges) || n_vertices < 0 || n_edges < 0) {
    throw std::invalid_argument("hypergraph fixture: bad header '" + line + "'");
  }
  Hypergraph h(static_cast<std::size_t>(n_vertices));
  for (long long i = 0; i < n_edges; ++i) {
    if (!next_line()) throw std::invalid_argument("hypergraph fixture: fewer edges than declared");
    std::istringstream fields(line);
    Hyperedge e;
    long long v = 0;
    while (fields >> v) {
      if (v < 0 || v >= n_vertices) throw std::invalid_argument("hypergraph fixture: vertex out of range");
      e.push_back(static_cast<Vertex>(v));
    }
    if (!fields.eof()) throw std::invalid_argument("hypergraph fixture: malformed edge '" + line + "'");
    if (!h.add_edge(e)) throw std::invalid_argument("hypergraph fixture: duplicate hyperedge");
  }
  return h;
}

}  // namespace hyperalloc
