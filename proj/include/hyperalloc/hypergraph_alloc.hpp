#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperalloc/allocation.hpp"
#include "hyperalloc/conflict_graph.hpp"
#include "hyperalloc/hypergraph.hpp"
#include "hyperalloc/interference.hpp"
#include "hyperalloc/op_counter.hpp"
#include "hyperalloc/radio.hpp"
#include "hyperalloc/random.hpp"
#include "hyperalloc/scenario.hpp"

namespace hyperalloc {

enum class EdgeKind { kIndependentPair, kCumulative, kSingleton };

inline const char* to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::kIndependentPair: return "independent";
    case EdgeKind::kCumulative: return "cumulative";
    case EdgeKind::kSingleton: return "singleton";
  }
  return "unknown";
}

/// Interference hypergraph over cellular UEs and D2D pairs. `kinds` and
/// `victims` run parallel to base's hyperedge family; victims holds the
/// receiver a cumulative hyperedge was found for.
struct InterferenceHypergraph {
  VertexLayout layout{};
  std::size_t q_cumulative = 0;
  Hypergraph base;
  std::vector<EdgeKind> kinds;
  std::vector<std::optional<Vertex>> victims;

  std::size_t count(EdgeKind kind) const {
    std::size_t total = 0;
    for (EdgeKind k : kinds) total += (k == kind);
    return total;
  }
};

namespace detail {

struct Interferer {
  Vertex vertex;
  double power;  // received interference power at the victim, mW
};

// Tests every Q-subset of `candidates` against signal / sum < threshold and
// reports the failing ones through `emit`.
template <typename Emit>
void for_each_cumulative_set(const std::vector<Interferer>& candidates, std::size_t q,
                             double signal, double threshold, OpCounter* ops, Emit&& emit) {
  const std::size_t n = candidates.size();
  if (q == 0 || q > n) return;
  std::vector<std::size_t> pick(q);
  for (std::size_t i = 0; i < q; ++i) pick[i] = i;
  std::vector<Vertex> members(q);
  while (true) {
    double sum = 0.0;
    for (std::size_t i = 0; i < q; ++i) sum += candidates[pick[i]].power;
    count_comparison(ops);
    if (signal < threshold * sum) {
      for (std::size_t i = 0; i < q; ++i) members[i] = candidates[pick[i]].vertex;
      emit(members);
    }
    // Next combination in lexicographic order.
    std::size_t i = q;
    while (i > 0 && pick[i - 1] == n - q + (i - 1)) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < q; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace detail

/// Builds the interference hypergraph:
///   1. pairwise edges exactly as the conflict graph (cellular clique plus
///      independent interferers);
///   2. for every victim, each Q-subset of its non-independent interferers
///      whose combined interference pushes the wanted-signal ratio below eta
///      joins the victim in a (Q+1)-vertex hyperedge. A cellular victim at
///      the eNB only sees D2D transmitters; a D2D receiver sees cellular UEs
///      and the other D2D transmitters;
///   3. any vertex still uncovered gets a singleton hyperedge.
inline InterferenceHypergraph build_hypergraph(const LinkGains& gains, const SimConfig& config,
                                               OpCounter* ops = nullptr) {
  config.validate();
  const VertexLayout layout = gains.layout();
  const std::size_t n = layout.size();
  const Thresholds th = Thresholds::from(config);
  const double p_cell = config.p_cellular_mw();
  const double p_d2d = config.p_d2d_mw();

  InterferenceHypergraph h;
  h.layout = layout;
  h.q_cumulative = config.q_cumulative;
  h.base = Hypergraph(n);

  std::vector<unsigned char> paired(n * n, 0);
  for (const auto& [u, v] : independent_pairs(gains, config, ops)) {
    paired[u * n + v] = paired[v * n + u] = 1;
    h.base.add_edge({u, v});
    h.kinds.push_back(EdgeKind::kIndependentPair);
    h.victims.emplace_back();
  }

  std::vector<Vertex> members;
  auto add_cumulative = [&](Vertex victim) {
    return [&, victim](const std::vector<Vertex>& interferers) {
      members.assign(interferers.begin(), interferers.end());
      members.push_back(victim);
      count_edge_op(ops);
      if (h.base.add_edge(members)) {
        h.kinds.push_back(EdgeKind::kCumulative);
        h.victims.emplace_back(victim);
      }
    };
  };

  std::vector<detail::Interferer> candidates;
  for (std::size_t c = 0; c < layout.n_cellular; ++c) {
    const Vertex victim = layout.cellular(c);
    candidates.clear();
    for (std::size_t m = 0; m < layout.n_d2d; ++m) {
      const Vertex u = layout.d2d(m);
      if (!paired[victim * n + u]) candidates.push_back({u, p_d2d * gains.d2dtx_to_enb[m]});
    }
    detail::for_each_cumulative_set(candidates, config.q_cumulative,
                                    p_cell * gains.cellular_to_enb[c], th.eta_c, ops,
                                    add_cumulative(victim));
  }
  for (std::size_t m = 0; m < layout.n_d2d; ++m) {
    const Vertex victim = layout.d2d(m);
    candidates.clear();
    for (std::size_t c = 0; c < layout.n_cellular; ++c) {
      const Vertex u = layout.cellular(c);
      if (!paired[victim * n + u]) candidates.push_back({u, p_cell * gains.cellular_to_d2drx(c, m)});
    }
    for (std::size_t i = 0; i < layout.n_d2d; ++i) {
      const Vertex u = layout.d2d(i);
      if (i != m && !paired[victim * n + u]) {
        candidates.push_back({u, p_d2d * gains.d2dtx_to_d2drx(i, m)});
      }
    }
    detail::for_each_cumulative_set(candidates, config.q_cumulative, p_d2d * gains.d2d_pair[m],
                                    th.eta_d, ops, add_cumulative(victim));
  }

  const std::size_t singletons = h.base.complete_with_singletons();
  count_edge_op(ops, singletons);
  h.kinds.insert(h.kinds.end(), singletons, EdgeKind::kSingleton);
  h.victims.insert(h.victims.end(), singletons, std::nullopt);
  return h;
}

/// Coloring order by smallest-last minimum-monodegree elimination.
inline EliminationOrder order_min_monodegree(const InterferenceHypergraph& h,
                                             OpCounter* ops = nullptr) {
  return smallest_last_order(h.base, ops);
}

/// Greedy hypergraph coloring with k colors along `order`. Under the weak
/// rule, color c is unavailable to x when some non-singleton hyperedge
/// through x has every other member already colored c. Under the strict
/// rule, any color already present in a hyperedge through x is unavailable.
/// Vertices with no available color stay unallocated.
inline Allocation color_hypergraph(const InterferenceHypergraph& h,
                                   const std::vector<Vertex>& order, std::size_t k,
                                   RandomStream& stream, ColorChoice choice = ColorChoice::kRandom,
                                   HyperedgeRule rule = HyperedgeRule::kWeak,
                                   OpCounter* ops = nullptr) {
  if (k < 1) throw std::invalid_argument("color_hypergraph: need at least one color");
  Allocation alloc(h.layout);
  std::vector<bool> forbidden(k);
  for (Vertex x : order) {
    std::fill(forbidden.begin(), forbidden.end(), false);
    for (std::size_t id : h.base.incident(x)) {
      const auto e = h.base.edge(id);
      if (e.size() < 2) continue;
      count_edge_op(ops);
      if (rule == HyperedgeRule::kStrict) {
        for (Vertex u : e) {
          if (u == x) continue;
          if (auto c = alloc.channel(u)) forbidden[*c] = true;
        }
        continue;
      }
      std::optional<Channel> shared;
      bool monochrome = true;
      for (Vertex u : e) {
        if (u == x) continue;
        const auto c = alloc.channel(u);
        if (!c || (shared && *shared != *c)) {
          monochrome = false;
          break;
        }
        shared = c;
      }
      if (monochrome && shared) forbidden[*shared] = true;
    }
    if (auto c = detail::pick_color(forbidden, choice, stream)) alloc.assign(x, *c);
  }
  return alloc;
}

inline Allocation color_hypergraph(const InterferenceHypergraph& h, std::size_t k,
                                   RandomStream& stream, ColorChoice choice = ColorChoice::kRandom,
                                   HyperedgeRule rule = HyperedgeRule::kWeak,
                                   OpCounter* ops = nullptr) {
  return color_hypergraph(h, order_min_monodegree(h, ops).coloring_order, k, stream, choice, rule,
                          ops);
}

/// Hypergraph-based allocator end to end.
inline Allocation allocate_hypergraph(const LinkGains& gains, const SimConfig& config,
                                      RandomStream& stream, OpCounter* construction_ops = nullptr,
                                      OpCounter* coloring_ops = nullptr) {
  const InterferenceHypergraph h = build_hypergraph(gains, config, construction_ops);
  return color_hypergraph(h, config.n_channels, stream, config.color_choice, config.hyperedge_rule,
                          coloring_ops);
}

/// Fixture format with the edge kind after '#' on every hyperedge line.
inline void write_interference_hypergraph(std::ostream& out, const InterferenceHypergraph& h) {
  write_hypergraph(out, h.base, [&](std::size_t i) { return std::string(to_string(h.kinds[i])); });
}

}  // namespace hyperalloc
