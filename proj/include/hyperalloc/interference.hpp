#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hyperalloc/allocation.hpp"
#include "hyperalloc/op_counter.hpp"
#include "hyperalloc/radio.hpp"
#include "hyperalloc/scenario.hpp"
#include "hyperalloc/units.hpp"

namespace hyperalloc {

/// Signal-to-interference thresholds in linear scale. Noise never enters the
/// threshold tests.
struct Thresholds {
  double delta_c = 100.0;  // pairwise, at the eNB
  double delta_d = 100.0;  // pairwise, at a D2D receiver
  double eta_c = 100.0;    // cumulative, at the eNB
  double eta_d = 100.0;    // cumulative, at a D2D receiver

  static Thresholds from(const SimConfig& config) {
    return {db_to_linear(config.delta_c_db), db_to_linear(config.delta_d_db),
            db_to_linear(config.eta_c_db), db_to_linear(config.eta_d_db)};
  }
};

using VertexPair = std::pair<Vertex, Vertex>;

/// Pairwise ("independent interferer") edges shared by both allocators:
///   - every two cellular UEs;
///   - U_n, D_m when P^c g_n^c / (P^d g_m^t) < delta_c or
///     P^d g_m^{t,r} / (P^c g_{n,m}^{c,r}) < delta_d;
///   - D_i, D_m when g_m^{t,r} / g_{i,m}^{t,r} < delta_d or the same test
///     holds at D_i's receiver.
/// Pairs are returned with first < second, cellular clique first.
inline std::vector<VertexPair> independent_pairs(const LinkGains& gains, const SimConfig& config,
                                                 OpCounter* ops = nullptr) {
  const VertexLayout layout = gains.layout();
  const Thresholds th = Thresholds::from(config);
  const double p_cell = config.p_cellular_mw();
  const double p_d2d = config.p_d2d_mw();
  std::vector<VertexPair> pairs;

  for (std::size_t i = 0; i < layout.n_cellular; ++i) {
    for (std::size_t j = i + 1; j < layout.n_cellular; ++j) {
      pairs.emplace_back(layout.cellular(i), layout.cellular(j));
      count_edge_op(ops);
    }
  }
  for (std::size_t n = 0; n < layout.n_cellular; ++n) {
    const double cell_signal = p_cell * gains.cellular_to_enb[n];
    for (std::size_t m = 0; m < layout.n_d2d; ++m) {
      count_comparison(ops);
      bool conflict = cell_signal < th.delta_c * (p_d2d * gains.d2dtx_to_enb[m]);
      if (!conflict) {
        count_comparison(ops);
        conflict = p_d2d * gains.d2d_pair[m] < th.delta_d * (p_cell * gains.cellular_to_d2drx(n, m));
      }
      if (conflict) {
        pairs.emplace_back(layout.cellular(n), layout.d2d(m));
        count_edge_op(ops);
      }
    }
  }
  for (std::size_t i = 0; i < layout.n_d2d; ++i) {
    for (std::size_t m = i + 1; m < layout.n_d2d; ++m) {
      count_comparison(ops);
      bool conflict = gains.d2d_pair[m] < th.delta_d * gains.d2dtx_to_d2drx(i, m);
      if (!conflict) {
        count_comparison(ops);
        conflict = gains.d2d_pair[i] < th.delta_d * gains.d2dtx_to_d2drx(m, i);
      }
      if (conflict) {
        pairs.emplace_back(layout.d2d(i), layout.d2d(m));
        count_edge_op(ops);
      }
    }
  }
  return pairs;
}

}  // namespace hyperalloc
