#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperalloc/allocation.hpp"
#include "hyperalloc/random.hpp"
#include "hyperalloc/scenario.hpp"
#include "hyperalloc/units.hpp"

namespace hyperalloc {

/// Dense row-major matrix of linear gains.
class GainMatrix {
 public:
  GainMatrix() = default;
  GainMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const GainMatrix&, const GainMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// The five link-gain families (path loss times fading), linear scale.
///
///   cellular_to_enb(n)          U_n   -> eNB
///   d2d_pair(m)                 D_m^t -> D_m^r
///   d2dtx_to_enb(m)             D_m^t -> eNB
///   cellular_to_d2drx(n, m)     U_n   -> D_m^r
///   d2dtx_to_d2drx(i, m)        D_i^t -> D_m^r   (diagonal unused)
struct LinkGains {
  std::vector<double> cellular_to_enb;
  std::vector<double> d2d_pair;
  std::vector<double> d2dtx_to_enb;
  GainMatrix cellular_to_d2drx;
  GainMatrix d2dtx_to_d2drx;

  LinkGains() = default;
  LinkGains(std::size_t n_cellular, std::size_t n_d2d)
      : cellular_to_enb(n_cellular, 1.0),
        d2d_pair(n_d2d, 1.0),
        d2dtx_to_enb(n_d2d, 1.0),
        cellular_to_d2drx(n_cellular, n_d2d, 1.0),
        d2dtx_to_d2drx(n_d2d, n_d2d, 1.0) {}

  std::size_t n_cellular() const { return cellular_to_enb.size(); }
  std::size_t n_d2d() const { return d2d_pair.size(); }
  VertexLayout layout() const { return {n_cellular(), n_d2d()}; }

  friend bool operator==(const LinkGains&, const LinkGains&) = default;
};

enum class LinkState { kLos, kNlos };

inline constexpr double kMinPathLossDistance = 1.0;

/// ITU UMi path loss in dB. Distances below 1 m are clamped.
inline double path_loss_db(double distance_m, double carrier_ghz, LinkState state) {
  if (!(carrier_ghz > 0.0)) throw std::invalid_argument("path_loss: carrier must be > 0");
  const double d = std::max(distance_m, kMinPathLossDistance);
  if (state == LinkState::kLos) {
    return 22.0 * std::log10(d) + 28.0 + 20.0 * std::log10(carrier_ghz);
  }
  return 36.7 * std::log10(d) + 22.7 + 26.0 * std::log10(carrier_ghz);
}

// Linear attenuation 10^(-PL_dB/10).
inline double path_loss_linear(double distance_m, double carrier_ghz, LinkState state) {
  return db_to_linear(-path_loss_db(distance_m, carrier_ghz, state));
}

/// |h|^2 for a unit-variance complex Gaussian h, i.e. Exp(1).
inline double sample_fading_power(RandomStream& stream) { return stream.exponential(); }

/// Builds all link gains for one drop. Intra-pair D2D links are LOS, every
/// other link NLOS. One fading draw per directed link, shared by all channels.
inline LinkGains compute_gains(const Drop& drop, const SimConfig& config, RandomStream& stream) {
  const std::size_t n_cell = drop.cellular_positions.size();
  const std::size_t n_d2d = drop.d2d_tx_positions.size();
  if (n_cell != config.n_cellular || n_d2d != config.n_d2d_pairs ||
      drop.d2d_rx_positions.size() != n_d2d) {
    throw std::invalid_argument("compute_gains: drop does not match config dimensions");
  }
  const double fc = config.carrier_ghz;
  auto link = [&](const Point& a, const Point& b, LinkState state) {
    return path_loss_linear(distance(a, b), fc, state) * sample_fading_power(stream);
  };

  LinkGains gains(n_cell, n_d2d);
  for (std::size_t n = 0; n < n_cell; ++n) {
    gains.cellular_to_enb[n] = link(drop.cellular_positions[n], drop.enb_position, LinkState::kNlos);
  }
  for (std::size_t m = 0; m < n_d2d; ++m) {
    gains.d2d_pair[m] = link(drop.d2d_tx_positions[m], drop.d2d_rx_positions[m], LinkState::kLos);
    gains.d2dtx_to_enb[m] = link(drop.d2d_tx_positions[m], drop.enb_position, LinkState::kNlos);
  }
  for (std::size_t n = 0; n < n_cell; ++n) {
    for (std::size_t m = 0; m < n_d2d; ++m) {
      gains.cellular_to_d2drx(n, m) =
          link(drop.cellular_positions[n], drop.d2d_rx_positions[m], LinkState::kNlos);
    }
  }
  for (std::size_t i = 0; i < n_d2d; ++i) {
    for (std::size_t m = 0; m < n_d2d; ++m) {
      if (i == m) continue;
      gains.d2dtx_to_d2drx(i, m) =
          link(drop.d2d_tx_positions[i], drop.d2d_rx_positions[m], LinkState::kNlos);
    }
  }
  return gains;
}

namespace detail {

inline void require_layout(const Allocation& alloc, const LinkGains& gains) {
  if (alloc.layout() != gains.layout()) {
    throw std::invalid_argument("allocation layout does not match link gains");
  }
}

}  // namespace detail

/// Uplink SINR of cellular UE n at the eNB on channel k; the co-channel set
/// is read from alloc. Throws if U_n is not on channel k.
inline double sinr_cellular(std::size_t n, Channel k, const Allocation& alloc,
                            const LinkGains& gains, const SimConfig& config) {
  detail::require_layout(alloc, gains);
  const VertexLayout layout = alloc.layout();
  if (n >= layout.n_cellular || !alloc.on_channel(layout.cellular(n), k)) {
    throw std::invalid_argument("sinr_cellular: cellular UE " + std::to_string(n) +
                                " is not on channel " + std::to_string(k));
  }
  const double p_d2d = config.p_d2d_mw();
  double interference = 0.0;
  for (std::size_t m = 0; m < layout.n_d2d; ++m) {
    if (alloc.on_channel(layout.d2d(m), k)) interference += p_d2d * gains.d2dtx_to_enb[m];
  }
  return config.p_cellular_mw() * gains.cellular_to_enb[n] /
         (noise_power_mw(config) + interference);
}

/// SINR at the receiver of D2D pair m on channel k. Throws if D_m is not on
/// channel k.
inline double sinr_d2d(std::size_t m, Channel k, const Allocation& alloc, const LinkGains& gains,
                       const SimConfig& config) {
  detail::require_layout(alloc, gains);
  const VertexLayout layout = alloc.layout();
  if (m >= layout.n_d2d || !alloc.on_channel(layout.d2d(m), k)) {
    throw std::invalid_argument("sinr_d2d: D2D pair " + std::to_string(m) +
                                " is not on channel " + std::to_string(k));
  }
  const double p_cell = config.p_cellular_mw();
  const double p_d2d = config.p_d2d_mw();
  double interference = 0.0;
  for (std::size_t n = 0; n < layout.n_cellular; ++n) {
    if (alloc.on_channel(layout.cellular(n), k)) interference += p_cell * gains.cellular_to_d2drx(n, m);
  }
  for (std::size_t i = 0; i < layout.n_d2d; ++i) {
    if (i != m && alloc.on_channel(layout.d2d(i), k)) {
      interference += p_d2d * gains.d2dtx_to_d2drx(i, m);
    }
  }
  return p_d2d * gains.d2d_pair[m] / (noise_power_mw(config) + interference);
}

inline double spectral_efficiency(double sinr) { return std::log2(1.0 + sinr); }

}  // namespace hyperalloc
