#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperalloc/random.hpp"
#include "hyperalloc/units.hpp"

namespace hyperalloc {

/// How a greedy colorer picks among the available colors.
enum class ColorChoice {
  kRandom,  // uniform over the available set
  kLowest,  // smallest available index, for regression tests
};

/// Which monochromatic configurations a hyperedge forbids.
enum class HyperedgeRule {
  kWeak,    // forbid only fully monochromatic non-singleton hyperedges
  kStrict,  // forbid any repeated color inside a hyperedge
};

/// All scenario, radio and algorithm parameters of one experiment. Defaults
/// are the isolated-cell setup: 500 m radius, 20 m pair range, 23/13 dBm,
/// 2.3 GHz, 20 MHz, NF 5 dB, all thresholds 20 dB, Q = 2.
struct SimConfig {
  std::size_t n_cellular = 10;
  std::size_t n_d2d_pairs = 10;
  std::size_t n_channels = 10;
  double cell_radius = 500.0;
  double max_d2d_distance = 20.0;
  double p_cellular_dbm = 23.0;
  double p_d2d_dbm = 13.0;
  double delta_c_db = 20.0;
  double delta_d_db = 20.0;
  double eta_c_db = 20.0;
  double eta_d_db = 20.0;
  std::size_t q_cumulative = 2;
  double carrier_ghz = 2.3;
  double total_bandwidth_hz = 20e6;
  double noise_figure_db = 5.0;
  std::size_t n_trials = 200;
  std::uint64_t master_seed = 1;
  ColorChoice color_choice = ColorChoice::kRandom;
  HyperedgeRule hyperedge_rule = HyperedgeRule::kWeak;

  std::size_t n_vertices() const { return n_cellular + n_d2d_pairs; }
  double p_cellular_mw() const { return dbm_to_mw(p_cellular_dbm); }
  double p_d2d_mw() const { return dbm_to_mw(p_d2d_dbm); }

  /// Throws std::invalid_argument naming the first broken invariant.
  void validate() const {
    auto fail = [](const std::string& what) {
      throw std::invalid_argument("invalid SimConfig: " + what);
    };
    if (n_channels < 1) fail("n_channels must be >= 1");
    if (q_cumulative < 1) fail("q_cumulative must be >= 1");
    if (!(cell_radius > 0.0) || !std::isfinite(cell_radius)) fail("cell_radius must be > 0");
    if (!(max_d2d_distance > 0.0) || max_d2d_distance > cell_radius) {
      fail("max_d2d_distance must lie in (0, cell_radius]");
    }
    for (double db : {delta_c_db, delta_d_db, eta_c_db, eta_d_db, p_cellular_dbm, p_d2d_dbm,
                      noise_figure_db}) {
      if (!std::isfinite(db)) fail("dB quantities must be finite");
    }
    if (!(carrier_ghz > 0.0)) fail("carrier_ghz must be > 0");
    if (!(total_bandwidth_hz > 0.0)) fail("total_bandwidth_hz must be > 0");
  }
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// One random realization of UE positions; the eNB sits at the origin.
struct Drop {
  Point enb_position{};
  std::vector<Point> cellular_positions;
  std::vector<Point> d2d_tx_positions;
  std::vector<Point> d2d_rx_positions;

  friend bool operator==(const Drop&, const Drop&) = default;
};

namespace detail {

inline Point uniform_in_disc(RandomStream& stream, const Point& center, double radius) {
  const double r = radius * std::sqrt(stream.uniform());
  const double theta = 2.0 * std::numbers::pi * stream.uniform();
  return {center.x + r * std::cos(theta), center.y + r * std::sin(theta)};
}

}  // namespace detail

/// Uniform placement over the cell disc. Each D2D receiver is uniform in the
/// disc of radius max_d2d_distance around its transmitter, redrawn until it
/// falls inside the cell. Deterministic in (master_seed, trial_index).
inline Drop generate_drop(const SimConfig& config, std::uint64_t trial_index) {
  config.validate();
  RandomStream stream =
      RandomStream::derive(config.master_seed, trial_index, StreamPurpose::kPlacement);
  Drop drop;
  const Point origin = drop.enb_position;
  drop.cellular_positions.reserve(config.n_cellular);
  for (std::size_t n = 0; n < config.n_cellular; ++n) {
    drop.cellular_positions.push_back(detail::uniform_in_disc(stream, origin, config.cell_radius));
  }
  drop.d2d_tx_positions.reserve(config.n_d2d_pairs);
  drop.d2d_rx_positions.reserve(config.n_d2d_pairs);
  for (std::size_t m = 0; m < config.n_d2d_pairs; ++m) {
    const Point tx = detail::uniform_in_disc(stream, origin, config.cell_radius);
    Point rx;
    do {
      rx = detail::uniform_in_disc(stream, tx, config.max_d2d_distance);
    } while (distance(rx, origin) > config.cell_radius);
    drop.d2d_tx_positions.push_back(tx);
    drop.d2d_rx_positions.push_back(rx);
  }
  return drop;
}

/// Thermal noise over one channel; the total bandwidth is split evenly over K.
inline double noise_power_dbm(const SimConfig& config) {
  if (config.n_channels < 1) throw std::invalid_argument("noise_power: n_channels must be >= 1");
  const double channel_bw = config.total_bandwidth_hz / static_cast<double>(config.n_channels);
  return -174.0 + linear_to_db(channel_bw) + config.noise_figure_db;
}

inline double noise_power_mw(const SimConfig& config) {
  return dbm_to_mw(noise_power_dbm(config));
}

}  // namespace hyperalloc
