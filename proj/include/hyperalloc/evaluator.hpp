#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperalloc/allocation.hpp"
#include "hyperalloc/radio.hpp"
#include "hyperalloc/scenario.hpp"

namespace hyperalloc {

/// First constraint breach found by validate().
struct Violation {
  enum class Kind {
    kLayoutMismatch,     // allocation dimensions differ from the config
    kChannelOutOfRange,  // channel index >= K
    kCellularSharing,    // two or more cellular UEs on one channel
  };
  Kind kind;
  std::optional<Vertex> vertex;
  std::optional<Channel> channel;
  std::size_t multiplicity = 0;
  std::string message;
};

class AllocationError : public std::invalid_argument {
 public:
  explicit AllocationError(const Violation& violation)
      : std::invalid_argument(violation.message), violation_(violation) {}
  const Violation& violation() const { return violation_; }

 private:
  Violation violation_;
};

/// Checks that every vertex holds at most one in-range channel and that no
/// channel carries more than one cellular UE. D2D pairs may share freely.
inline std::optional<Violation> validate(const Allocation& alloc, const SimConfig& config) {
  const VertexLayout layout = alloc.layout();
  if (layout.n_cellular != config.n_cellular || layout.n_d2d != config.n_d2d_pairs) {
    return Violation{Violation::Kind::kLayoutMismatch, std::nullopt, std::nullopt, 0,
                     "allocation has " + std::to_string(layout.n_cellular) + "+" +
                         std::to_string(layout.n_d2d) + " vertices, config expects " +
                         std::to_string(config.n_cellular) + "+" +
                         std::to_string(config.n_d2d_pairs)};
  }
  std::vector<std::size_t> cellular_on(config.n_channels, 0);
  for (Vertex v = 0; v < alloc.size(); ++v) {
    const auto k = alloc.channel(v);
    if (!k) continue;
    if (*k >= config.n_channels) {
      return Violation{Violation::Kind::kChannelOutOfRange, v, *k, 0,
                       "vertex " + std::to_string(v) + " uses channel " + std::to_string(*k) +
                           " but only " + std::to_string(config.n_channels) + " exist"};
    }
    if (layout.is_cellular(v)) ++cellular_on[*k];
  }
  for (Channel k = 0; k < config.n_channels; ++k) {
    if (cellular_on[k] > 1) {
      return Violation{Violation::Kind::kCellularSharing, std::nullopt, k, cellular_on[k],
                       "channel " + std::to_string(k) + " carries " +
                           std::to_string(cellular_on[k]) + " cellular UEs"};
    }
  }
  return std::nullopt;
}

inline void require_valid(const Allocation& alloc, const SimConfig& config) {
  if (auto violation = validate(alloc, config)) throw AllocationError(*violation);
}

/// Per-trial outcome of one allocation.
struct TrialMetrics {
  double cell_capacity = 0.0;              // bit/s/Hz
  std::vector<double> per_ue_throughput;   // bit/s/Hz, vertex order
  std::size_t n_cellular_outage = 0;
  std::size_t n_d2d_outage = 0;
  std::size_t colors_used = 0;
};

/// Per-UE log2(1 + SINR); unallocated UEs get zero and count as outage.
inline TrialMetrics per_ue_metrics(const Allocation& alloc, const LinkGains& gains,
                                   const SimConfig& config) {
  require_valid(alloc, config);
  const VertexLayout layout = alloc.layout();
  TrialMetrics metrics;
  metrics.per_ue_throughput.assign(layout.size(), 0.0);
  std::vector<bool> used(config.n_channels, false);
  for (Vertex v = 0; v < layout.size(); ++v) {
    const auto k = alloc.channel(v);
    if (!k) {
      if (layout.is_cellular(v)) {
        ++metrics.n_cellular_outage;
      } else {
        ++metrics.n_d2d_outage;
      }
      continue;
    }
    used[*k] = true;
    const double sinr = layout.is_cellular(v)
                            ? sinr_cellular(v, *k, alloc, gains, config)
                            : sinr_d2d(layout.d2d_index(v), *k, alloc, gains, config);
    metrics.per_ue_throughput[v] = spectral_efficiency(sinr);
    metrics.cell_capacity += metrics.per_ue_throughput[v];
  }
  for (bool u : used) metrics.colors_used += u;
  return metrics;
}

/// Cell capacity: summed spectral efficiency of all allocated UEs, bit/s/Hz.
inline double cell_capacity(const Allocation& alloc, const LinkGains& gains,
                            const SimConfig& config) {
  return per_ue_metrics(alloc, gains, config).cell_capacity;
}

class OracleTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr double kOracleMaxAssignments = 1e7;

/// Number of raw assignments the oracle would enumerate, (K+1)^(N+M).
inline double oracle_search_size(const SimConfig& config) {
  return std::pow(static_cast<double>(config.n_channels + 1),
                  static_cast<double>(config.n_vertices()));
}

inline bool oracle_fits(const SimConfig& config) {
  return oracle_search_size(config) <= kOracleMaxAssignments;
}

struct OptimalAllocation {
  Allocation allocation;
  double capacity = 0.0;
};

/// Exhaustive capacity maximizer over every feasible assignment. Vertices are
/// enumerated in index order with values (unallocated, 0, ..., K-1); the first
/// maximizer in that lexicographic order wins ties. Assignments putting two
/// cellular UEs on one channel are pruned as they are infeasible.
inline OptimalAllocation brute_force_optimal(const LinkGains& gains, const SimConfig& config) {
  const VertexLayout layout = gains.layout();
  if (layout.n_cellular != config.n_cellular || layout.n_d2d != config.n_d2d_pairs) {
    throw std::invalid_argument("brute_force_optimal: gains do not match config");
  }
  if (!oracle_fits(config)) {
    throw OracleTooLarge("brute_force_optimal: (K+1)^(N+M) = " +
                         std::to_string(oracle_search_size(config)) + " exceeds the 1e7 guard");
  }
  OptimalAllocation best{Allocation(layout), 0.0};
  bool have_best = false;
  Allocation current(layout);
  std::vector<bool> cellular_taken(config.n_channels, false);

  auto recurse = [&](auto&& self, Vertex v) -> void {
    if (v == layout.size()) {
      const double capacity = cell_capacity(current, gains, config);
      if (!have_best || capacity > best.capacity) {
        best = {current, capacity};
        have_best = true;
      }
      return;
    }
    current.unassign(v);
    self(self, v + 1);
    for (Channel k = 0; k < config.n_channels; ++k) {
      const bool cellular = layout.is_cellular(v);
      if (cellular && cellular_taken[k]) continue;
      if (cellular) cellular_taken[k] = true;
      current.assign(v, k);
      self(self, v + 1);
      if (cellular) cellular_taken[k] = false;
    }
    current.unassign(v);
  };
  recurse(recurse, 0);
  return best;
}

}  // namespace hyperalloc
