#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperalloc/allocation.hpp"
#include "hyperalloc/conflict_graph.hpp"
#include "hyperalloc/evaluator.hpp"
#include "hyperalloc/hypergraph_alloc.hpp"
#include "hyperalloc/op_counter.hpp"
#include "hyperalloc/radio.hpp"
#include "hyperalloc/random.hpp"
#include "hyperalloc/scenario.hpp"
#include "hyperalloc/stats.hpp"

namespace hyperalloc {

enum class Algorithm { kGraph, kHypergraph, kOptimal, kNoD2d };

inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kGraph: return "graph";
    case Algorithm::kHypergraph: return "hypergraph";
    case Algorithm::kOptimal: return "optimal";
    case Algorithm::kNoD2d: return "no-d2d";
  }
  return "unknown";
}

inline Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kGraph, Algorithm::kHypergraph, Algorithm::kOptimal, Algorithm::kNoD2d}) {
    if (to_string(a) == name) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

/// Cellular-only baseline: D2D pairs stay silent and the K cellular UEs with
/// the strongest uplink gain each get a channel of their own.
inline Allocation allocate_no_d2d(const LinkGains& gains, const SimConfig& config) {
  Allocation alloc(gains.layout());
  std::vector<Vertex> order(gains.n_cellular());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return gains.cellular_to_enb[a] > gains.cellular_to_enb[b];
  });
  for (std::size_t i = 0; i < order.size() && i < config.n_channels; ++i) {
    alloc.assign(order[i], static_cast<Channel>(i));
  }
  return alloc;
}

/// Per-trial samples of one algorithm at one configuration.
struct AlgorithmSamples {
  Algorithm algorithm{};
  std::vector<double> capacity;
  std::vector<double> cellular_outage;
  std::vector<double> d2d_outage;
  std::vector<double> cellular_throughput;  // one entry per cellular UE per trial
  std::vector<double> d2d_throughput;       // one entry per D2D pair per trial
  std::vector<double> construction_ops;
  std::vector<double> coloring_ops;

  double mean_capacity() const { return stats::mean(capacity); }
  double capacity_std_error() const { return stats::standard_error(capacity); }
  double mean_cellular_outage() const { return stats::mean(cellular_outage); }
  double mean_d2d_outage() const { return stats::mean(d2d_outage); }

  friend bool operator==(const AlgorithmSamples&, const AlgorithmSamples&) = default;
};

struct AggregateResult {
  std::size_t n_trials = 0;
  std::vector<AlgorithmSamples> algorithms;

  const AlgorithmSamples& at(Algorithm a) const {
    for (const auto& s : algorithms) {
      if (s.algorithm == a) return s;
    }
    throw std::out_of_range("AggregateResult: algorithm '" + std::string(to_string(a)) + "' not run");
  }

  friend bool operator==(const AggregateResult&, const AggregateResult&) = default;
};

/// Allocation by one algorithm for one trial's gains.
inline Allocation run_allocator(Algorithm algorithm, const LinkGains& gains,
                                const SimConfig& config, std::uint64_t trial_index,
                                OpCounter* construction_ops = nullptr,
                                OpCounter* coloring_ops = nullptr) {
  switch (algorithm) {
    case Algorithm::kGraph: {
      auto stream = RandomStream::derive(config.master_seed, trial_index, StreamPurpose::kGraphColoring);
      return allocate_graph(gains, config, stream, construction_ops, coloring_ops);
    }
    case Algorithm::kHypergraph: {
      auto stream =
          RandomStream::derive(config.master_seed, trial_index, StreamPurpose::kHypergraphColoring);
      return allocate_hypergraph(gains, config, stream, construction_ops, coloring_ops);
    }
    case Algorithm::kOptimal:
      return brute_force_optimal(gains, config).allocation;
    case Algorithm::kNoD2d:
      return allocate_no_d2d(gains, config);
  }
  throw std::logic_error("run_allocator: unhandled algorithm");
}

/// Gains of trial `trial_index`: its drop plus its own fading stream.
inline LinkGains trial_gains(const SimConfig& config, std::uint64_t trial_index) {
  const Drop drop = generate_drop(config, trial_index);
  auto fading = RandomStream::derive(config.master_seed, trial_index, StreamPurpose::kFading);
  return compute_gains(drop, config, fading);
}

/// Monte Carlo over config.n_trials drops. Every algorithm sees the same
/// drops and gains; each has its own coloring stream. Any invalid allocation
/// aborts with AllocationError.
inline AggregateResult run_trials(const SimConfig& config, std::vector<Algorithm> algorithms) {
  config.validate();
  if (algorithms.empty()) throw std::invalid_argument("run_trials: no algorithms requested");
  std::vector<Algorithm> unique;
  for (Algorithm a : algorithms) {
    if (std::find(unique.begin(), unique.end(), a) == unique.end()) unique.push_back(a);
  }
  if (std::find(unique.begin(), unique.end(), Algorithm::kOptimal) != unique.end() &&
      !oracle_fits(config)) {
    throw OracleTooLarge("run_trials: optimal requested but (K+1)^(N+M) exceeds the 1e7 guard");
  }

  AggregateResult result;
  result.n_trials = config.n_trials;
  for (Algorithm a : unique) {
    result.algorithms.emplace_back();
    result.algorithms.back().algorithm = a;
  }

  for (std::uint64_t t = 0; t < config.n_trials; ++t) {
    const LinkGains gains = trial_gains(config, t);
    for (auto& samples : result.algorithms) {
      OpCounter construction, coloring;
      const Allocation alloc = run_allocator(samples.algorithm, gains, config, t, &construction, &coloring);
      const TrialMetrics m = per_ue_metrics(alloc, gains, config);
      samples.capacity.push_back(m.cell_capacity);
      samples.cellular_outage.push_back(static_cast<double>(m.n_cellular_outage));
      samples.d2d_outage.push_back(static_cast<double>(m.n_d2d_outage));
      const auto split = m.per_ue_throughput.begin() + static_cast<std::ptrdiff_t>(config.n_cellular);
      samples.cellular_throughput.insert(samples.cellular_throughput.end(), m.per_ue_throughput.begin(), split);
      samples.d2d_throughput.insert(samples.d2d_throughput.end(), split, m.per_ue_throughput.end());
      samples.construction_ops.push_back(static_cast<double>(construction.total()));
      samples.coloring_ops.push_back(static_cast<double>(coloring.total()));
    }
  }
  return result;
}

enum class SweepParameter { kN, kM, kK, kQ, kEtaDb };

inline std::string_view to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::kN: return "N";
    case SweepParameter::kM: return "M";
    case SweepParameter::kK: return "K";
    case SweepParameter::kQ: return "Q";
    case SweepParameter::kEtaDb: return "eta_db";
  }
  return "unknown";
}

inline SweepParameter parse_sweep_parameter(std::string_view name) {
  for (SweepParameter p : {SweepParameter::kN, SweepParameter::kM, SweepParameter::kK,
                           SweepParameter::kQ, SweepParameter::kEtaDb}) {
    if (to_string(p) == name) return p;
  }
  throw std::invalid_argument("unknown sweep parameter '" + std::string(name) + "'");
}

struct SweepSpec {
  SweepParameter parameter = SweepParameter::kN;
  std::vector<double> values;
  SimConfig base_config;
  std::vector<Algorithm> algorithms;
};

struct SweepPoint {
  double value = 0.0;
  SimConfig config;
  AggregateResult result;
};

/// base with the swept parameter set to `value` (eta_db sets both etas).
inline SimConfig with_parameter(SimConfig base, SweepParameter parameter, double value) {
  auto as_count = [&](double v) {
    if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
      throw std::invalid_argument("sweep value " + std::to_string(v) + " is not a count");
    }
    return static_cast<std::size_t>(v);
  };
  switch (parameter) {
    case SweepParameter::kN: base.n_cellular = as_count(value); break;
    case SweepParameter::kM: base.n_d2d_pairs = as_count(value); break;
    case SweepParameter::kK: base.n_channels = as_count(value); break;
    case SweepParameter::kQ: base.q_cumulative = as_count(value); break;
    case SweepParameter::kEtaDb: base.eta_c_db = base.eta_d_db = value; break;
  }
  return base;
}

/// One run_trials per swept value; point i draws from its own seed derived
/// from (base master_seed, i).
inline std::vector<SweepPoint> run_sweep(const SweepSpec& spec) {
  if (spec.values.empty()) throw std::invalid_argument("run_sweep: no sweep values");
  if (spec.algorithms.empty()) throw std::invalid_argument("run_sweep: no algorithms requested");
  std::vector<SweepPoint> points;
  for (std::size_t i = 0; i < spec.values.size(); ++i) {
    SimConfig config = with_parameter(spec.base_config, spec.parameter, spec.values[i]);
    config.master_seed = derive_seed(spec.base_config.master_seed, i, StreamPurpose::kSweepPoint);
    config.validate();
    if (std::find(spec.algorithms.begin(), spec.algorithms.end(), Algorithm::kOptimal) !=
            spec.algorithms.end() &&
        !oracle_fits(config)) {
      throw OracleTooLarge("run_sweep: optimal requested at a point beyond the oracle guard");
    }
    points.push_back({spec.values[i], config, {}});
  }
  for (auto& point : points) point.result = run_trials(point.config, spec.algorithms);
  return points;
}

struct OpCountRow {
  std::size_t n_plus_m = 0;
  Algorithm algorithm{};
  std::string phase;  // construction | coloring | total
  double op_count = 0.0;
};

/// Mean logical op counts of the graph and hypergraph pipelines per config
/// (averaged over each config's n_trials drops).
inline std::vector<OpCountRow> op_count_scaling(const std::vector<SimConfig>& configs) {
  std::vector<OpCountRow> rows;
  for (const SimConfig& config : configs) {
    const AggregateResult r = run_trials(config, {Algorithm::kGraph, Algorithm::kHypergraph});
    for (const auto& s : r.algorithms) {
      const double construction = stats::mean(s.construction_ops);
      const double coloring = stats::mean(s.coloring_ops);
      rows.push_back({config.n_vertices(), s.algorithm, "construction", construction});
      rows.push_back({config.n_vertices(), s.algorithm, "coloring", coloring});
      rows.push_back({config.n_vertices(), s.algorithm, "total", construction + coloring});
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------
// CSV output

inline void write_capacity_header(std::ostream& out) {
  out << "param_value,algorithm,mean_capacity_bps_hz,std_err,n_trials,mean_cellular_outage,"
         "mean_d2d_outage\n";
}

inline void write_capacity_rows(std::ostream& out, const std::string& param_value,
                                const AggregateResult& result) {
  out << std::setprecision(10);
  for (const auto& s : result.algorithms) {
    out << param_value << ',' << to_string(s.algorithm) << ',' << s.mean_capacity() << ','
        << s.capacity_std_error() << ',' << s.capacity.size() << ',' << s.mean_cellular_outage()
        << ',' << s.mean_d2d_outage() << '\n';
  }
}

inline void write_cdf_csv(std::ostream& out, const AggregateResult& result) {
  out << "algorithm,ue_class,throughput_bps_hz\n" << std::setprecision(10);
  for (const auto& s : result.algorithms) {
    for (double x : s.cellular_throughput) out << to_string(s.algorithm) << ",cellular," << x << '\n';
    for (double x : s.d2d_throughput) out << to_string(s.algorithm) << ",d2d," << x << '\n';
  }
}

inline void write_op_count_csv(std::ostream& out, const std::vector<OpCountRow>& rows) {
  out << "n_plus_m,algorithm,phase,op_count\n" << std::setprecision(10);
  for (const auto& r : rows) {
    out << r.n_plus_m << ',' << to_string(r.algorithm) << ',' << r.phase << ',' << r.op_count << '\n';
  }
}

}  // namespace hyperalloc
