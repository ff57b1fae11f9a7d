// Monte Carlo driver: single runs, parameter sweeps, throughput CDFs, oracle
// comparison and op-count scaling, all written as CSV.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperalloc/config_io.hpp"
#include "hyperalloc/hyperalloc.hpp"

namespace fs = std::filesystem;
using namespace hyperalloc;

namespace {

std::vector<Algorithm> parse_algorithms(const std::string& list) {
  std::vector<Algorithm> out;
  std::stringstream in(list);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (!name.empty()) out.push_back(parse_algorithm(name));
  }
  if (out.empty()) throw std::invalid_argument("--algos: no algorithms given");
  return out;
}

std::vector<double> parse_values(const std::string& list) {
  std::vector<double> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("--values: bad number '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("--values: no values given");
  return out;
}

std::ofstream open_output(const fs::path& dir, const std::string& name) {
  fs::create_directories(dir);
  std::ofstream out(dir / name);
  if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
  return out;
}

struct Common {
  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;

  SimConfig load() const {
    SimConfig c = config_path.empty() ? SimConfig{} : load_config(config_path);
    if (seed) c.master_seed = *seed;
    if (trials) c.n_trials = *trials;
    c.validate();
    return c;
  }
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--config", common.config_path, "JSON config file (defaults apply when omitted)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", common.out_dir, "output directory")->required();
  cmd->add_option("--seed", common.seed, "master seed override");
  cmd->add_option("--trials", common.trials, "trial count override");
}

void print_summary(const AggregateResult& r) {
  for (const auto& s : r.algorithms) {
    std::cout << to_string(s.algorithm) << ": capacity " << s.mean_capacity() << " +- "
              << s.capacity_std_error() << " bit/s/Hz, outage cellular " << s.mean_cellular_outage()
              << " d2d " << s.mean_d2d_outage() << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Channel allocation for D2D underlay cellular networks"};
  app.require_subcommand(1);

  Common simulate_opts;
  std::string simulate_algos = "graph,hypergraph";
  auto* simulate = app.add_subcommand("simulate", "run trials at one configuration");
  add_common(simulate, simulate_opts);
  simulate->add_option("--algos", simulate_algos, "comma-separated algorithms");

  Common sweep_opts;
  std::string sweep_param, sweep_values, sweep_algos = "graph,hypergraph";
  auto* sweep = app.add_subcommand("sweep", "run trials over values of one parameter");
  add_common(sweep, sweep_opts);
  sweep->add_option("--param", sweep_param, "N, M, K, Q or eta_db")
      ->required()
      ->check(CLI::IsMember({"N", "M", "K", "Q", "eta_db"}));
  sweep->add_option("--values", sweep_values, "comma-separated values")->required();
  sweep->add_option("--algos", sweep_algos, "comma-separated algorithms");

  Common cdf_opts;
  std::string cdf_algos = "graph,hypergraph";
  auto* cdf = app.add_subcommand("cdf", "per-UE throughput samples");
  add_common(cdf, cdf_opts);
  cdf->add_option("--algos", cdf_algos, "comma-separated algorithms");

  Common oracle_opts;
  auto* oracle = app.add_subcommand("oracle-compare", "all allocators against the exhaustive optimum");
  add_common(oracle, oracle_opts);

  Common ops_opts;
  std::string ops_sizes = "20,40,80,160";
  auto* ops = app.add_subcommand("op-counts", "logical op counts against N+M (N = M = size/2)");
  add_common(ops, ops_opts);
  ops->add_option("--sizes", ops_sizes, "comma-separated even N+M values");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate) {
      const SimConfig config = simulate_opts.load();
      const AggregateResult r = run_trials(config, parse_algorithms(simulate_algos));
      auto out = open_output(simulate_opts.out_dir, "capacity.csv");
      write_capacity_header(out);
      write_capacity_rows(out, "base", r);
      print_summary(r);
    } else if (*sweep) {
      SweepSpec spec;
      spec.parameter = parse_sweep_parameter(sweep_param);
      spec.values = parse_values(sweep_values);
      spec.base_config = sweep_opts.load();
      spec.algorithms = parse_algorithms(sweep_algos);
      const auto points = run_sweep(spec);
      auto out = open_output(sweep_opts.out_dir, "capacity.csv");
      write_capacity_header(out);
      for (const auto& p : points) {
        std::ostringstream value;
        value << p.value;
        write_capacity_rows(out, value.str(), p.result);
        std::cout << sweep_param << " = " << value.str() << '\n';
        print_summary(p.result);
      }
    } else if (*cdf) {
      const SimConfig config = cdf_opts.load();
      const AggregateResult r = run_trials(config, parse_algorithms(cdf_algos));
      auto out = open_output(cdf_opts.out_dir, "cdf.csv");
      write_cdf_csv(out, r);
      print_summary(r);
    } else if (*oracle) {
      const SimConfig config = oracle_opts.load();
      const AggregateResult r = run_trials(
          config, {Algorithm::kOptimal, Algorithm::kHypergraph, Algorithm::kGraph, Algorithm::kNoD2d});
      auto out = open_output(oracle_opts.out_dir, "capacity.csv");
      write_capacity_header(out);
      write_capacity_rows(out, "base", r);
      print_summary(r);
    } else if (*ops) {
      const SimConfig base = ops_opts.load();
      std::vector<SimConfig> configs;
      for (double size : parse_values(ops_sizes)) {
        const auto n = static_cast<std::size_t>(size);
        if (static_cast<double>(n) != size || n % 2 != 0 || n == 0) {
          throw std::invalid_argument("--sizes: values must be positive even integers");
        }
        SimConfig c = base;
        c.n_cellular = c.n_d2d_pairs = n / 2;
        configs.push_back(c);
      }
      const auto rows = op_count_scaling(configs);
      auto out = open_output(ops_opts.out_dir, "op_counts.csv");
      write_op_count_csv(out, rows);
      for (const auto& row : rows) {
        if (row.phase == "total") {
          std::cout << row.n_plus_m << ' ' << to_string(row.algorithm) << ' ' << row.op_count << '\n';
        }
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
