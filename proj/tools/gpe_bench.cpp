// Benchmark driver for the 2D Gross-Pitaevskii solver: ground-state descent,
// invariant-preservation runs, and the cost-accuracy matrix, each emitting
// plot-ready CSVs plus a JSON artifact; `report` folds the artifacts into
// summary.json and fails if any embedded check failed.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "gpe/bench.hpp"

namespace {

int env_workers() {
  if (const char* env = std::getenv("GPE_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

void add_common_options(CLI::App* cmd, gpe::bench::RunConfig& config) {
  cmd->add_option("--beta", config.beta, "nonlinearity strength (>= 0)");
  cmd->add_option("--gamma", config.gamma, "trap frequency (> 0)");
  cmd->add_option("-M,--truncation", config.truncation, "highest Hermite index per axis");
  cmd->add_option("--orders", config.orders, "splitting orders (even)")->delimiter(',');
  cmd->add_option("--taus", config.taus, "time steps")->delimiter(',');
  cmd->add_option("--c-values", config.c_values, "mass constraints")->delimiter(',');
  cmd->add_option("--final-time", config.final_time, "simulated time horizon (0 = default)");
  cmd->add_option("--seed", config.seed, "initial state: paper_seed_1 | h00 | gaussian");
  cmd->add_option("--refine-schedule", config.refine_schedule,
                  "decreasing tau schedule for ground-state refinement")
      ->delimiter(',');
  cmd->add_option("-o,--out", config.output_dir, "output directory");
  cmd->add_option("--workers", config.workers,
                  "worker threads (default: GPE_WORKERS or 1)");
  cmd->add_option("--cell-timeout", config.cell_timeout,
                  "wall-clock seconds per cost-accuracy cell");
  cmd->add_option("--repeats", config.repeats, "timing repeats per cell (median)");
  cmd->add_option("--record-every", config.record_every,
                  "steps between diagnostics records (0 = auto)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2D Gross-Pitaevskii benchmarks (Hermite pseudospectral, "
               "positive-coefficient high-order splitting)"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file (flags override)");

  gpe::bench::RunConfig config;
  config.workers = env_workers();

  CLI::App* ground = app.add_subcommand("ground-state", "normalized gradient-flow descent");
  add_common_options(ground, config);
  CLI::App* invariants =
      app.add_subcommand("invariants", "mass/energy conservation and period extraction");
  add_common_options(invariants, config);
  CLI::App* cost = app.add_subcommand("cost-accuracy", "(order, tau) cost-accuracy matrix");
  add_common_options(cost, config);

  CLI::App* report = app.add_subcommand("report", "aggregate artifacts into summary.json");
  std::string report_dir = "out";
  report->add_option("-o,--out", report_dir, "directory holding benchmark_*.json");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ground->parsed()) {
      gpe::bench::run_ground_state_benchmark(config);
    } else if (invariants->parsed()) {
      gpe::bench::run_invariants_benchmark(config);
    } else if (cost->parsed()) {
      gpe::bench::run_cost_accuracy_benchmark(config);
    } else if (report->parsed()) {
      const auto summary = gpe::bench::emit_report(report_dir);
      std::cout << summary.dump(2) << "\n";
      return summary.value("all_pass", false) ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
