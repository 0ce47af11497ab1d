#pragma once

#include <filesystem>
#include <json.hpp>
#include <string>
#include <vector>

#include "gpe/dynamics.hpp"
#include "gpe/ground_state.hpp"
#include "gpe/seeds.hpp"

namespace gpe::bench {

/// Resolved run configuration shared by the three benchmarks. Empty lists and
/// zero sentinels pick the per-benchmark defaults (the parameter matrix used
/// throughout the reference runs: beta = 2, gamma = 1, basis truncation 16).
struct RunConfig {
  std::string benchmark;  // ground_state | invariants | cost_accuracy
  double beta = 2.0;
  double gamma = 1.0;
  int truncation = 16;
  std::vector<int> orders;      // splitting orders q
  std::vector<double> taus;     // time steps
  std::vector<double> c_values; // mass constraints
  double final_time = 0.0;      // 0: per-benchmark default
  std::string seed;             // paper_seed_1 | h00 | gaussian; "" per-benchmark
  std::vector<double> refine_schedule;  // extra decreasing-tau stage when nonempty
  std::filesystem::path output_dir = "out";
  int workers = 1;
  double cell_timeout = 600.0;  // seconds of wall clock per cost cell
  int repeats = 3;              // timing repeats per cost cell (median)
  int record_every = 0;         // 0: auto
};

/// The resolved configuration as ordered key/value pairs; the echo embedded
/// in every artifact. Excludes output_dir and workers, which cannot affect
/// any number.
std::vector<std::pair<std::string, std::string>> config_items(const RunConfig& config);
std::uint64_t config_hash(const RunConfig& config);

/// One pinned pass/fail assertion evaluated by a benchmark run.
struct Check {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
};

/// Ground-state convergence: descend from the low-mode seed and from h00,
/// write energy/residual histories, optionally refine over a tau schedule.
nlohmann::json run_ground_state_benchmark(RunConfig config);

/// Invariant preservation: per mass constraint c, compute the ground state,
/// evolve it in real time, write conservation/distance diagnostics, extract
/// the empirical period.
nlohmann::json run_invariants_benchmark(RunConfig config);

/// Cost-accuracy matrix over (order, tau) cells: max relative mass and
/// energy errors plus stepping CPU time, and the CPU-ratio table vs q = 2.
nlohmann::json run_cost_accuracy_benchmark(RunConfig config);

/// Aggregates every benchmark_*.json under output_dir into summary.json.
/// Throws if no benchmark artifact is present. The summary's "all_pass" is
/// the conjunction of every embedded check.
nlohmann::json emit_report(const std::filesystem::path& output_dir);

}  // namespace gpe::bench
