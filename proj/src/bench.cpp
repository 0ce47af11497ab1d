#include "gpe/bench.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <iostream>
#include <numbers>
#include <sstream>

#include "gpe/io.hpp"

namespace gpe::bench {

namespace {

using nlohmann::json;

// Reference values for the beta = 2, gamma = 1, c = 1 configuration on the
// truncation-16 basis (tau = 0.01, order 4 descent unless noted).
constexpr double kEnergyLowModeSeed = 1.14672998984857;    // within 1e-9
constexpr double kEnergyH00Seed = 1.146729989848536;       // within 1e-9
constexpr double kEnergyTauLimit = 1.146728491833;         // tau -> 0, within 5e-11
constexpr double kSeedAgreementTol = 1e-13;
struct PeriodRef {
  double c;
  double period;
};
constexpr PeriodRef kPeriodRefs[] = {{0.25, 5.834}, {1.0, 4.898}, {2.0, 4.144}};
constexpr double kPeriodTol = 5e-3;

std::string compact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  std::string s = buf;
  for (char& ch : s) {
    if (ch == '.') ch = 'p';
    if (ch == '-') ch = 'm';
  }
  return s;
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += format_full(v[i]);
  }
  return out;
}

std::string join_int(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

double thread_cpu_seconds() {
  timespec ts{};
  clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
  return double(ts.tv_sec) + 1e-9 * double(ts.tv_nsec);
}

json check_json(const Check& c) {
  return {{"name", c.name},   {"pass", c.pass},           {"value", c.value},
          {"expected", c.expected}, {"tolerance", c.tolerance}};
}

Check make_check(std::string name, double value, double expected, double tol) {
  return {std::move(name), std::abs(value - expected) <= tol, value, expected, tol};
}

void echo_config(CsvWriter& csv, const RunConfig& config) {
  for (const auto& [k, v] : config_items(config)) csv.comment(k, v);
}

std::string environment_note() {
  std::ostringstream os;
  os << "compiler " << __VERSION__ << "; Eigen " << EIGEN_WORLD_VERSION << "."
     << EIGEN_MAJOR_VERSION << "." << EIGEN_MINOR_VERSION << "; OpenMP " << _OPENMP;
  return os.str();
}

json base_artifact(const RunConfig& config) {
  json j;
  j["benchmark"] = config.benchmark;
  j["config_hash"] = config_hash(config);
  json cfg;
  for (const auto& [k, v] : config_items(config)) cfg[k] = v;
  j["config"] = cfg;
  j["environment"] = environment_note();
  return j;
}

void write_artifact(const RunConfig& config, const json& artifact) {
  std::ofstream out(config.output_dir / ("benchmark_" + config.benchmark + ".json"));
  out << artifact.dump(2) << "\n";
}

void write_history_csvs(const RunConfig& config, const std::string& tag, double tau,
                        const std::vector<ResidualRecord>& history) {
  CsvWriter full(config.output_dir / ("ground_state_history_" + tag + ".csv"));
  echo_config(full, config);
  full.header({"iteration", "sim_time", "residual", "H"});
  for (const auto& rec : history)
    full.row({std::to_string(rec.iteration), format_full(rec.iteration * tau),
              format_full(rec.residual), format_full(rec.energy)});

  CsvWriter h_view(config.output_dir / ("h_vs_time_" + tag + ".csv"));
  echo_config(h_view, config);
  h_view.header({"sim_time", "H"});
  CsvWriter r_view(config.output_dir / ("residual_vs_time_" + tag + ".csv"));
  echo_config(r_view, config);
  r_view.header({"sim_time", "residual"});
  for (const auto& rec : history) {
    h_view.row({format_full(rec.iteration * tau), format_full(rec.energy)});
    r_view.row({format_full(rec.iteration * tau), format_full(rec.residual)});
  }
}

void write_dynamics_csv(const RunConfig& config, const std::string& name,
                        const std::vector<DiagnosticsRecord>& records) {
  CsvWriter csv(config.output_dir / name);
  echo_config(csv, config);
  const bool rotating = !records.empty() && records.front().dist_rotating.has_value();
  std::vector<std::string> cols = {"t", "E_M", "E_H", "dist_plain"};
  if (rotating) cols.push_back("dist_rotating");
  csv.header(cols);
  for (const auto& rec : records) {
    std::vector<std::string> row = {format_full(rec.t), format_full(rec.mass_error),
                                    format_full(rec.energy_error), format_full(rec.dist_plain)};
    if (rotating) row.push_back(format_full(rec.dist_rotating.value_or(0.0)));
    csv.row(row);
  }
}

bool paper_point(const RunConfig& config) {
  return config.beta == 2.0 && config.gamma == 1.0 && config.truncation == 16;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> config_items(const RunConfig& config) {
  std::vector<std::pair<std::string, std::string>> items;
  items.emplace_back("benchmark", config.benchmark);
  items.emplace_back("beta", format_full(config.beta));
  items.emplace_back("gamma", format_full(config.gamma));
  items.emplace_back("truncation", std::to_string(config.truncation));
  items.emplace_back("orders", join_int(config.orders));
  items.emplace_back("taus", join(config.taus));
  items.emplace_back("c_values", join(config.c_values));
  items.emplace_back("final_time", format_full(config.final_time));
  items.emplace_back("seed", config.seed);
  items.emplace_back("refine_schedule", join(config.refine_schedule));
  items.emplace_back("cell_timeout", format_full(config.cell_timeout));
  items.emplace_back("repeats", std::to_string(config.repeats));
  items.emplace_back("record_every", std::to_string(config.record_every));
  return items;
}

std::uint64_t config_hash(const RunConfig& config) {
  std::string text;
  for (const auto& [k, v] : config_items(config)) {
    text += k;
    text += '=';
    text += v;
    text += '\n';
  }
  return fnv1a_hash(text);
}

// ---------------------------------------------------------------------------
// Benchmark: ground-state convergence
// ---------------------------------------------------------------------------

json run_ground_state_benchmark(RunConfig config) {
  config.benchmark = "ground_state";
  if (config.orders.empty()) config.orders = {4};
  if (config.taus.empty()) config.taus = {0.01};
  if (config.c_values.empty()) config.c_values = {1.0};
  if (config.final_time == 0.0) config.final_time = 30.0;
  std::filesystem::create_directories(config.output_dir);

  const SpectralBasis basis(build_rule(config.gamma, config.truncation));
  const ModelParams params{config.beta, config.gamma};
  GroundStateConfig gs;
  gs.mass = config.c_values.front();
  gs.tau = config.taus.front();
  gs.order = config.orders.front();
  gs.max_iters = static_cast<int>(std::ceil(config.final_time / gs.tau));
  // The reference protocol integrates the full horizon rather than stopping
  // at stagnation; the extra iterations push both seeds onto the same fixed
  // point to within the residual floor.
  gs.stagnation_tol = 0.0;
  gs.parallel_chains = config.workers > 1;

  json artifact = base_artifact(config);
  std::vector<Check> checks;
  const bool reference = paper_point(config) && gs.mass == 1.0 && gs.tau == 0.01 &&
                         gs.order == 4;

  GroundStateResult low_modes =
      descend(basis, params, gs, seed_low_modes(basis));
  write_history_csvs(config, "paper_seed_1", gs.tau, low_modes.residual_history);
  std::cout << "ground-state seed=paper_seed_1 H_min = " << format_full(low_modes.energy_min)
            << " (" << low_modes.iterations << " iterations)\n";

  GroundStateResult h00 = descend(basis, params, gs, seed_h00(basis));
  write_history_csvs(config, "h00", gs.tau, h00.residual_history);
  std::cout << "ground-state seed=h00 H_min = " << format_full(h00.energy_min) << " ("
            << h00.iterations << " iterations)\n";

  const double agreement = (phase_align(low_modes.state).values - phase_align(h00.state).values)
                               .cwiseAbs()
                               .maxCoeff();
  std::cout << "seed agreement (grid max norm): " << format_full(agreement) << "\n";

  artifact["H_min"] = {{"paper_seed_1", low_modes.energy_min}, {"h00", h00.energy_min}};
  artifact["iterations"] = {{"paper_seed_1", low_modes.iterations}, {"h00", h00.iterations}};
  artifact["mu_ch"] = h00.mu_ch;
  artifact["T_mu"] = h00.period;
  artifact["seed_agreement_inf_norm"] = agreement;

  if (reference) {
    checks.push_back(
        make_check("H_min_paper_seed_1", low_modes.energy_min, kEnergyLowModeSeed, 1e-9));
    checks.push_back(make_check("H_min_h00", h00.energy_min, kEnergyH00Seed, 1e-9));
    checks.push_back(make_check("seed_agreement", agreement, 0.0, kSeedAgreementTol));
  }

  if (!config.refine_schedule.empty()) {
    GroundStateResult refined =
        refine_tau(basis, params, gs, config.refine_schedule, h00.state);
    CsvWriter stages(config.output_dir / "refine_stages.csv");
    echo_config(stages, config);
    stages.header({"tau", "H"});
    for (const auto& [tau, energy] : refined.stage_energies)
      stages.row({format_full(tau), format_full(energy)});
    artifact["H_min"]["refined"] = refined.energy_min;
    std::cout << "ground-state refined H_min = " << format_full(refined.energy_min) << "\n";
    if (reference)
      checks.push_back(make_check("H_min_refined", refined.energy_min, kEnergyTauLimit, 5e-11));
  }

  json checks_json = json::array();
  for (const auto& c : checks) checks_json.push_back(check_json(c));
  artifact["checks"] = checks_json;
  write_artifact(config, artifact);
  return artifact;
}

// ---------------------------------------------------------------------------
// Benchmark: invariant preservation under time evolution
// ---------------------------------------------------------------------------

json run_invariants_benchmark(RunConfig config) {
  config.benchmark = "invariants";
  if (config.orders.empty()) config.orders = {2, 8};
  if (config.taus.empty()) config.taus = {1e-3};
  if (config.c_values.empty()) config.c_values = {0.25, 1.0, 2.0};
  std::filesystem::create_directories(config.output_dir);

  const SpectralBasis basis(build_rule(config.gamma, config.truncation));
  const ModelParams params{config.beta, config.gamma};
  const double tau = config.taus.front();
  const int base_order = config.orders.front();
  const bool reference =
      paper_point(config) && tau == 1e-3 && base_order == 2 && config.final_time == 0.0;

  json artifact = base_artifact(config);
  std::vector<Check> checks;
  json runs = json::array();

  // Conservation of the extra (higher-order) runs at c = 1, for the
  // improvement comparison against the base order.
  double base_max_mass = 0.0, base_max_energy = 0.0;

  for (const double c : config.c_values) {
    GroundStateConfig gs;
    gs.mass = c;
    gs.tau = 0.01;
    gs.order = 4;
    gs.parallel_chains = config.workers > 1;
    const GroundStateResult ground = descend(basis, params, gs, seed_h00(basis));
    const double period_predicted = ground.period;
    std::cout << "c = " << c << ": mu_ch = " << format_full(ground.mu_ch)
              << ", T_mu = " << format_full(period_predicted) << "\n";

    std::vector<int> orders_here = {base_order};
    if (c == 1.0)
      orders_here.insert(orders_here.end(), config.orders.begin() + 1, config.orders.end());

    for (const int q : orders_here) {
      EvolutionConfig evo;
      evo.tau = tau;
      evo.order = q;
      evo.record_every = config.record_every;
      evo.parallel_chains = config.workers > 1;
      evo.final_time = config.final_time != 0.0
                           ? config.final_time
                           : 3.0 * std::ceil(period_predicted) ;
      // Snap to a step multiple (covers >= 3 periods either way).
      evo.final_time = std::round(evo.final_time / tau) * tau;

      const EvolveResult evolved = evolve(basis, params, evo, ground.state, ground.mu_ch);
      const std::string name = "dynamics_c" + compact(c) + "_q" + std::to_string(q) + ".csv";
      write_dynamics_csv(config, name, evolved.records);

      double max_mass = 0.0, max_energy = 0.0;
      for (const auto& rec : evolved.records) {
        max_mass = std::max(max_mass, rec.mass_error);
        max_energy = std::max(max_energy, rec.energy_error);
      }

      json run;
      run["c"] = c;
      run["order"] = q;
      run["tau"] = tau;
      run["final_time"] = evo.final_time;
      run["mu_ch"] = ground.mu_ch;
      run["T_mu"] = period_predicted;
      run["H_min"] = ground.energy_min;
      run["max_E_M"] = max_mass;
      run["max_E_H"] = max_energy;
      run["csv"] = name;

      if (q == base_order) {
        const double measured = measure_period(evolved.records);
        run["measured_period"] = measured;
        run["fitted_frequency"] = 2.0 * std::numbers::pi / measured;
        std::cout << "c = " << c << ", q = " << q
                  << ": measured period = " << format_full(measured) << "\n";
        if (reference) {
          for (const auto& ref : kPeriodRefs)
            if (ref.c == c)
              checks.push_back(make_check("period_c" + compact(c), measured, ref.period,
                                          kPeriodTol));
          checks.push_back(make_check("period_vs_mu_c" + compact(c), measured,
                                      period_predicted, 2.0 * tau));
        }
        if (c == 1.0) {
          base_max_mass = max_mass;
          base_max_energy = max_energy;
        }
      } else if (c == 1.0 && reference) {
        Check mass_improved{"mass_conservation_q" + std::to_string(q) + "_improves",
                            max_mass < base_max_mass, max_mass, base_max_mass, 0.0};
        Check energy_improved{"energy_conservation_q" + std::to_string(q) + "_improves",
                              max_energy < base_max_energy, max_energy, base_max_energy, 0.0};
        checks.push_back(mass_improved);
        checks.push_back(energy_improved);
      }
      runs.push_back(run);
    }
  }

  artifact["runs"] = runs;
  json checks_json = json::array();
  for (const auto& c : checks) checks_json.push_back(check_json(c));
  artifact["checks"] = checks_json;
  write_artifact(config, artifact);
  return artifact;
}

// ---------------------------------------------------------------------------
// Benchmark: cost-accuracy trade-off
// ---------------------------------------------------------------------------

namespace {

struct CostCell {
  int order = 0;
  double tau = 0.0;
  double cpu_seconds = 0.0;  // median over repeats of the stepping time
  double max_mass_error = 0.0;
  double max_energy_error = 0.0;
  std::uint64_t flow_applications = 0;
  std::uint64_t expected_applications = 0;
  long long steps = 0;
  bool timed_out = false;
};

// Runs one (order, tau) cell: every step is diagnosed (relative mass and
// energy error against t = 0), but only the composite-step time enters
// cpu_seconds, so the ratio table measures the method, not the bookkeeping.
CostCell run_cost_cell(const SpectralBasis& basis, const ModelParams& params, int order,
                       double tau, double final_time, const GridField& psi0, int repeats,
                       double timeout_seconds) {
  CostCell cell;
  cell.order = order;
  cell.tau = tau;
  const SplittingScheme scheme = build_scheme(order);
  const SplitProblem problem{&basis, params, FlowRegime::Unitary};
  const long long n_steps = std::llround(final_time / tau);
  cell.steps = n_steps;
  cell.expected_applications =
      static_cast<std::uint64_t>(n_steps) * static_cast<std::uint64_t>(scheme.step_count);

  const SpectralField spec0 = forward(basis, psi0);
  const double mass0 = spec0.coeffs.norm();
  const double energy0 = hamiltonian(basis, psi0, params.beta);

  const auto wall_start = std::chrono::steady_clock::now();
  std::vector<double> cpu_times;
  for (int rep = 0; rep < std::max(1, repeats); ++rep) {
    const bool diagnose = rep == 0;
    GridField state = psi0;
    FlowStats stats;
    double cpu = 0.0;
    for (long long j = 1; j <= n_steps; ++j) {
      const double t0 = thread_cpu_seconds();
      state = composite_step(problem, scheme, tau, state, false, &stats);
      cpu += thread_cpu_seconds() - t0;
      if (diagnose) {
        const SpectralField spec = forward(basis, state);
        cell.max_mass_error =
            std::max(cell.max_mass_error, std::abs((spec.coeffs.norm() - mass0) / mass0));
        const double energy =
            (basis.eigenvalues().array() * spec.coeffs.array().abs2()).sum() +
            0.5 * params.beta * quartic_integral(basis, state);
        cell.max_energy_error =
            std::max(cell.max_energy_error, std::abs((energy - energy0) / energy0));
      }
      if (std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count() >
          timeout_seconds) {
        cell.timed_out = true;
        return cell;
      }
    }
    if (diagnose) cell.flow_applications = stats.total();
    cpu_times.push_back(cpu);
  }
  std::sort(cpu_times.begin(), cpu_times.end());
  cell.cpu_seconds = cpu_times[cpu_times.size() / 2];
  return cell;
}

}  // namespace

json run_cost_accuracy_benchmark(RunConfig config) {
  config.benchmark = "cost_accuracy";
  if (config.orders.empty()) config.orders = {2, 4, 6, 8, 10, 12, 14};
  if (config.taus.empty()) {
    config.taus.clear();
    for (int k = 0; k <= 9; ++k) config.taus.push_back(std::ldexp(1.0, -k));
  }
  if (config.final_time == 0.0) config.final_time = 30.0;
  if (config.seed.empty()) config.seed = "gaussian";
  std::filesystem::create_directories(config.output_dir);

  const SpectralBasis basis(build_rule(config.gamma, config.truncation));
  const ModelParams params{config.beta, config.gamma};
  const GridField psi0 = named_seed(basis, params, config.seed);

  const int n_orders = static_cast<int>(config.orders.size());
  const int n_taus = static_cast<int>(config.taus.size());
  std::vector<CostCell> cells(static_cast<std::size_t>(n_orders) * n_taus);

#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, config.workers))
  for (int idx = 0; idx < n_orders * n_taus; ++idx) {
    const int q = config.orders[idx / n_taus];
    const double tau = config.taus[idx % n_taus];
    cells[idx] = run_cost_cell(basis, params, q, tau, config.final_time, psi0, config.repeats,
                               config.cell_timeout);
  }

  CsvWriter csv(config.output_dir / "cost_accuracy.csv");
  echo_config(csv, config);
  csv.header({"q", "tau", "cpu_seconds", "max_E_M", "max_E_H"});
  for (const auto& cell : cells) {
    if (cell.timed_out) continue;
    csv.row({std::to_string(cell.order), format_full(cell.tau), format_full(cell.cpu_seconds),
             format_full(cell.max_mass_error), format_full(cell.max_energy_error)});
  }

  json artifact = base_artifact(config);
  std::vector<Check> checks;

  // Step-count law: flow applications per cell must equal (T/tau) q(q/2+1).
  bool counts_ok = true;
  for (const auto& cell : cells)
    if (!cell.timed_out && cell.flow_applications != cell.expected_applications)
      counts_ok = false;
  checks.push_back({"step_count_law", counts_ok, 0.0, 0.0, 0.0});

  // Mean CPU per order over the taus completed by every order.
  std::vector<bool> tau_complete(n_taus, true);
  for (int it = 0; it < n_taus; ++it)
    for (int io = 0; io < n_orders; ++io)
      if (cells[io * n_taus + it].timed_out) tau_complete[it] = false;
  json ratio_rows = json::array();
  double mean_q2 = 0.0;
  {
    CsvWriter ratios(config.output_dir / "cpu_ratio_table.csv");
    echo_config(ratios, config);
    ratios.header({"q", "mean_cpu_seconds", "observed_ratio", "theoretical_ratio"});
    std::vector<double> means(n_orders, 0.0);
    for (int io = 0; io < n_orders; ++io) {
      double total = 0.0;
      int n = 0;
      for (int it = 0; it < n_taus; ++it)
        if (tau_complete[it]) {
          total += cells[io * n_taus + it].cpu_seconds;
          ++n;
        }
      means[io] = n > 0 ? total / n : 0.0;
      if (config.orders[io] == 2) mean_q2 = means[io];
    }
    for (int io = 0; io < n_orders; ++io) {
      const int q = config.orders[io];
      const double observed = mean_q2 > 0.0 ? means[io] / mean_q2 : 0.0;
      const double theoretical = q * (q / 2 + 1) / 4.0;
      ratios.row({std::to_string(q), format_full(means[io]), format_full(observed),
                  format_full(theoretical)});
      ratio_rows.push_back({{"q", q},
                            {"mean_cpu_seconds", means[io]},
                            {"observed_ratio", observed},
                            {"theoretical_ratio", theoretical}});
      if (mean_q2 > 0.0 && q > 2) {
        const bool within = observed <= 2.0 * theoretical && observed >= theoretical / 2.0;
        checks.push_back({"cpu_ratio_q" + std::to_string(q), within, observed, theoretical,
                          theoretical});
      }
    }
  }

  json cell_rows = json::array();
  for (const auto& cell : cells) {
    json row = {{"q", cell.order},
                {"tau", cell.tau},
                {"status", cell.timed_out ? "timed_out" : "ok"}};
    if (!cell.timed_out) {
      row["cpu_seconds"] = cell.cpu_seconds;
      row["max_E_M"] = cell.max_mass_error;
      row["max_E_H"] = cell.max_energy_error;
      row["flow_applications"] = cell.flow_applications;
      row["steps"] = cell.steps;
    }
    cell_rows.push_back(row);
  }
  artifact["cells"] = cell_rows;
  artifact["cpu_ratios"] = ratio_rows;

  json checks_json = json::array();
  for (const auto& c : checks) checks_json.push_back(check_json(c));
  artifact["checks"] = checks_json;
  write_artifact(config, artifact);

  std::cout << "cost-accuracy: " << cells.size() << " cells ("
            << std::count_if(cells.begin(), cells.end(),
                             [](const CostCell& c) { return c.timed_out; })
            << " timed out)\n";
  return artifact;
}

// ---------------------------------------------------------------------------
// Report
// ---------------------------------------------------------------------------

json emit_report(const std::filesystem::path& output_dir) {
  json summary;
  summary["environment"] = environment_note();
  json benchmarks = json::object();
  bool all_pass = true;
  int n_checks = 0;

  std::vector<std::filesystem::path> files;
  if (std::filesystem::exists(output_dir))
    for (const auto& entry : std::filesystem::directory_iterator(output_dir)) {
      const std::string name = entry.path().filename().string();
      if (name.starts_with("benchmark_") && name.ends_with(".json"))
        files.push_back(entry.path());
    }
  std::sort(files.begin(), files.end());
  if (files.empty())
    throw std::runtime_error("emit_report: no benchmark artifacts in " + output_dir.string());

  for (const auto& path : files) {
    std::ifstream in(path);
    json artifact = json::parse(in);
    const std::string name = artifact.value("benchmark", path.stem().string());
    json entry;
    entry["config_hash"] = artifact.value("config_hash", 0);
    for (const char* key : {"H_min", "mu_ch", "T_mu", "seed_agreement_inf_norm", "runs",
                            "cpu_ratios"})
      if (artifact.contains(key)) entry[key] = artifact[key];
    if (artifact.contains("checks")) {
      entry["checks"] = artifact["checks"];
      for (const auto& check : artifact["checks"]) {
        ++n_checks;
        if (!check.value("pass", false)) all_pass = false;
      }
    }
    benchmarks[name] = entry;
  }
  summary["benchmarks"] = benchmarks;
  summary["checks_total"] = n_checks;
  summary["all_pass"] = all_pass;

  std::ofstream out(output_dir / "summary.json");
  out << summary.dump(2) << "\n";
  return summary;
}

}  // namespace gpe::bench
