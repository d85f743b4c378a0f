#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "kb/csv.hpp"
#include "kb/exact.hpp"
#include "kb/fv.hpp"
#include "kb/solver.hpp"
#include "kb/verify.hpp"

namespace fs = std::filesystem;
using namespace kb;

namespace {

EquilibriumModel parse_scheme(const std::string& name, double alpha, double c0) {
  if (name == "centered-d1q3") return CenteredD1Q3{alpha};
  if (name == "upwind-d1q3") return UpwindD1Q3{};
  if (name == "centered-d1q2") return CenteredD1Q2{};
  if (name == "acoustic-d1q3") return AcousticD1Q3{c0};
  throw std::invalid_argument("--scheme: unknown scheme '" + name +
                              "' (expected centered-d1q3, upwind-d1q3, centered-d1q2 or "
                              "acoustic-d1q3)");
}

struct PulseFlags {
  double center = 0.5;
  double width = 0.05;
  double amplitude = 1.0;
};

InitialCondition parse_ic(const std::string& name, const PulseFlags& pulse) {
  if (name == "converging") return ConvergingShock{};
  if (name == "riemann-shock") return RiemannShock{};
  if (name == "riemann-rarefaction") return RiemannRarefaction{};
  if (name == "gaussian-pulse") return GaussianPulse{pulse.center, pulse.width, pulse.amplitude};
  throw std::invalid_argument("--ic: unknown initial condition '" + name +
                              "' (expected converging, riemann-shock, riemann-rarefaction or "
                              "gaussian-pulse)");
}

struct GridFlags {
  std::optional<int> cells;
  std::optional<double> xmin;
  std::optional<double> xmax;
};

Grid resolve_grid(const InitialCondition& ic, const GridFlags& flags) {
  Grid grid = default_grid(ic);
  if (flags.cells) grid.n_cells = *flags.cells;
  if (flags.xmin) grid.x_min = *flags.xmin;
  if (flags.xmax) grid.x_max = *flags.xmax;
  return grid;
}

int sweep_threads() {
  const char* env = std::getenv("KB_THREADS");
  if (env == nullptr) return 0;
  try {
    return std::max(0, std::stoi(env));
  } catch (const std::exception&) {
    return 0;
  }
}

double nan_value() { return std::nan(""); }

struct RunArtifacts {
  bool diverged = false;
  double l1 = std::nan("");
  ShockMetrics metrics;
  double speed = std::nan("");
};

// Shared by `run` and `sweep`: derives the error and shock numbers from a
// finished report.
RunArtifacts analyze(const RunReport& report, const InitialCondition& ic) {
  RunArtifacts out;
  out.diverged = report.diverged;
  if (report.diverged) return out;

  const Snapshot& last = report.snapshots.back();
  if (has_exact_solution(ic)) {
    out.l1 = l1_error(last.u, ic, last.time, report.config.grid);
  }
  if (!is_acoustic_ic(ic)) {
    const double uL = boundary_u_left(ic, report.config.grid);
    const double uR = boundary_u_right(ic, report.config.grid);
    out.metrics = shock_metrics(last.u, report.config.grid, uL, uR);
    std::vector<double> ts, xs;
    for (const Snapshot& snap : report.snapshots) {
      const ShockMetrics m = shock_metrics(snap.u, report.config.grid, uL, uR);
      if (m.found) {
        ts.push_back(snap.time);
        xs.push_back(m.position);
      }
    }
    if (ts.size() >= 2) out.speed = least_squares_slope(ts, xs);
  }
  return out;
}

int cmd_run(const SchemeConfig& config, const InitialCondition& ic, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  const RunReport report = run(config, ic);

  for (const Snapshot& snap : report.snapshots) {
    write_snapshot_csv(out_dir / ("snap_" + std::to_string(snap.step) + ".csv"), snap);
  }
  write_entropy_csv(out_dir / "entropy.csv", report.entropy);

  const RunArtifacts a = analyze(report, ic);
  std::cout << "scheme=" << model_name(config.model) << " ic=" << ic_name(ic)
            << " steps=" << report.steps_completed << " t=" << report.final_state.time
            << " wall=" << report.wall_seconds << "s\n";
  if (report.diverged) {
    std::cout << "diverged at t=" << report.divergence_time << " (partial output written)\n";
    return 2;
  }
  if (std::isfinite(a.l1)) std::cout << "l1_error=" << format_double(a.l1) << "\n";
  if (a.metrics.found) {
    std::cout << "shock position=" << a.metrics.position << " width=" << a.metrics.width_cells
              << " overshoot=" << a.metrics.overshoot << " undershoot=" << a.metrics.undershoot
              << "\n";
  }
  return 0;
}

int cmd_sweep(const std::string& scheme, const InitialCondition& ic,
              std::vector<double> alphas, std::vector<double> lambdas,
              std::vector<double> svalues, double alpha_default, double c0, double s2_default,
              double s3_default, long steps, long snapshot_every, const GridFlags& grid_flags,
              const fs::path& out_dir) {
  const bool has_alpha = scheme == "centered-d1q3";
  if (!alphas.empty() && !has_alpha) {
    throw std::invalid_argument("--alphas: only applies to centered-d1q3");
  }
  if (alphas.empty()) alphas = {has_alpha ? alpha_default : nan_value()};
  if (lambdas.empty()) lambdas = {3.0};
  std::sort(alphas.begin(), alphas.end());
  std::sort(lambdas.begin(), lambdas.end());
  std::sort(svalues.begin(), svalues.end());

  struct Combo {
    double alpha, lambda, s2, s3;
  };
  std::vector<Combo> combos;
  for (const double a : alphas) {
    for (const double l : lambdas) {
      if (svalues.empty()) {
        combos.push_back({a, l, s2_default, s3_default});
      } else {
        for (const double s : svalues) combos.push_back({a, l, s, s});
      }
    }
  }
  if (combos.empty()) throw std::invalid_argument("sweep: empty parameter range");

  std::vector<SweepRow> rows(combos.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    for (std::size_t k = next.fetch_add(1); k < combos.size(); k = next.fetch_add(1)) {
      const Combo& c = combos[k];
      SchemeConfig config;
      config.model = parse_scheme(scheme, std::isnan(c.alpha) ? alpha_default : c.alpha, c0);
      config.lambda = c.lambda;
      config.s2 = c.s2;
      config.s3 = c.s3;
      config.grid = resolve_grid(ic, grid_flags);
      config.steps = steps;
      config.snapshot_every = snapshot_every;
      config.validate();
      const RunReport report = run(config, ic);
      const RunArtifacts a = analyze(report, ic);
      SweepRow row;
      row.scheme = scheme;
      row.alpha = c.alpha;
      row.lambda = c.lambda;
      row.s2 = c.s2;
      row.s3 = c.s3;
      row.diverged = report.diverged;
      row.l1_error = a.l1;
      if (!report.diverged && a.metrics.found) {
        row.shock_width = a.metrics.width_cells;
        row.shock_speed = a.speed;
        row.overshoot = a.metrics.overshoot;
      } else {
        row.shock_speed = nan_value();
        row.overshoot = nan_value();
      }
      rows[k] = std::move(row);
    }
  };

  const int threads = std::min<int>(sweep_threads(), static_cast<int>(combos.size()));
  if (threads > 1) {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  } else {
    worker();
  }

  fs::create_directories(out_dir);
  write_sweep_csv(out_dir / "sweep.csv", rows);
  std::cout << "wrote " << rows.size() << " rows to " << (out_dir / "sweep.csv").string()
            << "\n";
  return 0;
}

int cmd_verify(const std::vector<std::string>& suites, double perturb_dual) {
  VerifyOptions opts;
  opts.perturb_dual = perturb_dual;
  const std::vector<PropertyResult> results = run_verify_suites(suites, opts);
  std::vector<std::string> failing;
  for (const auto& r : results) {
    if (r.pass) {
      std::cout << "PASS " << r.suite << "/" << r.name << "\n";
    } else {
      std::cout << "FAIL " << r.suite << "/" << r.name << ": " << r.detail << "\n";
      failing.push_back(r.suite + "/" + r.name);
    }
  }
  std::cout << results.size() - failing.size() << "/" << results.size()
            << " properties passed\n";
  if (!failing.empty()) {
    std::cerr << "failing properties:\n";
    for (const auto& name : failing) std::cerr << "  " << name << "\n";
    return 3;
  }
  return 0;
}

int cmd_compare(const SchemeConfig& config, const InitialCondition& ic, long steps,
                const fs::path& out_dir) {
  if (config.s2 != 1.0 || config.s3 != 1.0) {
    throw std::invalid_argument(
        "--s2/--s3: the finite volume comparison is defined at s2 = s3 = 1 only; away from "
        "unit relaxation the scheme is not a flux-form finite volume method");
  }
  const bool upwind = std::holds_alternative<UpwindD1Q3>(config.model);
  const EquilibriumModel model = config.model;
  const double lambda = config.lambda;
  const NumericalFlux flux =
      upwind ? NumericalFlux([](double a, double b) { return engquist_osher_flux(a, b); })
             : NumericalFlux([model, lambda](double a, double b) {
                 return flux_split(a, model, lambda).plus + flux_split(b, model, lambda).minus;
               });

  State lbm = init_state(ic, config);
  std::vector<double> u_fv(static_cast<std::size_t>(config.grid.n_cells));
  for (int i = 0; i < config.grid.n_cells; ++i) {
    u_fv[static_cast<std::size_t>(i)] = initial_u_at_cell(ic, config.grid, i);
  }
  const double uL = boundary_u_left(ic, config.grid);
  const double uR = boundary_u_right(ic, config.grid);

  std::vector<CompareRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  double overall = 0.0;
  for (long k = 1; k <= steps; ++k) {
    step(lbm, config);
    fv_step(u_fv, flux, uL, uR, config.grid.dx(), config.dt());
    double dev = 0.0;
    for (int i = 0; i < config.grid.n_cells; ++i) {
      dev = std::max(dev, std::abs(lbm.conserved(i) - u_fv[static_cast<std::size_t>(i)]));
    }
    rows.push_back({k, dev});
    overall = std::max(overall, dev);
    if (lbm.diverged) break;
  }

  fs::create_directories(out_dir);
  write_compare_csv(out_dir / "compare.csv", rows);
  std::cout << "reference=" << (upwind ? "engquist-osher" : "flux-splitting")
            << " max_deviation=" << format_double(overall) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1-D lattice Boltzmann solver for the Burgers equation and linear acoustics"};
  app.require_subcommand(1);

  std::string scheme = "centered-d1q3";
  std::string ic_flag = "converging";
  double alpha = 0.5;
  double c0 = 1.0;
  double lambda = 3.0;
  double s2 = 1.7;
  double s3 = 1.7;
  long steps = 100;
  long snapshot_every = 10;
  std::string out_dir;
  PulseFlags pulse;
  GridFlags grid_flags;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--scheme", scheme,
                    "centered-d1q3 | upwind-d1q3 | centered-d1q2 | acoustic-d1q3")
        ->required();
    cmd->add_option("--ic", ic_flag,
                    "converging | riemann-shock | riemann-rarefaction | gaussian-pulse")
        ->required();
    cmd->add_option("--alpha", alpha, "Rest-slot weight of centered-d1q3 (0 < alpha < 1)");
    cmd->add_option("--c0", c0, "Sound speed of acoustic-d1q3");
    cmd->add_option("--lambda", lambda, "Lattice speed dx/dt");
    cmd->add_option("--s2", s2, "Relaxation rate of the flux moment");
    cmd->add_option("--s3", s3, "Relaxation rate of the energy-like moment");
    cmd->add_option("--steps", steps, "Number of time steps");
    cmd->add_option("--snapshot-every", snapshot_every, "Snapshot cadence in steps");
    cmd->add_option("--cells", grid_flags.cells, "Number of interior cells (default per IC)");
    cmd->add_option("--xmin", grid_flags.xmin, "Left domain edge (default per IC)");
    cmd->add_option("--xmax", grid_flags.xmax, "Right domain edge (default per IC)");
    cmd->add_option("--pulse-center", pulse.center, "Gaussian pulse center");
    cmd->add_option("--pulse-width", pulse.width, "Gaussian pulse width");
    cmd->add_option("--pulse-amplitude", pulse.amplitude, "Gaussian pulse amplitude");
  };

  CLI::App* run_cmd = app.add_subcommand("run", "Run one experiment and write CSV output");
  add_common(run_cmd);
  run_cmd->add_option("--out", out_dir, "Output directory")->required();

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Run a parameter sweep and write a summary CSV");
  std::vector<double> alphas, lambdas, svalues;
  add_common(sweep_cmd);
  sweep_cmd->add_option("--alphas", alphas, "Comma-separated alpha values (centered-d1q3)")
      ->delimiter(',');
  sweep_cmd->add_option("--lambdas", lambdas, "Comma-separated lattice speeds")->delimiter(',');
  sweep_cmd->add_option("--svalues", svalues, "Comma-separated relaxation rates (s2 = s3 = s)")
      ->delimiter(',');
  sweep_cmd->add_option("--out", out_dir, "Output directory")->required();

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the bundled property suites (exit 3 on failure)");
  std::vector<std::string> suites;
  double perturb_dual = 0.0;
  verify_cmd->add_option("--suite", suites,
                         "Restrict to one or more suites: dual-identity, legendre-oracle, "
                         "fv-equivalence, h-theorem");
  verify_cmd
      ->add_option("--perturb-dual", perturb_dual,
                   "Test hook: offset h+* inside the dual-identity suite")
      ->group("");  // hidden

  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "Run the lattice scheme and its finite volume twin side by side (s2 = s3 = 1)");
  add_common(compare_cmd);
  compare_cmd->add_option("--out", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(suites, perturb_dual);

    if (compare_cmd->parsed() && compare_cmd->count("--s2") == 0 &&
        compare_cmd->count("--s3") == 0) {
      s2 = s3 = 1.0;  // compare defaults to the only admissible rates
    }

    const InitialCondition ic = parse_ic(ic_flag, pulse);
    SchemeConfig config;
    config.model = parse_scheme(scheme, alpha, c0);
    config.lambda = lambda;
    config.s2 = s2;
    config.s3 = s3;
    config.grid = resolve_grid(ic, grid_flags);
    config.steps = steps;
    config.snapshot_every = snapshot_every;
    config.validate();

    if (run_cmd->parsed()) return cmd_run(config, ic, out_dir);
    if (compare_cmd->parsed()) return cmd_compare(config, ic, steps, out_dir);
    return cmd_sweep(scheme, ic, alphas, lambdas, svalues, alpha, c0, s2, s3, steps,
                     snapshot_every, grid_flags, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
