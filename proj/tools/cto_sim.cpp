// Command-line front end: single runs, parameter sweeps and plot scripts.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cto/harness.hpp"

namespace {

std::vector<cto::ControllerKind> parse_controller_list(const std::vector<std::string>& names) {
  std::vector<cto::ControllerKind> out;
  for (const std::string& n : names) out.push_back(*cto::parse_controller(n));
  return out;
}

const std::vector<std::string> kControllerNames{"kmeans", "hc", "hc-h", "hc-hp"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cooperative target observation on planar graphs: simulator and benchmark harness"};
  app.require_subcommand(1);

  cto::SimConfig cfg;
  std::string algorithm = "hc-h";
  auto* simulate = app.add_subcommand("simulate", "Run one simulation and print rho");
  simulate->add_option("--algorithm", algorithm, "Observer controller")
      ->check(CLI::IsMember(kControllerNames))
      ->capture_default_str();
  simulate->add_option("--sr", cfg.sr, "Sensor range")->capture_default_str();
  simulate->add_option("--rv", cfg.rv, "Target speed, units per step")->capture_default_str();
  simulate->add_option("--ur", cfg.ur, "Trajectory update rate")->capture_default_str();
  simulate->add_option("--steps", cfg.steps, "Time-steps T")->capture_default_str();
  simulate->add_option("--observers", cfg.n_observers, "Observer count N")->capture_default_str();
  simulate->add_option("--targets", cfg.n_targets, "Target count M")->capture_default_str();
  simulate->add_option("--vertices", cfg.n_vertices, "Graph vertex count")->capture_default_str();
  simulate->add_option("--horizon", cfg.horizon, "Prediction horizon for hc-hp")->capture_default_str();
  simulate->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();

  std::string vary = "sr";
  cto::SweepSpec sweep_spec;
  std::vector<std::string> sweep_algorithms = kControllerNames;
  std::string out_dir = ".";
  auto* sweep = app.add_subcommand("sweep", "Sweep one parameter over its reference values and write CSVs");
  sweep->add_option("--vary", vary, "Parameter to vary")
      ->check(CLI::IsMember({"sr", "rv", "ur"}))
      ->capture_default_str();
  sweep->add_option("--runs", sweep_spec.runs_per_cell, "Runs per cell")->capture_default_str();
  sweep->add_option("--base-seed", sweep_spec.base_seed, "Seed of run 0; run r uses base + r")
      ->capture_default_str();
  sweep->add_option("--jobs", sweep_spec.jobs, "Parallel runs")->capture_default_str();
  sweep->add_option("--out-dir", out_dir, "Directory for the CSV files")->capture_default_str();
  sweep->add_option("--algorithms", sweep_algorithms, "Controllers to compare")
      ->check(CLI::IsMember(kControllerNames))
      ->delimiter(',');
  sweep->add_option("--steps", sweep_spec.base.steps, "Time-steps T")->capture_default_str();
  sweep->add_option("--horizon", sweep_spec.base.horizon, "Prediction horizon for hc-hp")->capture_default_str();
  sweep->add_flag("--wall-time", sweep_spec.record_wall_time, "Record per-run wall time (CSV no longer reproducible)");

  std::string summary_path;
  std::string plot_out;
  auto* plot = app.add_subcommand("plot", "Write a matplotlib script for a summary CSV");
  plot->add_option("--summary", summary_path, "Summary CSV written by sweep")->required();
  plot->add_option("--out", plot_out, "Script path (default: <summary>_plot.py)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*simulate) {
      cfg.controller = *cto::parse_controller(algorithm);
      const cto::RunResult r = cto::run_simulation(cfg);
      std::printf("algorithm=%s sr=%s rv=%s ur=%s seed=%llu rho=%s wall_time_s=%.3f\n", algorithm.c_str(),
                  cto::format_decimal(cfg.sr).c_str(), cto::format_decimal(cfg.rv).c_str(),
                  cto::format_decimal(cfg.ur).c_str(), static_cast<unsigned long long>(cfg.seed),
                  cto::format_decimal(r.rho).c_str(), r.wall_time_s);
    } else if (*sweep) {
      const cto::SweepParam param = *cto::parse_sweep_param(vary);
      sweep_spec.varied = param;
      sweep_spec.values = cto::reference_values(param);
      sweep_spec.controllers = parse_controller_list(sweep_algorithms);
      std::filesystem::create_directories(out_dir);
      const cto::SweepResult result = cto::run_sweep(sweep_spec);
      const cto::CsvPaths paths = cto::emit_csv(result, std::filesystem::path(out_dir) / ("sweep_" + vary));
      for (const cto::CellSummary& c : result.summaries) {
        std::printf("%-6s %s=%-8s m=%s sd=%s\n", std::string(cto::to_string(c.controller)).c_str(), vary.c_str(),
                    cto::format_decimal(c.value).c_str(), cto::format_decimal(c.m).c_str(),
                    cto::format_decimal(c.sd).c_str());
      }
      std::printf("wrote %s\nwrote %s\n", paths.runs.string().c_str(), paths.summary.string().c_str());
    } else if (*plot) {
      std::optional<std::filesystem::path> out;
      if (!plot_out.empty()) out = plot_out;
      const auto script = cto::emit_plot_script(summary_path, out);
      std::printf("wrote %s\n", script.string().c_str());
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
