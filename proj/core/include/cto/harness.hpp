#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cto/engine.hpp"

namespace cto {

enum class SweepParam { SR, RV, UR };

std::string_view to_string(SweepParam p);
std::optional<SweepParam> parse_sweep_param(std::string_view name);

/// Reference value sets, in table column order.
std::vector<double> reference_values(SweepParam p);

struct SweepSpec {
  SweepParam varied = SweepParam::SR;
  std::vector<double> values;
  std::vector<ControllerKind> controllers{ControllerKind::KMeans, ControllerKind::HC, ControllerKind::HCH,
                                          ControllerKind::HCHP};
  std::size_t runs_per_cell = 20;
  std::uint64_t base_seed = 1;
  /// Everything not varied (sr/rv/ur medians, arena, counts, horizon).
  SimConfig base;
  std::size_t jobs = 1;
  /// When false the wall_time_s column is written as zero, keeping CSVs byte-reproducible.
  bool record_wall_time = false;

  /// Spec for one parameter with the reference values and medians.
  static SweepSpec reference(SweepParam varied);
};

struct RunRecord {
  ControllerKind controller = ControllerKind::HCH;
  SweepParam varied = SweepParam::SR;
  double value = 0.0;
  double sr = 0.0;
  double rv = 0.0;
  double ur = 0.0;
  std::uint64_t seed = 0;
  double rho = 0.0;
  double wall_time_s = 0.0;
};

struct CellSummary {
  ControllerKind controller = ControllerKind::HCH;
  SweepParam varied = SweepParam::SR;
  double value = 0.0;
  double m = 0.0;
  double sd = 0.0;  // sample (n - 1) standard deviation
  std::size_t runs = 0;
};

struct SweepResult {
  std::vector<RunRecord> runs;         // ordered by (controller, value, seed)
  std::vector<CellSummary> summaries;  // ordered by (controller, value)
};

/// Config of one run of a sweep cell.
SimConfig cell_config(const SweepSpec& spec, ControllerKind controller, double value, std::uint64_t seed);

/// Runs every (controller, value) cell with seeds base_seed + r, shared across
/// controllers. A failing run aborts with a diagnostic naming its seed.
SweepResult run_sweep(const SweepSpec& spec);

/// Groups consecutive records by (controller, varied, value) and aggregates
/// rho as it appears in the CSV, so re-aggregating a parsed file is exact.
std::vector<CellSummary> summarize(const std::vector<RunRecord>& runs);

/// Fixed six-decimal rendering used for every numeric CSV field.
std::string format_decimal(double v);

struct CsvPaths {
  std::filesystem::path runs;
  std::filesystem::path summary;
};

/// Writes `<stem>_runs.csv` and `<stem>_summary.csv`. Throws
/// std::invalid_argument on empty results (nothing written) and
/// std::runtime_error naming the path when a file cannot be written.
CsvPaths emit_csv(const SweepResult& results, const std::filesystem::path& stem);

std::vector<RunRecord> read_runs_csv(const std::filesystem::path& path);
std::vector<CellSummary> read_summary_csv(const std::filesystem::path& path);

/// Writes a standalone matplotlib script with the summary data embedded:
/// one chart per varied parameter, one series per controller. Defaults to
/// `<summary stem>_plot.py` beside the summary. Returns the script path.
std::filesystem::path emit_plot_script(const std::filesystem::path& summary_csv,
                                       std::optional<std::filesystem::path> out = std::nullopt);

}  // namespace cto
