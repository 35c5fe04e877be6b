#include "cto/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cto {

std::string_view to_string(SweepParam p) {
  switch (p) {
    case SweepParam::SR: return "sr";
    case SweepParam::RV: return "rv";
    case SweepParam::UR: return "ur";
  }
  return "unknown";
}

std::optional<SweepParam> parse_sweep_param(std::string_view name) {
  for (SweepParam p : {SweepParam::SR, SweepParam::RV, SweepParam::UR}) {
    if (name == to_string(p)) return p;
  }
  return std::nullopt;
}

std::vector<double> reference_values(SweepParam p) {
  switch (p) {
    case SweepParam::SR: return {5, 10, 15, 20, 25};
    case SweepParam::RV: return {0.9, 0.75, 0.5, 0.25, 0.1};
    case SweepParam::UR: return {1.0, 0.5, 0.25, 0.1, 0.05};
  }
  return {};
}

SweepSpec SweepSpec::reference(SweepParam varied) {
  SweepSpec spec;
  spec.varied = varied;
  spec.values = reference_values(varied);
  return spec;
}

SimConfig cell_config(const SweepSpec& spec, ControllerKind controller, double value, std::uint64_t seed) {
  SimConfig cfg = spec.base;
  cfg.controller = controller;
  cfg.seed = seed;
  switch (spec.varied) {
    case SweepParam::SR: cfg.sr = value; break;
    case SweepParam::RV: cfg.rv = value; break;
    case SweepParam::UR: cfg.ur = value; break;
  }
  return cfg;
}

SweepResult run_sweep(const SweepSpec& spec) {
  if (spec.values.empty() || spec.controllers.empty() || spec.runs_per_cell == 0) {
    throw std::invalid_argument("sweep needs at least one controller, value and run");
  }

  struct Task {
    ControllerKind controller;
    double value;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (ControllerKind c : spec.controllers) {
    for (double v : spec.values) {
      for (std::size_t r = 0; r < spec.runs_per_cell; ++r) tasks.push_back({c, v, spec.base_seed + r});
    }
  }

  std::vector<RunRecord> records(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& task = tasks[i];
      try {
        const SimConfig cfg = cell_config(spec, task.controller, task.value, task.seed);
        const RunResult run = run_simulation(cfg);
        records[i] = {task.controller, spec.varied, task.value, cfg.sr,
                      cfg.rv,          cfg.ur,      task.seed,  run.rho,
                      spec.record_wall_time ? run.wall_time_s : 0.0};
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const std::size_t jobs = std::clamp<std::size_t>(spec.jobs, 1, tasks.size());
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!errors[i]) continue;
    std::string detail = "unknown error";
    try {
      std::rethrow_exception(errors[i]);
    } catch (const std::exception& e) {
      detail = e.what();
    } catch (...) {
    }
    throw std::runtime_error("cell " + std::string(to_string(tasks[i].controller)) + " " +
                             std::string(to_string(spec.varied)) + "=" + format_decimal(tasks[i].value) +
                             ": run with seed " + std::to_string(tasks[i].seed) + " failed: " + detail);
  }

  SweepResult result;
  result.runs = std::move(records);
  result.summaries = summarize(result.runs);
  return result;
}

std::string format_decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

namespace {

double as_written(double v) { return std::strtod(format_decimal(v).c_str(), nullptr); }

}  // namespace

std::vector<CellSummary> summarize(const std::vector<RunRecord>& runs) {
  std::vector<CellSummary> out;
  std::size_t begin = 0;
  while (begin < runs.size()) {
    std::size_t end = begin + 1;
    while (end < runs.size() && runs[end].controller == runs[begin].controller &&
           runs[end].varied == runs[begin].varied && runs[end].value == runs[begin].value) {
      ++end;
    }
    const double n = static_cast<double>(end - begin);
    double sum = 0.0;
    for (std::size_t i = begin; i < end; ++i) sum += as_written(runs[i].rho);
    const double mean = sum / n;
    double ss = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      const double d = as_written(runs[i].rho) - mean;
      ss += d * d;
    }
    const double sd = end - begin > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
    out.push_back({runs[begin].controller, runs[begin].varied, runs[begin].value, mean, sd, end - begin});
    begin = end;
  }
  return out;
}

namespace {

constexpr std::string_view kRunsHeader = "controller,varied_param,value,sr,rv,ur,seed,rho,wall_time_s";
constexpr std::string_view kSummaryHeader = "controller,varied_param,value,m,sd,runs";

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open for writing: " + path.string());
  f << contents;
  f.flush();
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

std::vector<std::vector<std::string>> read_rows(const std::filesystem::path& path, std::string_view header) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for reading: " + path.string());
  std::string line;
  if (!std::getline(f, line) || line != header) throw std::runtime_error("unexpected header in " + path.string());
  std::vector<std::vector<std::string>> rows;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    rows.push_back(std::move(fields));
  }
  return rows;
}

ControllerKind controller_field(const std::string& s) {
  const auto k = parse_controller(s);
  if (!k) throw std::runtime_error("unknown controller in CSV: " + s);
  return *k;
}

SweepParam param_field(const std::string& s) {
  const auto p = parse_sweep_param(s);
  if (!p) throw std::runtime_error("unknown varied parameter in CSV: " + s);
  return *p;
}

}  // namespace

CsvPaths emit_csv(const SweepResult& results, const std::filesystem::path& stem) {
  if (results.runs.empty() || results.summaries.empty()) throw std::invalid_argument("no results to write");
  CsvPaths paths{stem.string() + "_runs.csv", stem.string() + "_summary.csv"};

  std::string runs(kRunsHeader);
  runs += '\n';
  for (const RunRecord& r : results.runs) {
    runs += std::string(to_string(r.controller)) + ',' + std::string(to_string(r.varied)) + ',' +
            format_decimal(r.value) + ',' + format_decimal(r.sr) + ',' + format_decimal(r.rv) + ',' +
            format_decimal(r.ur) + ',' + std::to_string(r.seed) + ',' + format_decimal(r.rho) + ',' +
            format_decimal(r.wall_time_s) + '\n';
  }
  std::string summary(kSummaryHeader);
  summary += '\n';
  for (const CellSummary& c : results.summaries) {
    summary += std::string(to_string(c.controller)) + ',' + std::string(to_string(c.varied)) + ',' +
               format_decimal(c.value) + ',' + format_decimal(c.m) + ',' + format_decimal(c.sd) + ',' +
               std::to_string(c.runs) + '\n';
  }

  write_file(paths.runs, runs);
  write_file(paths.summary, summary);
  return paths;
}

std::vector<RunRecord> read_runs_csv(const std::filesystem::path& path) {
  std::vector<RunRecord> out;
  for (const auto& f : read_rows(path, kRunsHeader)) {
    if (f.size() != 9) throw std::runtime_error("malformed row in " + path.string());
    out.push_back({controller_field(f[0]), param_field(f[1]), std::stod(f[2]), std::stod(f[3]), std::stod(f[4]),
                   std::stod(f[5]), std::stoull(f[6]), std::stod(f[7]), std::stod(f[8])});
  }
  return out;
}

std::vector<CellSummary> read_summary_csv(const std::filesystem::path& path) {
  std::vector<CellSummary> out;
  for (const auto& f : read_rows(path, kSummaryHeader)) {
    if (f.size() != 6) throw std::runtime_error("malformed row in " + path.string());
    out.push_back({controller_field(f[0]), param_field(f[1]), std::stod(f[2]), std::stod(f[3]), std::stod(f[4]),
                   static_cast<std::size_t>(std::stoull(f[5]))});
  }
  return out;
}

std::filesystem::path emit_plot_script(const std::filesystem::path& summary_csv,
                                       std::optional<std::filesystem::path> out) {
  if (!std::filesystem::exists(summary_csv)) throw std::runtime_error("summary not found: " + summary_csv.string());
  const std::vector<CellSummary> cells = read_summary_csv(summary_csv);
  if (cells.empty()) throw std::runtime_error("summary has no rows: " + summary_csv.string());

  std::filesystem::path script = out.value_or(summary_csv.parent_path() / (summary_csv.stem().string() + "_plot.py"));

  // param -> controller -> [(value, m, sd)], keeping first-seen order.
  std::vector<std::string> params;
  std::map<std::string, std::vector<std::string>> controllers;
  std::map<std::pair<std::string, std::string>, std::vector<const CellSummary*>> series;
  for (const CellSummary& c : cells) {
    const std::string p(to_string(c.varied));
    const std::string k(to_string(c.controller));
    if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(p);
    auto& ks = controllers[p];
    if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
    series[{p, k}].push_back(&c);
  }

  std::string py;
  py += "#!/usr/bin/env python3\n";
  py += "\"\"\"Mean rho per controller against the swept parameter.\n\n";
  py += "Generated from " + summary_csv.filename().string() + ". Requires matplotlib.\n\"\"\"\n";
  py += "import os\nimport sys\n\n";
  py += "DATA = {\n";
  for (const std::string& p : params) {
    py += "    \"" + p + "\": {\n";
    for (const std::string& k : controllers[p]) {
      py += "        \"" + k + "\": [\n";
      for (const CellSummary* c : series[{p, k}]) {
        py += "            (" + format_decimal(c->value) + ", " + format_decimal(c->m) + ", " + format_decimal(c->sd) +
              "),\n";
      }
      py += "        ],\n";
    }
    py += "    },\n";
  }
  py += "}\n\n";
  py += "LABELS = {\"sr\": \"sensor range (SR)\", \"rv\": \"target speed (RV)\", \"ur\": \"update rate (UR)\"}\n\n";
  py += "\n"
        "def main():\n"
        "    try:\n"
        "        import matplotlib\n"
        "        matplotlib.use(\"Agg\")\n"
        "        import matplotlib.pyplot as plt\n"
        "    except ImportError:\n"
        "        sys.exit(\"matplotlib is required to render the charts\")\n"
        "    out_dir = os.path.dirname(os.path.abspath(__file__))\n"
        "    for param, by_controller in DATA.items():\n"
        "        fig, ax = plt.subplots(figsize=(6, 4))\n"
        "        for controller, points in by_controller.items():\n"
        "            points = sorted(points)\n"
        "            xs = [p[0] for p in points]\n"
        "            ms = [p[1] for p in points]\n"
        "            sds = [p[2] for p in points]\n"
        "            ax.errorbar(xs, ms, yerr=sds, marker=\"o\", capsize=3, label=controller)\n"
        "        ax.set_xlabel(LABELS.get(param, param))\n"
        "        ax.set_ylabel(\"mean rho\")\n"
        "        ax.set_ylim(0.0, 1.05)\n"
        "        ax.grid(True, alpha=0.3)\n"
        "        ax.legend()\n"
        "        fig.tight_layout()\n"
        "        path = os.path.join(out_dir, \"rho_vs_\" + param + \".png\")\n"
        "        fig.savefig(path, dpi=120)\n"
        "        plt.close(fig)\n"
        "        print(path)\n"
        "\n\n"
        "if __name__ == \"__main__\":\n"
        "    main()\n";

  write_file(script, py);
  return script;
}

}  // namespace cto
