#pragma once

// Command implementations behind the pfmon verbs. Kept as plain functions
// over streams so the test suites can drive them without spawning the
// binary.
//
// Exit codes: 0 success, 2 configuration error (unreadable/ill-formed
// files, bad flags), 3 validation failure (a profile or geometry invariant
// is violated), 4 runtime error while cycling.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "parafuzzy/config.hpp"
#include "parafuzzy/report.hpp"
#include "parafuzzy/scheduler.hpp"

namespace parafuzzy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitValidationFailure = 3;
inline constexpr int kExitRuntimeError = 4;

struct RunOverrides {
  std::optional<std::int64_t> cycles;
  std::optional<int> cycle_seconds;
  std::optional<std::string> format;
  std::optional<std::string> output;
  bool realtime = false;
};

// Checks every profile and the engine geometry, printing one line per
// violation and the effective profiles when verbose.
inline int cmd_validate(const std::string& config_path, std::ostream& out,
                        std::ostream& err, bool print_effective = false) {
  LoadedRun run;
  try {
    run = load_run(config_path);
  } catch (const std::exception& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }

  std::vector<Diagnostic> diags = collect_diagnostics(run);
  try {
    ParaFuzzyEngine engine(run.geometry);
    (void)engine;
  } catch (const std::exception& e) {
    diags.push_back(Diagnostic{"geometry", e.what()});
  }

  for (const Diagnostic& d : diags)
    out << d.location << ": " << d.message << '\n';
  if (print_effective)
    for (const EquipmentProfile& p : run.profiles)
      out << format_profile(p) << '\n';
  if (diags.empty()) {
    out << "ok: " << run.profiles.size() << " profile(s), geometry valid\n";
    return kExitOk;
  }
  return kExitValidationFailure;
}

namespace detail {

inline std::vector<WantedPair> wanted_for(
    const LoadedRun& run, const std::vector<std::string>& only) {
  std::vector<WantedPair> wanted;
  for (const std::string& id : run.config.subsystems) {
    if (!only.empty() &&
        std::find(only.begin(), only.end(), id) == only.end())
      continue;
    const EquipmentProfile& p = run.profile(id);
    for (const VariableSpec& v : p.variables)
      wanted.push_back(WantedPair{id, v.name});
  }
  return wanted;
}

}  // namespace detail

// Executes the configured cycles and renders reports to `out`.
inline int run_reports(const LoadedRun& run, const RunOverrides& ov,
                       std::ostream& out, std::ostream& err) {
  try {
    ParaFuzzyEngine engine(run.geometry);

    std::vector<std::unique_ptr<TelemetrySource>> sources;
    std::vector<ScheduledSource> scheduled;
    std::int64_t replay_end = 1;
    for (const ConfiguredSource& cs : run.config.sources) {
      sources.push_back(make_source(cs.spec, run.profiles));
      if (const auto* replay =
              dynamic_cast<const ReplaySource*>(sources.back().get()))
        replay_end = std::max(replay_end, replay->max_cycle());
      scheduled.push_back(ScheduledSource{
          sources.back().get(), detail::wanted_for(run, cs.equipment)});
    }
    if (scheduled.empty()) {
      err << "runtime error: no telemetry sources configured\n";
      return kExitRuntimeError;
    }

    std::vector<const EquipmentProfile*> subsystems;
    for (const std::string& id : run.config.subsystems)
      subsystems.push_back(&run.profile(id));

    SchedulerOptions opts;
    opts.cycle_seconds = ov.cycle_seconds.value_or(run.config.cycle_seconds);
    opts.cycles = ov.cycles.value_or(run.config.cycles);
    opts.pace_realtime = ov.realtime;
    opts.log = [&err](const std::string& m) { err << m << '\n'; };

    const std::string format = ov.format.value_or(run.config.format);
    if (format != "table" && format != "csv" && format != "json") {
      err << "config error: unknown format '" << format << "'\n";
      return kExitConfigError;
    }

    nlohmann::ordered_json json_reports = nlohmann::ordered_json::array();
    bool wrote_header = false;
    ReportSink sink = [&](const SubsystemReport& rep) {
      if (format == "csv") {
        if (!wrote_header) {
          write_report_csv_header(out);
          wrote_header = true;
        }
        write_report_csv(out, rep);
      } else if (format == "json") {
        json_reports.push_back(report_to_json(rep));
      } else {
        write_report_table(out, rep);
      }
    };

    Scheduler scheduler(std::move(subsystems), std::move(scheduled), engine,
                        opts);
    scheduler.set_exhausted_after(replay_end);
    scheduler.run(sink);

    if (format == "json") out << json_reports.dump(2) << '\n';
    if (format == "csv" && !wrote_header) write_report_csv_header(out);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "runtime error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
}

inline int cmd_run(const std::string& config_path, const RunOverrides& ov,
                   std::ostream& out, std::ostream& err) {
  LoadedRun run;
  try {
    run = load_run(config_path);
  } catch (const std::exception& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }
  {
    const std::vector<Diagnostic> diags = collect_diagnostics(run);
    if (!diags.empty()) {
      for (const Diagnostic& d : diags)
        err << d.location << ": " << d.message << '\n';
      return kExitValidationFailure;
    }
  }

  const std::string output = ov.output.value_or(run.config.output);
  if (output == "-") return run_reports(run, ov, out, err);
  std::ofstream file(output, std::ios::binary);
  if (!file) {
    err << "config error: cannot write output file '" << output << "'\n";
    return kExitConfigError;
  }
  return run_reports(run, ov, file, err);
}

struct SweepOptions {
  double step = 0.05;
  bool skip_centerlines = false;
  std::optional<std::string> geometry_file;
  std::string output = "-";
};

inline int cmd_sweep(const SweepOptions& opts, std::ostream& out,
                     std::ostream& err) {
  try {
    const EngineGeometry geometry = opts.geometry_file
                                        ? load_geometry(*opts.geometry_file)
                                        : default_geometry();
    ParaFuzzyEngine engine(geometry);
    const SweepGrid grid = opts.skip_centerlines
                               ? SweepGrid::centerline_free()
                               : SweepGrid::uniform(opts.step);
    const std::vector<SweepRecord> records = engine.lattice_sweep(grid);
    if (opts.output == "-") {
      write_sweep_csv(out, records);
      return kExitOk;
    }
    std::ofstream file(opts.output, std::ios::binary);
    if (!file) {
      err << "config error: cannot write output file '" << opts.output
          << "'\n";
      return kExitConfigError;
    }
    write_sweep_csv(file, records);
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "runtime error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
}

}  // namespace parafuzzy::cli
