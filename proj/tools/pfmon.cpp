// pfmon: scenario-driven equipment-health monitor.
//
//   pfmon validate --config run.json [--print-effective]
//   pfmon run      --config run.json [--cycles N] [--cycle-seconds S]
//                  [--format table|csv|json] [--output PATH] [--realtime]
//   pfmon sweep    [--step 0.05] [--skip-centerlines] [--geometry PATH]
//                  [--output PATH]
//
// Relative config paths are also looked up under $PFMON_CONFIG_DIR.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "parafuzzy/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"equipment-health monitor (paraconsistent + fuzzy inference)"};
  app.require_subcommand(1);

  std::string config_path;
  bool print_effective = false;
  CLI::App* validate =
      app.add_subcommand("validate", "check profiles and engine geometry");
  validate->add_option("--config", config_path, "run configuration (JSON)")
      ->required();
  validate->add_flag("--print-effective", print_effective,
                     "print the effective profiles after validation");

  parafuzzy::cli::RunOverrides overrides;
  std::int64_t cycles_flag = -1;
  int cycle_seconds_flag = -1;
  std::string format_flag;
  std::string output_flag;
  CLI::App* run = app.add_subcommand("run", "run monitoring cycles");
  run->add_option("--config", config_path, "run configuration (JSON)")
      ->required();
  run->add_option("--cycles", cycles_flag,
                  "number of cycles (0 = until replay ends)");
  run->add_option("--cycle-seconds", cycle_seconds_flag,
                  "cycle length in seconds (default 300)");
  run->add_option("--format", format_flag, "table, csv or json");
  run->add_option("--output", output_flag, "output path ('-' = stdout)");
  run->add_flag("--realtime", overrides.realtime,
                "pace cycles against the wall clock");

  parafuzzy::cli::SweepOptions sweep_opts;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "export the certainty/contradiction grid as CSV");
  sweep->add_option("--step", sweep_opts.step, "grid step (default 0.05)");
  sweep->add_flag("--skip-centerlines", sweep_opts.skip_centerlines,
                  "use the tie-free sampling that avoids dc=0 and dct=0");
  std::string sweep_geometry;
  sweep->add_option("--geometry", sweep_geometry, "engine geometry file");
  sweep->add_option("--output", sweep_opts.output,
                    "output path ('-' = stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : parafuzzy::cli::kExitConfigError;
  }

  if (validate->parsed())
    return parafuzzy::cli::cmd_validate(config_path, std::cout, std::cerr,
                                        print_effective);
  if (run->parsed()) {
    if (cycles_flag >= 0) overrides.cycles = cycles_flag;
    if (cycle_seconds_flag >= 0) overrides.cycle_seconds = cycle_seconds_flag;
    if (!format_flag.empty()) overrides.format = format_flag;
    if (!output_flag.empty()) overrides.output = output_flag;
    return parafuzzy::cli::cmd_run(config_path, overrides, std::cout,
                                   std::cerr);
  }
  if (sweep->parsed()) {
    if (!sweep_geometry.empty()) sweep_opts.geometry_file = sweep_geometry;
    return parafuzzy::cli::cmd_sweep(sweep_opts, std::cout, std::cerr);
  }
  return parafuzzy::cli::kExitConfigError;
}
