#pragma once

// Run configuration (JSON): which equipment to monitor, where telemetry
// comes from, engine geometry overrides, cycle control and output choices.
// Relative paths inside a config resolve against the config file's
// directory.

#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "parafuzzy/geometry_io.hpp"
#include "parafuzzy/profile.hpp"
#include "parafuzzy/telemetry.hpp"

namespace parafuzzy {

struct ConfiguredSource {
  SourceSpec spec;
  // restricts the source to these equipment ids; empty = all subsystems
  std::vector<std::string> equipment;
};

struct RunConfig {
  std::vector<std::string> builtin_profiles;  // preset names
  std::vector<std::string> profile_files;     // profile file paths
  std::optional<std::string> geometry_file;
  std::vector<std::string> subsystems;  // equipment ids to run each cycle
  std::vector<ConfiguredSource> sources;
  int cycle_seconds = 300;
  std::int64_t cycles = 0;  // 0 = until replay exhaustion
  std::string format = "table";
  std::string output = "-";
};

inline RunConfig parse_run_config(const nlohmann::json& j,
                                  const std::filesystem::path& base_dir) {
  RunConfig c;
  auto resolve = [&](const std::string& p) {
    std::filesystem::path fp(p);
    if (fp.is_absolute()) return fp.string();
    return (base_dir / fp).lexically_normal().string();
  };

  if (j.contains("builtin_profiles"))
    for (const auto& v : j.at("builtin_profiles"))
      c.builtin_profiles.push_back(v.get<std::string>());
  if (j.contains("profiles"))
    for (const auto& v : j.at("profiles"))
      c.profile_files.push_back(resolve(v.get<std::string>()));
  if (j.contains("geometry"))
    c.geometry_file = resolve(j.at("geometry").get<std::string>());
  if (j.contains("subsystems"))
    for (const auto& v : j.at("subsystems"))
      c.subsystems.push_back(v.get<std::string>());
  if (j.contains("sources")) {
    for (const auto& v : j.at("sources")) {
      ConfiguredSource s;
      const std::string kind = v.at("kind").get<std::string>();
      if (kind == "replay" || kind == "replay-file") {
        s.spec.kind = SourceSpec::Kind::replay_file;
        s.spec.path = resolve(v.at("path").get<std::string>());
      } else if (kind == "synthetic" || kind == "synthetic-scenario") {
        s.spec.kind = SourceSpec::Kind::synthetic_scenario;
        s.spec.scenario = v.at("scenario").get<std::string>();
      } else if (kind == "adapter") {
        s.spec.kind = SourceSpec::Kind::adapter;
        if (v.contains("endpoint"))
          s.spec.endpoint = v.at("endpoint").get<std::string>();
      } else {
        throw std::invalid_argument("unknown source kind '" + kind + "'");
      }
      if (v.contains("equipment"))
        for (const auto& e : v.at("equipment"))
          s.equipment.push_back(e.get<std::string>());
      c.sources.push_back(std::move(s));
    }
  }
  if (j.contains("cycle_seconds")) c.cycle_seconds = j.at("cycle_seconds");
  if (j.contains("cycles")) c.cycles = j.at("cycles");
  if (j.contains("format")) c.format = j.at("format").get<std::string>();
  if (j.contains("output"))
    c.output = j.at("output").get<std::string>() == "-"
                   ? "-"
                   : resolve(j.at("output").get<std::string>());
  return c;
}

// Looks in the working directory first, then under PFMON_CONFIG_DIR.
inline std::string resolve_config_path(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return path;
  if (fs::path(path).is_relative()) {
    if (const char* dir = std::getenv("PFMON_CONFIG_DIR")) {
      const fs::path alt = fs::path(dir) / path;
      if (fs::exists(alt)) return alt.string();
    }
  }
  return path;
}

inline RunConfig load_run_config(const std::string& path) {
  const std::string real = resolve_config_path(path);
  std::ifstream in(real);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error("config '" + path + "': " + e.what());
  }
  return parse_run_config(j, std::filesystem::path(real).parent_path());
}

// Materialized, validated configuration ready to run.
struct LoadedRun {
  std::vector<EquipmentProfile> profiles;
  EngineGeometry geometry;
  RunConfig config;

  const EquipmentProfile& profile(const std::string& equipment) const {
    for (const EquipmentProfile& p : profiles)
      if (p.equipment == equipment) return p;
    throw std::invalid_argument("no profile for equipment '" + equipment +
                                "'");
  }
};

inline std::vector<Diagnostic> collect_diagnostics(const LoadedRun& run) {
  std::vector<Diagnostic> diags;
  for (const EquipmentProfile& p : run.profiles) {
    std::vector<Diagnostic> d = validate_profile(p);
    diags.insert(diags.end(), d.begin(), d.end());
  }
  std::set<std::string> known;
  for (const EquipmentProfile& p : run.profiles) known.insert(p.equipment);
  for (const std::string& s : run.config.subsystems)
    if (!known.count(s))
      diags.push_back(
          Diagnostic{s, "subsystem has no profile (builtin or file)"});
  for (const ConfiguredSource& src : run.config.sources)
    for (const std::string& e : src.equipment)
      if (!known.count(e))
        diags.push_back(Diagnostic{e, "source restricted to unknown equipment"});
  if (run.config.format != "table" && run.config.format != "csv" &&
      run.config.format != "json")
    diags.push_back(Diagnostic{"format", "output format must be table, csv "
                                         "or json"});
  return diags;
}

inline LoadedRun load_run(const std::string& config_path) {
  LoadedRun run;
  run.config = load_run_config(config_path);
  for (const std::string& name : run.config.builtin_profiles) {
    std::optional<EquipmentProfile> p = find_builtin_profile(name);
    if (!p)
      throw std::invalid_argument("no builtin profile named '" + name + "'");
    run.profiles.push_back(std::move(*p));
  }
  for (const std::string& path : run.config.profile_files)
    run.profiles.push_back(load_profile(path));
  if (run.config.subsystems.empty())
    for (const EquipmentProfile& p : run.profiles)
      run.config.subsystems.push_back(p.equipment);
  run.geometry = run.config.geometry_file
                     ? load_geometry(*run.config.geometry_file)
                     : default_geometry();
  return run;
}

}  // namespace parafuzzy
