#pragma once

// Polling scheduler: each cycle polls every source, runs every subsystem on
// the fresh samples, and emits one report per equipment. Report timestamps
// live on the scheduler's own timeline (cycle index times cycle length) so
// replayed runs are reproducible byte for byte; wall-clock pacing is opt-in
// and drift-corrected (poll n is due at start + n * cycle).

#include <chrono>
#include <functional>
#include <iostream>
#include <thread>

#include "parafuzzy/pipeline.hpp"
#include "parafuzzy/telemetry.hpp"

namespace parafuzzy {

struct ScheduledSource {
  TelemetrySource* source = nullptr;
  std::vector<WantedPair> wanted;
};

struct SchedulerOptions {
  int cycle_seconds = 300;
  // 0 runs until every replay source is exhausted (or forever when only
  // synthetic sources are attached, so CLI callers must bound it).
  std::int64_t cycles = 0;
  bool pace_realtime = false;
  std::function<void(const std::string&)> log = [](const std::string& m) {
    std::cerr << m << '\n';
  };
};

using ReportSink = std::function<void(const SubsystemReport&)>;

class Scheduler {
 public:
  Scheduler(std::vector<const EquipmentProfile*> subsystems,
            std::vector<ScheduledSource> sources, const ParaFuzzyEngine& engine,
            SchedulerOptions options)
      : subsystems_(std::move(subsystems)),
        sources_(std::move(sources)),
        engine_(&engine),
        options_(std::move(options)) {
    if (options_.cycle_seconds < 1)
      throw std::invalid_argument("cycle_seconds must be >= 1");
  }

  // Runs the configured number of cycles, delivering reports in a stable
  // order (equipment order within a cycle, cycles in sequence). A failing
  // subsystem is logged and skipped for that cycle only.
  void run(const ReportSink& sink) {
    const auto start = std::chrono::steady_clock::now();
    for (std::int64_t n = 1; options_.cycles == 0 || n <= options_.cycles;
         ++n) {
      if (options_.pace_realtime && n > 1) {
        const auto due =
            start + std::chrono::seconds(
                        static_cast<std::int64_t>(options_.cycle_seconds) *
                        (n - 1));
        std::this_thread::sleep_until(due);
      }
      run_cycle(n, sink);
      if (options_.cycles == 0 && n >= exhausted_after_) break;
    }
  }

  // One polling round followed by all subsystem runs.
  void run_cycle(std::int64_t cycle, const ReportSink& sink) {
    std::map<std::string, ReadingSet> readings;
    std::map<std::string, bool> stale_equipment;
    for (ScheduledSource& src : sources_) {
      for (const TelemetrySample& s : src.source->poll(cycle, src.wanted)) {
        if (s.stale) {
          stale_equipment[s.equipment] = true;
          options_.log("cycle " + std::to_string(cycle) + ": stale data for " +
                       s.equipment + "/" + s.variable + "; equipment skipped");
          continue;
        }
        readings[s.equipment][s.variable] =
            ReadingPair{s.reading_1, s.reading_2};
      }
    }

    for (const EquipmentProfile* profile : subsystems_) {
      if (stale_equipment.count(profile->equipment)) continue;
      const auto it = readings.find(profile->equipment);
      if (it == readings.end()) continue;
      try {
        SubsystemReport rep = run_subsystem(*profile, *engine_, it->second);
        rep.cycle = cycle;
        rep.timestamp_s =
            static_cast<double>((cycle - 1)) * options_.cycle_seconds;
        sink(rep);
      } catch (const std::exception& e) {
        options_.log("cycle " + std::to_string(cycle) + ": subsystem " +
                     profile->equipment + " failed: " + e.what());
      }
    }
  }

  // Unbounded runs stop once past the longest replay script.
  void set_exhausted_after(std::int64_t last_cycle) {
    exhausted_after_ = last_cycle;
  }

 private:
  std::vector<const EquipmentProfile*> subsystems_;
  std::vector<ScheduledSource> sources_;
  const ParaFuzzyEngine* engine_;
  SchedulerOptions options_;
  std::int64_t exhausted_after_ = 1;
};

inline void run_scheduler(std::vector<const EquipmentProfile*> subsystems,
                          std::vector<ScheduledSource> sources,
                          const ParaFuzzyEngine& engine,
                          const SchedulerOptions& options,
                          const ReportSink& sink) {
  Scheduler s(std::move(subsystems), std::move(sources), engine, options);
  s.run(sink);
}

}  // namespace parafuzzy
