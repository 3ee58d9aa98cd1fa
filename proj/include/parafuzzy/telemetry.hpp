#pragma once

// Telemetry acquisition: pluggable sources produce paired readings per
// (equipment, variable) on a polling schedule. Replay sources feed scripted
// CSV rows, synthetic sources generate scenario readings from the equipment
// profiles, and the adapter interface is the hook for real protocol
// backends.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "parafuzzy/evidence.hpp"
#include "parafuzzy/profile.hpp"

namespace parafuzzy {

struct TelemetrySample {
  std::string equipment;
  std::string variable;
  double reading_1 = 0.0;
  double reading_2 = 0.0;
  std::string unit;
  std::int64_t cycle = 0;
  bool stale = false;  // no data for this pair in the current cycle
};

struct WantedPair {
  std::string equipment;
  std::string variable;
};

// Abstract source; one poll returns one sample per wanted pair for the
// current cycle, marking pairs it cannot serve as stale. Implementations
// for real SNMP/IEC-104 channels plug in here.
class TelemetrySource {
 public:
  virtual ~TelemetrySource() = default;
  virtual std::vector<TelemetrySample> poll(
      std::int64_t cycle, const std::vector<WantedPair>& wanted) = 0;
};

struct SourceSpec {
  enum class Kind { replay_file, synthetic_scenario, adapter };
  Kind kind = Kind::replay_file;
  std::string path;      // replay_file
  std::string scenario;  // synthetic_scenario: steady-normal | steady-fail
  std::string endpoint;  // adapter: free-form description, not dialled here
};

// ---------------------------------------------------------------------------
// replay source
//
// CSV with header: cycle,equipment,variable,reading_1,reading_2,unit
// One file drives all equipment; cycle numbers start at 1.

class ReplaySource final : public TelemetrySource {
 public:
  explicit ReplaySource(const std::string& path) {
    std::ifstream in(path);
    if (!in)
      throw std::runtime_error("cannot open replay file '" + path + "'");
    parse(in, path);
  }

  explicit ReplaySource(std::istream& in) { parse(in, "<stream>"); }

  std::int64_t max_cycle() const { return max_cycle_; }

  std::vector<TelemetrySample> poll(
      std::int64_t cycle, const std::vector<WantedPair>& wanted) override {
    std::vector<TelemetrySample> out;
    out.reserve(wanted.size());
    for (const WantedPair& w : wanted) {
      const auto it = rows_.find(Key{cycle, w.equipment, w.variable});
      TelemetrySample s;
      s.equipment = w.equipment;
      s.variable = w.variable;
      s.cycle = cycle;
      if (it == rows_.end()) {
        s.stale = true;
      } else {
        s.reading_1 = it->second.r1;
        s.reading_2 = it->second.r2;
        s.unit = it->second.unit;
      }
      out.push_back(std::move(s));
    }
    return out;
  }

 private:
  struct Key {
    std::int64_t cycle;
    std::string equipment;
    std::string variable;
    bool operator<(const Key& o) const {
      if (cycle != o.cycle) return cycle < o.cycle;
      if (equipment != o.equipment) return equipment < o.equipment;
      return variable < o.variable;
    }
  };
  struct Row {
    double r1 = 0.0;
    double r2 = 0.0;
    std::string unit;
  };

  void parse(std::istream& in, const std::string& what) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty() || line[0] == '#') continue;
      std::vector<std::string> cols;
      std::string cell;
      std::istringstream row(line);
      while (std::getline(row, cell, ',')) cols.push_back(cell);
      if (lineno == 1 && !cols.empty() && cols[0] == "cycle") continue;
      if (cols.size() < 6)
        throw std::runtime_error(what + ":" + std::to_string(lineno) +
                                 ": replay rows need 6 columns");
      Key k{std::stoll(cols[0]), cols[1], cols[2]};
      rows_[k] = Row{std::stod(cols[3]), std::stod(cols[4]), cols[5]};
      max_cycle_ = std::max(max_cycle_, k.cycle);
    }
  }

  std::map<Key, Row> rows_;
  std::int64_t max_cycle_ = 0;
};

// ---------------------------------------------------------------------------
// synthetic source
//
// Generates readings from the equipment profile. "steady-normal" holds each
// node variable inside the category combination of the first explicit rule
// group (plateau midpoints), which the rules read as healthy.
// "steady-fail" picks a category combination no explicit rule covers, so
// the catch-all fires fully.

class SyntheticSource final : public TelemetrySource {
 public:
  SyntheticSource(std::string scenario, std::vector<EquipmentProfile> profiles)
      : scenario_(std::move(scenario)) {
    if (scenario_ != "steady-normal" && scenario_ != "steady-fail")
      throw std::invalid_argument("unknown synthetic scenario '" + scenario_ +
                                  "'");
    for (EquipmentProfile& p : profiles)
      profiles_.emplace(p.equipment, std::move(p));
  }

  std::vector<TelemetrySample> poll(
      std::int64_t cycle, const std::vector<WantedPair>& wanted) override {
    std::vector<TelemetrySample> out;
    out.reserve(wanted.size());
    for (const WantedPair& w : wanted) {
      TelemetrySample s;
      s.equipment = w.equipment;
      s.variable = w.variable;
      s.cycle = cycle;
      const auto it = profiles_.find(w.equipment);
      if (it == profiles_.end() || !it->second.has_variable(w.variable)) {
        s.stale = true;
      } else {
        const VariableSpec& var = it->second.variable(w.variable);
        const int category = pick_category(it->second, w.variable);
        const double reading = plateau_midpoint(var, category);
        s.reading_1 = reading;
        s.reading_2 = reading;
        s.unit = var.unit;
      }
      out.push_back(std::move(s));
    }
    return out;
  }

 private:
  int pick_category(const EquipmentProfile& p,
                    const std::string& variable) const {
    // category this variable takes in the first explicit rule group of the
    // node that analyses it
    for (const NodeSpec& n : p.nodes) {
      for (const AssociationRule& r : n.rules) {
        if (r.catch_all || r.groups.empty()) continue;
        for (const RuleLiteral& lit : r.groups.front())
          if (lit.variable == variable) {
            if (scenario_ == "steady-normal") return lit.function_index;
            return failure_category(n, variable, lit.function_index);
          }
      }
    }
    return scenario_ == "steady-normal" ? 1 : 3;
  }

  static int failure_category(const NodeSpec& n, const std::string& variable,
                              int healthy) {
    // a category such that (category, anything-healthy) matches no explicit
    // rule group; scan 1..3 and take the first uncovered one
    for (int candidate = 1; candidate <= 3; ++candidate) {
      if (candidate == healthy) continue;
      bool covered = false;
      for (const AssociationRule& r : n.rules) {
        if (r.catch_all) continue;
        for (const auto& group : r.groups)
          for (const RuleLiteral& lit : group)
            if (lit.variable == variable && lit.function_index == candidate)
              covered = true;
      }
      if (!covered) return candidate;
    }
    return healthy == 3 ? 1 : 3;
  }

  static double plateau_midpoint(const VariableSpec& v, int category) {
    const auto& verts = v.category_functions[category - 1].vertices();
    // midpoint of the top segment (maximum-y span)
    double best_y = 0.0;
    for (const Vertex& vx : verts) best_y = std::max(best_y, vx.y);
    double lo = verts.front().x, hi = verts.back().x;
    for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
      if (verts[i].y == best_y && verts[i + 1].y == best_y) {
        lo = verts[i].x;
        hi = verts[i + 1].x;
        return 0.5 * (lo + hi);
      }
    }
    for (const Vertex& vx : verts)
      if (vx.y == best_y) return vx.x;
    return 0.5 * (lo + hi);
  }

  std::string scenario_;
  std::map<std::string, EquipmentProfile> profiles_;
};

inline std::unique_ptr<TelemetrySource> make_source(
    const SourceSpec& spec, const std::vector<EquipmentProfile>& profiles) {
  switch (spec.kind) {
    case SourceSpec::Kind::replay_file:
      return std::make_unique<ReplaySource>(spec.path);
    case SourceSpec::Kind::synthetic_scenario:
      return std::make_unique<SyntheticSource>(spec.scenario, profiles);
    case SourceSpec::Kind::adapter:
      throw std::invalid_argument(
          "adapter sources are an integration point; no backend is built in "
          "(endpoint: " +
          spec.endpoint + ")");
  }
  throw std::invalid_argument("unknown source kind");
}

inline std::vector<TelemetrySample> poll(
    TelemetrySource& source, std::int64_t cycle,
    const std::vector<WantedPair>& wanted) {
  return source.poll(cycle, wanted);
}

}  // namespace parafuzzy
