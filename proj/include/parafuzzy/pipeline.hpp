#pragma once

// End-to-end analysis: readings -> evidence -> certainty/contradiction ->
// fuzzy state refinement -> per-equipment operating condition.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "parafuzzy/engine.hpp"
#include "parafuzzy/evidence.hpp"
#include "parafuzzy/pal2v.hpp"
#include "parafuzzy/profile.hpp"

namespace parafuzzy {

struct NodeResult {
  int node_id = 0;
  std::array<std::string, 2> variables;
  std::array<ReadingPair, 2> readings;
  EvidencePair evidence{0.0, 0.0};
  CertaintyPoint point;
  double crisp = 0.0;
  LogicalState state = LogicalState::bottom;
  bool boundary = false;  // dct exactly on the zero line (dual-label case)
};

enum class OperatingCondition : std::uint8_t {
  NORMAL,
  UNSTABLE,
  FAIL,
  INCONSISTENT,
  INDETERMINATE
};

inline const char* condition_name(OperatingCondition c) {
  switch (c) {
    case OperatingCondition::NORMAL: return "NORMAL";
    case OperatingCondition::UNSTABLE: return "UNSTABLE";
    case OperatingCondition::FAIL: return "FAIL";
    case OperatingCondition::INCONSISTENT: return "INCONSISTENT";
    case OperatingCondition::INDETERMINATE: return "INDETERMINATE";
  }
  return "?";
}

struct SubsystemReport {
  std::string equipment;
  SubsystemKind kind = SubsystemKind::A;
  std::vector<NodeResult> nodes;
  OperatingCondition condition = OperatingCondition::NORMAL;
  std::int64_t cycle = 0;
  double timestamp_s = 0.0;  // cycle start on the scheduler's timeline
};

// true = failure confirmed; false = normal; the top/bottom extremes flag
// contradictory or absent evidence; every near state reads as instability.
inline OperatingCondition state_to_condition(LogicalState s) {
  switch (s) {
    case LogicalState::t: return OperatingCondition::FAIL;
    case LogicalState::f: return OperatingCondition::NORMAL;
    case LogicalState::top: return OperatingCondition::INCONSISTENT;
    case LogicalState::bottom: return OperatingCondition::INDETERMINATE;
    default: return OperatingCondition::UNSTABLE;
  }
}

// Dominance order when a subsystem's nodes disagree. Failure outranks
// everything; contradictory evidence outranks mere instability.
inline int condition_precedence(OperatingCondition c) {
  switch (c) {
    case OperatingCondition::FAIL: return 4;
    case OperatingCondition::INCONSISTENT: return 3;
    case OperatingCondition::INDETERMINATE: return 2;
    case OperatingCondition::UNSTABLE: return 1;
    case OperatingCondition::NORMAL: return 0;
  }
  return 0;
}

inline OperatingCondition classify_equipment(
    const std::vector<NodeResult>& results) {
  if (results.empty())
    throw std::invalid_argument("classify_equipment: no node results");
  OperatingCondition best = OperatingCondition::NORMAL;
  int best_rank = -1;
  for (const NodeResult& r : results) {
    const OperatingCondition c = state_to_condition(r.state);
    const int rank = condition_precedence(c);
    if (rank > best_rank) {
      best_rank = rank;
      best = c;
    }
  }
  return best;
}

inline NodeResult run_node(const NodeSpec& node,
                           const EquipmentProfile& profile,
                           const ParaFuzzyEngine& engine,
                           const ReadingPair& first,
                           const ReadingPair& second) {
  NodeResult r;
  r.node_id = node.id;
  r.variables = node.variables;
  r.readings = {first, second};
  r.evidence = extract_evidence(node, profile, first, second);
  const ParaAnalysis pa = para_analyser(r.evidence, engine.geometry().controls,
                                        engine.geometry().tie_break);
  r.point = pa.point;
  r.boundary = pa.boundary;
  const ParaFuzzyResult fr = engine.evaluate(r.point);
  r.state = fr.state;
  r.crisp = fr.crisp;
  return r;
}

// Readings for one equipment in one cycle, keyed by variable name.
using ReadingSet = std::map<std::string, ReadingPair>;

inline SubsystemReport run_subsystem(const EquipmentProfile& profile,
                                     const ParaFuzzyEngine& engine,
                                     const ReadingSet& readings) {
  SubsystemReport rep;
  rep.equipment = profile.equipment;
  rep.kind = profile.subsystem;
  for (const NodeSpec& node : profile.nodes) {
    std::array<ReadingPair, 2> pair;
    for (int i = 0; i < 2; ++i) {
      const auto it = readings.find(node.variables[i]);
      if (it == readings.end())
        throw std::invalid_argument(
            "equipment '" + profile.equipment + "': missing variable '" +
            node.variables[i] + "' required by node " +
            std::to_string(node.id));
      pair[i] = it->second;
    }
    rep.nodes.push_back(run_node(node, profile, engine, pair[0], pair[1]));
  }
  rep.condition = classify_equipment(rep.nodes);
  return rep;
}

}  // namespace parafuzzy
