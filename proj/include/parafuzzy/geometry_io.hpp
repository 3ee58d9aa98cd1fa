#pragma once

// Engine geometry files. Two renderings of the same content are accepted:
// a key-value text form and a JSON object. Any key left out falls back to
// the built-in default, so a file can tune a single axis function or table
// cell in isolation.
//
// Key-value form:
//
//   # axis functions, vertex lists over [-1,1]
//   certainty.F = (-1,1;-0.6,1;-0.38,0)
//   contradiction.ri_top = (-0.14,0;0.16,1;0.36,0)
//   # inference table cells; '*' marks an impossible combination
//   table.RCt.ri_bottom = qt_bottom
//   table.F.bottom = *
//   # output families, one function per logical state
//   output1.t = (0.4,0;0.5,1;0.6,0)
//   output2.t = (-0.6,0;-0.5,1;-0.4,0)
//   # thresholds and the non-extreme comparison
//   controls.vcve = 0.5
//   controls.vcfa = -0.5
//   controls.vcic = 0.5
//   controls.vcpa = -0.5
//   tie_break = magnitude            # or: signed
//   table.generate = false           # true regenerates from the axes
//
// JSON form mirrors the keys:
//   { "certainty": {"F": "(-1,1;...)"}, "contradiction": {...},
//     "table": {"RCt": {"ri_bottom": "qt_bottom"}},
//     "output1": {...}, "output2": {...},
//     "controls": {"vcve": 0.5, ...}, "tie_break": "magnitude" }

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "parafuzzy/engine.hpp"

namespace parafuzzy {

namespace detail {

inline int axis_label_index(const std::array<const char*, 6>& keys,
                            const std::string& name) {
  for (int i = 0; i < 6; ++i)
    if (name == keys[i]) return i;
  throw std::invalid_argument("unknown axis label '" + name + "'");
}

inline void apply_geometry_key(EngineGeometry& g, bool& regenerate_table,
                               const std::string& key,
                               const std::string& value) {
  auto starts = [&](const char* prefix) {
    return key.rfind(prefix, 0) == 0;
  };
  if (starts("certainty.")) {
    const int i = axis_label_index(certainty_keys(), key.substr(10));
    g.axes.certainty[i] = parse_membership(key.substr(10), value);
  } else if (starts("contradiction.")) {
    const int i = axis_label_index(contradiction_keys(), key.substr(14));
    g.axes.contradiction[i] = parse_membership(key.substr(14), value);
  } else if (key == "table.generate") {
    regenerate_table = value == "true" || value == "1";
  } else if (starts("table.")) {
    const std::string rest = key.substr(6);
    const std::size_t dot = rest.find('.');
    if (dot == std::string::npos)
      throw std::invalid_argument("table key needs certainty.contradiction");
    const int i = axis_label_index(certainty_keys(), rest.substr(0, dot));
    const int j =
        axis_label_index(contradiction_keys(), rest.substr(dot + 1));
    if (value == "*")
      g.table.cells[i][j] = std::nullopt;
    else
      g.table.cells[i][j] = state_from_key(value);
  } else if (starts("output1.")) {
    const LogicalState s = state_from_key(key.substr(8));
    g.outputs.family1[state_index(s) - 1] =
        parse_membership("out1_" + key.substr(8), value);
  } else if (starts("output2.")) {
    const LogicalState s = state_from_key(key.substr(8));
    g.outputs.family2[state_index(s) - 1] =
        parse_membership("out2_" + key.substr(8), value);
  } else if (key == "controls.vcve") {
    g.controls.vcve = std::stod(value);
  } else if (key == "controls.vcfa") {
    g.controls.vcfa = std::stod(value);
  } else if (key == "controls.vcic") {
    g.controls.vcic = std::stod(value);
  } else if (key == "controls.vcpa") {
    g.controls.vcpa = std::stod(value);
  } else if (key == "tie_break") {
    if (value == "magnitude")
      g.tie_break = TieBreak::magnitude;
    else if (value == "signed")
      g.tie_break = TieBreak::signed_compare;
    else
      throw std::invalid_argument("tie_break must be magnitude or signed");
  } else {
    throw std::invalid_argument("unknown geometry key '" + key + "'");
  }
}

}  // namespace detail

inline EngineGeometry parse_geometry_kv(std::istream& in) {
  EngineGeometry g = default_geometry();
  bool regenerate_table = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      bool blank = true;
      for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (blank) continue;
      throw std::invalid_argument("geometry line " + std::to_string(lineno) +
                                  ": expected key = value");
    }
    auto strip = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    detail::apply_geometry_key(g, regenerate_table, strip(line.substr(0, eq)),
                               strip(line.substr(eq + 1)));
  }
  if (regenerate_table)
    g.table = generate_inference_table(g.axes, g.controls, g.tie_break);
  return g;
}

inline EngineGeometry parse_geometry_json(const nlohmann::json& j) {
  EngineGeometry g = default_geometry();
  bool regenerate_table = false;
  auto apply_section = [&](const char* section, const nlohmann::json& obj) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      const std::string key = std::string(section) + "." + it.key();
      if (it.value().is_string())
        detail::apply_geometry_key(g, regenerate_table, key,
                                   it.value().get<std::string>());
      else
        detail::apply_geometry_key(g, regenerate_table, key,
                                   it.value().dump());
    }
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "tie_break") {
      detail::apply_geometry_key(g, regenerate_table, "tie_break",
                                 it.value().get<std::string>());
    } else if (it.key() == "table" && it.value().is_object()) {
      for (auto row = it.value().begin(); row != it.value().end(); ++row) {
        if (row.key() == "generate") {
          regenerate_table = row.value().is_boolean()
                                 ? row.value().get<bool>()
                                 : row.value().get<std::string>() == "true";
          continue;
        }
        for (auto cell = row.value().begin(); cell != row.value().end();
             ++cell)
          detail::apply_geometry_key(
              g, regenerate_table, "table." + row.key() + "." + cell.key(),
              cell.value().get<std::string>());
      }
    } else if (it.value().is_object()) {
      apply_section(it.key().c_str(), it.value());
    } else {
      throw std::invalid_argument("unknown geometry key '" + it.key() + "'");
    }
  }
  if (regenerate_table)
    g.table = generate_inference_table(g.axes, g.controls, g.tie_break);
  return g;
}

// Loads either rendering; the first non-space byte decides.
inline EngineGeometry load_geometry(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open geometry file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_geometry_json(nlohmann::json::parse(text));
    break;
  }
  std::istringstream kv(text);
  return parse_geometry_kv(kv);
}

}  // namespace parafuzzy
