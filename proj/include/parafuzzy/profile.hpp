#pragma once

// Equipment profiles: per-variable category functions (not-failure /
// undefined / failure), evidence output functions, and the association
// rules that turn categorized readings into favourable/unfavourable
// evidence. Seven built-in presets cover the stock SCADA equipment set;
// additional equipment is described in a plain-text profile file.

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "parafuzzy/membership.hpp"

namespace parafuzzy {

enum class SubsystemKind { A, B, C };  // servers, routers, control units

inline const char* subsystem_name(SubsystemKind k) {
  switch (k) {
    case SubsystemKind::A: return "A";
    case SubsystemKind::B: return "B";
    case SubsystemKind::C: return "C";
  }
  return "?";
}

inline SubsystemKind subsystem_from_name(const std::string& s) {
  if (s == "A" || s == "a") return SubsystemKind::A;
  if (s == "B" || s == "b") return SubsystemKind::B;
  if (s == "C" || s == "c") return SubsystemKind::C;
  throw std::invalid_argument("unknown subsystem kind '" + s + "'");
}

// An engineering variable and its three category functions.
struct VariableSpec {
  std::string name;  // proc, mem, file_al, rate, error
  std::string unit;  // %, kbps, octets, msgs
  std::array<PiecewiseLinearMembership, 3> category_functions;
};

// Output functions 4..6 over [0,1]; the same family serves the favourable
// and the unfavourable side.
struct EvidenceOutputSpec {
  std::array<PiecewiseLinearMembership, 3> functions;  // index 0 -> function 4

  const PiecewiseLinearMembership& function(int table_index) const {
    if (table_index < 4 || table_index > 6)
      throw std::out_of_range("output function index must be 4..6");
    return functions[table_index - 4];
  }
};

// One antecedent literal: variable's category function must be active.
struct RuleLiteral {
  std::string variable;
  int function_index = 1;  // 1..3
};

// (lit AND lit) OR (lit AND lit) ... -> (favourable fn, unfavourable fn).
// A rule flagged catch_all activates at 1 - max(explicit strengths).
struct AssociationRule {
  std::vector<std::vector<RuleLiteral>> groups;
  int favourable_function = 4;
  int unfavourable_function = 4;
  bool catch_all = false;
};

// Two-variable analysis unit.
struct NodeSpec {
  int id = 1;
  std::array<std::string, 2> variables;
  std::vector<AssociationRule> rules;
  EvidenceOutputSpec outputs;
};

struct EquipmentProfile {
  std::string equipment;
  SubsystemKind subsystem = SubsystemKind::A;
  std::vector<VariableSpec> variables;
  std::vector<NodeSpec> nodes;

  const VariableSpec& variable(const std::string& name) const {
    for (const VariableSpec& v : variables)
      if (v.name == name) return v;
    throw std::invalid_argument("profile '" + equipment +
                                "': unknown variable '" + name + "'");
  }

  bool has_variable(const std::string& name) const {
    for (const VariableSpec& v : variables)
      if (v.name == name) return true;
    return false;
  }
};

// ---------------------------------------------------------------------------
// validation

struct Diagnostic {
  std::string location;
  std::string message;
};

inline std::vector<Diagnostic> validate_profile(const EquipmentProfile& p) {
  std::vector<Diagnostic> out;
  auto add = [&](std::string where, std::string what) {
    out.push_back(Diagnostic{std::move(where), std::move(what)});
  };

  if (p.equipment.empty()) add(p.equipment, "equipment id is empty");
  if (p.variables.empty()) add(p.equipment, "no variables defined");
  for (const VariableSpec& v : p.variables) {
    const std::string where = p.equipment + "/" + v.name;
    for (int i = 0; i < 3; ++i) {
      const auto& f = v.category_functions[i];
      if (f.vertices().size() < 2)
        add(where, "category function " + std::to_string(i + 1) +
                       " has fewer than 2 vertices");
    }
  }
  const std::size_t expected_nodes = p.subsystem == SubsystemKind::A ? 2 : 1;
  if (p.nodes.size() != expected_nodes)
    add(p.equipment, "subsystem " +
                         std::string(subsystem_name(p.subsystem)) +
                         " requires " + std::to_string(expected_nodes) +
                         " node(s), profile has " +
                         std::to_string(p.nodes.size()));
  for (const NodeSpec& n : p.nodes) {
    const std::string where =
        p.equipment + "/node" + std::to_string(n.id);
    for (const std::string& var : n.variables)
      if (!p.has_variable(var))
        add(where, "node references variable '" + var +
                       "' absent from the profile");
    bool has_catch_all = false;
    for (const AssociationRule& r : n.rules) {
      if (r.catch_all) {
        has_catch_all = true;
        if (!r.groups.empty())
          add(where, "catch-all rule must not list antecedents");
      } else if (r.groups.empty()) {
        add(where, "rule without antecedents");
      }
      for (const auto& group : r.groups) {
        for (const RuleLiteral& lit : group) {
          if (lit.function_index < 1 || lit.function_index > 3)
            add(where, "rule references category function " +
                           std::to_string(lit.function_index) +
                           " (must be 1..3)");
          bool in_node = false;
          for (const std::string& var : n.variables)
            if (var == lit.variable) in_node = true;
          if (!in_node)
            add(where, "rule references variable '" + lit.variable +
                           "' not analysed by this node");
        }
      }
      if (r.favourable_function < 4 || r.favourable_function > 6 ||
          r.unfavourable_function < 4 || r.unfavourable_function > 6)
        add(where, "rule consequent functions must be 4..6");
    }
    if (!has_catch_all)
      add(where, "node lacks the catch-all rule; rule set not exhaustive");
    for (int i = 0; i < 3; ++i) {
      const auto& f = n.outputs.functions[i];
      if (f.min_x() < 0.0 || f.max_x() > 1.0)
        add(where, "output function " + std::to_string(i + 4) +
                       " support exceeds [0,1]");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// built-in presets

namespace detail {

inline EvidenceOutputSpec standard_outputs() {
  EvidenceOutputSpec o;
  o.functions[0] = parse_membership("function4", "(0,0;0,1;0,1;0.5,0)");
  o.functions[1] = parse_membership("function5", "(0,0;0.5,1;0.5,1;1,0)");
  o.functions[2] = parse_membership("function6", "(0.5,0;1,1;1,1;1,0)");
  return o;
}

inline VariableSpec make_variable(const std::string& name,
                                  const std::string& unit,
                                  const std::string& f1,
                                  const std::string& f2,
                                  const std::string& f3) {
  VariableSpec v;
  v.name = name;
  v.unit = unit;
  v.category_functions[0] = parse_membership(name + ".function1", f1);
  v.category_functions[1] = parse_membership(name + ".function2", f2);
  v.category_functions[2] = parse_membership(name + ".function3", f3);
  return v;
}

// (a 1 & b 1) | (a 1 & b 2) | (a 2 & b 1) -> fav 4, unfav 6
// (a 2 & b 2)                             -> fav 5, unfav 6
// otherwise                               -> fav 6, unfav 4
inline std::vector<AssociationRule> server_rules(const std::string& a,
                                                 const std::string& b) {
  std::vector<AssociationRule> rules;
  AssociationRule healthy;
  healthy.groups = {{{a, 1}, {b, 1}}, {{a, 1}, {b, 2}}, {{a, 2}, {b, 1}}};
  healthy.favourable_function = 4;
  healthy.unfavourable_function = 6;
  AssociationRule uncertain;
  uncertain.groups = {{{a, 2}, {b, 2}}};
  uncertain.favourable_function = 5;
  uncertain.unfavourable_function = 6;
  AssociationRule rest;
  rest.catch_all = true;
  rest.favourable_function = 6;
  rest.unfavourable_function = 4;
  return {healthy, uncertain, rest};
}

// (rate 2 & err 1) | (rate 3 & err 1) | (rate 3 & err 2) -> fav 4, unfav 6
// (rate 2 & err 2)                                       -> fav 5, unfav 5
// otherwise                                              -> fav 6, unfav 4
inline std::vector<AssociationRule> router_rules() {
  std::vector<AssociationRule> rules;
  AssociationRule healthy;
  healthy.groups = {
      {{"rate", 2}, {"error", 1}}, {{"rate", 3}, {"error", 1}},
      {{"rate", 3}, {"error", 2}}};
  healthy.favourable_function = 4;
  healthy.unfavourable_function = 6;
  AssociationRule uncertain;
  uncertain.groups = {{{"rate", 2}, {"error", 2}}};
  uncertain.favourable_function = 5;
  uncertain.unfavourable_function = 5;
  AssociationRule rest;
  rest.catch_all = true;
  rest.favourable_function = 6;
  rest.unfavourable_function = 4;
  return {healthy, uncertain, rest};
}

// (rate 2 & err 1) | (rate 3 & err 1)  -> fav 4, unfav 6
// (rate 2 & err 2) | (rate 3 & err 2)  -> fav 5, unfav 5
// otherwise                            -> fav 6, unfav 4
inline std::vector<AssociationRule> acu_rules() {
  std::vector<AssociationRule> rules;
  AssociationRule healthy;
  healthy.groups = {{{"rate", 2}, {"error", 1}}, {{"rate", 3}, {"error", 1}}};
  healthy.favourable_function = 4;
  healthy.unfavourable_function = 6;
  AssociationRule uncertain;
  uncertain.groups = {{{"rate", 2}, {"error", 2}}, {{"rate", 3}, {"error", 2}}};
  uncertain.favourable_function = 5;
  uncertain.unfavourable_function = 5;
  AssociationRule rest;
  rest.catch_all = true;
  rest.favourable_function = 6;
  rest.unfavourable_function = 4;
  return {healthy, uncertain, rest};
}

inline EquipmentProfile server_profile(const std::string& id,
                                       VariableSpec proc, VariableSpec mem,
                                       VariableSpec file_al) {
  EquipmentProfile p;
  p.equipment = id;
  p.subsystem = SubsystemKind::A;
  p.variables = {std::move(proc), std::move(mem), std::move(file_al)};
  NodeSpec n1;
  n1.id = 1;
  n1.variables = {"proc", "mem"};
  n1.rules = server_rules("proc", "mem");
  n1.outputs = standard_outputs();
  NodeSpec n2;
  n2.id = 2;
  n2.variables = {"proc", "file_al"};
  n2.rules = server_rules("proc", "file_al");
  n2.outputs = standard_outputs();
  p.nodes = {std::move(n1), std::move(n2)};
  return p;
}

inline EquipmentProfile link_profile(const std::string& id, SubsystemKind kind,
                                     VariableSpec rate, VariableSpec error) {
  EquipmentProfile p;
  p.equipment = id;
  p.subsystem = kind;
  p.variables = {std::move(rate), std::move(error)};
  NodeSpec n;
  n.id = 1;
  n.variables = {"rate", "error"};
  n.rules = kind == SubsystemKind::B ? router_rules() : acu_rules();
  n.outputs = standard_outputs();
  p.nodes = {std::move(n)};
  return p;
}

}  // namespace detail

// The stock equipment set: two servers, three router links, two control
// units, with hand-tuned category trapezoids per variable.
inline std::vector<EquipmentProfile> builtin_profiles() {
  using detail::make_variable;
  std::vector<EquipmentProfile> out;

  out.push_back(detail::server_profile(
      "scatex-server",
      make_variable("proc", "%", "(0,0;0,1;15,1;50,0)", "(15,0;50,1;60,1;70,0)",
                    "(60,0;70,1;100,1;100,0)"),
      make_variable("mem", "%", "(0,0;0,1;60,1;65,0)", "(60,0;65,1;90,1;95,0)",
                    "(90,0;95,1;100,1;100,0)"),
      make_variable("file_al", "%", "(0,0;0,1;75,1;85,0)",
                    "(75,0;85,1;90,1;95,0)", "(90,0;95,1;100,1;100,0)")));

  out.push_back(detail::server_profile(
      "clp500-server",
      make_variable("proc", "%", "(0,0;0,1;15,1;50,0)", "(15,0;50,1;60,1;70,0)",
                    "(60,0;70,1;100,1;100,0)"),
      make_variable("mem", "%", "(0,0;0,1;40,1;50,0)", "(40,0;50,1;60,1;65,0)",
                    "(60,0;65,1;100,1;100,0)"),
      make_variable("file_al", "%", "(0,0;0,1;75,1;85,0)",
                    "(75,0;85,1;90,1;95,0)", "(0,0;95,1;100,1;100,0)")));

  out.push_back(detail::link_profile(
      "router1-hydro", SubsystemKind::B,
      make_variable("rate", "kbps", "(0,0;0,1;1,1;6.5,0)",
                    "(1,0;65,1;2048,1;2252,0)", "(2048,0;2252,1;4096,1;4096,0)"),
      make_variable("error", "octets", "(0,0;0,1;8,1;12,0)",
                    "(8,0;12,1;12,1;24,0)", "(12,0;24,1;45,1;45,0)")));

  out.push_back(detail::link_profile(
      "router2-hydro", SubsystemKind::B,
      make_variable("rate", "kbps", "(0,0;0,1;1,1;6.5,0)",
                    "(1,0;65,1;1024,1;1126,0)", "(2048,0;2252,1;4096,1;4096,0)"),
      make_variable("error", "octets", "(0,0;0,1;8,1;12,0)",
                    "(8,0;12,1;12,1;24,0)", "(12,0;24,1;45,1;45,0)")));

  out.push_back(detail::link_profile(
      "router1-substation", SubsystemKind::B,
      make_variable("rate", "kbps", "(0,0;0,1;1,1;2.5,0)",
                    "(1,0;25,1;2048,1;2252,0)", "(2048,0;2252,1;4096,1;4096,0)"),
      make_variable("error", "octets", "(0,0;0,1;3,1;5,0)", "(3,0;5,1;5,1;10,0)",
                    "(5,0;10,1;45,1;45,0)")));

  out.push_back(detail::link_profile(
      "acu1-hydro", SubsystemKind::C,
      make_variable("rate", "msgs", "(0,0;0,1;1,1;9,0)",
                    "(1,0;9,1;2048,1;2252,0)", "(2048,0;2252,1;4096,1;4096,0)"),
      make_variable("error", "msgs", "(0,0;0,1;12,1;18,0)",
                    "(12,0;18,1;18,1;34,0)", "(18,0;34,1;45,1;45,0)")));

  out.push_back(detail::link_profile(
      "acu1-substation", SubsystemKind::C,
      make_variable("rate", "msgs", "(0,0;0,1;1,1;9,0)",
                    "(1,0;9,1;2048,1;2252,0)", "(2048,0;2252,1;4096,1;4096,0)"),
      make_variable("error", "msgs", "(0,0;0,1;12,1;18,0)",
                    "(12,0;18,1;18,1;34,0)", "(18,0;34,1;45,1;45,0)")));

  return out;
}

inline std::optional<EquipmentProfile> find_builtin_profile(
    const std::string& equipment) {
  for (EquipmentProfile& p : builtin_profiles())
    if (p.equipment == equipment) return std::move(p);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// profile file format
//
//   equipment scatex-server
//   subsystem A
//   variable proc unit %
//     function1 (0,0;0,1;15,1;50,0)
//     function2 (15,0;50,1;60,1;70,0)
//     function3 (60,0;70,1;100,1;100,0)
//   ...
//   outputs
//     function4 (0,0;0,1;0,1;0.5,0)
//     function5 (0,0;0.5,1;0.5,1;1,0)
//     function6 (0.5,0;1,1;1,1;1,0)
//   node 1 variables proc mem
//     rule (proc 1 & mem 1) | (proc 1 & mem 2) | (proc 2 & mem 1) -> fav 4 unfav 6
//     rule (proc 2 & mem 2) -> fav 5 unfav 6
//     otherwise -> fav 6 unfav 4
//   node 2 variables proc file_al
//     ...

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

inline AssociationRule parse_rule_line(const std::string& line, int lineno) {
  // rule (var idx & var idx) | (...) -> fav N unfav M
  const std::size_t arrow = line.find("->");
  if (arrow == std::string::npos)
    throw std::invalid_argument("line " + std::to_string(lineno) +
                                ": rule lacks '->'");
  AssociationRule rule;
  std::string lhs = line.substr(0, arrow);
  {
    // strip the leading keyword
    const std::size_t kw = lhs.find_first_not_of(" \t");
    lhs = lhs.substr(lhs.find(' ', kw) == std::string::npos
                         ? lhs.size()
                         : lhs.find(' ', kw));
  }
  std::size_t pos = 0;
  while ((pos = lhs.find('(', pos)) != std::string::npos) {
    const std::size_t end = lhs.find(')', pos);
    if (end == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": unbalanced parentheses in rule");
    std::string group = lhs.substr(pos + 1, end - pos - 1);
    for (char& c : group)
      if (c == '&') c = ' ';
    std::vector<std::string> toks = tokenize(group);
    if (toks.size() % 2 != 0)
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": rule literals must be 'variable index'");
    std::vector<RuleLiteral> lits;
    for (std::size_t i = 0; i + 1 < toks.size(); i += 2)
      lits.push_back(RuleLiteral{toks[i], std::stoi(toks[i + 1])});
    rule.groups.push_back(std::move(lits));
    pos = end + 1;
  }
  std::vector<std::string> rhs = tokenize(line.substr(arrow + 2));
  if (rhs.size() != 4 || rhs[0] != "fav" || rhs[2] != "unfav")
    throw std::invalid_argument("line " + std::to_string(lineno) +
                                ": rule consequent must be 'fav N unfav M'");
  rule.favourable_function = std::stoi(rhs[1]);
  rule.unfavourable_function = std::stoi(rhs[3]);
  return rule;
}

}  // namespace detail

inline EquipmentProfile parse_profile(std::istream& in) {
  EquipmentProfile p;
  EvidenceOutputSpec outputs = detail::standard_outputs();
  bool outputs_section = false;
  VariableSpec* current_var = nullptr;
  NodeSpec* current_node = nullptr;
  std::string line;
  int lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::vector<std::string> toks = detail::tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];

    if (kw == "equipment" && toks.size() >= 2) {
      p.equipment = toks[1];
    } else if (kw == "subsystem" && toks.size() >= 2) {
      p.subsystem = subsystem_from_name(toks[1]);
    } else if (kw == "variable" && toks.size() >= 2) {
      outputs_section = false;
      current_node = nullptr;
      VariableSpec v;
      v.name = toks[1];
      for (std::size_t i = 2; i + 1 < toks.size(); ++i)
        if (toks[i] == "unit") v.unit = toks[i + 1];
      p.variables.push_back(std::move(v));
      current_var = &p.variables.back();
    } else if (kw.rfind("function", 0) == 0 && toks.size() >= 2) {
      const int idx = std::stoi(kw.substr(8));
      const std::string text = toks[1];
      if (outputs_section) {
        if (idx < 4 || idx > 6)
          throw std::invalid_argument("line " + std::to_string(lineno) +
                                      ": output functions are 4..6");
        outputs.functions[idx - 4] =
            parse_membership("function" + std::to_string(idx), text);
      } else {
        if (current_var == nullptr)
          throw std::invalid_argument("line " + std::to_string(lineno) +
                                      ": function outside a variable block");
        if (idx < 1 || idx > 3)
          throw std::invalid_argument("line " + std::to_string(lineno) +
                                      ": category functions are 1..3");
        current_var->category_functions[idx - 1] = parse_membership(
            current_var->name + ".function" + std::to_string(idx), text);
      }
    } else if (kw == "outputs") {
      outputs_section = true;
      current_var = nullptr;
      current_node = nullptr;
    } else if (kw == "node" && toks.size() >= 5 && toks[2] == "variables") {
      outputs_section = false;
      current_var = nullptr;
      NodeSpec n;
      n.id = std::stoi(toks[1]);
      n.variables = {toks[3], toks[4]};
      n.outputs = outputs;
      p.nodes.push_back(std::move(n));
      current_node = &p.nodes.back();
    } else if (kw == "rule") {
      if (current_node == nullptr)
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": rule outside a node block");
      current_node->rules.push_back(detail::parse_rule_line(line, lineno));
    } else if (kw == "otherwise") {
      if (current_node == nullptr)
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": otherwise outside a node block");
      AssociationRule rule;
      rule.catch_all = true;
      std::vector<std::string> rhs = detail::tokenize(
          line.substr(line.find("->") + 2));
      if (rhs.size() != 4 || rhs[0] != "fav" || rhs[2] != "unfav")
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": otherwise consequent must be "
                                    "'fav N unfav M'");
      rule.favourable_function = std::stoi(rhs[1]);
      rule.unfavourable_function = std::stoi(rhs[3]);
      current_node->rules.push_back(std::move(rule));
    } else {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": unrecognized directive '" + kw + "'");
    }
  }
  // nodes parsed before the outputs section (unusual order) keep defaults;
  // nodes parsed after pick up the file's outputs via n.outputs above.
  return p;
}

inline EquipmentProfile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open profile file '" + path + "'");
  try {
    return parse_profile(in);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

// Renders a profile in the same format parse_profile accepts.
inline std::string format_profile(const EquipmentProfile& p) {
  std::ostringstream out;
  auto tuple = [](const PiecewiseLinearMembership& f) {
    std::ostringstream o;
    o << '(';
    const auto& vs = f.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) o << ';';
      o << vs[i].x << ',' << vs[i].y;
    }
    o << ')';
    return o.str();
  };
  out << "equipment " << p.equipment << '\n';
  out << "subsystem " << subsystem_name(p.subsystem) << '\n';
  for (const VariableSpec& v : p.variables) {
    out << "variable " << v.name << " unit " << v.unit << '\n';
    for (int i = 0; i < 3; ++i)
      out << "  function" << i + 1 << ' ' << tuple(v.category_functions[i])
          << '\n';
  }
  if (!p.nodes.empty()) {
    out << "outputs\n";
    for (int i = 0; i < 3; ++i)
      out << "  function" << i + 4 << ' '
          << tuple(p.nodes.front().outputs.functions[i]) << '\n';
  }
  for (const NodeSpec& n : p.nodes) {
    out << "node " << n.id << " variables " << n.variables[0] << ' '
        << n.variables[1] << '\n';
    for (const AssociationRule& r : n.rules) {
      if (r.catch_all) {
        out << "  otherwise -> fav " << r.favourable_function << " unfav "
            << r.unfavourable_function << '\n';
        continue;
      }
      out << "  rule ";
      for (std::size_t g = 0; g < r.groups.size(); ++g) {
        if (g) out << " | ";
        out << '(';
        for (std::size_t l = 0; l < r.groups[g].size(); ++l) {
          if (l) out << " & ";
          out << r.groups[g][l].variable << ' '
              << r.groups[g][l].function_index;
        }
        out << ')';
      }
      out << " -> fav " << r.favourable_function << " unfav "
          << r.unfavourable_function << '\n';
    }
  }
  return out.str();
}

}  // namespace parafuzzy
