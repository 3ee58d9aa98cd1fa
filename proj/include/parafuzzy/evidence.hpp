#pragma once

// Turns paired raw readings into an evidence pair: readings are categorized
// against the variable's three category functions, the two sources are
// combined conjunctively, association rules fire by max-min, and the
// favourable/unfavourable output sets are aggregated and defuzzified
// independently.

#include <array>
#include <map>
#include <string>

#include "parafuzzy/membership.hpp"
#include "parafuzzy/pal2v.hpp"
#include "parafuzzy/profile.hpp"

namespace parafuzzy {

using CategoryDegrees = std::array<double, 3>;

struct ReadingPair {
  double r1 = 0.0;
  double r2 = 0.0;
};

inline CategoryDegrees categorize(double reading, const VariableSpec& v) {
  if (!std::isfinite(reading))
    throw std::invalid_argument("variable '" + v.name +
                                "': reading is not finite");
  if (reading < 0.0)
    throw std::invalid_argument("variable '" + v.name +
                                "': negative reading for unit '" + v.unit +
                                "'");
  return CategoryDegrees{v.category_functions[0].evaluate(reading),
                         v.category_functions[1].evaluate(reading),
                         v.category_functions[2].evaluate(reading)};
}

// Conjunctive consensus of the two sources: elementwise min. Disagreeing
// sources depress every category, which later surfaces through the rules as
// raised failure evidence and contradiction.
inline CategoryDegrees combine_reading_pair(double r1, double r2,
                                            const VariableSpec& v) {
  const CategoryDegrees a = categorize(r1, v);
  const CategoryDegrees b = categorize(r2, v);
  return CategoryDegrees{tnorm_min(a[0], b[0]), tnorm_min(a[1], b[1]),
                         tnorm_min(a[2], b[2])};
}

namespace detail {

inline double group_strength(const std::vector<RuleLiteral>& group,
                             const std::map<std::string, CategoryDegrees>&
                                 degrees) {
  double s = 1.0;
  for (const RuleLiteral& lit : group) {
    const auto it = degrees.find(lit.variable);
    if (it == degrees.end())
      throw std::logic_error("rule references variable '" + lit.variable +
                             "' without degrees");
    s = tnorm_min(s, it->second[lit.function_index - 1]);
  }
  return s;
}

}  // namespace detail

// Rule strengths for a node given the combined category degrees of its two
// variables. Explicit rules take max over OR-groups of min over literals;
// the catch-all activates at 1 - max(explicit strengths), which keeps the
// rule set exhaustive and continuous.
inline std::vector<double> rule_strengths(
    const NodeSpec& node, const std::map<std::string, CategoryDegrees>&
                              degrees) {
  std::vector<double> strengths(node.rules.size(), 0.0);
  double max_explicit = 0.0;
  for (std::size_t i = 0; i < node.rules.size(); ++i) {
    const AssociationRule& r = node.rules[i];
    if (r.catch_all) continue;
    double s = 0.0;
    for (const auto& group : r.groups)
      s = tconorm_max(s, detail::group_strength(group, degrees));
    strengths[i] = s;
    max_explicit = tconorm_max(max_explicit, s);
  }
  for (std::size_t i = 0; i < node.rules.size(); ++i)
    if (node.rules[i].catch_all)
      strengths[i] = std::max(0.0, 1.0 - max_explicit);
  return strengths;
}

inline EvidencePair extract_evidence(const NodeSpec& node,
                                     const EquipmentProfile& profile,
                                     const ReadingPair& first,
                                     const ReadingPair& second) {
  std::map<std::string, CategoryDegrees> degrees;
  degrees[node.variables[0]] = combine_reading_pair(
      first.r1, first.r2, profile.variable(node.variables[0]));
  degrees[node.variables[1]] = combine_reading_pair(
      second.r1, second.r2, profile.variable(node.variables[1]));

  const std::vector<double> strengths = rule_strengths(node, degrees);

  std::vector<RuleActivation> fav;
  std::vector<RuleActivation> unfav;
  for (std::size_t i = 0; i < node.rules.size(); ++i) {
    const AssociationRule& r = node.rules[i];
    fav.push_back(RuleActivation{&node.outputs.function(r.favourable_function),
                                 strengths[i]});
    unfav.push_back(RuleActivation{
        &node.outputs.function(r.unfavourable_function), strengths[i]});
  }

  const double mu = defuzzify_centroid(mamdani_infer(fav));
  const double lambda = defuzzify_centroid(mamdani_infer(unfav));
  // centroids of sets supported in [0,1]; clamp shields rounding dust
  return EvidencePair(std::clamp(mu, 0.0, 1.0),
                      std::clamp(lambda, 0.0, 1.0));
}

}  // namespace parafuzzy
