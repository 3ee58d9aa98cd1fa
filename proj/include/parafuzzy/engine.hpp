#pragma once

// Fuzzy refinement of the PAL2v state decision: both lattice axes are
// fuzzified with named membership functions, an inference table maps axis
// label pairs to logical states by max-min composition, the winning state is
// the one with the highest aggregated membership, and a crisp value in
// [-1,1] is obtained by centroid defuzzification over one of two output
// families selected by the sign of the certainty degree.

#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "parafuzzy/membership.hpp"
#include "parafuzzy/pal2v.hpp"

namespace parafuzzy {

inline constexpr int kCertaintyLabels = 6;
inline constexpr int kContradictionLabels = 6;

inline const std::array<const char*, kCertaintyLabels>& certainty_keys() {
  static const std::array<const char*, kCertaintyLabels> keys = {
      "F", "QF", "RCF", "RCt", "Qt", "t"};
  return keys;
}

inline const std::array<const char*, kContradictionLabels>&
contradiction_keys() {
  static const std::array<const char*, kContradictionLabels> keys = {
      "bottom", "q_bottom", "ri_bottom", "ri_top", "q_top", "top"};
  return keys;
}

// Membership functions over [-1,1] for one lattice axis, in label order.
using AxisFunctions = std::array<PiecewiseLinearMembership, 6>;

struct AxisFuzzification {
  AxisFunctions certainty;      // F, QF, RCF, RCt, Qt, t
  AxisFunctions contradiction;  // bottom, q_bottom, ri_bottom, ri_top, q_top, top
};

// Cell (certainty label, contradiction label) -> state; nullopt marks a
// combination declared impossible, which contributes nothing when fired.
struct InferenceTable {
  std::array<std::array<std::optional<LogicalState>, 6>, 6> cells;
};

// Per-state output functions over [-1,1]. Family 1 serves dc >= 0, family 2
// dc < 0; paracomplete output sits near +/-0.95 depending on the family, so
// indeterminate readings defuzzify toward the side they approached from.
struct CrispOutputSets {
  std::array<PiecewiseLinearMembership, 12> family1;
  std::array<PiecewiseLinearMembership, 12> family2;
};

struct EngineGeometry {
  AxisFuzzification axes;
  InferenceTable table;
  CrispOutputSets outputs;
  ControlValues controls;
  TieBreak tie_break = TieBreak::magnitude;
};

struct ParaFuzzyResult {
  LogicalState state = LogicalState::bottom;
  std::array<double, 12> state_memberships{};  // by state index - 1
  double crisp = 0.0;
};

struct SweepRecord {
  double dc = 0.0;
  double dct = 0.0;
  double crisp = 0.0;
  int state_index = 0;
};

struct SweepGrid {
  std::vector<double> dc_values;
  std::vector<double> dct_values;

  // Uniform grid over [-1,1] in both axes, zero included when step divides 1.
  static SweepGrid uniform(double step) {
    if (step <= 0.0 || step > 2.0)
      throw std::invalid_argument("sweep step must be in (0,2]");
    SweepGrid g;
    const int n = static_cast<int>(std::lround(2.0 / step));
    g.dc_values.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
      const double v = -1.0 + k * step;
      g.dc_values.push_back(std::abs(v) < 1e-12 ? 0.0 : v);
    }
    g.dct_values = g.dc_values;
    return g;
  }

  // Grid that skips the degenerate centre lines: 0.1 steps plus +/-0.05
  // refinements next to dc = 0, and 0.1 steps on the contradiction axis.
  static SweepGrid centerline_free() {
    SweepGrid g;
    for (int k = -10; k <= 10; ++k) {
      if (k == 0) continue;
      g.dc_values.push_back(k * 0.1);
      g.dct_values.push_back(k * 0.1);
    }
    g.dc_values.push_back(-0.05);
    g.dc_values.push_back(0.05);
    std::sort(g.dc_values.begin(), g.dc_values.end());
    std::sort(g.dct_values.begin(), g.dct_values.end());
    return g;
  }
};

namespace detail {

inline PiecewiseLinearMembership tent(const char* name, double a, double b,
                                      double c) {
  return PiecewiseLinearMembership(
      name, {{a, 0.0}, {b, 1.0}, {c, 0.0}});
}

inline PiecewiseLinearMembership shoulder_left(const char* name, double plateau_end,
                                               double foot) {
  return PiecewiseLinearMembership(
      name, {{-1.0, 1.0}, {plateau_end, 1.0}, {foot, 0.0}});
}

inline PiecewiseLinearMembership shoulder_right(const char* name, double foot,
                                                double plateau_start) {
  return PiecewiseLinearMembership(
      name, {{foot, 0.0}, {plateau_start, 1.0}, {1.0, 1.0}});
}

// x where f and g have equal membership, searched by sign change of f-g.
// The axis families are unimodal with a single adjacent crossing, so a scan
// plus bisection is exact enough (refined below 1e-12).
inline double axis_crossing(const PiecewiseLinearMembership& f,
                            const PiecewiseLinearMembership& g) {
  const int steps = 4000;
  double prev_x = -1.0;
  double prev_d = f.evaluate(prev_x) - g.evaluate(prev_x);
  for (int i = 1; i <= steps; ++i) {
    const double x = -1.0 + 2.0 * i / steps;
    const double d = f.evaluate(x) - g.evaluate(x);
    if (prev_d > 0.0 && d <= 0.0) {
      double lo = prev_x, hi = x;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double dm = f.evaluate(mid) - g.evaluate(mid);
        if (dm > 0.0)
          lo = mid;
        else
          hi = mid;
      }
      return 0.5 * (lo + hi);
    }
    prev_x = x;
    prev_d = d;
  }
  throw std::invalid_argument("axis functions '" + f.name() + "' and '" +
                              g.name() + "' never cross");
}

}  // namespace detail

// Representative point of each axis label: the midpoint of the interval on
// which that label holds the highest membership.
inline std::array<double, 6> axis_representatives(const AxisFunctions& fns) {
  std::array<double, 6> reps{};
  std::array<double, 5> cross{};
  for (int i = 0; i < 5; ++i)
    cross[i] = detail::axis_crossing(fns[i], fns[i + 1]);
  reps[0] = 0.5 * (-1.0 + cross[0]);
  for (int i = 1; i < 5; ++i) reps[i] = 0.5 * (cross[i - 1] + cross[i]);
  reps[5] = 0.5 * (cross[4] + 1.0);
  return reps;
}

// Builds the inference table from the lattice geometry: every label pair is
// classified at its representative point on the plane. Representatives whose
// magnitudes differ by less than the crossing offsets are snapped onto the
// diagonal first; a cell that straddles the quadrant diagonal must resolve
// like an exact tie, not by the accident of which axis got the wider
// interval.
inline InferenceTable generate_inference_table(
    const AxisFuzzification& axes, const ControlValues& cv = {},
    TieBreak tie = TieBreak::magnitude) {
  const std::array<double, 6> rc = axis_representatives(axes.certainty);
  const std::array<double, 6> rk = axis_representatives(axes.contradiction);
  constexpr double tie_snap = 0.02;
  InferenceTable table;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      double dct = rk[j];
      if (std::abs(std::abs(rc[i]) - std::abs(dct)) <= tie_snap)
        dct = (dct < 0.0 ? -1.0 : 1.0) * std::abs(rc[i]);
      table.cells[i][j] =
          classify_point(CertaintyPoint{rc[i], dct}, cv, tie).state;
    }
  }
  return table;
}

namespace detail {

inline std::array<PiecewiseLinearMembership, 12> output_family(int sign) {
  // Tent centres per state, ordered by state index. The true/false outputs
  // sit at 0.5, inconsistency near 0, paracompleteness near the lattice rim,
  // and near-states in between so the characteristic crisp bands come out:
  // [0.50,0.80] on the paracomplete-tending side of the truth quadrants and
  // [0.20,0.50] on the inconsistency-tending side.
  static constexpr std::array<double, 12> centre = {
      0.92,  // bottom
      0.66,  // q_bottom_F
      0.62,  // qF_bottom
      0.50,  // F
      0.38,  // qF_top
      0.34,  // q_top_F
      0.08,  // top
      0.34,  // q_top_t
      0.38,  // qt_top
      0.50,  // t
      0.62,  // qt_bottom
      0.66,  // q_bottom_t
  };
  std::array<PiecewiseLinearMembership, 12> fam;
  for (int i = 0; i < 12; ++i) {
    const double c = sign > 0 ? centre[i] : -centre[i];
    const double lo = std::max(-1.0, c - 0.10);
    const double hi = std::min(1.0, c + 0.10);
    const LogicalState s = state_from_index(i + 1);
    fam[i] = PiecewiseLinearMembership(
        std::string("out_") + state_key(s),
        {{lo, 0.0}, {c, 1.0}, {hi, 0.0}});
  }
  return fam;
}

}  // namespace detail

// Default lattice geometry. Both axes use the same partition-of-unity
// family: two shoulders and four interior tents whose crossings sit at
// -0.49, -0.26, +0.01, +0.26, +0.49. The off-centre crossings keep the
// extreme states dominant exactly from |dc| (or |dct|) = 0.5 outward and
// keep grid points used by the regression suites away from exact ties.
inline EngineGeometry default_geometry() {
  EngineGeometry g;
  auto make_axis = [](const std::array<const char*, 6>& keys) {
    AxisFunctions fns;
    fns[0] = detail::shoulder_left(keys[0], -0.60, -0.38);
    fns[1] = detail::tent(keys[1], -0.60, -0.38, -0.14);
    fns[2] = detail::tent(keys[2], -0.38, -0.14, 0.16);
    fns[3] = detail::tent(keys[3], -0.14, 0.16, 0.36);
    fns[4] = detail::tent(keys[4], 0.16, 0.36, 0.62);
    fns[5] = detail::shoulder_right(keys[5], 0.36, 0.62);
    return fns;
  };
  g.axes.certainty = make_axis(certainty_keys());
  g.axes.contradiction = make_axis(contradiction_keys());
  g.controls = ControlValues{};
  g.tie_break = TieBreak::magnitude;
  g.table = generate_inference_table(g.axes, g.controls, g.tie_break);
  g.outputs.family1 = detail::output_family(+1);
  g.outputs.family2 = detail::output_family(-1);
  return g;
}

class ParaFuzzyEngine {
 public:
  ParaFuzzyEngine() : ParaFuzzyEngine(default_geometry()) {}

  explicit ParaFuzzyEngine(EngineGeometry geometry)
      : geo_(std::move(geometry)) {
    validate_axis(geo_.axes.certainty, "certainty");
    validate_axis(geo_.axes.contradiction, "contradiction");
  }

  const EngineGeometry& geometry() const { return geo_; }

  std::array<double, 6> fuzzify_certainty(double dc) const {
    check_range(dc, "dc");
    return fuzzify(geo_.axes.certainty, dc);
  }

  std::array<double, 6> fuzzify_contradiction(double dct) const {
    check_range(dct, "dct");
    return fuzzify(geo_.axes.contradiction, dct);
  }

  // Max-min composition: each possible cell fires at
  // min(certainty degree, contradiction degree); a state's strength is the
  // max over its cells. Impossible cells are skipped.
  std::array<double, 12> infer_states(double dc, double dct) const {
    const std::array<double, 6> cd = fuzzify_certainty(dc);
    const std::array<double, 6> kd = fuzzify_contradiction(dct);
    std::array<double, 12> strengths{};
    for (int i = 0; i < 6; ++i) {
      if (cd[i] == 0.0) continue;
      for (int j = 0; j < 6; ++j) {
        if (kd[j] == 0.0) continue;
        const std::optional<LogicalState>& cell = geo_.table.cells[i][j];
        if (!cell) continue;
        const double s = tnorm_min(cd[i], kd[j]);
        double& slot = strengths[state_index(*cell) - 1];
        slot = tconorm_max(slot, s);
      }
    }
    return strengths;
  }

  double compute_crisp(double dc, double dct) const {
    return crisp_from_strengths(dc, infer_states(dc, dct));
  }

  ParaFuzzyResult evaluate(double dc, double dct) const {
    ParaFuzzyResult r;
    r.state_memberships = infer_states(dc, dct);
    int best = 0;
    for (int i = 1; i < 12; ++i)
      if (r.state_memberships[i] > r.state_memberships[best]) best = i;
    r.state = state_from_index(best + 1);
    r.crisp = crisp_from_strengths(dc, r.state_memberships);
    return r;
  }

  ParaFuzzyResult evaluate(const CertaintyPoint& p) const {
    return evaluate(p.dc, p.dct);
  }

  std::vector<SweepRecord> lattice_sweep(const SweepGrid& grid) const {
    std::vector<SweepRecord> out;
    out.reserve(grid.dc_values.size() * grid.dct_values.size());
    for (double dc : grid.dc_values) {
      for (double dct : grid.dct_values) {
        const ParaFuzzyResult r = evaluate(dc, dct);
        out.push_back(SweepRecord{dc, dct, r.crisp, state_index(r.state)});
      }
    }
    return out;
  }

 private:
  static void check_range(double v, const char* what) {
    if (!(v >= -1.0 && v <= 1.0))
      throw std::out_of_range(std::string(what) + " outside [-1,1]");
  }

  static std::array<double, 6> fuzzify(const AxisFunctions& fns, double x) {
    std::array<double, 6> out{};
    for (int i = 0; i < 6; ++i) out[i] = fns[i].evaluate(x);
    return out;
  }

  static void validate_axis(const AxisFunctions& fns, const char* which) {
    // full coverage: every x in [-1,1] carries at least one nonzero label
    const int steps = 2000;
    for (int i = 0; i <= steps; ++i) {
      const double x = -1.0 + 2.0 * i / steps;
      double best = 0.0;
      for (const auto& f : fns) best = std::max(best, f.evaluate(x));
      if (best <= 0.0)
        throw std::invalid_argument(std::string(which) +
                                    " axis leaves part of [-1,1] uncovered");
    }
  }

  double crisp_from_strengths(double dc,
                              const std::array<double, 12>& strengths) const {
    const std::array<PiecewiseLinearMembership, 12>& family =
        dc >= 0.0 ? geo_.outputs.family1 : geo_.outputs.family2;
    std::vector<RuleActivation> acts;
    acts.reserve(12);
    for (int i = 0; i < 12; ++i)
      if (strengths[i] > 0.0)
        acts.push_back(RuleActivation{&family[i], strengths[i]});
    if (acts.empty())
      throw std::domain_error("no state carries membership; degenerate axes");
    return defuzzify_centroid(mamdani_infer(acts));
  }

  EngineGeometry geo_;
};

}  // namespace parafuzzy
