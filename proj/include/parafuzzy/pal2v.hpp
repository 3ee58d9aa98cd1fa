#pragma once

// Paraconsistent annotated logic with two-valued annotations (PAL2v).
// Propositions carry a pair of evidence degrees (mu, lambda); the lattice
// transform maps them to certainty/contradiction coordinates which a
// threshold analyser classifies into one of twelve logical states.

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace parafuzzy {

// Favourable (mu) and unfavourable (lambda) evidence degrees about a
// failure proposition, each in [0,1].
class EvidencePair {
 public:
  EvidencePair(double mu, double lambda) : mu_(mu), lambda_(lambda) {
    if (!(mu >= 0.0 && mu <= 1.0) || !(lambda >= 0.0 && lambda <= 1.0))
      throw std::out_of_range("evidence degrees must lie in [0,1]");
  }

  double mu() const { return mu_; }
  double lambda() const { return lambda_; }

 private:
  double mu_;
  double lambda_;
};

inline bool operator==(const EvidencePair& a, const EvidencePair& b) {
  return a.mu() == b.mu() && a.lambda() == b.lambda();
}

// Degree of certainty dc = mu - lambda and degree of contradiction
// dct = mu + lambda - 1, both in [-1,1].
struct CertaintyPoint {
  double dc = 0.0;
  double dct = 0.0;
};

inline CertaintyPoint compute_degrees(const EvidencePair& e) {
  return CertaintyPoint{e.mu() - e.lambda(), e.mu() + e.lambda() - 1.0};
}

// ~(mu, lambda) = (lambda, mu); an involution fixing (1,1) and (0,0).
inline EvidencePair negate(const EvidencePair& e) {
  return EvidencePair(e.lambda(), e.mu());
}

// The twelve lattice states, indexed 1..12 in the conventional circular
// order starting at paracomplete.
enum class LogicalState : std::uint8_t {
  bottom = 1,      // paracomplete
  q_bottom_f = 2,  // nearly paracomplete tending to false
  qf_bottom = 3,   // near false tending to paracomplete
  f = 4,           // false
  qf_top = 5,      // near false tending to inconsistent
  q_top_f = 6,     // nearly inconsistent tending to false
  top = 7,         // inconsistent
  q_top_t = 8,     // nearly inconsistent tending to true
  qt_top = 9,      // near true tending to inconsistent
  t = 10,          // true
  qt_bottom = 11,  // near true tending to paracomplete
  q_bottom_t = 12  // nearly paracomplete tending to true
};

inline int state_index(LogicalState s) { return static_cast<int>(s); }

inline LogicalState state_from_index(int index) {
  if (index < 1 || index > 12)
    throw std::out_of_range("logical state index must be 1..12");
  return static_cast<LogicalState>(index);
}

inline const char* state_label(LogicalState s) {
  switch (s) {
    case LogicalState::bottom: return "⊥";
    case LogicalState::q_bottom_f: return "Q⊥-F";
    case LogicalState::qf_bottom: return "QF-⊥";
    case LogicalState::f: return "F";
    case LogicalState::qf_top: return "QF-⊤";
    case LogicalState::q_top_f: return "Q⊤-F";
    case LogicalState::top: return "⊤";
    case LogicalState::q_top_t: return "Q⊤-t";
    case LogicalState::qt_top: return "Qt-⊤";
    case LogicalState::t: return "t";
    case LogicalState::qt_bottom: return "Qt-⊥";
    case LogicalState::q_bottom_t: return "Q⊥-t";
  }
  return "?";
}

// ASCII-safe label used in config files and CSV columns.
inline const char* state_key(LogicalState s) {
  switch (s) {
    case LogicalState::bottom: return "bottom";
    case LogicalState::q_bottom_f: return "q_bottom_F";
    case LogicalState::qf_bottom: return "qF_bottom";
    case LogicalState::f: return "F";
    case LogicalState::qf_top: return "qF_top";
    case LogicalState::q_top_f: return "q_top_F";
    case LogicalState::top: return "top";
    case LogicalState::q_top_t: return "q_top_t";
    case LogicalState::qt_top: return "qt_top";
    case LogicalState::t: return "t";
    case LogicalState::qt_bottom: return "qt_bottom";
    case LogicalState::q_bottom_t: return "q_bottom_t";
  }
  return "?";
}

inline LogicalState state_from_key(const std::string& key) {
  for (int i = 1; i <= 12; ++i) {
    const LogicalState s = state_from_index(i);
    if (key == state_key(s)) return s;
  }
  throw std::invalid_argument("unknown logical state '" + key + "'");
}

// Reflection about dc = 0: swaps the true and false sides, fixes the
// contradiction axis extremes.
inline LogicalState mirror_state(LogicalState s) {
  switch (s) {
    case LogicalState::bottom: return LogicalState::bottom;
    case LogicalState::q_bottom_f: return LogicalState::q_bottom_t;
    case LogicalState::qf_bottom: return LogicalState::qt_bottom;
    case LogicalState::f: return LogicalState::t;
    case LogicalState::qf_top: return LogicalState::qt_top;
    case LogicalState::q_top_f: return LogicalState::q_top_t;
    case LogicalState::top: return LogicalState::top;
    case LogicalState::q_top_t: return LogicalState::q_top_f;
    case LogicalState::qt_top: return LogicalState::qf_top;
    case LogicalState::t: return LogicalState::f;
    case LogicalState::qt_bottom: return LogicalState::qf_bottom;
    case LogicalState::q_bottom_t: return LogicalState::q_bottom_f;
  }
  return s;
}

inline bool is_extreme(LogicalState s) {
  return s == LogicalState::t || s == LogicalState::f ||
         s == LogicalState::top || s == LogicalState::bottom;
}

// Threshold control values bounding the extreme-state regions.
struct ControlValues {
  double vcve = 0.5;   // maximum certainty control value
  double vcfa = -0.5;  // minimum certainty control value
  double vcic = 0.5;   // maximum uncertainty control value
  double vcpa = -0.5;  // minimum uncertainty control value

  void validate() const {
    if (!(vcfa < 0.0 && 0.0 < vcve))
      throw std::invalid_argument("control values need vcfa < 0 < vcve");
    if (!(vcpa < 0.0 && 0.0 < vcic))
      throw std::invalid_argument("control values need vcpa < 0 < vcic");
  }
};

// Non-extreme quadrants compare |dc| against |dct| by default, which selects
// the Qt/QF family on ties. The literal signed comparison dc >= dct is kept
// behind this switch for fidelity experiments.
enum class TieBreak { magnitude, signed_compare };

struct ParaAnalysis {
  LogicalState state = LogicalState::bottom;
  CertaintyPoint point;
  // Set when dct is exactly zero inside a non-extreme quadrant. On the
  // near-false side the result resolves to QF-bottom, and renderers may
  // print the dual "QF-bottom/top" form.
  bool boundary = false;
};

// Threshold classifier over the certainty/contradiction plane.
// Extreme checks run in the order t, F, top, bottom with last-write-wins on
// overlap; the four quadrant checks likewise overwrite in listed order.
inline ParaAnalysis classify_point(const CertaintyPoint& p,
                                   const ControlValues& cv = {},
                                   TieBreak tie = TieBreak::magnitude) {
  cv.validate();
  const double dc = p.dc;
  const double dct = p.dct;

  bool assigned = false;
  LogicalState s = LogicalState::bottom;
  auto set = [&](LogicalState v) {
    s = v;
    assigned = true;
  };

  if (dc >= cv.vcve) set(LogicalState::t);
  if (dc <= cv.vcfa) set(LogicalState::f);
  if (dct >= cv.vcic) set(LogicalState::top);
  if (dct <= cv.vcpa) set(LogicalState::bottom);

  bool boundary = false;
  if (!assigned) {
    const bool cert_side = tie == TieBreak::magnitude
                               ? std::abs(dc) >= std::abs(dct)
                               : dc >= dct;
    if (dc >= 0.0 && dct >= 0.0)
      set(cert_side ? LogicalState::qt_top : LogicalState::q_top_t);
    if (dc >= 0.0 && dct <= 0.0)
      set(cert_side ? LogicalState::qt_bottom : LogicalState::q_bottom_t);
    if (dc <= 0.0 && dct <= 0.0)
      set(cert_side ? LogicalState::qf_bottom : LogicalState::q_bottom_f);
    if (dc <= 0.0 && dct >= 0.0)
      set(cert_side ? LogicalState::qf_top : LogicalState::q_top_f);

    if (dct == 0.0) {
      boundary = true;
      // exact contradiction boundary on the near-false side resolves to
      // the paracomplete flavour
      if (dc <= 0.0) s = LogicalState::qf_bottom;
    }
  }

  return ParaAnalysis{s, p, boundary};
}

inline ParaAnalysis para_analyser(const EvidencePair& e,
                                  const ControlValues& cv = {},
                                  TieBreak tie = TieBreak::magnitude) {
  return classify_point(compute_degrees(e), cv, tie);
}

}  // namespace parafuzzy
