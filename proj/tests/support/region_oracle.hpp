#pragma once

// Test-only classifier over the annotation lattice, written directly from
// the region picture rather than from threshold bookkeeping: each of the
// twelve regions is an explicit predicate on (dc, dct), scanned in a fixed
// precedence order. Boundary conventions, spelled out:
//   - the paracomplete corner triangle owns its whole boundary, then the
//     inconsistent corner, then false, then true;
//   - inside the central square, quadrants are scanned false-inconsistent,
//     false-paracomplete, true-paracomplete, true-inconsistent, each owning
//     its closed edges in that order;
//   - the quadrant diagonal goes to the certainty-named family when
//     |dc| >= |dct|;
//   - the dct = 0 line inside the near-false quadrants resolves to the
//     paracomplete flavour (the dual-label boundary).
// Used as the independent cross-check for the threshold analyser.

#include "parafuzzy/pal2v.hpp"

namespace pf_test {

inline parafuzzy::LogicalState region_oracle(double mu, double lambda) {
  using parafuzzy::LogicalState;
  const double dc = mu - lambda;
  const double dct = mu + lambda - 1.0;

  if (dct <= -0.5) return LogicalState::bottom;
  if (dct >= 0.5) return LogicalState::top;
  if (dc <= -0.5) return LogicalState::f;
  if (dc >= 0.5) return LogicalState::t;

  const bool cert_family = std::abs(dc) >= std::abs(dct);

  if (dct == 0.0 && dc <= 0.0) return LogicalState::qf_bottom;

  if (dc <= 0.0 && dct >= 0.0)
    return cert_family ? LogicalState::qf_top : LogicalState::q_top_f;
  if (dc <= 0.0 && dct <= 0.0)
    return cert_family ? LogicalState::qf_bottom : LogicalState::q_bottom_f;
  if (dc >= 0.0 && dct <= 0.0)
    return cert_family ? LogicalState::qt_bottom : LogicalState::q_bottom_t;
  return cert_family ? LogicalState::qt_top : LogicalState::q_top_t;
}

}  // namespace pf_test
