#include "parafuzzy/pal2v.hpp"

#include <random>

#include "catch_amalgamated.hpp"
#include "support/region_oracle.hpp"

using namespace parafuzzy;

TEST_CASE("evidence pairs reject out-of-range degrees") {
  CHECK_THROWS_AS(EvidencePair(-0.1, 0.5), std::out_of_range);
  CHECK_THROWS_AS(EvidencePair(0.5, 1.1), std::out_of_range);
  CHECK_NOTHROW(EvidencePair(0.0, 1.0));
}

TEST_CASE("degree equations") {
  const CertaintyPoint a = compute_degrees(EvidencePair(0.0800, 0.9200));
  CHECK_THAT(a.dc, Catch::Matchers::WithinAbs(-0.8400, 1e-12));
  CHECK_THAT(a.dct, Catch::Matchers::WithinAbs(0.0, 1e-12));

  const CertaintyPoint b = compute_degrees(EvidencePair(1.0, 0.0));
  CHECK(b.dc == 1.0);
  CHECK(b.dct == 0.0);

  const CertaintyPoint c = compute_degrees(EvidencePair(0.5, 0.5));
  CHECK(c.dc == 0.0);
  CHECK_THAT(c.dct, Catch::Matchers::WithinAbs(0.0, 1e-15));

  const CertaintyPoint d = compute_degrees(EvidencePair(0.5331, 0.4669));
  CHECK_THAT(d.dc, Catch::Matchers::WithinAbs(0.0662, 1e-12));
  CHECK_THAT(d.dct, Catch::Matchers::WithinAbs(0.0, 1e-12));
}

TEST_CASE("lattice corners") {
  CHECK(compute_degrees(EvidencePair(1, 0)).dc == 1.0);
  CHECK(compute_degrees(EvidencePair(1, 0)).dct == 0.0);
  CHECK(compute_degrees(EvidencePair(0, 1)).dc == -1.0);
  CHECK(compute_degrees(EvidencePair(0, 1)).dct == 0.0);
  CHECK(compute_degrees(EvidencePair(1, 1)).dc == 0.0);
  CHECK(compute_degrees(EvidencePair(1, 1)).dct == 1.0);
  CHECK(compute_degrees(EvidencePair(0, 0)).dc == 0.0);
  CHECK(compute_degrees(EvidencePair(0, 0)).dct == -1.0);
}

TEST_CASE("negation swaps the annotation") {
  CHECK(negate(EvidencePair(1, 0)) == EvidencePair(0, 1));
  CHECK(negate(EvidencePair(1, 1)) == EvidencePair(1, 1));
  CHECK(negate(EvidencePair(0.08, 0.92)) == EvidencePair(0.92, 0.08));

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const EvidencePair e(uni(rng), uni(rng));
    CHECK(negate(negate(e)) == e);
    const CertaintyPoint p = compute_degrees(e);
    const CertaintyPoint q = compute_degrees(negate(e));
    CHECK_THAT(q.dc, Catch::Matchers::WithinAbs(-p.dc, 1e-15));
    CHECK_THAT(q.dct, Catch::Matchers::WithinAbs(p.dct, 1e-15));
  }
}

TEST_CASE("evidence round-trips through the lattice coordinates") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const EvidencePair e(uni(rng), uni(rng));
    const CertaintyPoint p = compute_degrees(e);
    CHECK(p.dc >= -1.0);
    CHECK(p.dc <= 1.0);
    CHECK(p.dct >= -1.0);
    CHECK(p.dct <= 1.0);
    const double mu = (p.dc + p.dct + 1.0) / 2.0;
    const double lambda = (p.dct - p.dc + 1.0) / 2.0;
    CHECK_THAT(mu, Catch::Matchers::WithinAbs(e.mu(), 1e-12));
    CHECK_THAT(lambda, Catch::Matchers::WithinAbs(e.lambda(), 1e-12));
  }
}

TEST_CASE("control values validate their ordering") {
  ControlValues bad;
  bad.vcve = -0.1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  ControlValues ok;
  CHECK_NOTHROW(ok.validate());
}

TEST_CASE("analyser extreme states") {
  CHECK(para_analyser(EvidencePair(0.9200, 0.0800)).state == LogicalState::t);
  CHECK(para_analyser(EvidencePair(0.0800, 0.9200)).state == LogicalState::f);
  // (1,1): dc = 0, dct = +1; the inconsistency threshold fires and the
  // paracomplete check does not
  CHECK(para_analyser(EvidencePair(1, 1)).state == LogicalState::top);
  CHECK(para_analyser(EvidencePair(0, 0)).state == LogicalState::bottom);
}

TEST_CASE("analyser near-false example") {
  const ParaAnalysis r = para_analyser(EvidencePair(0.4392, 0.5609));
  CHECK_THAT(r.point.dc, Catch::Matchers::WithinAbs(-0.1217, 1e-12));
  CHECK_THAT(r.point.dct, Catch::Matchers::WithinAbs(0.0001, 1e-12));
  const std::string label = state_label(r.state);
  CHECK(label.rfind("QF", 0) == 0);
}

TEST_CASE("dct boundary resolves to the paracomplete flavour and is flagged") {
  // 0.375 + 0.625 is exactly 1 in binary, so dct lands on the boundary
  const ParaAnalysis r = para_analyser(EvidencePair(0.375, 0.625));
  CHECK(r.point.dct == 0.0);
  CHECK(r.state == LogicalState::qf_bottom);
  CHECK(r.boundary);

  const ParaAnalysis t_side = para_analyser(EvidencePair(0.625, 0.375));
  CHECK(t_side.state == LogicalState::qt_bottom);
  CHECK(t_side.boundary);

  const ParaAnalysis off = para_analyser(EvidencePair(0.4392, 0.5609));
  CHECK_FALSE(off.boundary);
}

TEST_CASE("analyser is total and matches the region picture on the grid") {
  int checked = 0;
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const double mu = i * 0.05;
      const double lambda = j * 0.05;
      const ParaAnalysis r = para_analyser(EvidencePair(mu, lambda));
      const int idx = state_index(r.state);
      REQUIRE(idx >= 1);
      REQUIRE(idx <= 12);
      const LogicalState expected = pf_test::region_oracle(mu, lambda);
      INFO("mu=" << mu << " lambda=" << lambda << " analyser="
                 << state_label(r.state)
                 << " oracle=" << state_label(expected));
      CHECK(r.state == expected);
      ++checked;
    }
  }
  CHECK(checked == 441);
}

TEST_CASE("literal signed comparison never selects the contradiction family "
          "below the diagonal") {
  // dc >= dct always holds in the true-paracomplete quadrant, so the
  // literal variant collapses it to one state; the magnitude variant splits
  // it along the diagonal
  const EvidencePair e(0.6, 0.2);  // dc = 0.4, dct = -0.2
  CHECK(para_analyser(e, {}, TieBreak::magnitude).state ==
        LogicalState::qt_bottom);
  CHECK(para_analyser(e, {}, TieBreak::signed_compare).state ==
        LogicalState::qt_bottom);

  const EvidencePair f(0.45, 0.25);  // dc = 0.2, dct = -0.3
  CHECK(para_analyser(f, {}, TieBreak::magnitude).state ==
        LogicalState::q_bottom_t);
  CHECK(para_analyser(f, {}, TieBreak::signed_compare).state ==
        LogicalState::qt_bottom);
}

TEST_CASE("custom control values widen the extreme regions") {
  ControlValues cv;
  cv.vcve = 0.3;
  cv.vcfa = -0.3;
  cv.vcic = 0.3;
  cv.vcpa = -0.3;
  CHECK(para_analyser(EvidencePair(0.7, 0.3), cv).state == LogicalState::t);
  // both the certainty and uncertainty thresholds arm; the paracomplete
  // check runs last and wins
  CHECK(para_analyser(EvidencePair(0.65, 0.0), cv).state ==
        LogicalState::bottom);
}

TEST_CASE("state bookkeeping helpers") {
  CHECK(state_index(LogicalState::bottom) == 1);
  CHECK(state_index(LogicalState::q_bottom_t) == 12);
  CHECK(state_from_index(10) == LogicalState::t);
  CHECK_THROWS_AS(state_from_index(0), std::out_of_range);
  CHECK(mirror_state(LogicalState::t) == LogicalState::f);
  CHECK(mirror_state(LogicalState::qt_bottom) == LogicalState::qf_bottom);
  CHECK(mirror_state(LogicalState::top) == LogicalState::top);
  for (int i = 1; i <= 12; ++i) {
    const LogicalState s = state_from_index(i);
    CHECK(mirror_state(mirror_state(s)) == s);
    CHECK(state_from_key(state_key(s)) == s);
  }
}
