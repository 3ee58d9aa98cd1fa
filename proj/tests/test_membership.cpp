#include "parafuzzy/membership.hpp"

#include <random>

#include "catch_amalgamated.hpp"

using namespace parafuzzy;

namespace {

PiecewiseLinearMembership scatex_proc_f1() {
  return parse_membership("proc.function1", "(0,0;0,1;15,1;50,0)");
}

}  // namespace

TEST_CASE("vertex lists validate") {
  CHECK_THROWS_AS(PiecewiseLinearMembership("bad", {{0, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseLinearMembership("bad", {{1, 0}, {0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseLinearMembership("bad", {{0, 0}, {1, 1.5}}),
                  std::invalid_argument);
}

TEST_CASE("tuple parsing") {
  const PiecewiseLinearMembership f = scatex_proc_f1();
  REQUIRE(f.vertices().size() == 4);
  CHECK(f.vertices()[0] == Vertex{0, 0});
  CHECK(f.vertices()[3] == Vertex{50, 0});
  CHECK_THROWS_AS(parse_membership("bad", "(0;1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_membership("bad", "(a,b)"), std::invalid_argument);
}

TEST_CASE("plateau trapezoid evaluation") {
  const PiecewiseLinearMembership f = scatex_proc_f1();
  CHECK(f.evaluate(1.0) == 1.0);
  CHECK(f.evaluate(0.0) == 1.0);  // vertical first segment anchors 1 at 0
  CHECK_THAT(f.evaluate(32.5), Catch::Matchers::WithinAbs(0.5, 1e-15));
  CHECK(f.evaluate(60.0) == 0.0);
  CHECK(f.evaluate(-1.0) == 0.0);
}

TEST_CASE("left-anchored output triangle evaluates through its vertical edge") {
  const PiecewiseLinearMembership f4 =
      parse_membership("function4", "(0,0;0,1;0,1;0.5,0)");
  CHECK(f4.evaluate(0.0) == 1.0);
  CHECK_THAT(f4.evaluate(0.25), Catch::Matchers::WithinAbs(0.5, 1e-15));
  CHECK(f4.evaluate(0.5) == 0.0);
  CHECK(f4.evaluate(0.6) == 0.0);
}

TEST_CASE("norms") {
  CHECK(tnorm_min(0.3, 0.7) == 0.3);
  CHECK(tconorm_max(0.3, 0.7) == 0.7);
  CHECK(tnorm_min(1.0, 0.42) == 0.42);
  CHECK(tconorm_max(1.0, 0.42) == 1.0);
  CHECK(tnorm_min(0.0, 0.0) == 0.0);
  CHECK(tconorm_max(0.0, 0.0) == 0.0);
}

TEST_CASE("single full-strength activation reproduces its consequent") {
  const PiecewiseLinearMembership tri =
      PiecewiseLinearMembership("tri", {{-1, 0}, {0, 1}, {1, 0}});
  const FuzzySet agg = mamdani_infer({RuleActivation{&tri, 1.0}});
  for (double x = -1.0; x <= 1.0; x += 0.01)
    CHECK_THAT(agg.membership.evaluate(x),
               Catch::Matchers::WithinAbs(tri.evaluate(x), 1e-12));
}

TEST_CASE("zero-strength activations vanish") {
  const PiecewiseLinearMembership t =
      PiecewiseLinearMembership("t", {{-1, 0}, {0, 1}, {1, 0}});
  const PiecewiseLinearMembership s =
      PiecewiseLinearMembership("s", {{0, 0}, {1, 1}, {2, 0}});
  const FuzzySet agg =
      mamdani_infer({RuleActivation{&t, 0.0}, RuleActivation{&s, 0.6}});
  for (double x = 0.0; x <= 2.0; x += 0.01)
    CHECK_THAT(agg.membership.evaluate(x),
               Catch::Matchers::WithinAbs(std::min(s.evaluate(x), 0.6), 1e-12));
  CHECK(agg.membership.evaluate(-0.5) == 0.0);
}

TEST_CASE("aggregation matches a dense-grid direct evaluation") {
  const PiecewiseLinearMembership a =
      PiecewiseLinearMembership("a", {{0, 0}, {0.4, 1}, {0.8, 0}});
  const PiecewiseLinearMembership b =
      PiecewiseLinearMembership("b", {{0.3, 0}, {0.7, 1}, {1.1, 0}});
  const FuzzySet agg =
      mamdani_infer({RuleActivation{&a, 0.5}, RuleActivation{&b, 0.5}});
  for (int i = 0; i <= 1100; ++i) {
    const double x = i * 1e-3;
    const double direct =
        std::max(std::min(a.evaluate(x), 0.5), std::min(b.evaluate(x), 0.5));
    CHECK_THAT(agg.membership.evaluate(x),
               Catch::Matchers::WithinAbs(direct, 1e-12));
  }
}

TEST_CASE("aggregate never exceeds the strongest activation") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double peak1 = uni(rng), peak2 = uni(rng);
    const PiecewiseLinearMembership f1(
        "f1", {{peak1 - 0.5, 0}, {peak1, 1}, {peak1 + 0.5, 0}});
    const PiecewiseLinearMembership f2(
        "f2", {{peak2 - 0.5, 0}, {peak2, 1}, {peak2 + 0.5, 0}});
    const double s1 = uni(rng), s2 = uni(rng);
    if (s1 == 0.0 && s2 == 0.0) continue;
    const FuzzySet agg =
        mamdani_infer({RuleActivation{&f1, s1}, RuleActivation{&f2, s2}});
    const double cap = std::max(s1, s2);
    for (double x = -0.5; x <= 1.5; x += 0.05) {
      CHECK(agg.membership.evaluate(x) <= cap + 1e-12);
      CHECK(agg.membership.evaluate(x) <= 1.0);
    }
  }
}

TEST_CASE("empty activation list is an error") {
  std::vector<RuleActivation> none;
  CHECK_THROWS_AS(mamdani_infer(std::span<const RuleActivation>(none)),
                  std::invalid_argument);
}

TEST_CASE("centroid of symmetric and degenerate shapes") {
  const PiecewiseLinearMembership tri(
      "tri", {{-1, 0}, {0, 1}, {1, 0}});
  CHECK_THAT(defuzzify_centroid(FuzzySet(tri, {-1, 1})),
             Catch::Matchers::WithinAbs(0.0, 1e-15));

  const PiecewiseLinearMembership right(
      "right", {{0, 0}, {0, 1}, {0.5, 0}});
  CHECK_THAT(defuzzify_centroid(FuzzySet(right, {0, 1})),
             Catch::Matchers::WithinAbs(1.0 / 6.0, 1e-12));

  const PiecewiseLinearMembership rect(
      "rect", {{0.2, 0.7}, {0.8, 0.7}});
  CHECK_THAT(defuzzify_centroid(FuzzySet(rect, {0, 1})),
             Catch::Matchers::WithinAbs(0.5, 1e-12));

  const PiecewiseLinearMembership zero("zero", {{0, 0}, {1, 0}});
  CHECK_THROWS_AS(defuzzify_centroid(FuzzySet(zero, {0, 1})),
                  std::domain_error);
}

TEST_CASE("centroid stays within the support hull") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> uni(0.05, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double peak1 = uni(rng) * 2 - 1, peak2 = uni(rng) * 2 - 1;
    const PiecewiseLinearMembership f1(
        "f1", {{peak1 - 0.3, 0}, {peak1, 1}, {peak1 + 0.3, 0}});
    const PiecewiseLinearMembership f2(
        "f2", {{peak2 - 0.3, 0}, {peak2, 1}, {peak2 + 0.3, 0}});
    const FuzzySet agg = mamdani_infer(
        {RuleActivation{&f1, uni(rng)}, RuleActivation{&f2, uni(rng)}});
    const double c = defuzzify_centroid(agg);
    CHECK(c >= std::min(peak1, peak2) - 0.3);
    CHECK(c <= std::max(peak1, peak2) + 0.3);
  }
}

TEST_CASE("clip then aggregate equals aggregate then clip for one rule") {
  const PiecewiseLinearMembership tri(
      "tri", {{0, 0}, {0.5, 1}, {1, 0}});
  const FuzzySet clipped = mamdani_infer({RuleActivation{&tri, 0.4}});
  const FuzzySet full = mamdani_infer({RuleActivation{&tri, 1.0}});
  for (double x = 0.0; x <= 1.0; x += 0.01)
    CHECK_THAT(clipped.membership.evaluate(x),
               Catch::Matchers::WithinAbs(
                   std::min(full.membership.evaluate(x), 0.4), 1e-12));
}

TEST_CASE("fuzzy set universe must contain the support") {
  const PiecewiseLinearMembership tri(
      "tri", {{0, 0}, {0.5, 1}, {1, 0}});
  CHECK_THROWS_AS(FuzzySet(tri, {0.2, 1.0}), std::invalid_argument);
}
