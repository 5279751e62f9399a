#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "antvote/model.hpp"
#include "doctest.h"

using namespace antvote;

namespace {
const SignalModel kSig = validate_signal(0.7, 0.3, 0.2, 0.8);
}

TEST_CASE("signal validation and canonical orientation") {
  CHECK(kSig.p_hH == doctest::Approx(0.7));
  CHECK(kSig.p_lL == doctest::Approx(0.8));
  CHECK(kSig.delta == doctest::Approx(0.5));
  CHECK_FALSE(kSig.swapped);

  // Feeding the mirror image must relabel back to the same canonical model.
  const auto sw = validate_signal(0.8, 0.2, 0.3, 0.7);
  CHECK(sw.swapped);
  CHECK(sw.p_hH == 0.7);
  CHECK(sw.p_lH == 0.3);
  CHECK(sw.p_hL == 0.2);
  CHECK(sw.p_lL == 0.8);

  CHECK_THROWS_AS(validate_signal(0.7, 0.2, 0.2, 0.8), InvalidProbability);
  CHECK_THROWS_AS(validate_signal(1.1, -0.1, 0.2, 0.8), InvalidProbability);
  CHECK_THROWS_AS(validate_signal(0.5, 0.5, 0.5, 0.5), NonInformative);
  CHECK_THROWS_AS(validate_signal(0.2, 0.8, 0.7, 0.3), NonInformative);
}

TEST_CASE("delta forms agree") {
  CHECK(delta(kSig) == doctest::Approx(kSig.p_lL - kSig.p_lH).epsilon(1e-14));
  CHECK(delta(kSig) ==
        doctest::Approx(kSig.p_hH * kSig.p_lL - kSig.p_hL * kSig.p_lH)
            .epsilon(1e-14));
  CHECK(delta(kSig) ==
        doctest::Approx(kSig.p_hH + kSig.p_lL - 1.0).epsilon(1e-14));
}

TEST_CASE("prior validation") {
  const auto pr = make_prior(0.6, 0.4);
  CHECK(pr.p_H == 0.6);
  CHECK_THROWS_AS(make_prior(0.6, 0.3), InvalidProbability);
  CHECK_THROWS_AS(make_prior(1.0, 0.0), InvalidProbability);
}

TEST_CASE("utility table shapes") {
  CHECK(default_majority_utility().majority_shape());
  CHECK_FALSE(default_majority_utility().minority_shape());
  CHECK(default_minority_utility().minority_shape());
  CHECK(default_majority_utility().bound() == 4);
  CHECK(default_minority_utility().bound() == 3);
}

TEST_CASE("dominance classification") {
  // Majority: non-dominated iff beta_l = 0 or beta_h = 1.
  CHECK_FALSE(classify_strategy(AgentType::Majority, {0.0, 0.7}, kSig).dominated);
  CHECK_FALSE(classify_strategy(AgentType::Majority, {0.3, 1.0}, kSig).dominated);
  const auto c = classify_strategy(AgentType::Majority, {0.2, 0.8}, kSig);
  CHECK(c.dominated);
  // Witness stays inside the square and strictly improves both gaps.
  CHECK(c.witness.beta_l >= 0.0);
  CHECK(c.witness.beta_h <= 1.0);
  const double r = (kSig.p_hH + kSig.p_hL) / (kSig.p_lH + kSig.p_lL);
  CHECK(c.witness.beta_h - 0.8 == doctest::Approx((0.2 - c.witness.beta_l) / r));

  // Minority: non-dominated iff beta_l = 1 or beta_h = 0.
  CHECK_FALSE(
      classify_strategy(AgentType::MinorityType1, {1.0, 0.4}, kSig).dominated);
  CHECK_FALSE(
      classify_strategy(AgentType::MinorityType0, {0.4, 0.0}, kSig).dominated);
  const auto m = classify_strategy(AgentType::MinorityType1, {0.5, 0.5}, kSig);
  CHECK(m.dominated);
  CHECK(m.witness.beta_h < 0.5);
  CHECK(m.witness.beta_l > 0.5);
}

TEST_CASE("rounding half away from zero") {
  CHECK(round_half_away(5.5) == 6);
  CHECK(round_half_away(4.5) == 5);
  CHECK(round_half_away(-5.5) == -6);
  CHECK(round_half_away(2.4) == 2);
}

TEST_CASE("environment from targets") {
  const auto env = build_environment(
      1001, make_prior(0.6, 0.4), kSig, 0.65, 0.1, default_majority_utility(),
      default_minority_utility(), {0.0, 1.0}, {0.0, 0.0}, {1.0, 1.0});
  CHECK(env.n == 1001);
  int maj = 0, min0 = 0, min1 = 0;
  for (const auto& g : env.groups) {
    if (g.type == AgentType::Majority) maj += g.count;
    if (g.type == AgentType::MinorityType0) min0 += g.count;
    if (g.type == AgentType::MinorityType1) min1 += g.count;
  }
  CHECK(maj == 651);
  CHECK(min0 == 100);
  CHECK(min1 == 250);
  CHECK(env.alpha() == doctest::Approx(651.0 / 1001.0));
  CHECK(env.gamma() == doctest::Approx(100.0 / 1001.0));
  CHECK(env.max_utility_bound() == 4);
}

TEST_CASE("environment validation rejects bad inputs") {
  const auto pr = make_prior(0.6, 0.4);
  // No strict majority.
  CHECK_THROWS_AS(build_environment(10, pr, kSig, 0.5, 0.0,
                                    default_majority_utility(),
                                    default_minority_utility(), {0.0, 1.0},
                                    {0.0, 0.0}, {1.0, 1.0}),
                  DomainError);
  // Type-0 must keep beta_h = 0.
  std::vector<AgentGroup> groups{
      {7, AgentType::Majority, default_majority_utility(), {0.0, 1.0}},
      {3, AgentType::MinorityType0, default_minority_utility(), {0.5, 0.5}}};
  CHECK_THROWS_AS(build_environment(10, pr, kSig, groups), DomainError);
  // Dominated strategy rejected in strict mode, accepted otherwise.
  std::vector<AgentGroup> dominated{
      {7, AgentType::Majority, default_majority_utility(), {0.2, 0.8}},
      {3, AgentType::MinorityType1, default_minority_utility(), {1.0, 1.0}}};
  CHECK_THROWS_AS(build_environment(10, pr, kSig, dominated),
                  DominatedStrategy);
  CHECK_NOTHROW(build_environment(10, pr, kSig, dominated, /*strict=*/false));
}
