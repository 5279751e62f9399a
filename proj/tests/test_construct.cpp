#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "antvote/construct.hpp"
#include "antvote/voteshare.hpp"
#include "doctest.h"

using namespace antvote;

namespace {

const SignalModel kSig = validate_signal(0.7, 0.3, 0.2, 0.8);
const Prior kPrior = make_prior(0.6, 0.4);

Environment env_at(double alpha, int n = 2001) {
  return build_environment(n, kPrior, kSig, alpha, 0.0,
                           default_majority_utility(),
                           default_minority_utility(), {0.0, 1.0}, {0.0, 0.0},
                           {1.0, 1.0});
}

Strategy majority_strategy(const GroupedProfile& p) {
  for (const auto& b : p.blocks)
    if (b.type == AgentType::Majority) return b.strategy;
  return {};
}

}  // namespace

TEST_CASE("push to the non-dominated boundary") {
  // Interior point moves along (-(p_hH + p_hL), +(p_lH + p_lL)).
  const auto r = push_to_boundary(kSig, 0.0584615384615384, 0.92);
  CHECK(r.delta == doctest::Approx(0.0649572649572649).epsilon(1e-12));
  CHECK(r.strategy.beta_l == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r.strategy.beta_h ==
        doctest::Approx(0.991452991452992).epsilon(1e-12));

  // Already on the boundary: unchanged.
  const auto b = push_to_boundary(kSig, 0.0, 0.5);
  CHECK(b.delta == 0.0);
  CHECK(b.strategy.beta_l == 0.0);
  CHECK(b.strategy.beta_h == 0.5);
}

TEST_CASE("flat construction") {
  const auto env = env_at(0.65, 2000);  // exact alpha with even n
  const auto r = construct_flat(env, 0.28);
  CHECK(r.feasible);
  CHECK(r.segment == Segment::Flat);
  CHECK(r.majority_strategy.beta_l == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r.majority_strategy.beta_h ==
        doctest::Approx(0.991452991452992).epsilon(1e-12));
  CHECK(r.margin_h == doctest::Approx(0.0211111111111111).epsilon(1e-9));
  CHECK(r.margin_l == doctest::Approx(0.0211111111111111).epsilon(1e-9));

  // At the segment cap there is nothing left to certify.
  CHECK_THROWS_AS(construct_flat(env, 0.3125), InfeasibleXi);
}

TEST_CASE("construction above the strong-equilibrium threshold") {
  const auto env = env_at(0.7, 2000);
  const auto r = construct_above_theta(env);
  CHECK(r.feasible);
  CHECK(r.majority_strategy.beta_h == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.majority_strategy.beta_l ==
        doctest::Approx(0.0909090909090909).epsilon(1e-12));
  CHECK(r.margin_h == doctest::Approx(0.00909090909090906).epsilon(1e-9));
  CHECK(r.margin_l == doctest::Approx(r.margin_h).epsilon(1e-9));

  // Exactly at theta the tolerated fraction forces a zero margin.
  const auto edge = construct_above_theta(env_at(0.6875, 2000));
  CHECK_FALSE(edge.feasible);
  CHECK(edge.majority_strategy.beta_h == doctest::Approx(1.0));
  CHECK(std::abs(edge.margin_l) < 1e-9);
}

TEST_CASE("steep construction") {
  const auto env = env_at(0.6, 2000);
  const auto r = construct_steep(env, 0.2);
  CHECK(r.feasible);
  CHECK(r.majority_strategy.beta_l == 0.0);
  CHECK(r.majority_strategy.beta_h ==
        doctest::Approx(0.773809523809524).epsilon(1e-12));
  CHECK(r.margin_h == doctest::Approx(0.025).epsilon(1e-9));
  CHECK(r.margin_l == doctest::Approx(0.00714285714285712).epsilon(1e-9));

  const auto f = expected_vote_shares(r.profile, kSig);
  CHECK(f.f_H == doctest::Approx(0.725).epsilon(1e-12));
  CHECK(f.f_L == doctest::Approx(0.492857142857143).epsilon(1e-12));

  CHECK_THROWS_AS(construct_steep(env, 0.25), InfeasibleXi);  // at the cap
}

TEST_CASE("nonlinear construction") {
  const int n = 2001;
  const auto env = env_at(0.54, n);
  const double xi = 0.9 * 0.135180405129031;
  const auto r = construct_nonlinear(env, xi);
  CHECK(r.feasible);
  CHECK(r.segment == Segment::NonLinear);
  CHECK(r.margin_h > 0.0);
  CHECK(r.margin_l > 0.0);

  // The profile realizes the interior-optimum type-0 share by rounding.
  int c0 = 0, c1 = 0;
  for (const auto& b : r.profile.blocks) {
    if (b.type == AgentType::MinorityType0) c0 += b.count;
    if (b.type == AgentType::MinorityType1) c1 += b.count;
  }
  CHECK(c0 == round_half_away(0.209445878461291 * n));
  // Both minority camps stay larger than the tolerated coalition.
  CHECK(c0 > static_cast<int>(std::ceil(xi * n)));
  CHECK(c1 > static_cast<int>(std::ceil(xi * n)));
}

TEST_CASE("tail construction") {
  const auto env = env_at(0.51, 2000);
  const auto r = construct_tail(env, 0.0);
  CHECK(r.feasible);
  CHECK(r.majority_strategy.beta_l == 0.0);
  CHECK(r.majority_strategy.beta_h == 1.0);
  // Both margins equal Delta * alpha / 2 when nothing is tolerated.
  CHECK(r.margin_h == doctest::Approx(0.1275).epsilon(1e-9));
  CHECK(r.margin_l == doctest::Approx(0.1275).epsilon(1e-9));

  const auto f = expected_vote_shares(r.profile, kSig);
  CHECK(f.f_H == doctest::Approx(0.6275).epsilon(1e-9));
  CHECK(f.f_L == doctest::Approx(0.3725).epsilon(1e-9));

  const auto rx = construct_tail(env, 0.1);
  CHECK(rx.margin_h == doctest::Approx(0.1275 - 0.1).epsilon(1e-9));
  CHECK(rx.margin_l == doctest::Approx(0.1275 - 0.1).epsilon(1e-9));
}

TEST_CASE("dispatch picks the segment of the realized share") {
  CHECK(construct(env_at(0.70, 2000), 0.9 * 0.3).segment ==
        Segment::StrongEq);
  CHECK(construct(env_at(0.65, 2000), 0.25).segment == Segment::Flat);
  CHECK(construct(env_at(0.60, 2000), 0.2).segment == Segment::Steep);
  CHECK(construct(env_at(0.54), 0.12).segment == Segment::NonLinear);
  CHECK(construct(env_at(0.51, 2000), 0.1).segment == Segment::Tail);
}

TEST_CASE("constructed strategies are never dominated") {
  for (double a : {0.7, 0.65, 0.6, 0.54, 0.51}) {
    const auto env = env_at(a);
    const double cap =
        std::min(xi_star(kSig, env.alpha()).xi_star, 1.0 - env.alpha());
    const auto r = construct(env, 0.8 * cap);
    for (const auto& b : r.profile.blocks) {
      CHECK_FALSE(classify_strategy(b.type, b.strategy, kSig).dominated);
    }
  }
}
