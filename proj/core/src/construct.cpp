#include "antvote/construct.hpp"

#include <algorithm>
#include <cmath>

namespace antvote {

namespace {

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

int majority_count(const Environment& env) {
  int maj = 0;
  for (const auto& g : env.groups)
    if (g.type == AgentType::Majority) maj += g.count;
  return maj;
}

// Assembles the profile and evaluates the analytic worst-case margins.
ConstructionResult finish(const Environment& env, Segment segment,
                          const Strategy& majority, double delta_push,
                          int c0, const Strategy& type0, double xi) {
  const int maj = majority_count(env);
  const int c1 = env.n - maj - c0;
  if (c1 < 0) throw InconsistentCounts("type-0 share exceeds the minority");

  ConstructionResult r;
  r.segment = segment;
  r.majority_strategy = majority;
  r.delta_push = delta_push;
  r.profile.blocks.push_back({maj, AgentType::Majority, majority});
  if (c0 > 0) r.profile.blocks.push_back({c0, AgentType::MinorityType0, type0});
  if (c1 > 0)
    r.profile.blocks.push_back({c1, AgentType::MinorityType1, Strategy{1.0, 1.0}});

  const auto d = deviating_shares(r.profile, env.signal, xi);
  r.margin_h = d.f_H - 0.5;
  r.margin_l = 0.5 - d.f_L;
  r.feasible = r.margin_h > 0.0 && r.margin_l > 0.0 &&
               !classify_strategy(AgentType::Majority, majority, env.signal)
                    .dominated;
  return r;
}

ConstructionResult seg1_construction(const Environment& env, double xi,
                                     Segment segment) {
  const double alpha = env.alpha();
  const auto sol = majority_solution_seg1(env.signal, alpha, xi);
  if (!sol.feasible) {
    throw InfeasibleXi("no majority strategy certifies this xi");
  }
  const auto push =
      push_to_boundary(env.signal, clamp01(sol.beta_l_star),
                       clamp01(sol.beta_h_star));
  return finish(env, segment, push.strategy, push.delta, 0, Strategy{}, xi);
}

}  // namespace

PushResult push_to_boundary(const SignalModel& signal, double beta_l_star,
                            double beta_h_star) {
  if (!(beta_l_star >= 0.0 && beta_l_star <= 1.0 && beta_h_star >= 0.0 &&
        beta_h_star <= 1.0)) {
    throw DomainError("push starting point must lie in [0,1]^2");
  }
  PushResult r;
  if (beta_l_star <= 0.0 || beta_h_star >= 1.0) {
    r.strategy = Strategy{beta_l_star, beta_h_star};
    return r;
  }
  const double down = signal.p_hH + signal.p_hL;
  const double up = signal.p_lH + signal.p_lL;
  r.delta = std::min(beta_l_star / down, (1.0 - beta_h_star) / up);
  r.strategy = Strategy{beta_l_star - r.delta * down,
                        beta_h_star + r.delta * up};
  // Land exactly on the binding boundary.
  if (beta_l_star / down <= (1.0 - beta_h_star) / up) {
    r.strategy.beta_l = 0.0;
  } else {
    r.strategy.beta_h = 1.0;
  }
  return r;
}

ConstructionResult construct_flat(const Environment& env, double xi) {
  const double alpha = env.alpha();
  const SignalModel& s = env.signal;
  // The two-equation system also certifies levels below 1 - alpha above
  // theta, so only the lower end of the range is guarded.
  if (!(alpha >= 1.0 / (2.0 * s.p_lL) - 1e-12)) {
    throw DomainError("alpha is below the flat segment");
  }
  if (!(xi >= 0.0 && xi < s.delta / (2.0 * s.p_lL))) {
    throw InfeasibleXi("xi at or above the flat-segment threshold");
  }
  return seg1_construction(env, xi, Segment::Flat);
}

ConstructionResult construct_above_theta(const Environment& env) {
  const double alpha = env.alpha();
  if (!(alpha >= theta(env.signal) - 1e-12)) {
    throw DomainError("alpha is below the strong-equilibrium threshold");
  }
  // The whole minority may deviate; certify xi = 1 - alpha.
  return seg1_construction(env, 1.0 - alpha, Segment::StrongEq);
}

ConstructionResult construct_steep(const Environment& env, double xi) {
  const double alpha = env.alpha();
  const SignalModel& s = env.signal;
  if (!(alpha > 0.5 && alpha <= 1.0 / (2.0 * s.p_lL) + 1e-12)) {
    throw DomainError("alpha is outside the steep construction's range");
  }
  if (!(xi >= 0.0 && xi < s.delta * (alpha - 0.5) / s.p_hL)) {
    throw InfeasibleXi("xi at or above the steep-segment threshold");
  }
  const double shift = xi * s.p_lL / (alpha * s.delta);
  const double lo = (xi + (alpha - 0.5) * s.p_lH) / (alpha * s.p_hH) - shift;
  const double hi = (alpha - 0.5) * s.p_lL / (alpha * s.p_hL) - shift;
  if (!(lo < hi)) {
    throw InfeasibleXi("empty certifying interval for the steep segment");
  }
  const double delta_mid = 0.5 * (lo + hi);
  const double beta_h =
      clamp01(1.0 + (-0.5 + xi * s.p_lL / s.delta) / alpha + delta_mid);
  return finish(env, Segment::Steep, Strategy{0.0, beta_h}, delta_mid, 0,
                Strategy{}, xi);
}

ConstructionResult construct_nonlinear(const Environment& env, double xi) {
  const double alpha = env.alpha();
  const SignalModel& s = env.signal;
  const auto params = segment3_params(s, alpha);
  if (!(xi >= 0.0 && xi < params.xi_nl)) {
    throw InfeasibleXi("xi at or above the nonlinear-segment threshold");
  }
  const int c0 = static_cast<int>(round_half_away(params.gamma_star * env.n));
  const double gamma_r = static_cast<double>(c0) / env.n;
  const auto sol = majority_solution_general(s, alpha, xi, 1.0,
                                             1.0 - params.b_star, gamma_r);
  if (!sol.feasible) {
    throw InfeasibleXi("no majority strategy certifies this xi");
  }
  const auto push = push_to_boundary(s, clamp01(sol.beta_l_star),
                                     clamp01(sol.beta_h_star));
  return finish(env, Segment::NonLinear, push.strategy, push.delta, c0,
                Strategy{1.0 - params.b_star, 0.0}, xi);
}

ConstructionResult construct_tail(const Environment& env, double xi) {
  const double alpha = env.alpha();
  const SignalModel& s = env.signal;
  if (!has_tail(s) || !(alpha > 0.5 && alpha <= tail_boundary(s) + 1e-12)) {
    throw DomainError("alpha is outside the tail segment");
  }
  if (!(xi >= 0.0 && xi < s.delta * alpha / 2.0)) {
    throw InfeasibleXi("xi at or above the tail-segment threshold");
  }
  const double gamma_star = (1.0 - (s.p_lL + s.p_lH) * alpha) / 2.0;
  const int c0 = static_cast<int>(round_half_away(gamma_star * env.n));
  return finish(env, Segment::Tail, Strategy{0.0, 1.0}, 0.0, c0,
                Strategy{0.0, 0.0}, xi);
}

ConstructionResult construct(const Environment& env, double xi) {
  switch (xi_star(env.signal, env.alpha()).segment) {
    case Segment::StrongEq:
      return construct_above_theta(env);
    case Segment::Flat:
      return construct_flat(env, xi);
    case Segment::Steep:
      return construct_steep(env, xi);
    case Segment::NonLinear:
      return construct_nonlinear(env, xi);
    case Segment::Tail:
      return construct_tail(env, xi);
  }
  throw DomainError("unreachable segment");
}

}  // namespace antvote
