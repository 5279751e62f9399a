#pragma once

#include "antvote/deviation.hpp"
#include "antvote/threshold.hpp"

namespace antvote {

// Moves an interior majority strategy to the non-dominated boundary along
// the direction that raises both worst-case margins: beta_l decreases by
// delta*(p_hH + p_hL) while beta_h increases by delta*(p_lH + p_lL), with
// delta chosen maximal subject to staying inside [0,1]^2.
struct PushResult {
  Strategy strategy;
  double delta = 0.0;
};
PushResult push_to_boundary(const SignalModel& signal, double beta_l_star,
                            double beta_h_star);

// A certified profile for the environment at robustness level xi, together
// with the analytic worst-case margins of the two one-sided coalition
// deviations.  `feasible` is false when the construction lands on a
// zero-margin boundary (e.g. alpha exactly at the strong-equilibrium
// threshold).
struct ConstructionResult {
  GroupedProfile profile;
  Segment segment = Segment::Flat;
  Strategy majority_strategy;
  double delta_push = 0.0;
  double margin_h = 0.0;
  double margin_l = 0.0;
  bool feasible = false;
};

// Flat segment: whole minority always-A, majority from the two-equation
// system pushed to the boundary.  Requires alpha >= 1/(2 p_lL).
ConstructionResult construct_flat(const Environment& env, double xi);

// Above theta the construction tolerates the entire minority deviating;
// equivalent to the flat construction at xi = 1 - alpha.
ConstructionResult construct_above_theta(const Environment& env);

// Steep segment: whole minority always-A, majority at (0, beta_h) with
// beta_h at the midpoint of the certifying interval.
ConstructionResult construct_steep(const Environment& env, double xi);

// NonLinear segment: minority split into a type-0 share at the interior
// optimum and an always-A remainder; majority solved against it and pushed.
ConstructionResult construct_nonlinear(const Environment& env, double xi);

// Tail segment: informative majority, type-0 share always-R, remainder
// always-A.
ConstructionResult construct_tail(const Environment& env, double xi);

// Dispatches on the segment of the environment's realized majority share.
ConstructionResult construct(const Environment& env, double xi);

}  // namespace antvote
