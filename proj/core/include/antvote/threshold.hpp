#pragma once

#include "antvote/model.hpp"

namespace antvote {

// Segments of the robustness threshold curve xi*(alpha), in decreasing
// alpha order.
enum class Segment {
  StrongEq,   // alpha > theta: every coalition size is tolerated
  Flat,       // constant Delta / (2 p_lL)
  Steep,      // linear Delta (alpha - 1/2) / p_hL
  NonLinear,  // interior-optimum branch
  Tail,       // linear Delta alpha / 2 near alpha = 1/2
};

const char* segment_name(Segment s);

// Majority-share level above which the minority cannot flip the outcome at
// all: theta = 1/2 + p_lH / (2 p_lL).
double theta(const SignalModel& s);

// Boundary between the Steep and NonLinear segments.
double alpha_nl(const SignalModel& s);

// Boundary between the NonLinear and Tail segments, 1/(1 + 2 p_lL - p_hH).
// The Tail segment exists only when this exceeds 1/2.
double tail_boundary(const SignalModel& s);
bool has_tail(const SignalModel& s);

// NonLinear branch value; requires the radicand 1 - 2 alpha p_lL >= 0,
// i.e. alpha <= 1/(2 p_lL).
double xi_nl(const SignalModel& s, double alpha);

// The full piecewise threshold.  Boundary alphas resolve to the
// higher-alpha segment.  Above theta the curve is reported as 1.0.
struct ThresholdPoint {
  double alpha = 0.0;
  Segment segment = Segment::Flat;
  double xi_star = 0.0;
};
ThresholdPoint xi_star(const SignalModel& s, double alpha);

// Binding coalition fractions for the two one-sided deviations against a
// grouped profile parameterized by (beta_h1, beta_l0, gamma): type-1
// minority plays (1, beta_h1), type-0 plays (beta_l0, 0), gamma is the
// type-0 fraction.  xi_h guards the high-state margin, xi_l the low-state
// margin.
struct XiPair {
  double xi_h = 0.0;
  double xi_l = 0.0;
};
XiPair xi_pair(const SignalModel& s, double alpha, double beta_h1,
               double beta_l0, double gamma);

// Majority strategy solving the two binding margin equations.
struct MajoritySolution {
  double beta_l_star = 0.0;
  double beta_h_star = 0.0;
  bool feasible = false;  // both components inside [0,1]
};

// Specialization for the regime where the whole minority votes A on every
// signal (no type-0 agents and beta_h1 = 1).
MajoritySolution majority_solution_seg1(const SignalModel& s, double alpha,
                                        double xi);

// General form against an arbitrary (beta_h1, beta_l0, gamma) minority.
MajoritySolution majority_solution_general(const SignalModel& s, double alpha,
                                           double xi, double beta_h1,
                                           double beta_l0, double gamma);

// For beta_h1 = 1 and a given beta_l0, the type-0 share gamma_hat that
// equalizes the two binding fractions, and the common value xi_hat.
struct HatPoint {
  double gamma_hat = 0.0;
  double xi_hat = 0.0;
};
HatPoint hat_gamma_xi(const SignalModel& s, double alpha, double beta_l0);

// Interior optimum of the NonLinear segment: the optimal 1 - beta_l0
// (b_star), the matching type-0 share, and the resulting threshold value.
// Throws DomainError outside the NonLinear segment.
struct Segment3Params {
  double b_star = 0.0;
  double gamma_star = 0.0;
  double xi_nl = 0.0;
};
Segment3Params segment3_params(const SignalModel& s, double alpha);

// Two independent algebraic forms of gamma_star, used for cross-checks.
double gamma_star_alt1(const SignalModel& s, double alpha);
double gamma_star_alt2(const SignalModel& s, double alpha);

// Signs of d(xi_h)/d(beta_h1) and d(xi_l)/d(beta_h1) along the ray
// 1 - beta_l0 = t * beta_h1.
struct DerivativeSigns {
  int sign_h = 0;
  int sign_l = 0;
};
DerivativeSigns derivative_signs(const SignalModel& s, double alpha,
                                 double gamma, double t);

}  // namespace antvote
