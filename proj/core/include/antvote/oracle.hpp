#pragma once

#include <optional>
#include <vector>

#include "antvote/threshold.hpp"

namespace antvote {

// Independent numeric sandwich for the threshold at one alpha, obtained by
// optimizing min(xi_h, xi_l) over the minority parameterization
// (beta_h1, beta_l0) with the type-0 share equalized by bisection, and
// combining with the closed biased-coalition floor.  lower only counts
// points whose equalized share leaves enough agents on both sides.
struct NumericBounds {
  double lower = 0.0;
  double upper = 0.0;
  double argmax_beta_h1 = 0.0;
  double argmax_beta_l0 = 0.0;
  double argmax_gamma = 0.0;
};
NumericBounds numeric_xi_bounds(const SignalModel& s, double alpha,
                                double resolution = 1e-3);

// Closed-form curve checked against the numeric sandwich on a grid of
// alphas.
struct CurvePointReport {
  double alpha = 0.0;
  Segment segment = Segment::Flat;
  double closed = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool pass = false;
};
struct CurveReport {
  std::vector<CurvePointReport> points;
  double max_abs_dev = 0.0;  // max |closed - upper|
  bool all_pass = false;
};
CurveReport verify_curve(const SignalModel& s,
                         const std::vector<double>& alpha_grid,
                         double tol = 2e-3, double resolution = 1e-3);

// Segment boundaries re-derived by bisection, independent of their closed
// forms.  The steep/nonlinear boundary is the crossing of the nonlinear
// branch with the steep line; the nonlinear/tail boundary is where the
// interior optimum b_star reaches 1.  Throws NoBracket when the respective
// sign change does not exist (empty segment).
double boundary_root_steep_nl(const SignalModel& s, double tol = 1e-9);
double boundary_root_nl_tail(const SignalModel& s, double tol = 1e-9);

}  // namespace antvote
