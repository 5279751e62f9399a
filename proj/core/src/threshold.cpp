#include "antvote/threshold.hpp"

#include <algorithm>
#include <cmath>

namespace antvote {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.5 && alpha <= 1.0)) {
    throw DomainError("alpha must lie in (1/2, 1]");
  }
}

int sgn(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

}  // namespace

const char* segment_name(Segment s) {
  switch (s) {
    case Segment::StrongEq: return "strong";
    case Segment::Flat: return "flat";
    case Segment::Steep: return "steep";
    case Segment::NonLinear: return "nonlinear";
    case Segment::Tail: return "tail";
  }
  return "?";
}

double theta(const SignalModel& s) {
  return 0.5 + s.p_lH / (2.0 * s.p_lL);
}

double alpha_nl(const SignalModel& s) {
  const double phH = s.p_hH, plH = s.p_lH, phL = s.p_hL, plL = s.p_lL;
  const double num = 2.0 * phH * plL * plL + phH * (phH + 3.0 * plL) -
                     (3.0 * phH + plL) + 2.0 -
                     2.0 * phL * std::sqrt(phH * phL * plH * plL);
  const double den = 2.0 * plH * plH + 8.0 * phH * plL * plL;
  return num / den;
}

double tail_boundary(const SignalModel& s) {
  return 1.0 / (1.0 + 2.0 * s.p_lL - s.p_hH);
}

bool has_tail(const SignalModel& s) { return tail_boundary(s) > 0.5; }

double xi_nl(const SignalModel& s, double alpha) {
  const double plH = s.p_lH, plL = s.p_lL;
  const double radicand = 2.0 * (1.0 - alpha * plH) * (1.0 - 2.0 * alpha * plL) *
                          plH * plL;
  if (radicand < 0.0) {
    throw DomainError("nonlinear branch needs alpha <= 1/(2 p_lL)");
  }
  const double den = 4.0 * std::sqrt(radicand) + 2.0 * plH + 4.0 * plL -
                     8.0 * alpha * plH * plL;
  return s.delta / den;
}

ThresholdPoint xi_star(const SignalModel& s, double alpha) {
  check_alpha(alpha);
  ThresholdPoint p;
  p.alpha = alpha;
  if (alpha > theta(s)) {
    p.segment = Segment::StrongEq;
    p.xi_star = 1.0;
    return p;
  }
  if (alpha >= 1.0 / (2.0 * s.p_lL)) {
    p.segment = Segment::Flat;
    p.xi_star = s.delta / (2.0 * s.p_lL);
    return p;
  }
  if (alpha >= alpha_nl(s)) {
    p.segment = Segment::Steep;
    p.xi_star = s.delta * (alpha - 0.5) / s.p_hL;
    return p;
  }
  if (!has_tail(s) || alpha >= tail_boundary(s)) {
    p.segment = Segment::NonLinear;
    p.xi_star = xi_nl(s, alpha);
    return p;
  }
  p.segment = Segment::Tail;
  p.xi_star = s.delta * alpha / 2.0;
  return p;
}

namespace {

void check_minority_params(double alpha, double beta_h1, double beta_l0,
                           double gamma) {
  check_alpha(alpha);
  if (!(beta_h1 >= 0.0 && beta_h1 <= 1.0 && beta_l0 >= 0.0 && beta_l0 <= 1.0)) {
    throw DomainError("beta_h1 and beta_l0 must lie in [0,1]");
  }
  if (!(gamma >= 0.0 && gamma <= 1.0 - alpha + 1e-12)) {
    throw DomainError("gamma must lie in [0, 1 - alpha]");
  }
}

// Denominators of the two binding coalition fractions.
double denom_h(const SignalModel& s, double beta_h1, double beta_l0) {
  return s.p_hH * s.p_lL * beta_h1 + s.p_lH * s.p_lL * (1.0 - beta_l0) +
         s.p_lH;
}

double denom_l(const SignalModel& s, double beta_h1, double beta_l0) {
  return s.p_hH * s.p_hL * beta_h1 + s.p_hH * s.p_lL * (1.0 - beta_l0) +
         s.p_hL;
}

}  // namespace

XiPair xi_pair(const SignalModel& s, double alpha, double beta_h1,
               double beta_l0, double gamma) {
  check_minority_params(alpha, beta_h1, beta_l0, gamma);
  XiPair x;
  x.xi_h = s.delta * (alpha - 0.5 + (1.0 - alpha - gamma) * beta_h1) /
           denom_h(s, beta_h1, beta_l0);
  x.xi_l = s.delta * (alpha - 0.5 + gamma * (1.0 - beta_l0)) /
           denom_l(s, beta_h1, beta_l0);
  return x;
}

MajoritySolution majority_solution_seg1(const SignalModel& s, double alpha,
                                        double xi) {
  check_alpha(alpha);
  MajoritySolution m;
  m.beta_l_star = (alpha - 0.5 - (s.p_hL / s.delta) * xi) / alpha;
  m.beta_h_star = (alpha - 0.5 + (s.p_lL / s.delta) * xi) / alpha;
  m.feasible = m.beta_l_star >= -1e-12 && m.beta_l_star <= 1.0 + 1e-12 &&
               m.beta_h_star >= -1e-12 && m.beta_h_star <= 1.0 + 1e-12;
  return m;
}

MajoritySolution majority_solution_general(const SignalModel& s, double alpha,
                                           double xi, double beta_h1,
                                           double beta_l0, double gamma) {
  check_minority_params(alpha, beta_h1, beta_l0, gamma);
  MajoritySolution m;
  m.beta_l_star = (alpha - 0.5 + gamma * (1.0 - beta_l0)) / alpha -
                  xi / (s.delta * alpha) * denom_l(s, beta_h1, beta_l0);
  m.beta_h_star = (0.5 - (1.0 - alpha - gamma) * beta_h1) / alpha +
                  xi / (s.delta * alpha) * denom_h(s, beta_h1, beta_l0);
  m.feasible = m.beta_l_star >= -1e-12 && m.beta_l_star <= 1.0 + 1e-12 &&
               m.beta_h_star >= -1e-12 && m.beta_h_star <= 1.0 + 1e-12;
  return m;
}

HatPoint hat_gamma_xi(const SignalModel& s, double alpha, double beta_l0) {
  check_alpha(alpha);
  if (!(beta_l0 >= 0.0 && beta_l0 <= 1.0)) {
    throw DomainError("beta_l0 must lie in [0,1]");
  }
  const double b = 1.0 - beta_l0;
  const double den = (s.p_lL * b + s.p_hL) * (s.p_lH * b + s.p_hH + 1.0);
  HatPoint h;
  h.xi_hat = s.delta * (alpha - 0.5 + 0.5 * b) / den;
  h.gamma_hat =
      (0.5 * (s.p_lL * b + s.p_hL + 1.0) -
       alpha * (s.p_hH * s.p_lL + s.p_lH * s.p_lL * b + s.p_lH)) /
      den;
  return h;
}

Segment3Params segment3_params(const SignalModel& s, double alpha) {
  check_alpha(alpha);
  const double lo = std::max(0.5, has_tail(s) ? tail_boundary(s) : 0.5);
  const double hi = alpha_nl(s);
  if (!(alpha >= lo - 1e-12 && alpha < hi)) {
    throw DomainError("alpha is outside the nonlinear segment");
  }
  const double plH = s.p_lH, plL = s.p_lL;
  const double radicand = 2.0 * (1.0 - alpha * plH) *
                          (1.0 - 2.0 * alpha * plL) * plL * plH;
  Segment3Params p;
  p.b_star = (1.0 - 2.0 * alpha) + std::sqrt(radicand) / (plL * plH);
  p.b_star = std::min(1.0, std::max(0.0, p.b_star));
  const auto hat = hat_gamma_xi(s, alpha, 1.0 - p.b_star);
  p.gamma_star = hat.gamma_hat;
  p.xi_nl = xi_nl(s, alpha);
  return p;
}

double gamma_star_alt1(const SignalModel& s, double alpha) {
  const double plH = s.p_lH, plL = s.p_lL;
  const double u = (1.0 - 2.0 * alpha * plL) * (1.0 - alpha * plH);
  const double root =
      std::sqrt(2.0 * (1.0 - alpha * plH) * (1.0 - 2.0 * alpha * plL) * plL *
                plH);
  return (u + 0.5 * (1.0 / plH - 2.0 * alpha) * root) /
         (4.0 * u + (1.0 / plL + 2.0 / plH - 4.0 * alpha) * root);
}

double gamma_star_alt2(const SignalModel& s, double alpha) {
  const double plH = s.p_lH, plL = s.p_lL;
  const double root =
      std::sqrt(2.0 * (1.0 - alpha * plH) * (1.0 - 2.0 * alpha * plL) * plL *
                plH);
  return (2.0 * plL * plL - (3.0 - 2.0 * alpha * plH) * plH * plL +
          plH * root) /
         (2.0 * (2.0 * plL - plH) * (2.0 * plL - plH));
}

DerivativeSigns derivative_signs(const SignalModel& s, double alpha,
                                 double gamma, double t) {
  check_alpha(alpha);
  if (!(gamma >= 0.0 && gamma <= 1.0 - alpha + 1e-12)) {
    throw DomainError("gamma must lie in [0, 1 - alpha]");
  }
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError("ray slope t must be finite and nonnegative");
  }
  DerivativeSigns d;
  d.sign_h = sgn((1.0 - alpha - gamma) * s.p_lH -
                 (alpha - 0.5) * s.p_hH * s.p_lL -
                 (alpha - 0.5) * s.p_lH * s.p_lL * t);
  d.sign_l = sgn(t * (gamma * s.p_hL - (alpha - 0.5) * s.p_hH * s.p_lL) -
                 s.p_hH * s.p_lL * (alpha - 0.5));
  return d;
}

}  // namespace antvote
