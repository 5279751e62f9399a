#include "antvote/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "antvote/parallel.hpp"

namespace antvote {

namespace {

struct Candidate {
  double value = -1.0;
  double beta_h1 = 0.0;
  double beta_l0 = 0.0;
  double gamma = 0.0;
};

double objective(const SignalModel& s, double alpha, double bh1, double bl0,
                 double gamma) {
  const auto x = xi_pair(s, alpha, bh1, bl0, gamma);
  return std::min(x.xi_h, x.xi_l);
}

// xi_h falls and xi_l rises in gamma, so the max of their min over gamma is
// either at an endpoint or where they cross; the crossing is found by
// bisection (64 halvings).
Candidate equalize(const SignalModel& s, double alpha, double bh1,
                   double bl0) {
  const double gmax = 1.0 - alpha;
  auto diff = [&](double g) {
    const auto x = xi_pair(s, alpha, bh1, bl0, g);
    return x.xi_h - x.xi_l;
  };
  Candidate c;
  c.beta_h1 = bh1;
  c.beta_l0 = bl0;
  if (diff(0.0) <= 0.0) {
    c.gamma = 0.0;
  } else if (diff(gmax) >= 0.0) {
    c.gamma = gmax;
  } else {
    double lo = 0.0, hi = gmax;
    for (int it = 0; it < 64; ++it) {
      const double mid = 0.5 * (lo + hi);
      (diff(mid) > 0.0 ? lo : hi) = mid;
    }
    c.gamma = 0.5 * (lo + hi);
  }
  c.value = objective(s, alpha, bh1, bl0, c.gamma);
  return c;
}

// A lower-bound candidate must leave at least the threatened fraction of
// agents available on each minority side.
bool feasible_split(double alpha, double gamma, double value) {
  return value <= gamma + 1e-9 && value <= 1.0 - alpha - gamma + 1e-9;
}

}  // namespace

NumericBounds numeric_xi_bounds(const SignalModel& s, double alpha,
                                double resolution) {
  if (!(alpha > 0.5 && alpha <= theta(s) + 1e-12)) {
    throw DomainError("numeric bounds need 1/2 < alpha <= theta");
  }
  if (!(resolution > 0.0 && resolution < 1.0)) {
    throw DomainError("resolution must lie in (0,1)");
  }

  Candidate best;
  double best_feasible = 0.0;

  auto consider = [&](const Candidate& c) {
    if (c.value > best.value) best = c;
    if (c.value > best_feasible && feasible_split(alpha, c.gamma, c.value)) {
      best_feasible = c.value;
    }
  };

  const double coarse = std::max(resolution, 0.02);
  const int steps = static_cast<int>(std::ceil(1.0 / coarse));
  for (int i = 0; i <= steps; ++i) {
    const double bh1 = std::min(1.0, i * coarse);
    for (int j = 0; j <= steps; ++j) {
      const double bl0 = std::min(1.0, j * coarse);
      consider(equalize(s, alpha, bh1, bl0));
      // Off-crossing gammas for the achievability side.
      const double gmax = 1.0 - alpha;
      for (int g = 0; g <= 40; ++g) {
        const double gamma = gmax * g / 40.0;
        Candidate c{objective(s, alpha, bh1, bl0, gamma), bh1, bl0, gamma};
        consider(c);
      }
    }
  }

  // Coordinate refinement around the incumbent, step shrinking tenfold.
  double step = coarse;
  for (int round = 0; round < 2 || step > resolution; ++round) {
    const double window = step;
    step /= 10.0;
    const Candidate center = best;
    for (int i = -10; i <= 10; ++i) {
      const double bh1 =
          std::clamp(center.beta_h1 + i * window / 10.0, 0.0, 1.0);
      for (int j = -10; j <= 10; ++j) {
        const double bl0 =
            std::clamp(center.beta_l0 + j * window / 10.0, 0.0, 1.0);
        consider(equalize(s, alpha, bh1, bl0));
      }
    }
    if (round > 8) break;
  }

  // Closed biased-coalition floor: one minority side is too small to supply
  // the coalition, certified directly by the aligned-majority system.
  const double floor_bound =
      std::min(s.delta * (alpha - 0.5) / s.p_hL, s.delta / (2.0 * s.p_lL));

  NumericBounds nb;
  nb.upper = std::max(best.value, floor_bound);
  nb.lower = std::max(best_feasible, floor_bound);
  nb.argmax_beta_h1 = best.beta_h1;
  nb.argmax_beta_l0 = best.beta_l0;
  nb.argmax_gamma = best.gamma;
  return nb;
}

CurveReport verify_curve(const SignalModel& s,
                         const std::vector<double>& alpha_grid, double tol,
                         double resolution) {
  CurveReport report;
  report.points.resize(alpha_grid.size());
  parallel_for(alpha_grid.size(), [&](std::size_t i) {
    const double alpha = alpha_grid[i];
    const auto closed = xi_star(s, alpha);
    const auto nb = numeric_xi_bounds(s, alpha, resolution);
    CurvePointReport p;
    p.alpha = alpha;
    p.segment = closed.segment;
    p.closed = closed.xi_star;
    p.lower = nb.lower;
    p.upper = nb.upper;
    p.pass = nb.lower <= closed.xi_star + 1e-9 &&
             std::abs(closed.xi_star - nb.upper) <= tol;
    report.points[i] = p;
  });
  report.all_pass = !report.points.empty();
  for (const auto& p : report.points) {
    report.max_abs_dev = std::max(report.max_abs_dev, std::abs(p.closed - p.upper));
    report.all_pass = report.all_pass && p.pass;
  }
  return report;
}

namespace {

double bisect(double lo, double hi, double flo,
              const std::function<double(double)>& f, double tol) {
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double boundary_root_steep_nl(const SignalModel& s, double tol) {
  const double lo = 0.5 + 1e-9;
  const double hi = 1.0 / (2.0 * s.p_lL) - 1e-12;
  auto f = [&](double a) {
    return xi_nl(s, a) - s.delta * (a - 0.5) / s.p_hL;
  };
  const double flo = f(lo), fhi = f(hi);
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw NoBracket("steep/nonlinear boundary has no sign change");
  }
  return bisect(lo, hi, flo, f, tol);
}

double boundary_root_nl_tail(const SignalModel& s, double tol) {
  const double lo = 0.5 + 1e-9;
  const double hi = 1.0 / (2.0 * s.p_lL) - 1e-12;
  // The interior optimum leaves the unit box exactly at the tail boundary,
  // so root-find on the unclamped optimizer minus one.
  auto f = [&](double a) {
    const double radicand = 2.0 * (1.0 - a * s.p_lH) *
                            (1.0 - 2.0 * a * s.p_lL) * s.p_lL * s.p_lH;
    return (1.0 - 2.0 * a) +
           std::sqrt(std::max(0.0, radicand)) / (s.p_lL * s.p_lH) - 1.0;
  };
  const double flo = f(lo), fhi = f(hi);
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw NoBracket("nonlinear/tail boundary has no sign change");
  }
  return bisect(lo, hi, flo, f, tol);
}

}  // namespace antvote
