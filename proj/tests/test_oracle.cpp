#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "antvote/oracle.hpp"
#include "doctest.h"

using namespace antvote;

namespace {
const SignalModel kSig = validate_signal(0.7, 0.3, 0.2, 0.8);
}

TEST_CASE("numeric sandwich brackets the closed form") {
  for (double a : {0.52, 0.54, 0.58, 0.62, 0.66}) {
    const double closed = xi_star(kSig, a).xi_star;
    const auto nb = numeric_xi_bounds(kSig, a, 1e-3);
    CAPTURE(a);
    CHECK(nb.lower <= closed + 1e-9);
    CHECK(std::abs(closed - nb.upper) <= 2e-3);
    CHECK(nb.lower <= nb.upper + 1e-12);
  }
}

TEST_CASE("numeric optimum recovers the interior parameters") {
  const auto nb = numeric_xi_bounds(kSig, 0.54, 1e-4);
  // The optimizer should land near the analytic interior optimum.
  CHECK(nb.argmax_beta_h1 == doctest::Approx(1.0).epsilon(1e-2));
  CHECK(nb.argmax_beta_l0 ==
        doctest::Approx(1.0 - 0.89454262776614).epsilon(0.05));
  CHECK(nb.argmax_gamma == doctest::Approx(0.209445878461291).epsilon(0.05));
}

TEST_CASE("curve verification on a coarse grid") {
  std::vector<double> grid;
  for (double a = 0.51; a < theta(kSig); a += 0.02) grid.push_back(a);
  grid.push_back(theta(kSig));
  const auto rep = verify_curve(kSig, grid, 2e-3, 1e-3);
  CHECK(rep.all_pass);
  CHECK(rep.max_abs_dev <= 2e-3);
  CHECK(rep.points.size() == grid.size());
  for (const auto& p : rep.points) {
    CAPTURE(p.alpha);
    CHECK(p.pass);
    CHECK(p.closed > 0.0);
  }
}

TEST_CASE("boundary roots agree with the closed forms") {
  CHECK(boundary_root_steep_nl(kSig) ==
        doctest::Approx(alpha_nl(kSig)).epsilon(1e-8));
  CHECK(boundary_root_nl_tail(kSig) ==
        doctest::Approx(tail_boundary(kSig)).epsilon(1e-8));

  // A model whose tail boundary sits below 1/2 has no nonlinear/tail
  // crossing to find.
  const auto no_tail = validate_signal(0.6, 0.4, 0.1, 0.9);
  CHECK_FALSE(has_tail(no_tail));
  CHECK_THROWS_AS(boundary_root_nl_tail(no_tail), NoBracket);
}

TEST_CASE("oracle rejects out-of-range alphas") {
  CHECK_THROWS_AS(numeric_xi_bounds(kSig, 0.5), DomainError);
  CHECK_THROWS_AS(numeric_xi_bounds(kSig, 0.75), DomainError);
}
