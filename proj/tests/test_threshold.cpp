#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "antvote/threshold.hpp"
#include "doctest.h"

using namespace antvote;

namespace {
const SignalModel kSig = validate_signal(0.7, 0.3, 0.2, 0.8);
}

TEST_CASE("segment boundaries") {
  CHECK(theta(kSig) == doctest::Approx(0.6875).epsilon(1e-14));
  CHECK(alpha_nl(kSig) == doctest::Approx(0.555972048055448).epsilon(1e-12));
  CHECK(tail_boundary(kSig) ==
        doctest::Approx(0.526315789473684).epsilon(1e-12));
  CHECK(has_tail(kSig));

  // Symmetric model: the nonlinear segment collapses to a point and the
  // flat segment starts exactly at theta.
  const auto sym = validate_signal(0.8, 0.2, 0.2, 0.8);
  CHECK(theta(sym) == doctest::Approx(0.625).epsilon(1e-14));
  CHECK(theta(sym) == doctest::Approx(1.0 / (2 * sym.p_lL)).epsilon(1e-14));
  CHECK(alpha_nl(sym) == doctest::Approx(tail_boundary(sym)).epsilon(1e-12));
}

TEST_CASE("piecewise threshold values and segment labels") {
  CHECK(xi_star(kSig, 0.70).segment == Segment::StrongEq);
  CHECK(xi_star(kSig, 0.70).xi_star == 1.0);

  const auto flat = xi_star(kSig, 0.65);
  CHECK(flat.segment == Segment::Flat);
  CHECK(flat.xi_star == doctest::Approx(0.3125).epsilon(1e-14));

  const auto steep = xi_star(kSig, 0.60);
  CHECK(steep.segment == Segment::Steep);
  CHECK(steep.xi_star == doctest::Approx(0.25).epsilon(1e-14));

  const auto nl = xi_star(kSig, 0.54);
  CHECK(nl.segment == Segment::NonLinear);
  CHECK(nl.xi_star == doctest::Approx(0.135180405129031).epsilon(1e-12));

  const auto tail = xi_star(kSig, 0.51);
  CHECK(tail.segment == Segment::Tail);
  CHECK(tail.xi_star == doctest::Approx(0.5 * 0.51 / 2.0).epsilon(1e-14));
}

TEST_CASE("boundary alphas resolve to the higher-alpha segment") {
  CHECK(xi_star(kSig, theta(kSig) + 1e-13).segment == Segment::StrongEq);
  CHECK(xi_star(kSig, theta(kSig)).segment == Segment::Flat);
  CHECK(xi_star(kSig, 0.625).segment == Segment::Flat);
  CHECK(xi_star(kSig, alpha_nl(kSig)).segment == Segment::Steep);
  CHECK(xi_star(kSig, tail_boundary(kSig)).segment == Segment::NonLinear);
}

TEST_CASE("curve is continuous across every boundary") {
  const double eps = 1e-10;
  for (double b : {0.625, alpha_nl(kSig), tail_boundary(kSig)}) {
    const double lo = xi_star(kSig, b - eps).xi_star;
    const double hi = xi_star(kSig, b + eps).xi_star;
    CHECK(std::abs(hi - lo) < 1e-8);
  }
  // The two analytic end values of the nonlinear branch.
  CHECK(xi_nl(kSig, alpha_nl(kSig)) ==
        doctest::Approx(0.13993012013862).epsilon(1e-10));
  CHECK(xi_nl(kSig, tail_boundary(kSig)) ==
        doctest::Approx(0.131578947368421).epsilon(1e-10));
}

TEST_CASE("nonlinear branch domain") {
  CHECK(xi_nl(kSig, 0.54) ==
        doctest::Approx(0.135180405129031).epsilon(1e-12));
  CHECK_THROWS_AS(xi_nl(kSig, 0.64), DomainError);  // radicand negative
}

TEST_CASE("binding fractions of parameterized minorities") {
  // Whole minority always-A (beta_h1 = 1, beta_l0 = 1, gamma = 0).
  const auto pr = xi_pair(kSig, 0.6, 1.0, 1.0, 0.0);
  CHECK(pr.xi_h == doctest::Approx((0.5 * (0.1 + 0.4)) /
                                   (0.7 * 0.8 + 0.3))
                       .epsilon(1e-12));
  // All type-0 silent minority (beta_h1 = 0, beta_l0 = 1, gamma = 0.1).
  const auto q = xi_pair(kSig, 0.6, 0.0, 1.0, 0.1);
  CHECK(q.xi_h == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(q.xi_l == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("two-equation majority solutions") {
  const auto s1 = majority_solution_seg1(kSig, 0.65, 0.28);
  CHECK(s1.feasible);
  CHECK(s1.beta_l_star == doctest::Approx(0.0584615384615384).epsilon(1e-12));
  CHECK(s1.beta_h_star == doctest::Approx(0.92).epsilon(1e-12));

  // Against a whole always-A minority the general system and the
  // specialized one need not coincide (the deviation structure differs),
  // but both must produce strategies inside the square here.
  const auto g = majority_solution_general(kSig, 0.6, 0.1, 1.0, 1.0, 0.0);
  CHECK(g.feasible);
}

TEST_CASE("equalizing type-0 share") {
  const auto h1 = hat_gamma_xi(kSig, 0.6, 1.0);
  CHECK(h1.gamma_hat == doctest::Approx(0.247058823529412).epsilon(1e-12));
  CHECK(h1.xi_hat == doctest::Approx(0.147058823529412).epsilon(1e-12));
  const auto h0 = hat_gamma_xi(kSig, 0.6, 0.0);
  CHECK(h0.gamma_hat == doctest::Approx(0.17).epsilon(1e-12));
  CHECK(h0.xi_hat == doctest::Approx(0.15).epsilon(1e-12));
  const auto hm = hat_gamma_xi(kSig, 0.6, 0.7);
  CHECK(hm.gamma_hat == doctest::Approx(0.204164550533266).epsilon(1e-12));
  CHECK(hm.xi_hat == doctest::Approx(0.15871000507872).epsilon(1e-12));

  // At the equalized share both binding fractions agree.
  const auto pr = xi_pair(kSig, 0.6, 1.0, 0.7, hm.gamma_hat);
  CHECK(pr.xi_h == doctest::Approx(pr.xi_l).epsilon(1e-12));
  CHECK(pr.xi_h == doctest::Approx(hm.xi_hat).epsilon(1e-12));
}

TEST_CASE("interior optimum of the nonlinear segment") {
  const auto sp = segment3_params(kSig, 0.54);
  CHECK(sp.b_star == doctest::Approx(0.89454262776614).epsilon(1e-12));
  CHECK(sp.gamma_star == doctest::Approx(0.209445878461291).epsilon(1e-12));
  CHECK(sp.xi_nl == doctest::Approx(0.135180405129031).epsilon(1e-12));

  CHECK(gamma_star_alt1(kSig, 0.54) ==
        doctest::Approx(sp.gamma_star).epsilon(1e-10));
  CHECK(gamma_star_alt2(kSig, 0.54) ==
        doctest::Approx(sp.gamma_star).epsilon(1e-10));

  // The optimum is the equalized point of its own beta_l0.
  const auto h = hat_gamma_xi(kSig, 0.54, 1.0 - sp.b_star);
  CHECK(h.gamma_hat == doctest::Approx(sp.gamma_star).epsilon(1e-12));
  CHECK(h.xi_hat == doctest::Approx(sp.xi_nl).epsilon(1e-12));

  CHECK_THROWS_AS(segment3_params(kSig, 0.60), DomainError);
}

TEST_CASE("monotonicity of the binding fractions in gamma") {
  // xi_h decreases and xi_l increases as the type-0 share grows.
  double prev_h = 1e9, prev_l = -1e9;
  for (double g = 0.0; g <= 0.30001; g += 0.05) {
    const auto pr = xi_pair(kSig, 0.6, 1.0, 0.5, g);
    CHECK(pr.xi_h < prev_h);
    CHECK(pr.xi_l > prev_l);
    prev_h = pr.xi_h;
    prev_l = pr.xi_l;
  }
}

TEST_CASE("derivative signs along the equalizing ray") {
  const auto ds = derivative_signs(kSig, 0.54, 0.2, 0.1);
  CHECK(ds.sign_h != 0);
  CHECK(ds.sign_l != 0);
}
