#include "runner.hpp"

#include <cmath>
#include <fstream>
#include <iostream>

#include "antvote/construct.hpp"
#include "antvote/deviation.hpp"
#include "antvote/oracle.hpp"
#include "emit.hpp"
#include "json.hpp"

namespace antvote::cli {

namespace {

using nlohmann::json;

std::vector<double> alpha_grid(const SignalModel& s, double step) {
  const double th = theta(s);
  std::vector<double> grid;
  for (double a = 0.5 + step; a < th - 1e-12; a += step) grid.push_back(a);
  grid.push_back(th);
  return grid;
}

void emit_json(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << '\n';
  }
}

// Resolves the profile under test: an explicit config profile is used as
// given, otherwise the certifying construction at the requested level.
struct Resolved {
  Environment env;
  GroupedProfile profile;
  double xi = 0.0;
};

Resolved resolve_profile(const RunConfig& cfg, std::optional<double> xi,
                         double xi_frac) {
  Resolved r{config_environment(cfg, /*strict=*/false), {}, 0.0};
  const double closed = xi_star(r.env.signal, r.env.alpha()).xi_star;
  const double cap = std::min(closed, 1.0 - r.env.alpha());
  r.xi = xi.value_or(xi_frac * cap);
  if (!cfg.groups.empty()) {
    r.profile = r.env.profile();
  } else {
    r.profile = construct(r.env, r.xi).profile;
  }
  return r;
}

json strategy_json(const Strategy& s) {
  return json{{"bl", s.beta_l}, {"bh", s.beta_h}};
}

}  // namespace

int run_curve(const CurveOptions& o) {
  const auto signal = config_signal(o.cfg);
  const auto report =
      verify_curve(signal, alpha_grid(signal, o.grid_step), o.tol, o.resolution);
  if (o.out_csv.empty()) {
    write_curve_csv(std::cout, signal, report.points);
  } else {
    std::ofstream out(o.out_csv, std::ios::binary);
    if (!out) throw Error("cannot write " + o.out_csv);
    write_curve_csv(out, signal, report.points);
  }
  if (!o.out_svg.empty()) {
    std::ofstream out(o.out_svg, std::ios::binary);
    if (!out) throw Error("cannot write " + o.out_svg);
    write_curve_svg(out, signal, report.points);
  }
  return kExitPass;
}

int run_check(const CheckOptions& o) {
  const auto r = resolve_profile(o.cfg, o.xi, o.xi_frac);
  const auto rep = check_equilibrium(r.env, r.profile, r.xi);

  json j{{"n", r.env.n},
         {"alpha", r.env.alpha()},
         {"xi", r.xi},
         {"k", rep.k},
         {"fidelity", rep.base_fidelity},
         {"margin_h", rep.margin_h},
         {"margin_l", rep.margin_l},
         {"gain_all_a", rep.gain_all_a},
         {"gain_all_r", rep.gain_all_r},
         {"epsilon_bound", rep.epsilon_bound},
         {"verdict", rep.pass ? "pass" : "fail"}};
  emit_json(j, o.out_json);
  std::cerr << (rep.pass ? "PASS" : "FAIL") << ": k=" << rep.k
            << " margins=(" << rep.margin_h << ", " << rep.margin_l
            << ") worst gain="
            << std::max(rep.gain_all_a, rep.gain_all_r) << '\n';
  return rep.pass ? kExitPass : kExitFail;
}

int run_verify(const VerifyOptions& o) {
  const auto signal = config_signal(o.cfg);
  const auto report =
      verify_curve(signal, alpha_grid(signal, o.grid_step), o.tol, o.resolution);

  json pts = json::array();
  for (const auto& p : report.points) {
    pts.push_back(json{{"alpha", p.alpha},
                       {"segment", segment_name(p.segment)},
                       {"closed", p.closed},
                       {"lower", p.lower},
                       {"upper", p.upper},
                       {"pass", p.pass}});
  }
  json j{{"points", pts},
         {"max_abs_dev", report.max_abs_dev},
         {"verdict", report.all_pass ? "pass" : "fail"}};
  emit_json(j, o.out_json);
  std::cerr << (report.all_pass ? "PASS" : "FAIL")
            << ": max |closed - numeric| = " << report.max_abs_dev << '\n';
  return report.all_pass ? kExitPass : kExitFail;
}

int run_simulate(const SimulateOptions& o) {
  const auto r = resolve_profile(o.cfg, o.xi, o.xi_frac);
  const auto exact = fidelity(r.env.prior, r.profile, r.env.signal);
  const auto mc =
      monte_carlo(r.env.prior, r.profile, r.env.signal, o.trials, o.seed);

  json j{{"n", r.env.n},
         {"trials", mc.trials},
         {"seed", o.seed},
         {"exact",
          {{"lambda_HA", exact.win.lambda_HA},
           {"lambda_LR", exact.win.lambda_LR},
           {"fidelity", exact.fidelity}}},
         {"estimate",
          {{"lambda_HA", mc.lambda_HA},
           {"lambda_LR", mc.lambda_LR},
           {"fidelity", mc.fidelity},
           {"se_fidelity", mc.se_fidelity}}}};
  emit_json(j, "");
  return kExitPass;
}

int run_bruteforce(const BruteForceOptions& o) {
  const auto r = resolve_profile(o.cfg, o.xi, o.xi_frac);
  const int k = o.k >= 0 ? o.k
                         : static_cast<int>(std::floor(r.xi * r.env.n));
  const auto res = brute_force_best_deviation(r.env, r.profile, k,
                                              o.grid_step, o.include_majority,
                                              o.budget);
  const bool pass = res.best_gain <= o.tol && !res.majority_witness;

  json j{{"n", r.env.n},
         {"k", k},
         {"grid_step", o.grid_step},
         {"evaluations", res.evaluations},
         {"best_gain", res.best_gain},
         {"majority_witness", res.majority_witness},
         {"best_majority_gain", res.best_majority_gain},
         {"witness",
          {{"k0", res.witness.k0},
           {"k1", res.witness.k1},
           {"k_maj", res.witness.k_maj},
           {"strategy0", strategy_json(res.witness.strategy0)},
           {"strategy1", strategy_json(res.witness.strategy1)},
           {"strategy_maj", strategy_json(res.witness.strategy_maj)}}},
         {"verdict", pass ? "pass" : "fail"}};
  emit_json(j, "");
  return pass ? kExitPass : kExitFail;
}

}  // namespace antvote::cli
