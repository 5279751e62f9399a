#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "runner.hpp"

namespace {

using namespace antvote::cli;

// Flags must override config-file values, so the file (if any) is applied
// to the defaults before CLI11 parses the remaining flags.
std::string prescan_config(int argc, char** argv) {
  for (int i = 1; i < argc - 1; ++i) {
    if (std::string(argv[i]) == "--config") return argv[i + 1];
  }
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a.rfind("--config=", 0) == 0) return a.substr(9);
  }
  return {};
}

void add_model_flags(CLI::App* cmd, RunConfig& cfg) {
  static std::string config_sink;  // value consumed in the prescan
  cmd->add_option("--config", config_sink, "JSON config file");
  cmd->add_option("--n", cfg.n, "population size");
  cmd->add_option("--ph", cfg.p_H, "prior probability of the high state");
  cmd->add_option("--phh", cfg.p_hH, "P(signal h | high state)");
  cmd->add_option("--phl", cfg.p_hL, "P(signal h | low state)");
  cmd->add_option("--alpha", cfg.alpha, "majority share target");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"threshold calculator and verifier for antagonistic voting"};
  app.require_subcommand(1);

  CurveOptions curve;
  CheckOptions check;
  VerifyOptions verify;
  SimulateOptions simulate;
  BruteForceOptions brute;

  const std::string config_path = prescan_config(argc, argv);
  if (!config_path.empty()) {
    try {
      apply_config_file(curve.cfg, config_path);
      apply_config_file(check.cfg, config_path);
      apply_config_file(verify.cfg, config_path);
      apply_config_file(simulate.cfg, config_path);
      apply_config_file(brute.cfg, config_path);
    } catch (const antvote::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitError;
    }
  }

  auto* c_curve = app.add_subcommand("curve", "emit the threshold curve");
  add_model_flags(c_curve, curve.cfg);
  c_curve->add_option("--grid-step", curve.grid_step, "alpha grid step");
  c_curve->add_option("--resolution", curve.resolution, "numeric resolution");
  c_curve->add_option("--tol", curve.tol, "numeric agreement tolerance");
  c_curve->add_option("--out", curve.out_csv, "CSV output path");
  c_curve->add_option("--svg", curve.out_svg, "SVG output path");

  auto* c_check = app.add_subcommand(
      "check", "construct a profile and certify its robustness");
  add_model_flags(c_check, check.cfg);
  c_check->add_option("--xi", check.xi, "robustness level (absolute)");
  c_check->add_option("--xi-frac", check.xi_frac,
                      "robustness level as a fraction of the threshold");
  c_check->add_option("--out", check.out_json, "JSON report path");

  auto* c_verify = app.add_subcommand(
      "verify", "re-derive the curve numerically and compare");
  add_model_flags(c_verify, verify.cfg);
  c_verify->add_option("--grid-step", verify.grid_step, "alpha grid step");
  c_verify->add_option("--resolution", verify.resolution,
                       "numeric resolution");
  c_verify->add_option("--tol", verify.tol, "numeric agreement tolerance");
  c_verify->add_option("--out", verify.out_json, "JSON report path");

  auto* c_sim = app.add_subcommand("simulate", "Monte Carlo cross-check");
  add_model_flags(c_sim, simulate.cfg);
  c_sim->add_option("--trials", simulate.trials, "number of trials");
  c_sim->add_option("--seed", simulate.seed, "RNG seed");
  c_sim->add_option("--xi", simulate.xi, "robustness level (absolute)");
  c_sim->add_option("--xi-frac", simulate.xi_frac,
                    "robustness level as a fraction of the threshold");

  auto* c_brute = app.add_subcommand(
      "bruteforce", "exhaustive small-instance deviation search");
  add_model_flags(c_brute, brute.cfg);
  c_brute->add_option("--k", brute.k, "coalition size (default floor(xi*n))");
  c_brute->add_option("--grid-step", brute.grid_step, "strategy grid step");
  c_brute->add_flag("--include-majority", brute.include_majority,
                    "also search majority deviators");
  c_brute->add_option("--budget", brute.budget, "max candidate evaluations");
  c_brute->add_option("--xi", brute.xi, "robustness level (absolute)");
  c_brute->add_option("--xi-frac", brute.xi_frac,
                      "robustness level as a fraction of the threshold");
  c_brute->add_option("--tol", brute.tol, "maximum tolerated gain");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_curve->parsed()) return run_curve(curve);
    if (c_check->parsed()) return run_check(check);
    if (c_verify->parsed()) return run_verify(verify);
    if (c_sim->parsed()) return run_simulate(simulate);
    if (c_brute->parsed()) return run_bruteforce(brute);
  } catch (const antvote::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
