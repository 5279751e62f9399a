#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "config.hpp"

namespace antvote::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitPass = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFail = 2;

struct CurveOptions {
  RunConfig cfg;
  double grid_step = 0.005;
  double resolution = 1e-3;
  double tol = 2e-3;
  std::string out_csv;  // empty: stdout
  std::string out_svg;  // empty: skip
};
int run_curve(const CurveOptions& o);

struct CheckOptions {
  RunConfig cfg;
  std::optional<double> xi;  // absolute robustness level
  double xi_frac = 0.8;      // fraction of the closed-form threshold
  std::string out_json;
};
int run_check(const CheckOptions& o);

struct VerifyOptions {
  RunConfig cfg;
  double grid_step = 0.005;
  double resolution = 1e-3;
  double tol = 2e-3;
  std::string out_json;
};
int run_verify(const VerifyOptions& o);

struct SimulateOptions {
  RunConfig cfg;
  long long trials = 100000;
  std::uint64_t seed = 1;
  std::optional<double> xi;
  double xi_frac = 0.8;
};
int run_simulate(const SimulateOptions& o);

struct BruteForceOptions {
  RunConfig cfg;
  int k = -1;  // default: floor(xi * n)
  double grid_step = 0.25;
  bool include_majority = false;
  long long budget = 2000000;
  std::optional<double> xi;
  double xi_frac = 0.8;
  double tol = 1e-6;
};
int run_bruteforce(const BruteForceOptions& o);

}  // namespace antvote::cli
