#pragma once

#include <optional>

#include "antvote/voteshare.hpp"

namespace antvote {

// The two extreme coalition deviations of size k: every deviator switches
// to always-A (to attack the low state) or always-R (to attack the high
// state).  Deviators are drawn from the minority, most-damaging first: the
// always-A coalition takes the agents currently least likely to vote A, the
// always-R coalition those most likely to vote A.
struct ExtremePair {
  GroupedProfile all_a;
  GroupedProfile all_r;
};
ExtremePair extreme_deviation_profiles(const GroupedProfile& profile,
                                       const SignalModel& signal, int k);

// Expected vote shares after the worst-case one-sided coalition of fraction
// xi deviates, computed analytically from the block structure.  h_fail /
// l_fail report whether the deviation pushes the respective state's outcome
// to (or past) an exact split.
struct DeviatingShares {
  double f_H = 0.0;  // high-state share after the always-R coalition
  double f_L = 0.0;  // low-state share after the always-A coalition
  bool h_fail = false;
  bool l_fail = false;
};
DeviatingShares deviating_shares(const GroupedProfile& profile,
                                 const SignalModel& signal, double xi);

// Equilibrium certificate for coalitions of up to floor(xi*n) agents.
// Margins are the analytic slack of the two worst-case deviations; the
// epsilon bound combines a concentration surrogate with the payoff range.
// Verdict: Pass iff both margins are positive and neither extreme
// deviation gains more than the bound.
struct EquilibriumReport {
  int k = 0;
  double base_fidelity = 0.0;
  double margin_h = 0.0;
  double margin_l = 0.0;
  double gain_all_a = 0.0;
  double gain_all_r = 0.0;
  double epsilon_bound = 0.0;
  bool pass = false;
};
EquilibriumReport check_equilibrium(const Environment& env,
                                    const GroupedProfile& profile, double xi,
                                    std::optional<double> epsilon = {});

// Exhaustive search over coalition compositions and a strategy grid.  A
// candidate deviation is valid when every deviating sub-group weakly
// improves; the returned gain is the best strict improvement found.
struct DeviationSpec {
  int k0 = 0;  // deviators drawn from type-0 blocks
  int k1 = 0;  // deviators drawn from type-1 blocks
  int k_maj = 0;
  Strategy strategy0;
  Strategy strategy1;
  Strategy strategy_maj;
};
struct BruteForceResult {
  double best_gain = 0.0;
  DeviationSpec witness;
  bool majority_witness = false;  // some valid deviation strictly helps a
                                  // majority sub-group
  double best_majority_gain = 0.0;  // largest majority sub-group gain over
                                    // all valid deviations
  long long evaluations = 0;
};
BruteForceResult brute_force_best_deviation(const Environment& env,
                                            const GroupedProfile& profile,
                                            int k, double grid_step,
                                            bool include_majority = false,
                                            long long budget = 2000000);

}  // namespace antvote
