#pragma once

#include <cstdint>
#include <vector>

#include "antvote/model.hpp"

namespace antvote {

enum class WorldState { L, H };

// P(one agent with this strategy votes A | state W).
double vote_prob(const Strategy& s, const SignalModel& signal, WorldState w);

// Expected fraction of A votes per state.
struct VoteShares {
  double f_H = 0.0;
  double f_L = 0.0;
};
VoteShares expected_vote_shares(const GroupedProfile& profile,
                                const SignalModel& signal);

// Exact distribution of the number of A votes in the given state; the
// returned vector has n+1 entries.  Computed by convolving the per-block
// binomial distributions (O(n^2) overall).
std::vector<double> tally_distribution(const GroupedProfile& profile,
                                       const SignalModel& signal,
                                       WorldState w);

// Full outcome probabilities per state.  A wins on a strict majority of A
// votes, R on a strict majority of R votes; with an even population an exact
// split is a win for neither side.
struct OutcomeProbabilities {
  double a_wins_H = 0.0, r_wins_H = 0.0, tie_H = 0.0;
  double a_wins_L = 0.0, r_wins_L = 0.0, tie_L = 0.0;
};
OutcomeProbabilities outcome_probabilities(const GroupedProfile& profile,
                                           const SignalModel& signal);

struct WinProbabilities {
  double lambda_HA = 0.0;  // P(A wins | H)
  double lambda_LR = 0.0;  // P(R wins | L)
};
WinProbabilities win_probabilities(const GroupedProfile& profile,
                                   const SignalModel& signal);

// Probability that the realized winner matches the state, weighted by the
// prior: p_H * P(A wins | H) + p_L * P(R wins | L).
struct FidelityResult {
  double fidelity = 0.0;
  WinProbabilities win;
  double tie_mass_H = 0.0;
  double tie_mass_L = 0.0;
};
FidelityResult fidelity(const Prior& prior, const GroupedProfile& profile,
                        const SignalModel& signal);

// Ex-ante expected utility of one agent holding the given payoff table.
double expected_utility(const Prior& prior, const UtilityTable& u,
                        const OutcomeProbabilities& o);
double expected_utility(const Environment& env, const GroupedProfile& profile,
                        std::size_t group_index);

// Average per-agent variance of the vote indicator in the given state,
// i.e. (1/n) * sum_i q_i(W)(1 - q_i(W)).
double per_agent_variance(const GroupedProfile& profile,
                          const SignalModel& signal, WorldState w);

// Seeded Monte Carlo estimate of the win probabilities and fidelity.
// Deterministic for a fixed seed: trials are processed in fixed-size chunks
// whose generators are derived from (seed, chunk index), so the result does
// not depend on how work is scheduled.
struct MonteCarloResult {
  double lambda_HA = 0.0;
  double lambda_LR = 0.0;
  double fidelity = 0.0;
  double se_lambda_HA = 0.0;
  double se_lambda_LR = 0.0;
  double se_fidelity = 0.0;
  long long trials = 0;
};
MonteCarloResult monte_carlo(const Prior& prior, const GroupedProfile& profile,
                             const SignalModel& signal, long long trials,
                             std::uint64_t seed);

}  // namespace antvote
