#include "antvote/voteshare.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace antvote {

double vote_prob(const Strategy& s, const SignalModel& signal, WorldState w) {
  if (w == WorldState::H) {
    return signal.p_hH * s.beta_h + signal.p_lH * s.beta_l;
  }
  return signal.p_hL * s.beta_h + signal.p_lL * s.beta_l;
}

VoteShares expected_vote_shares(const GroupedProfile& profile,
                                const SignalModel& signal) {
  const double n = profile.n();
  VoteShares f;
  for (const auto& b : profile.blocks) {
    f.f_H += b.count * vote_prob(b.strategy, signal, WorldState::H);
    f.f_L += b.count * vote_prob(b.strategy, signal, WorldState::L);
  }
  f.f_H /= n;
  f.f_L /= n;
  return f;
}

namespace {

// Binomial(count, q) pmf appended into `dist` by convolution.
void convolve_binomial(std::vector<double>& dist, int count, double q) {
  if (count == 0) return;
  std::vector<double> pmf(count + 1, 0.0);
  if (q <= 0.0) {
    pmf[0] = 1.0;
  } else if (q >= 1.0) {
    pmf[count] = 1.0;
  } else {
    // Start from the largest term region via log-space seed to avoid
    // underflow for large counts, then use the standard ratio recurrence.
    const double logq = std::log(q), log1q = std::log1p(-q);
    double logpk = count * log1q;  // log pmf at k = 0
    pmf[0] = std::exp(logpk);
    for (int k = 0; k < count; ++k) {
      logpk += std::log(static_cast<double>(count - k)) -
               std::log(static_cast<double>(k + 1)) + logq - log1q;
      pmf[k + 1] = std::exp(logpk);
    }
  }
  std::vector<double> out(dist.size() + count, 0.0);
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i] == 0.0) continue;
    for (int k = 0; k <= count; ++k) out[i + k] += dist[i] * pmf[k];
  }
  dist.swap(out);
}

}  // namespace

std::vector<double> tally_distribution(const GroupedProfile& profile,
                                       const SignalModel& signal,
                                       WorldState w) {
  std::vector<double> dist{1.0};
  for (const auto& b : profile.blocks) {
    convolve_binomial(dist, b.count, vote_prob(b.strategy, signal, w));
  }
  return dist;
}

OutcomeProbabilities outcome_probabilities(const GroupedProfile& profile,
                                           const SignalModel& signal) {
  const int n = profile.n();
  OutcomeProbabilities o;
  for (WorldState w : {WorldState::H, WorldState::L}) {
    const auto dist = tally_distribution(profile, signal, w);
    double a = 0.0, r = 0.0, tie = 0.0;
    for (int k = 0; k <= n; ++k) {
      if (2 * k > n) {
        a += dist[k];
      } else if (2 * k < n) {
        r += dist[k];
      } else {
        tie += dist[k];  // exact split: neither side wins
      }
    }
    if (w == WorldState::H) {
      o.a_wins_H = a;
      o.r_wins_H = r;
      o.tie_H = tie;
    } else {
      o.a_wins_L = a;
      o.r_wins_L = r;
      o.tie_L = tie;
    }
  }
  return o;
}

WinProbabilities win_probabilities(const GroupedProfile& profile,
                                   const SignalModel& signal) {
  const auto o = outcome_probabilities(profile, signal);
  return WinProbabilities{o.a_wins_H, o.r_wins_L};
}

FidelityResult fidelity(const Prior& prior, const GroupedProfile& profile,
                        const SignalModel& signal) {
  const auto o = outcome_probabilities(profile, signal);
  FidelityResult r;
  r.win = WinProbabilities{o.a_wins_H, o.r_wins_L};
  r.tie_mass_H = o.tie_H;
  r.tie_mass_L = o.tie_L;
  r.fidelity = prior.p_H * o.a_wins_H + prior.p_L * o.r_wins_L;
  return r;
}

double expected_utility(const Prior& prior, const UtilityTable& u,
                        const OutcomeProbabilities& o) {
  // A tie produces no winner; no payoff accrues from either column.
  return prior.p_H * (o.a_wins_H * u.v_HA + o.r_wins_H * u.v_HR) +
         prior.p_L * (o.a_wins_L * u.v_LA + o.r_wins_L * u.v_LR);
}

double expected_utility(const Environment& env, const GroupedProfile& profile,
                        std::size_t group_index) {
  if (group_index >= env.groups.size()) {
    throw DomainError("group index out of range");
  }
  const auto o = outcome_probabilities(profile, env.signal);
  return expected_utility(env.prior, env.groups[group_index].utility, o);
}

double per_agent_variance(const GroupedProfile& profile,
                          const SignalModel& signal, WorldState w) {
  double total = 0.0;
  for (const auto& b : profile.blocks) {
    const double q = vote_prob(b.strategy, signal, w);
    total += b.count * q * (1.0 - q);
  }
  return total / profile.n();
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr long long kChunk = 8192;

}  // namespace

MonteCarloResult monte_carlo(const Prior& prior, const GroupedProfile& profile,
                             const SignalModel& signal, long long trials,
                             std::uint64_t seed) {
  if (trials <= 0) throw InvalidTrials("trial count must be positive");
  const int n = profile.n();

  long long wins_HA = 0, wins_LR = 0;
  for (int state = 0; state < 2; ++state) {
    const WorldState w = state == 0 ? WorldState::H : WorldState::L;
    std::vector<double> q;
    q.reserve(profile.blocks.size());
    for (const auto& b : profile.blocks) q.push_back(vote_prob(b.strategy, signal, w));

    long long wins = 0;
    const long long chunks = (trials + kChunk - 1) / kChunk;
    for (long long c = 0; c < chunks; ++c) {
      std::mt19937_64 rng(
          splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(c) * 2 + state)));
      const long long lo = c * kChunk;
      const long long hi = std::min(trials, lo + kChunk);
      for (long long t = lo; t < hi; ++t) {
        int votes_a = 0;
        for (std::size_t i = 0; i < q.size(); ++i) {
          std::binomial_distribution<int> bin(profile.blocks[i].count, q[i]);
          votes_a += bin(rng);
        }
        if (w == WorldState::H ? (2 * votes_a > n) : (2 * votes_a < n)) ++wins;
      }
    }
    if (w == WorldState::H) {
      wins_HA = wins;
    } else {
      wins_LR = wins;
    }
  }

  MonteCarloResult r;
  r.trials = trials;
  r.lambda_HA = static_cast<double>(wins_HA) / trials;
  r.lambda_LR = static_cast<double>(wins_LR) / trials;
  r.fidelity = prior.p_H * r.lambda_HA + prior.p_L * r.lambda_LR;
  const double t = static_cast<double>(trials);
  r.se_lambda_HA = std::sqrt(r.lambda_HA * (1.0 - r.lambda_HA) / t);
  r.se_lambda_LR = std::sqrt(r.lambda_LR * (1.0 - r.lambda_LR) / t);
  r.se_fidelity = std::sqrt(
      prior.p_H * prior.p_H * r.lambda_HA * (1.0 - r.lambda_HA) / t +
      prior.p_L * prior.p_L * r.lambda_LR * (1.0 - r.lambda_LR) / t);
  return r;
}

}  // namespace antvote
