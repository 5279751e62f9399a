#include "antvote/deviation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace antvote {

namespace {

// Indices of minority blocks ordered by how damaging their agents are for
// the given coalition direction.
std::vector<std::size_t> minority_order(const GroupedProfile& profile,
                                        const SignalModel& signal,
                                        bool toward_r) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < profile.blocks.size(); ++i) {
    if (is_minority(profile.blocks[i].type)) idx.push_back(i);
  }
  auto key = [&](std::size_t i) {
    const auto& b = profile.blocks[i];
    return toward_r ? -vote_prob(b.strategy, signal, WorldState::H)
                    : vote_prob(b.strategy, signal, WorldState::L);
  };
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  return idx;
}

GroupedProfile move_coalition(const GroupedProfile& profile,
                              const std::vector<std::size_t>& order, int k,
                              const Strategy& target) {
  GroupedProfile out = profile;
  int remaining = k;
  for (std::size_t i : order) {
    if (remaining == 0) break;
    const int take = std::min(remaining, out.blocks[i].count);
    out.blocks[i].count -= take;
    remaining -= take;
    if (take > 0) {
      out.blocks.push_back({take, profile.blocks[i].type, target});
    }
  }
  std::erase_if(out.blocks, [](const auto& b) { return b.count == 0; });
  return out;
}

}  // namespace

ExtremePair extreme_deviation_profiles(const GroupedProfile& profile,
                                       const SignalModel& signal, int k) {
  if (k < 0) throw DomainError("coalition size must be nonnegative");
  if (k > profile.minority_count()) {
    throw KTooLarge("coalition exceeds the minority population");
  }
  ExtremePair pair;
  pair.all_a = move_coalition(profile, minority_order(profile, signal, false),
                              k, Strategy{1.0, 1.0});
  pair.all_r = move_coalition(profile, minority_order(profile, signal, true),
                              k, Strategy{0.0, 0.0});
  return pair;
}

DeviatingShares deviating_shares(const GroupedProfile& profile,
                                 const SignalModel& signal, double xi) {
  if (!(xi >= 0.0 && xi <= 1.0)) throw DomainError("xi must lie in [0,1]");
  const double n = profile.n();
  const auto base = expected_vote_shares(profile, signal);
  DeviatingShares d;
  d.f_H = base.f_H;
  d.f_L = base.f_L;

  // Always-R coalition removes the A-probability mass of the most A-likely
  // minority agents.
  double remaining = xi;
  for (std::size_t i : minority_order(profile, signal, true)) {
    if (remaining <= 0.0) break;
    const auto& b = profile.blocks[i];
    const double take = std::min(remaining, b.count / n);
    d.f_H -= take * vote_prob(b.strategy, signal, WorldState::H);
    remaining -= take;
  }

  // Always-A coalition adds the missing A-probability mass of the least
  // A-likely minority agents.
  remaining = xi;
  for (std::size_t i : minority_order(profile, signal, false)) {
    if (remaining <= 0.0) break;
    const auto& b = profile.blocks[i];
    const double take = std::min(remaining, b.count / n);
    d.f_L += take * (1.0 - vote_prob(b.strategy, signal, WorldState::L));
    remaining -= take;
  }

  d.h_fail = d.f_H <= 0.5;
  d.l_fail = d.f_L >= 0.5;
  return d;
}

namespace {

// Utility tables representative of each side; deviators inherit the table
// of their side.
UtilityTable side_utility(const Environment& env, bool minority) {
  for (const auto& g : env.groups) {
    if (is_minority(g.type) == minority) return g.utility;
  }
  throw DomainError("environment lacks the requested side");
}

double class_gain(const Environment& env, bool minority,
                  const OutcomeProbabilities& base,
                  const OutcomeProbabilities& deviated) {
  double best = -1e300;
  bool found = false;
  for (const auto& g : env.groups) {
    if (is_minority(g.type) != minority) continue;
    found = true;
    best = std::max(best, expected_utility(env.prior, g.utility, deviated) -
                              expected_utility(env.prior, g.utility, base));
  }
  return found ? best : 0.0;
}

}  // namespace

EquilibriumReport check_equilibrium(const Environment& env,
                                    const GroupedProfile& profile, double xi,
                                    std::optional<double> epsilon) {
  if (profile.n() != env.n) {
    throw InconsistentCounts("profile size does not match the environment");
  }
  if (!(xi >= 0.0 && xi <= 1.0)) throw DomainError("xi must lie in [0,1]");

  EquilibriumReport rep;
  const int minority = profile.minority_count();
  rep.k = std::min(static_cast<int>(std::floor(xi * env.n)), minority);
  const double xi_eff = std::min(xi, static_cast<double>(minority) / env.n);

  const auto shares = deviating_shares(profile, env.signal, xi_eff);
  rep.margin_h = shares.f_H - 0.5;
  rep.margin_l = 0.5 - shares.f_L;

  const auto base = outcome_probabilities(profile, env.signal);
  rep.base_fidelity =
      env.prior.p_H * base.a_wins_H + env.prior.p_L * base.r_wins_L;

  const auto extremes = extreme_deviation_profiles(profile, env.signal, rep.k);
  rep.gain_all_a = class_gain(env, true, base,
                              outcome_probabilities(extremes.all_a, env.signal));
  rep.gain_all_r = class_gain(env, true, base,
                              outcome_probabilities(extremes.all_r, env.signal));

  const double m = std::min(rep.margin_h, rep.margin_l);
  const double e = m > 0.0 ? 2.0 * std::exp(-2.0 * m * m * env.n) : 1.0;
  const double b = env.max_utility_bound();
  rep.epsilon_bound = epsilon.value_or(2.0 * b * (b + 1.0) * e /
                                       (env.prior.p_H * env.prior.p_L));

  rep.pass = rep.margin_h > 0.0 && rep.margin_l > 0.0 &&
             std::max(rep.gain_all_a, rep.gain_all_r) <= rep.epsilon_bound;
  return rep;
}

namespace {

// Deviators are pulled out of the blocks of one side-class in order and
// re-inserted as a single block with the candidate strategy.
GroupedProfile apply_deviation(const GroupedProfile& profile, AgentType pool,
                               int k, const Strategy& s) {
  GroupedProfile out = profile;
  int remaining = k;
  for (auto& b : out.blocks) {
    if (b.type != pool || remaining == 0) continue;
    const int take = std::min(remaining, b.count);
    b.count -= take;
    remaining -= take;
  }
  if (remaining != 0) throw KTooLarge("pool smaller than requested coalition");
  std::erase_if(out.blocks, [](const auto& b) { return b.count == 0; });
  out.blocks.push_back({k, pool, s});
  return out;
}

int pool_count(const GroupedProfile& profile, AgentType pool) {
  int c = 0;
  for (const auto& b : profile.blocks)
    if (b.type == pool) c += b.count;
  return c;
}

}  // namespace

BruteForceResult brute_force_best_deviation(const Environment& env,
                                            const GroupedProfile& profile,
                                            int k, double grid_step,
                                            bool include_majority,
                                            long long budget) {
  if (!(grid_step > 0.0 && grid_step <= 1.0)) {
    throw DomainError("grid step must lie in (0,1]");
  }
  if (k < 0 || k > profile.n()) {
    throw KTooLarge("coalition size out of range");
  }

  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double v = i * grid_step;
    if (v >= 1.0 - 1e-12) {
      grid.push_back(1.0);
      break;
    }
    grid.push_back(v);
  }
  const long long pairs = static_cast<long long>(grid.size()) * grid.size();

  const int c0 = pool_count(profile, AgentType::MinorityType0);
  const int c1 = pool_count(profile, AgentType::MinorityType1);
  const int cm = include_majority ? pool_count(profile, AgentType::Majority) : 0;

  // Pre-count candidate evaluations against the budget.
  long long total = 0;
  for (int k0 = 0; k0 <= std::min(k, c0); ++k0) {
    for (int k1 = 0; k1 <= std::min(k - k0, c1); ++k1) {
      for (int km = 0; km <= std::min(k - k0 - k1, cm); ++km) {
        if (k0 + k1 + km == 0) continue;
        long long combos = 1;
        if (k0 > 0) combos *= pairs;
        if (k1 > 0) combos *= pairs;
        if (km > 0) combos *= pairs;
        total += combos;
        if (total > budget) {
          throw ExplosionGuard("brute-force candidate count exceeds budget");
        }
      }
    }
  }

  const auto base = outcome_probabilities(profile, env.signal);
  const UtilityTable min_u = side_utility(env, true);
  const UtilityTable maj_u = side_utility(env, false);

  BruteForceResult res;
  auto evaluate = [&](int k0, const Strategy& s0, int k1, const Strategy& s1,
                      int km, const Strategy& sm) {
    GroupedProfile p = profile;
    if (k0 > 0) p = apply_deviation(p, AgentType::MinorityType0, k0, s0);
    if (k1 > 0) p = apply_deviation(p, AgentType::MinorityType1, k1, s1);
    if (km > 0) p = apply_deviation(p, AgentType::Majority, km, sm);
    const auto out = outcome_probabilities(p, env.signal);
    ++res.evaluations;

    double worst = 1e300, best = -1e300, maj_gain = 0.0;
    auto fold = [&](bool active, const UtilityTable& u) {
      if (!active) return 0.0;
      const double g = expected_utility(env.prior, u, out) -
                       expected_utility(env.prior, u, base);
      worst = std::min(worst, g);
      best = std::max(best, g);
      return g;
    };
    fold(k0 > 0, min_u);
    fold(k1 > 0, min_u);
    maj_gain = fold(km > 0, maj_u);

    if (worst < -1e-12) return;  // some deviator loses: not a valid deviation
    if (best > res.best_gain) {
      res.best_gain = best;
      res.witness = DeviationSpec{k0, k1, km, s0, s1, sm};
    }
    if (km > 0) {
      res.best_majority_gain = std::max(res.best_majority_gain, maj_gain);
      if (maj_gain > 1e-9) res.majority_witness = true;
    }
  };

  for (int k0 = 0; k0 <= std::min(k, c0); ++k0) {
    for (int k1 = 0; k1 <= std::min(k - k0, c1); ++k1) {
      for (int km = 0; km <= std::min(k - k0 - k1, cm); ++km) {
        if (k0 + k1 + km == 0) continue;
        const auto& g0 = k0 > 0 ? grid : std::vector<double>{0.0};
        const auto& g1 = k1 > 0 ? grid : std::vector<double>{0.0};
        const auto& gm = km > 0 ? grid : std::vector<double>{0.0};
        for (double bl0 : g0)
          for (double bh0 : (k0 > 0 ? grid : std::vector<double>{0.0}))
            for (double bl1 : g1)
              for (double bh1 : (k1 > 0 ? grid : std::vector<double>{0.0}))
                for (double blm : gm)
                  for (double bhm : (km > 0 ? grid : std::vector<double>{0.0}))
                    evaluate(k0, Strategy{bl0, bh0}, k1, Strategy{bl1, bh1},
                             km, Strategy{blm, bhm});
      }
    }
  }
  return res;
}

}  // namespace antvote
