#include "antvote/model.hpp"

#include <algorithm>
#include <cmath>

namespace antvote {

namespace {

constexpr double kRowTol = 1e-9;

void check_unit_open(double p, const char* name) {
  if (!(p > 0.0) || !(p < 1.0) || !std::isfinite(p)) {
    throw InvalidProbability(std::string(name) +
                             " must lie strictly inside (0,1)");
  }
}

}  // namespace

SignalModel validate_signal(double p_hH, double p_lH, double p_hL,
                            double p_lL) {
  check_unit_open(p_hH, "p_hH");
  check_unit_open(p_lH, "p_lH");
  check_unit_open(p_hL, "p_hL");
  check_unit_open(p_lL, "p_lL");
  if (std::abs(p_hH + p_lH - 1.0) > kRowTol) {
    throw InvalidProbability("p_hH + p_lH must equal 1");
  }
  if (std::abs(p_hL + p_lL - 1.0) > kRowTol) {
    throw InvalidProbability("p_hL + p_lL must equal 1");
  }
  if (!(p_hH > p_hL)) {
    throw NonInformative("signal must satisfy p_hH > p_hL");
  }

  SignalModel s;
  s.swapped = p_hH > p_lL;
  if (s.swapped) {
    // Relabel states H<->L and signals h<->l (which also swaps the roles of
    // the two alternatives).  This maps (p_hH,p_lH,p_hL,p_lL) to
    // (p_lL,p_hL,p_lH,p_hH) and preserves the informativeness gap.
    s.p_hH = p_lL;
    s.p_lH = p_hL;
    s.p_hL = p_lH;
    s.p_lL = p_hH;
  } else {
    s.p_hH = p_hH;
    s.p_lH = p_lH;
    s.p_hL = p_hL;
    s.p_lL = p_lL;
  }
  s.delta = s.p_hH - s.p_hL;
  return s;
}

double delta(const SignalModel& s) { return s.delta; }

Prior make_prior(double p_H, double p_L) {
  check_unit_open(p_H, "p_H");
  check_unit_open(p_L, "p_L");
  if (std::abs(p_H + p_L - 1.0) > kRowTol) {
    throw InvalidProbability("p_H + p_L must equal 1");
  }
  return Prior{p_H, p_L};
}

int UtilityTable::bound() const {
  return std::max({v_HA, v_LA, v_HR, v_LR});
}

bool UtilityTable::majority_shape() const {
  return v_HA > v_HR && v_LR > v_LA;
}

bool UtilityTable::minority_shape() const {
  return v_HR > v_HA && v_LA > v_LR;
}

bool is_minority(AgentType t) { return t != AgentType::Majority; }

int GroupedProfile::n() const {
  int total = 0;
  for (const auto& b : blocks) total += b.count;
  return total;
}

int GroupedProfile::minority_count() const {
  int total = 0;
  for (const auto& b : blocks)
    if (is_minority(b.type)) total += b.count;
  return total;
}

int GroupedProfile::majority_count() const {
  return n() - minority_count();
}

double Environment::alpha() const {
  int maj = 0;
  for (const auto& g : groups)
    if (g.type == AgentType::Majority) maj += g.count;
  return static_cast<double>(maj) / n;
}

double Environment::gamma() const {
  int c0 = 0;
  for (const auto& g : groups)
    if (g.type == AgentType::MinorityType0) c0 += g.count;
  return static_cast<double>(c0) / n;
}

GroupedProfile Environment::profile() const {
  GroupedProfile p;
  p.blocks.reserve(groups.size());
  for (const auto& g : groups) {
    p.blocks.push_back({g.count, g.type, g.strategy});
  }
  return p;
}

int Environment::max_utility_bound() const {
  int b = 0;
  for (const auto& g : groups) b = std::max(b, g.utility.bound());
  return b;
}

namespace {

void check_strategy_range(const Strategy& s) {
  if (!(s.beta_l >= 0.0 && s.beta_l <= 1.0 && s.beta_h >= 0.0 &&
        s.beta_h <= 1.0)) {
    throw InvalidProbability("strategy components must lie in [0,1]");
  }
}

}  // namespace

Classification classify_strategy(AgentType type, const Strategy& s,
                                 const SignalModel& signal) {
  check_strategy_range(s);
  // Ratio of total A-probability mass: moving beta_h by eps and beta_l by
  // -eps*r (or the mirror image) changes the vote probability in opposite
  // directions across the two states, because the signal is informative.
  const double r =
      (signal.p_hH + signal.p_hL) / (signal.p_lH + signal.p_lL);

  Classification c;
  if (type == AgentType::Majority) {
    if (s.beta_l <= 0.0 || s.beta_h >= 1.0) return c;
    c.dominated = true;
    const double eps = std::min(1.0 - s.beta_h, s.beta_l / r);
    c.witness = Strategy{s.beta_l - eps * r, s.beta_h + eps};
  } else {
    if (s.beta_l >= 1.0 || s.beta_h <= 0.0) return c;
    c.dominated = true;
    const double eps = std::min(s.beta_h, (1.0 - s.beta_l) / r);
    c.witness = Strategy{s.beta_l + eps * r, s.beta_h - eps};
  }
  return c;
}

long long round_half_away(double x) { return std::llround(x); }

Environment build_environment(int n, const Prior& prior,
                              const SignalModel& signal,
                              std::vector<AgentGroup> groups, bool strict) {
  if (n < 1) throw InconsistentCounts("population size must be positive");
  if (groups.empty()) throw InconsistentCounts("no groups given");

  int total = 0;
  int majority = 0;
  for (const auto& g : groups) {
    if (g.count <= 0) throw InconsistentCounts("group counts must be positive");
    total += g.count;
    check_strategy_range(g.strategy);
    switch (g.type) {
      case AgentType::Majority:
        majority += g.count;
        if (!g.utility.majority_shape()) {
          throw DomainError("majority utility must prefer A in H and R in L");
        }
        break;
      case AgentType::MinorityType0:
        if (g.strategy.beta_h != 0.0) {
          throw DomainError("type-0 minority must have beta_h = 0");
        }
        if (!g.utility.minority_shape()) {
          throw DomainError("minority utility must prefer R in H and A in L");
        }
        break;
      case AgentType::MinorityType1:
        if (g.strategy.beta_l != 1.0) {
          throw DomainError("type-1 minority must have beta_l = 1");
        }
        if (!g.utility.minority_shape()) {
          throw DomainError("minority utility must prefer R in H and A in L");
        }
        break;
    }
    if (g.utility.v_HA < 0 || g.utility.v_LA < 0 || g.utility.v_HR < 0 ||
        g.utility.v_LR < 0) {
      throw DomainError("utilities must be nonnegative");
    }
  }
  if (total != n) {
    throw InconsistentCounts("group counts must sum to the population size");
  }
  if (2 * majority <= n) {
    throw InconsistentCounts("aligned agents must form a strict majority");
  }
  if (strict) {
    for (const auto& g : groups) {
      if (classify_strategy(g.type, g.strategy, signal).dominated) {
        throw DominatedStrategy(
            "strict environment contains a weakly dominated strategy");
      }
    }
  }

  Environment env;
  env.n = n;
  env.prior = prior;
  env.signal = signal;
  env.groups = std::move(groups);
  return env;
}

Environment build_environment(int n, const Prior& prior,
                              const SignalModel& signal, double alpha,
                              double gamma, const UtilityTable& maj_utility,
                              const UtilityTable& min_utility,
                              const Strategy& maj_strategy,
                              const Strategy& type0_strategy,
                              const Strategy& type1_strategy, bool strict) {
  if (!(alpha > 0.5 && alpha <= 1.0)) {
    throw DomainError("alpha must lie in (1/2, 1]");
  }
  if (!(gamma >= 0.0 && gamma <= 1.0 - alpha + 1e-12)) {
    throw DomainError("gamma must lie in [0, 1 - alpha]");
  }
  const int maj = static_cast<int>(round_half_away(alpha * n));
  const int c0 = static_cast<int>(round_half_away(gamma * n));
  const int c1 = n - maj - c0;
  if (c1 < 0) throw InconsistentCounts("rounded counts exceed population");

  std::vector<AgentGroup> groups;
  if (maj > 0)
    groups.push_back({maj, AgentType::Majority, maj_utility, maj_strategy});
  if (c0 > 0)
    groups.push_back(
        {c0, AgentType::MinorityType0, min_utility, type0_strategy});
  if (c1 > 0)
    groups.push_back(
        {c1, AgentType::MinorityType1, min_utility, type1_strategy});
  return build_environment(n, prior, signal, std::move(groups), strict);
}

UtilityTable default_majority_utility() { return UtilityTable{4, 0, 1, 2}; }
UtilityTable default_minority_utility() { return UtilityTable{2, 3, 3, 1}; }

}  // namespace antvote
