#pragma once

#include <optional>
#include <vector>

#include "antvote/errors.hpp"

namespace antvote {

// Conditional signal distribution.  p_xW = P(signal x | world state W) with
// signals {h, l} and states {H, L}.  Canonical orientation means the model is
// informative (p_hH > p_hL) and p_hH <= p_lL.  `swapped` records whether the
// raw input had to be relabelled (H<->L, h<->l, and implicitly A<->R) to
// reach that orientation.
struct SignalModel {
  double p_hH = 0.0;
  double p_lH = 0.0;
  double p_hL = 0.0;
  double p_lL = 0.0;
  double delta = 0.0;  // p_hH - p_hL, the informativeness gap
  bool swapped = false;
};

// Validates rows, informativeness, and canonicalizes.  Throws
// InvalidProbability / NonInformative.
SignalModel validate_signal(double p_hH, double p_lH, double p_hL,
                            double p_lL);

// The informativeness gap.  Equals p_hH - p_hL = p_lL - p_lH
// = p_hH*p_lL - p_hL*p_lH = p_hH + p_lL - 1 for a valid model.
double delta(const SignalModel& s);

struct Prior {
  double p_H = 0.0;
  double p_L = 0.0;
};

// Throws InvalidProbability unless both in (0,1) and summing to 1.
Prior make_prior(double p_H, double p_L);

// Payoffs v(state, winner), nonnegative integers.
struct UtilityTable {
  int v_HA = 0;
  int v_LA = 0;
  int v_HR = 0;
  int v_LR = 0;

  int bound() const;           // maximum entry, the B in the epsilon bound
  bool majority_shape() const;  // prefers A in H and R in L
  bool minority_shape() const;  // prefers R in H and A in L
};

// Signal-conditional vote probabilities: beta_l = P(vote A | signal l),
// beta_h = P(vote A | signal h).
struct Strategy {
  double beta_l = 0.0;
  double beta_h = 0.0;
};

enum class AgentType {
  Majority,       // aligned with the state (A in H, R in L)
  MinorityType0,  // antagonistic, restricted to beta_h = 0
  MinorityType1,  // antagonistic, restricted to beta_l = 1
};

bool is_minority(AgentType t);

struct AgentGroup {
  int count = 0;
  AgentType type = AgentType::Majority;
  UtilityTable utility;
  Strategy strategy;
};

// A strategy assignment for the whole population, independent of payoffs.
struct GroupedProfile {
  struct Block {
    int count = 0;
    AgentType type = AgentType::Majority;
    Strategy strategy;
  };
  std::vector<Block> blocks;

  int n() const;
  int minority_count() const;
  int majority_count() const;
};

struct Environment {
  int n = 0;
  Prior prior;
  SignalModel signal;
  std::vector<AgentGroup> groups;

  double alpha() const;  // realized majority fraction
  double gamma() const;  // realized MinorityType0 fraction
  GroupedProfile profile() const;
  int max_utility_bound() const;
};

struct Classification {
  bool dominated = false;
  // A strategy that weakly dominates the input; meaningful only when
  // dominated is true.
  Strategy witness;
};

// Weak-dominance classification for one agent's strategy given its type.
// Majority strategies are non-dominated iff beta_l = 0 or beta_h = 1;
// minority strategies iff beta_l = 1 or beta_h = 0.  For dominated
// strategies the witness moves along the direction that raises the vote
// probability gap in the preferred state while lowering it in the other.
Classification classify_strategy(AgentType type, const Strategy& s,
                                 const SignalModel& signal);

// Rounds half away from zero (5.5 -> 6, -5.5 -> -6).
long long round_half_away(double x);

// Builds and validates an environment from explicit groups.  When strict,
// every group's strategy must be non-dominated.
Environment build_environment(int n, const Prior& prior,
                              const SignalModel& signal,
                              std::vector<AgentGroup> groups,
                              bool strict = true);

// Builds an environment from target fractions: majority count is
// round(alpha*n), MinorityType0 count round(gamma*n), MinorityType1 the
// remainder.  Groups with zero count are dropped.
Environment build_environment(int n, const Prior& prior,
                              const SignalModel& signal, double alpha,
                              double gamma, const UtilityTable& maj_utility,
                              const UtilityTable& min_utility,
                              const Strategy& maj_strategy,
                              const Strategy& type0_strategy,
                              const Strategy& type1_strategy,
                              bool strict = true);

// Table of payoffs used throughout the examples: majority (4,0,1,2),
// minority (2,3,3,1), in the order v_HA, v_LA, v_HR, v_LR.
UtilityTable default_majority_utility();
UtilityTable default_minority_utility();

}  // namespace antvote
