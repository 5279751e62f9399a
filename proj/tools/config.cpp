#include "config.hpp"

#include <fstream>

#include "json.hpp"

namespace antvote::cli {

namespace {

using nlohmann::json;

AgentType parse_type(const std::string& t) {
  if (t == "majority") return AgentType::Majority;
  if (t == "minority0") return AgentType::MinorityType0;
  if (t == "minority1") return AgentType::MinorityType1;
  throw DomainError("unknown group type: " + t);
}

UtilityTable parse_utility(const json& u) {
  if (!u.is_array() || u.size() != 4) {
    throw DomainError("utility must be an array [vHA, vLA, vHR, vLR]");
  }
  return UtilityTable{u[0].get<int>(), u[1].get<int>(), u[2].get<int>(),
                      u[3].get<int>()};
}

}  // namespace

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed config: ") + e.what());
  }

  try {
    if (j.contains("n")) cfg.n = j["n"].get<int>();
    if (j.contains("prior")) cfg.p_H = j["prior"].at("pH").get<double>();
    if (j.contains("signal")) {
      cfg.p_hH = j["signal"].at("phH").get<double>();
      cfg.p_hL = j["signal"].at("phL").get<double>();
    }
    if (j.contains("alpha")) cfg.alpha = j["alpha"].get<double>();
    if (j.contains("gamma")) cfg.gamma = j["gamma"].get<double>();
    if (j.contains("groups")) {
      cfg.groups.clear();
      for (const auto& g : j["groups"]) {
        AgentGroup group;
        group.count = g.at("count").get<int>();
        group.type = parse_type(g.at("type").get<std::string>());
        group.utility = g.contains("utility")
                            ? parse_utility(g["utility"])
                            : (group.type == AgentType::Majority
                                   ? cfg.maj_utility
                                   : cfg.min_utility);
        if (g.contains("strategy")) {
          group.strategy = Strategy{g["strategy"].at("bl").get<double>(),
                                    g["strategy"].at("bh").get<double>()};
        }
        cfg.groups.push_back(group);
      }
    }
  } catch (const json::exception& e) {
    throw Error(std::string("malformed config: ") + e.what());
  }
}

SignalModel config_signal(const RunConfig& cfg) {
  return validate_signal(cfg.p_hH, 1.0 - cfg.p_hH, cfg.p_hL, 1.0 - cfg.p_hL);
}

Prior config_prior(const RunConfig& cfg) {
  return make_prior(cfg.p_H, 1.0 - cfg.p_H);
}

Environment config_environment(const RunConfig& cfg, bool strict) {
  const auto signal = config_signal(cfg);
  const auto prior = config_prior(cfg);
  if (!cfg.groups.empty()) {
    return build_environment(cfg.n, prior, signal, cfg.groups, strict);
  }
  return build_environment(cfg.n, prior, signal, cfg.alpha,
                           cfg.gamma.value_or(0.0), cfg.maj_utility,
                           cfg.min_utility, Strategy{0.0, 1.0},
                           Strategy{1.0, 0.0}, Strategy{1.0, 1.0}, strict);
}

}  // namespace antvote::cli
