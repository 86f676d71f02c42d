#include "fairteam/json_io.hpp"

#include <fstream>

namespace fairteam {

using nlohmann::json;

namespace {

json doubles_to_json(const std::vector<double>& xs) { return json(xs); }

std::vector<double> doubles_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number()) throw SchemaError(std::string(what) + " must contain numbers only");
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

json instance_to_json(const Instance& inst, const json& metadata) {
  json reward;
  if (const auto* add = std::get_if<AdditiveReward>(&inst.reward())) {
    reward = {{"kind", "additive"}, {"values", doubles_to_json(add->values)}};
  } else if (const auto* tab = std::get_if<ExplicitTableReward>(&inst.reward())) {
    reward = {{"kind", "explicit"}, {"table", doubles_to_json(tab->table)}};
  } else {
    const auto& cov = std::get<CoverageReward>(inst.reward());
    reward = {{"kind", "coverage"},
              {"element_weights", doubles_to_json(cov.element_weights)},
              {"agent_covers", json(cov.agent_covers)}};
  }
  json out = {{"n", inst.n()},
              {"costs", doubles_to_json(inst.costs())},
              {"reward", reward},
              {"tol", inst.tol()}};
  if (!metadata.is_null()) out["metadata"] = metadata;
  return out;
}

InstanceFile instance_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("instance file must be a JSON object");
  if (!j.contains("costs") || !j.contains("reward")) {
    throw SchemaError("instance file needs 'costs' and 'reward'");
  }
  auto costs = doubles_from_json(j.at("costs"), "'costs'");
  if (j.contains("n") &&
      (!j.at("n").is_number_integer() ||
       j.at("n").get<std::int64_t>() != static_cast<std::int64_t>(costs.size()))) {
    throw SchemaError("'n' must match the length of 'costs'");
  }
  double tol = kDefaultTol;
  if (j.contains("tol")) {
    if (!j.at("tol").is_number()) throw SchemaError("'tol' must be a number");
    tol = j.at("tol").get<double>();
  }

  const json& rj = j.at("reward");
  if (!rj.is_object() || !rj.contains("kind") || !rj.at("kind").is_string()) {
    throw SchemaError("'reward' needs a string 'kind'");
  }
  const std::string kind = rj.at("kind").get<std::string>();
  RewardModel model;
  if (kind == "additive") {
    if (!rj.contains("values")) throw SchemaError("additive reward needs 'values'");
    model = AdditiveReward{doubles_from_json(rj.at("values"), "'values'")};
  } else if (kind == "explicit") {
    if (!rj.contains("table")) throw SchemaError("explicit reward needs 'table'");
    model = ExplicitTableReward{doubles_from_json(rj.at("table"), "'table'")};
  } else if (kind == "coverage") {
    if (!rj.contains("element_weights") || !rj.contains("agent_covers")) {
      throw SchemaError("coverage reward needs 'element_weights' and 'agent_covers'");
    }
    CoverageReward cov;
    cov.element_weights = doubles_from_json(rj.at("element_weights"), "'element_weights'");
    if (!rj.at("agent_covers").is_array()) {
      throw SchemaError("'agent_covers' must be an array of index arrays");
    }
    for (const auto& row : rj.at("agent_covers")) {
      if (!row.is_array()) throw SchemaError("'agent_covers' must be an array of index arrays");
      std::vector<int> cover;
      for (const auto& e : row) {
        if (!e.is_number_integer()) throw SchemaError("cover entries must be integers");
        cover.push_back(e.get<int>());
      }
      cov.agent_covers.push_back(std::move(cover));
    }
    model = std::move(cov);
  } else {
    throw SchemaError("unknown reward kind '" + kind + "'");
  }

  return InstanceFile{Instance(std::move(costs), std::move(model), tol),
                      j.contains("metadata") ? j.at("metadata") : json(nullptr)};
}

json contract_to_json(const TeamContract& contract) {
  std::vector<int> team;
  std::vector<double> shares;
  for (AgentSet rest = contract.team; rest != 0; rest &= rest - 1) {
    const AgentId i = lowest_agent(rest);
    team.push_back(i);
    shares.push_back(contract.alpha[static_cast<std::size_t>(i)]);
  }
  return {{"team", json(team)}, {"alpha", json(shares)}};
}

TeamContract contract_from_json(const Instance& inst, const json& j) {
  if (!j.is_object() || !j.contains("team") || !j.contains("alpha")) {
    throw SchemaError("contract file needs 'team' and 'alpha'");
  }
  if (!j.at("team").is_array()) throw SchemaError("'team' must be an array of agent ids");
  AgentSet team = 0;
  std::vector<AgentId> order;
  for (const auto& e : j.at("team")) {
    if (!e.is_number_integer()) throw SchemaError("'team' must contain integers");
    const int i = e.get<int>();
    if (i < 0 || i >= inst.n()) throw SchemaError("team member out of range");
    if (contains(team, i)) throw SchemaError("duplicate team member");
    team = with_agent(team, i);
    order.push_back(i);
  }
  const auto shares = doubles_from_json(j.at("alpha"), "'alpha'");
  if (shares.size() != order.size()) {
    throw SchemaError("'alpha' must list one share per team member");
  }
  TeamContract contract;
  contract.team = team;
  contract.alpha.assign(static_cast<std::size_t>(inst.n()), 0.0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (shares[k] < 0.0) throw SchemaError("shares must be nonnegative");
    contract.alpha[static_cast<std::size_t>(order[k])] = shares[k];
  }
  return contract;
}

json result_to_json(const SolveResult& result) {
  json out = contract_to_json(result.contract);
  out["minimum_share"] =
      result.minimum_share.has_value() ? json(*result.minimum_share) : json(nullptr);
  out["revenue"] = result.revenue;
  out["algorithm"] = result.algorithm;
  out["params"] = json(result.params);
  return out;
}

json verdict_to_json(const FairnessVerdict& verdict, FairnessSemantics semantics) {
  json out = {{"fair", verdict.fair},
              {"semantics", semantics == FairnessSemantics::kOptimistic ? "optimistic"
                                                                        : "pessimistic"},
              {"witness", nullptr}};
  if (verdict.witness.has_value()) {
    const auto& w = *verdict.witness;
    out["witness"] = {{"pair", json::array({w.i, w.j})},
                      {"equilibrium", json(members(w.equilibrium))},
                      {"failed_inequality", to_string(w.failure)}};
  }
  return out;
}

InstanceFile load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open instance file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemaError("invalid JSON in " + path + ": " + e.what());
  }
  return instance_from_json(j);
}

void save_instance_file(const std::string& path, const Instance& inst,
                        const json& metadata) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write instance file: " + path);
  out << canonical_dump(instance_to_json(inst, metadata));
}

TeamContract load_contract_file(const std::string& path, const Instance& inst) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open contract file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemaError("invalid JSON in " + path + ": " + e.what());
  }
  return contract_from_json(inst, j);
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace fairteam
