#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "fairteam/fairness.hpp"
#include "fairteam/instance.hpp"
#include "fairteam/solve_result.hpp"

namespace fairteam {

// An instance plus the free-form metadata block carried by its file, kept so
// load -> save round-trips byte-identically.
struct InstanceFile {
  Instance instance;
  nlohmann::json metadata;  // null when absent
};

nlohmann::json instance_to_json(const Instance& inst,
                                const nlohmann::json& metadata = nullptr);
InstanceFile instance_from_json(const nlohmann::json& j);

nlohmann::json contract_to_json(const TeamContract& contract);
TeamContract contract_from_json(const Instance& inst, const nlohmann::json& j);

nlohmann::json result_to_json(const SolveResult& result);
nlohmann::json verdict_to_json(const FairnessVerdict& verdict,
                               FairnessSemantics semantics);

InstanceFile load_instance_file(const std::string& path);
void save_instance_file(const std::string& path, const Instance& inst,
                        const nlohmann::json& metadata = nullptr);
TeamContract load_contract_file(const std::string& path, const Instance& inst);

// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const nlohmann::json& j);

}  // namespace fairteam
