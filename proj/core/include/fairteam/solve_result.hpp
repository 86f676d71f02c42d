#pragma once

#include <map>
#include <optional>
#include <string>

#include "fairteam/instance.hpp"

namespace fairteam {

struct SolveResult {
  AgentSet team = 0;
  TeamContract contract;
  std::optional<double> minimum_share;
  double revenue = 0.0;
  std::string algorithm;
  std::map<std::string, double> params;
};

}  // namespace fairteam
