#pragma once

#include <utility>
#include <vector>

#include "fairteam/instance.hpp"

namespace fairteam {

// Pure Nash check for the effort game: members must weakly prefer exerting,
// non-members must strictly prefer shirking. Indifferent agents exert effort,
// so an indifferent non-member fails the strict condition.
bool is_equilibrium(const Instance& inst, const TeamContract& contract, AgentSet e);

// All equilibria E subset of the team, ascending by bitmask.
std::vector<AgentSet> enumerate_equilibria(const Instance& inst,
                                           const TeamContract& contract,
                                           int enum_cap = kDefaultEnumCap);

// Outcome of swapping the shares of two team members. Submodular models have a
// unique post-swap equilibrium; other models may surface several.
struct SwapOutcome {
  AgentId i = -1;
  AgentId j = -1;
  std::vector<AgentSet> equilibria;
  bool unique = false;

  AgentSet equilibrium() const {
    if (equilibria.empty()) throw Error("swap produced no pure equilibrium");
    return equilibria.front();
  }
};

TeamContract swapped_contract(const TeamContract& contract, AgentId i, AgentId j);

// Post-swap equilibrium. Submodular models use the one-agent-drop fast path;
// others fall back to exhaustive enumeration under the swapped shares.
SwapOutcome swap_equilibrium(const Instance& inst, const TeamContract& contract,
                             AgentId i, AgentId j, int enum_cap = kDefaultEnumCap);

}  // namespace fairteam
