#include "fairteam/equilibrium.hpp"

#include <algorithm>

namespace fairteam {

bool is_equilibrium(const Instance& inst, const TeamContract& contract, AgentSet e) {
  if ((e & ~contract.team) != 0) {
    throw PreconditionError("equilibrium candidate must lie inside the team");
  }
  for (AgentSet rest = contract.team; rest != 0; rest &= rest - 1) {
    const AgentId i = lowest_agent(rest);
    const double a = contract.share(i);
    if (contains(e, i)) {
      if (!prefers_effort(inst, a, i, e)) return false;
    } else {
      // An indifferent outsider would join, so E is not stable.
      if (prefers_effort(inst, a, i, with_agent(e, i))) return false;
    }
  }
  return true;
}

std::vector<AgentSet> enumerate_equilibria(const Instance& inst,
                                           const TeamContract& contract,
                                           int enum_cap) {
  const auto ids = members(contract.team);
  const int k = static_cast<int>(ids.size());
  if (k > enum_cap) {
    throw CapExceededError("equilibrium enumeration over " + std::to_string(k) +
                           " agents exceeds the cap of " + std::to_string(enum_cap));
  }
  std::vector<AgentSet> out;
  const std::size_t count = std::size_t{1} << k;
  for (std::size_t idx = 0; idx < count; ++idx) {
    AgentSet e = 0;
    for (int b = 0; b < k; ++b) {
      if (idx & (std::size_t{1} << b)) e = with_agent(e, ids[static_cast<std::size_t>(b)]);
    }
    if (is_equilibrium(inst, contract, e)) out.push_back(e);
  }
  return out;
}

TeamContract swapped_contract(const TeamContract& contract, AgentId i, AgentId j) {
  TeamContract out = contract;
  std::swap(out.alpha[static_cast<std::size_t>(i)], out.alpha[static_cast<std::size_t>(j)]);
  return out;
}

SwapOutcome swap_equilibrium(const Instance& inst, const TeamContract& contract,
                             AgentId i, AgentId j, int enum_cap) {
  if (!contains(contract.team, i) || !contains(contract.team, j)) {
    throw PreconditionError("swap requires two team members");
  }
  if (!is_feasible(inst, contract)) {
    throw PreconditionError("swap requires a feasible contract");
  }
  SwapOutcome out;
  out.i = i;
  out.j = j;

  const double ai = contract.share(i);
  const double aj = contract.share(j);
  if (ai == aj) {
    // Identity swap: the status quo persists.
    out.equilibria = {contract.team};
    out.unique = true;
    return out;
  }

  if (inst.is_submodular()) {
    // Exactly one agent's share drops; everyone else stays incentivized, so the
    // equilibrium is the team with that agent either kept or removed.
    const AgentId dropped = ai > aj ? i : j;
    const double new_share = std::min(ai, aj);
    const AgentSet eq = prefers_effort(inst, new_share, dropped, contract.team)
                            ? contract.team
                            : without_agent(contract.team, dropped);
    out.equilibria = {eq};
    out.unique = true;
    return out;
  }

  out.equilibria = enumerate_equilibria(inst, swapped_contract(contract, i, j), enum_cap);
  out.unique = out.equilibria.size() == 1;
  return out;
}

}  // namespace fairteam
