#include "fairteam/fairness.hpp"

#include <algorithm>
#include <cmath>

namespace fairteam {

std::string to_string(EnvyFailure f) {
  switch (f) {
    case EnvyFailure::kFirstInequality: return "first";
    case EnvyFailure::kSecondInequality: return "second";
    case EnvyFailure::kBothInequalities: return "both";
    case EnvyFailure::kNoEquilibrium: return "no_equilibrium";
  }
  return "unknown";
}

bool swap_envy_free(const Instance& inst, const TeamContract& contract,
                    AgentId i, AgentId j, AgentSet eq, EnvyFailure* failure) {
  const Tolerance& cmp = inst.cmp();
  const double f_team = inst.value(contract.team);
  const double f_eq = inst.value(eq);
  const double ai = contract.share(i);
  const double aj = contract.share(j);

  const double before_i = ai * f_team - inst.cost(i);
  const double before_j = aj * f_team - inst.cost(j);
  const double after_i = aj * f_eq - (contains(eq, i) ? inst.cost(i) : 0.0);
  const double after_j = ai * f_eq - (contains(eq, j) ? inst.cost(j) : 0.0);

  const bool first_ok = cmp.weakly_ge(before_i, after_i);
  const bool second_ok = cmp.weakly_ge(before_j, after_j);
  if (failure != nullptr && (!first_ok || !second_ok)) {
    *failure = !first_ok && !second_ok ? EnvyFailure::kBothInequalities
               : !first_ok             ? EnvyFailure::kFirstInequality
                                       : EnvyFailure::kSecondInequality;
  }
  return first_ok && second_ok;
}

FairnessVerdict pair_fairness(const Instance& inst, const TeamContract& contract,
                              AgentId i, AgentId j, FairnessSemantics semantics,
                              int enum_cap) {
  FairnessVerdict verdict;
  if (contract.share(i) == contract.share(j)) return verdict;

  const SwapOutcome swap = swap_equilibrium(inst, contract, i, j, enum_cap);
  if (swap.equilibria.empty()) {
    verdict.fair = semantics == FairnessSemantics::kPessimistic;
    if (!verdict.fair) {
      verdict.witness = FairnessWitness{i, j, 0, EnvyFailure::kNoEquilibrium};
    }
    return verdict;
  }

  if (semantics == FairnessSemantics::kOptimistic) {
    for (AgentSet eq : swap.equilibria) {
      if (swap_envy_free(inst, contract, i, j, eq, nullptr)) return verdict;
    }
    // no equilibrium works; report the first one as the witness
    verdict.fair = false;
    verdict.witness = FairnessWitness{i, j, swap.equilibria.front(),
                                      EnvyFailure::kFirstInequality};
    swap_envy_free(inst, contract, i, j, swap.equilibria.front(), &verdict.witness->failure);
    return verdict;
  }

  for (AgentSet eq : swap.equilibria) {
    EnvyFailure failure = EnvyFailure::kFirstInequality;
    if (!swap_envy_free(inst, contract, i, j, eq, &failure)) {
      verdict.fair = false;
      verdict.witness = FairnessWitness{i, j, eq, failure};
      return verdict;
    }
  }
  return verdict;
}

FairnessVerdict is_fair_definitional(const Instance& inst, const TeamContract& contract,
                                     FairnessSemantics semantics, int enum_cap) {
  validate_contract(inst, contract);
  if (!is_feasible(inst, contract)) {
    throw PreconditionError("fairness is defined for feasible contracts only");
  }
  const auto ids = members(contract.team);
  for (std::size_t a = 0; a + 1 < ids.size(); ++a) {
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      FairnessVerdict v = pair_fairness(inst, contract, ids[a], ids[b], semantics, enum_cap);
      if (!v.fair) return v;
    }
  }
  return {};
}

FairnessVerdict is_fair_submodular(const Instance& inst, const TeamContract& contract) {
  if (!inst.is_submodular()) {
    throw PreconditionError("share-bound fairness check requires a submodular model");
  }
  validate_contract(inst, contract);
  if (!is_feasible(inst, contract)) {
    throw PreconditionError("fairness is defined for feasible contracts only");
  }
  if (contract.team == 0) return {};
  const double f_team = inst.value(contract.team);
  if (f_team <= 0.0) {
    throw PreconditionError("share-bound fairness check requires f(S) > 0");
  }

  const Tolerance& cmp = inst.cmp();
  const auto ids = members(contract.team);
  for (AgentId low : ids) {
    for (AgentId high : ids) {
      const double a_low = contract.share(low);
      const double a_high = contract.share(high);
      if (!(a_low < a_high)) continue;
      const double gain = inst.marginal(high, contract.team);
      const double cutoff = inst.cutoff_wage(high, contract.team);
      // Indifference at the cut-off keeps the high agent exerting after the
      // swap, which already breaks envy-freeness, so the bound is strict.
      if (!(std::isinf(cutoff) || cmp.strictly_lt(a_low, cutoff))) {
        return {false, FairnessWitness{low, high, contract.team,
                                       EnvyFailure::kFirstInequality}};
      }
      const double floor = a_high * (1.0 - gain / f_team);
      if (!cmp.weakly_ge(a_low, floor)) {
        return {false, FairnessWitness{low, high, without_agent(contract.team, high),
                                       EnvyFailure::kFirstInequality}};
      }
    }
  }
  return {};
}

double optimal_minimum_share(const Instance& inst, AgentSet team) {
  const double f_team = inst.value(team);
  if (team == 0 || f_team <= 0.0) {
    throw PreconditionError("minimum share requires a team with positive reward");
  }
  double best = 0.0;
  for (AgentSet rest = team; rest != 0; rest &= rest - 1) {
    const AgentId i = lowest_agent(rest);
    const double gain = inst.marginal(i, team);
    if (gain <= 0.0) {
      throw PreconditionError("agent " + std::to_string(i) +
                              " has zero marginal contribution; team is infeasible");
    }
    best = std::max(best, (inst.cost(i) / gain) * (1.0 - gain / f_team));
  }
  return std::max(best, 0.0);
}

TeamContract least_incentive_contract(const Instance& inst, AgentSet team,
                                      double min_share) {
  const double optimal = optimal_minimum_share(inst, team);
  if (!inst.cmp().weakly_ge(min_share, optimal)) {
    throw PreconditionError("minimum share below the optimum for this team");
  }
  TeamContract c;
  c.team = team;
  c.alpha.assign(static_cast<std::size_t>(inst.n()), 0.0);
  for (AgentSet rest = team; rest != 0; rest &= rest - 1) {
    const AgentId i = lowest_agent(rest);
    c.alpha[static_cast<std::size_t>(i)] = std::max(min_share, inst.cutoff_wage(i, team));
  }
  return c;
}

}  // namespace fairteam
