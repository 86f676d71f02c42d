#include "fairteam/exact.hpp"

#include <algorithm>
#include <array>

#include "fairteam/fairness.hpp"

namespace fairteam {

namespace {

struct Candidate {
  double revenue = 0.0;
  double reward = 0.0;
  AgentSet team = 0;
};

bool improves(const Candidate& cand, const Candidate& best, const Tolerance& cmp) {
  if (cand.revenue > best.revenue + cmp.eps) return true;
  if (cand.revenue < best.revenue - cmp.eps) return false;
  if (cand.reward > best.reward + cmp.eps) return true;
  if (cand.reward < best.reward - cmp.eps) return false;
  return cand.team < best.team;
}

void check_cap(const Instance& inst, int enum_cap) {
  if (inst.n() > enum_cap) {
    throw CapExceededError("brute force over " + std::to_string(inst.n()) +
                           " agents exceeds the cap of " + std::to_string(enum_cap));
  }
}

}  // namespace

SolveResult optimal_fair_bruteforce(const Instance& inst, int enum_cap) {
  check_cap(inst, enum_cap);
  if (!inst.is_submodular()) {
    throw PreconditionError("the per-team share optimum applies to submodular models only");
  }

  Candidate best;  // the empty team is always on the table
  double best_min_share = 0.0;
  std::array<double, kMaxAgents + 1> gains{};

  const AgentSet all = inst.all_agents();
  for (AgentSet team = 1; team <= all; ++team) {
    const double f_team = inst.value(team);
    if (f_team <= 0.0) continue;

    bool usable = true;
    double min_share = 0.0;
    for (AgentSet rest = team; rest != 0; rest &= rest - 1) {
      const AgentId i = lowest_agent(rest);
      const double gain = inst.marginal(i, team);
      if (gain <= 0.0) {
        usable = false;
        break;
      }
      gains[static_cast<std::size_t>(i)] = gain;
      min_share = std::max(min_share, (inst.cost(i) / gain) * (1.0 - gain / f_team));
    }
    if (!usable) continue;

    double paid = 0.0;
    for (AgentSet rest = team; rest != 0; rest &= rest - 1) {
      const AgentId i = lowest_agent(rest);
      paid += std::max(min_share, inst.cost(i) / gains[static_cast<std::size_t>(i)]);
    }
    const Candidate cand{(1.0 - paid) * f_team, f_team, team};
    if (improves(cand, best, inst.cmp())) {
      best = cand;
      best_min_share = min_share;
    }
  }

  SolveResult result;
  result.team = best.team;
  result.revenue = best.revenue;
  result.algorithm = "exact";
  if (best.team != 0) {
    result.minimum_share = best_min_share;
    result.contract = least_incentive_contract(inst, best.team, best_min_share);
  } else {
    result.contract.alpha.assign(static_cast<std::size_t>(inst.n()), 0.0);
  }
  return result;
}

SolveResult optimal_nondiscriminatory_bruteforce(const Instance& inst, int enum_cap) {
  check_cap(inst, enum_cap);

  Candidate best;
  double best_share = 0.0;

  const AgentSet all = inst.all_agents();
  for (AgentSet team = 1; team <= all; ++team) {
    bool usable = true;
    double uniform = 0.0;
    for (AgentSet rest = team; rest != 0; rest &= rest - 1) {
      const AgentId i = lowest_agent(rest);
      const double gain = inst.marginal(i, team);
      if (gain <= 0.0) {
        usable = false;
        break;
      }
      uniform = std::max(uniform, inst.cost(i) / gain);
    }
    if (!usable) continue;

    const double f_team = inst.value(team);
    const Candidate cand{(1.0 - set_size(team) * uniform) * f_team, f_team, team};
    if (improves(cand, best, inst.cmp())) {
      best = cand;
      best_share = uniform;
    }
  }

  SolveResult result;
  result.team = best.team;
  result.revenue = best.revenue;
  result.algorithm = "exact-nd";
  result.contract.team = best.team;
  result.contract.alpha.assign(static_cast<std::size_t>(inst.n()), 0.0);
  if (best.team != 0) {
    result.minimum_share = best_share;
    for (AgentSet rest = best.team; rest != 0; rest &= rest - 1) {
      result.contract.alpha[static_cast<std::size_t>(lowest_agent(rest))] = best_share;
    }
  }
  return result;
}

}  // namespace fairteam
