#pragma once

#include <optional>
#include <random>
#include <vector>

#include "fairteam/fairness.hpp"
#include "fairteam/instance.hpp"
#include "fairteam/instances.hpp"

namespace testutil {

using namespace fairteam;

inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Instance random_submodular_instance(int n, std::uint64_t seed) {
  const auto kind = seed % 2 == 0 ? RandomKind::kAdditive : RandomKind::kCoverage;
  return random_instance(kind, n, seed, 0.5);
}

// A nonempty random team with positive reward and positive member marginals.
inline std::optional<AgentSet> random_usable_team(const Instance& inst,
                                                  std::mt19937_64& rng,
                                                  int attempts = 64) {
  const AgentSet all = inst.all_agents();
  for (int t = 0; t < attempts; ++t) {
    const AgentSet team = rng() & all;
    if (team == 0 || inst.value(team) <= 0.0) continue;
    bool ok = true;
    for (AgentSet rest = team; rest != 0 && ok; rest &= rest - 1) {
      if (inst.marginal(lowest_agent(rest), team) <= 0.0) ok = false;
    }
    if (ok) return team;
  }
  return std::nullopt;
}

// Shares at or above the cut-off wages, scaled up by a random factor.
inline TeamContract random_feasible_contract(const Instance& inst, AgentSet team,
                                             std::mt19937_64& rng) {
  TeamContract c;
  c.team = team;
  c.alpha.assign(static_cast<std::size_t>(inst.n()), 0.0);
  for (AgentSet rest = team; rest != 0; rest &= rest - 1) {
    const AgentId i = lowest_agent(rest);
    c.alpha[static_cast<std::size_t>(i)] =
        inst.cutoff_wage(i, team) * (1.0 + 0.5 * unit_uniform(rng));
  }
  return c;
}

// Rejection sampler for fair contracts on a fixed team: start from a raised
// minimum share, optionally jitter the members, and accept only contracts that
// pass the pairwise share-bound characterization. Falls back to the jitterless
// minimum-share contract, which is always fair.
inline TeamContract random_fair_contract(const Instance& inst, AgentSet team,
                                         std::mt19937_64& rng, int attempts = 200) {
  const double optimal = optimal_minimum_share(inst, team);
  for (int t = 0; t < attempts; ++t) {
    const double raised = optimal * (1.0 + unit_uniform(rng));
    TeamContract c = least_incentive_contract(inst, team, raised);
    if (t > 0) {
      for (AgentSet rest = team; rest != 0; rest &= rest - 1) {
        const AgentId i = lowest_agent(rest);
        c.alpha[static_cast<std::size_t>(i)] *= 1.0 + 0.1 * unit_uniform(rng);
      }
    }
    if (is_fair_submodular(inst, c).fair) return c;
  }
  return least_incentive_contract(inst, team, optimal);
}

// Independent reference for the demand objective: plain scan over all subsets.
inline double best_demand_objective(const Instance& inst, const PriceVector& pv) {
  const auto ids = members(pv.ground);
  const std::size_t count = std::size_t{1} << ids.size();
  double best = 0.0;
  for (std::size_t m = 0; m < count; ++m) {
    AgentSet s = 0;
    double prices = 0.0;
    for (std::size_t b = 0; b < ids.size(); ++b) {
      if (m & (std::size_t{1} << b)) {
        s = with_agent(s, ids[b]);
        prices += pv.prices[static_cast<std::size_t>(ids[b])];
      }
    }
    best = std::max(best, inst.value(s) - prices);
  }
  return best;
}

}  // namespace testutil
