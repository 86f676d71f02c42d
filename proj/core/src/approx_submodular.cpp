#include "fairteam/approx_submodular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fairteam/fairness.hpp"

namespace fairteam {

namespace {

void require_submodular(const Instance& inst, const char* what) {
  if (!inst.is_submodular()) {
    throw PreconditionError(std::string(what) + " requires a submodular reward model");
  }
}

}  // namespace

double g_value(const Instance& inst, AgentSet s) {
  if (s == 0) return 0.0;
  double top_cutoff = 0.0;
  for (AgentSet rest = s; rest != 0; rest &= rest - 1) {
    const AgentId i = lowest_agent(rest);
    const double gain = inst.marginal(i, s);
    if (gain <= 0.0) return -std::numeric_limits<double>::infinity();
    top_cutoff = std::max(top_cutoff, inst.cost(i) / gain);
  }
  return (1.0 - set_size(s) * top_cutoff) * inst.value(s);
}

std::optional<AgentSet> scaling_lemma(const Instance& inst, AgentSet s,
                                      double lambda, double psi) {
  require_submodular(inst, "the scaling step");
  if (!(lambda > 0.0) || lambda > 1.0) {
    throw PreconditionError("scaling needs lambda in (0, 1]");
  }
  if (psi < 0.0 || psi >= inst.value(s)) {
    throw PreconditionError("scaling needs 0 <= psi < f(S)");
  }

  const auto in_window = [&](AgentSet u) {
    double top = 0.0;
    for (AgentSet rest = u; rest != 0; rest &= rest - 1) {
      top = std::max(top, inst.singleton_value(lowest_agent(rest)));
    }
    const double f_u = inst.value(u);
    return (1.0 - lambda) * psi <= f_u && f_u <= psi + top;
  };

  AgentSet u = s;
  if (in_window(u)) return u;
  while (u != 0) {
    AgentId drop = -1;
    double smallest = 0.0;
    for (AgentSet rest = u; rest != 0; rest &= rest - 1) {
      const AgentId i = lowest_agent(rest);
      const double gain = inst.marginal(i, u);
      if (drop < 0 || gain < smallest) {
        drop = i;
        smallest = gain;
      }
    }
    u = without_agent(u, drop);
    if (in_window(u)) return u;
  }
  return std::nullopt;
}

std::vector<double> case3_share_grid(int n, const SubmodApproxParams& params) {
  std::vector<double> grid;
  const double base = params.tau / (2.0 * n);
  const int top = static_cast<int>(
      std::floor(std::log(2.0 * n / params.tau) / std::log(params.beta)));
  double value = base;
  for (int k = 0; k <= top; ++k) {
    grid.push_back(value);
    value *= params.beta;
  }
  return grid;
}

std::vector<double> case3_value_grid(const Instance& inst,
                                     const SubmodApproxParams& params) {
  std::vector<double> grid;
  const int top = static_cast<int>(
      std::floor(std::log(static_cast<double>(std::max(inst.n(), 1))) /
                 std::log(params.eta)));
  for (AgentId i = 0; i < inst.n(); ++i) {
    double value = inst.singleton_value(i);
    if (value <= 0.0) continue;
    for (int k = 0; k <= top; ++k) {
      grid.push_back(value);
      value *= params.eta;
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

AgentSet case3_demand_step(const Instance& inst, const SubmodApproxParams& params,
                           double share_estimate, double reward_estimate) {
  PriceVector pv;
  pv.prices.assign(static_cast<std::size_t>(inst.n()), 0.0);
  const double small = params.delta * params.eta * reward_estimate;
  for (AgentId i = 0; i < inst.n(); ++i) {
    if (inst.singleton_value(i) <= small) pv.ground = with_agent(pv.ground, i);
    pv.prices[static_cast<std::size_t>(i)] =
        std::max(inst.cost(i) / (2.0 * share_estimate * params.beta),
                 share_estimate * reward_estimate / 4.0);
  }
  return demand_set(inst, pv, params.enum_cap);
}

Case3Pick case3_search_detailed(const Instance& inst,
                                const SubmodApproxParams& params) {
  require_submodular(inst, "the grid search");
  Case3Pick pick;
  if (inst.n() == 0) return pick;
  const auto shares = case3_share_grid(inst.n(), params);
  const auto rewards = case3_value_grid(inst, params);
  for (double share : shares) {
    for (double reward : rewards) {
      const AgentSet demanded = case3_demand_step(inst, params, share, reward);
      if (demanded == 0) continue;
      double top = 0.0;
      for (AgentSet rest = demanded; rest != 0; rest &= rest - 1) {
        top = std::max(top, inst.singleton_value(lowest_agent(rest)));
      }
      const double psi = reward / 16.0 - top;
      if (psi < 0.0 || psi >= inst.value(demanded)) continue;
      const auto scaled = scaling_lemma(inst, demanded, params.lambda, psi);
      if (!scaled.has_value()) continue;
      const double g = g_value(inst, *scaled);
      if (!pick.found || g > pick.g || (g == pick.g && *scaled < pick.team)) {
        pick = Case3Pick{*scaled, g, share, reward, true};
      }
    }
  }
  return pick;
}

AgentSet case3_search(const Instance& inst, const SubmodApproxParams& params) {
  return case3_search_detailed(inst, params).team;
}

AgentSet case2_bounded(const Instance& inst, double tau, int enum_cap) {
  require_submodular(inst, "the small-share branch");
  if (!(tau > 0.0)) throw PreconditionError("tau must be positive");
  PriceVector pv;
  pv.ground = inst.all_agents();
  pv.prices.assign(static_cast<std::size_t>(inst.n()), 0.0);
  for (AgentId i = 0; i < inst.n(); ++i) {
    pv.prices[static_cast<std::size_t>(i)] = inst.cost(i) * inst.n() / tau;
  }
  return demand_set(inst, pv, enum_cap);
}

SolveResult constant_approx(const Instance& inst, const SubmodApproxParams& params) {
  require_submodular(inst, "the constant-approximation solver");

  AgentSet best_single = 0;
  double best_single_g = 0.0;
  for (AgentId i = 0; i < inst.n(); ++i) {
    if (inst.singleton_value(i) <= 0.0) continue;
    const double g = g_value(inst, agent_bit(i));
    if (best_single == 0 || g > best_single_g) {
      best_single = agent_bit(i);
      best_single_g = g;
    }
  }

  const AgentSet candidates[] = {
      best_single,
      case3_search(inst, params),
      case2_bounded(inst, params.tau, params.enum_cap),
      0,
  };

  AgentSet winner = 0;
  double winner_score = 0.0;
  bool have_winner = false;
  for (AgentSet team : candidates) {
    double score;
    if (params.rescore) {
      // Score branches by the revenue of their fair minimum-share contract.
      if (team == 0) {
        score = 0.0;
      } else {
        try {
          score = revenue(inst, least_incentive_contract(
                                    inst, team, optimal_minimum_share(inst, team)));
        } catch (const PreconditionError&) {
          continue;
        }
      }
    } else {
      score = g_value(inst, team);
    }
    if (!have_winner || score > winner_score ||
        (score == winner_score && team < winner)) {
      winner = team;
      winner_score = score;
      have_winner = true;
    }
  }

  SolveResult result;
  result.algorithm = "submodular-approx";
  result.params = {{"delta", params.delta}, {"tau", params.tau},
                   {"eta", params.eta},     {"beta", params.beta},
                   {"lambda", params.lambda},
                   {"rescore", params.rescore ? 1.0 : 0.0}};
  result.team = winner;
  result.contract.team = winner;
  result.contract.alpha.assign(static_cast<std::size_t>(inst.n()), 0.0);
  if (winner != 0) {
    const double min_share = optimal_minimum_share(inst, winner);
    result.minimum_share = min_share;
    result.contract = least_incentive_contract(inst, winner, min_share);
    result.revenue = revenue(inst, result.contract);
  }
  return result;
}

}  // namespace fairteam
