#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fairteam/solve_result.hpp"

namespace fairteam {

// Optimal non-discriminatory contract for additive rewards: anchor each
// agent's cut-off wage as the uniform share and grow the team greedily in
// decreasing-value order while revenue improves.
SolveResult nondiscriminatory_additive(const Instance& inst);

// max_{i in S} (c_i/f(i)) * (1 - f(i)/x) together with its argmax agent
// (ties resolved toward the smallest index).
struct ShareBound {
  double value = 0.0;
  AgentId agent = -1;
};

ShareBound lower_bound_share(const Instance& inst, AgentSet s, double x);

// Team member with the largest standalone value, smallest index on ties.
AgentId max_value_agent(const Instance& inst, AgentSet s);

// (1/2) * gamma^2 / (gamma + n*(1-gamma)).
double fptas_epsilon(double gamma, int n);

// Estimated minimum share from a guessed argmax agent and a discretized
// reward estimate. May be negative; callers clamp against cut-off wages.
double approx_min_share(const Instance& inst, AgentId i_bar, double x_tilde,
                        double epsilon);

// Agents consistent with the guesses (i_star, i_bar, x_tilde): value at most
// f(i_star) and share-bound term at most the approximate minimum share.
AgentSet domain_set(const Instance& inst, AgentId i_bar, double x_tilde,
                    AgentId i_star, double epsilon);

struct DpCell {
  double total_share = 0.0;
  AgentSet team = 0;
};

// Stage-indexed knapsack table: stages[k] maps a discretized reward (in grid
// units) to the cheapest share total using the seed plus the first k domain
// agents. Absent keys are unreachable (+infinity).
struct DpTable {
  double disc_step = 0.0;
  std::vector<AgentId> stage_agents;
  std::vector<std::map<std::int64_t, DpCell>> stages;
};

DpTable dp_table(const Instance& inst, AgentSet domain, AgentId i_star,
                 AgentId i_bar, const std::vector<double>& alpha_tilde,
                 double disc_step);

struct DpSolution {
  AgentSet team = 0;
  double total_share = 0.0;
  double objective = 0.0;  // (1 - total_share) * x_tilde
};

// Cheapest subset of `domain` containing {i_star, i_bar} whose discretized
// reward hits x_tilde exactly; empty when unreachable.
std::optional<DpSolution> dp_solve(const Instance& inst, AgentSet domain,
                                   AgentId i_star, AgentId i_bar, double x_tilde,
                                   const std::vector<double>& alpha_tilde,
                                   double disc_step);

struct FptasCandidate {
  AgentSet team = 0;
  std::vector<double> alpha;  // index-aligned shares
  double objective = 0.0;
};

// Discretized search: enumerate the anchor agent, the reachable reward grid
// and the share-bound agent, and solve the knapsack for each combination.
// Every emitted candidate is a fair contract.
std::optional<FptasCandidate> fptas_case2(const Instance& inst, double gamma);

// Full additive solver: the best single agent against the discretized search,
// both re-priced at their optimal minimum share. Revenue is at least
// (1-gamma)^2 times the optimal fair revenue.
SolveResult fptas(const Instance& inst, double gamma);

}  // namespace fairteam
