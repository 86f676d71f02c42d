#pragma once

#include <optional>
#include <vector>

#include "fairteam/solve_result.hpp"

namespace fairteam {

struct SubmodApproxParams {
  double delta = 1.0 / 128;
  double tau = 1.0 / 128;
  double eta = 17.0 / 16;
  double beta = 17.0 / 16;
  double lambda = 0.5;
  bool rescore = false;  // score branch candidates by fair revenue instead of g
  int enum_cap = kDefaultEnumCap;
};

// Revenue of team S under its cheapest non-discriminatory contract:
// (1 - |S| * max cut-off) * f(S). Empty team scores 0; a member with zero
// marginal makes the team unusable (-infinity).
double g_value(const Instance& inst, AgentSet s);

// Shrinks S by repeatedly dropping the agent with the smallest marginal until
// f lands in [(1-lambda)*psi, psi + max member value]. Members of the result
// keep marginals at least as large as in S.
std::optional<AgentSet> scaling_lemma(const Instance& inst, AgentSet s,
                                      double lambda, double psi);

// Geometric ladders enumerated by the demand-query search: candidate uniform
// shares starting at tau/(2n), and candidate reward levels seeded by the
// nonzero singleton values.
std::vector<double> case3_share_grid(int n, const SubmodApproxParams& params);
std::vector<double> case3_value_grid(const Instance& inst,
                                     const SubmodApproxParams& params);

// One grid cell: restrict to agents with small singletons, then ask the
// demand oracle with prices max(c_i / (2*share*beta), share*reward/4).
AgentSet case3_demand_step(const Instance& inst, const SubmodApproxParams& params,
                           double share_estimate, double reward_estimate);

struct Case3Pick {
  AgentSet team = 0;
  double g = 0.0;
  double share_estimate = 0.0;
  double reward_estimate = 0.0;
  bool found = false;
};

// Full grid sweep; keeps the scaled demand set with the best g. Grid cells
// whose demand set is empty or whose scaling target is out of range are
// skipped (they fall outside the analyzed regime).
Case3Pick case3_search_detailed(const Instance& inst,
                                const SubmodApproxParams& params = {});
AgentSet case3_search(const Instance& inst, const SubmodApproxParams& params = {});

// Demand set at prices c_i * n / tau, covering the regime where the optimal
// uniform share is below tau/(2n).
AgentSet case2_bounded(const Instance& inst, double tau,
                       int enum_cap = kDefaultEnumCap);

// Constant-factor approximation of the optimal fair contract for submodular
// rewards: best of the singleton, grid-search and small-share branches,
// re-priced at the winning team's optimal minimum share.
SolveResult constant_approx(const Instance& inst,
                            const SubmodApproxParams& params = {});

}  // namespace fairteam
