#pragma once

#include <optional>
#include <string>

#include "fairteam/equilibrium.hpp"
#include "fairteam/instance.hpp"

namespace fairteam {

// Models with several post-swap equilibria need an equilibrium-selection rule:
// optimistic accepts a pair when some equilibrium keeps both agents envy-free,
// pessimistic demands it of every equilibrium.
enum class FairnessSemantics { kOptimistic, kPessimistic };

enum class EnvyFailure {
  kFirstInequality,   // the lower-share agent strictly gains from the swap
  kSecondInequality,  // the higher-share agent strictly gains from the swap
  kBothInequalities,
  kNoEquilibrium,  // the swapped contract admits no pure equilibrium
};

std::string to_string(EnvyFailure f);

struct FairnessWitness {
  AgentId i = -1;
  AgentId j = -1;
  AgentSet equilibrium = 0;
  EnvyFailure failure = EnvyFailure::kFirstInequality;
};

struct FairnessVerdict {
  bool fair = true;
  std::optional<FairnessWitness> witness;
};

// Do both envy-freeness inequalities hold for the pair (i, j) when the swap
// settles on equilibrium `eq`? On failure also reports which side broke.
bool swap_envy_free(const Instance& inst, const TeamContract& contract,
                    AgentId i, AgentId j, AgentSet eq,
                    EnvyFailure* failure = nullptr);

// Envy-freeness of one pair under the swap, resolving equilibrium multiplicity
// with the requested semantics.
FairnessVerdict pair_fairness(const Instance& inst, const TeamContract& contract,
                              AgentId i, AgentId j,
                              FairnessSemantics semantics = FairnessSemantics::kOptimistic,
                              int enum_cap = kDefaultEnumCap);

// Definitional check: every pair of team members with distinct shares is
// examined under the post-swap equilibrium.
FairnessVerdict is_fair_definitional(const Instance& inst, const TeamContract& contract,
                                     FairnessSemantics semantics = FairnessSemantics::kOptimistic,
                                     int enum_cap = kDefaultEnumCap);

// Pairwise share-bound characterization for submodular rewards: for shares
// a_i < a_j the contract is fair iff a_i stays strictly below agent j's
// cut-off wage and weakly above a_j * (1 - f(j|S\{j}) / f(S)).
FairnessVerdict is_fair_submodular(const Instance& inst, const TeamContract& contract);

// Smallest minimum share whose least-incentive contract is fair on this team.
double optimal_minimum_share(const Instance& inst, AgentSet team);

// Contract paying max(min_share, cut-off wage) to each member, zero elsewhere.
// Requires min_share >= optimal_minimum_share(team).
TeamContract least_incentive_contract(const Instance& inst, AgentSet team,
                                      double min_share);

}  // namespace fairteam
