#pragma once

#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "fairteam/types.hpp"

namespace fairteam {

// f(S) = sum of per-agent values over S. Monotone and submodular by construction.
struct AdditiveReward {
  std::vector<double> values;
};

// f(S) stored explicitly, index = subset bitmask. Monotonicity is validated at
// load; submodularity is checked exhaustively and recorded as a flag.
struct ExplicitTableReward {
  std::vector<double> table;
};

// Weighted coverage: f(S) = total weight of elements covered by some agent in S.
struct CoverageReward {
  std::vector<double> element_weights;
  std::vector<std::vector<int>> agent_covers;
};

using RewardModel = std::variant<AdditiveReward, ExplicitTableReward, CoverageReward>;

// Explicit tables carry the whole value space, so they stay small.
inline constexpr int kMaxTableAgents = 20;
// Non-additive models cache all 2^n values up to this size.
inline constexpr int kValueCacheMaxAgents = 20;

// An immutable problem instance: agent effort costs plus a normalized monotone
// reward model. All queries are const; instances can be shared across threads.
class Instance {
 public:
  Instance(std::vector<double> costs, RewardModel reward, double tol = kDefaultTol);

  int n() const { return n_; }
  double cost(AgentId i) const { return costs_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& costs() const { return costs_; }
  double tol() const { return cmp_.eps; }
  const Tolerance& cmp() const { return cmp_; }
  const RewardModel& reward() const { return reward_; }

  bool is_additive() const { return additive_; }
  bool is_submodular() const { return submodular_; }
  AgentSet all_agents() const { return full_team(n_); }

  // Validation notes that are not errors (e.g. rewards outside [0,1]).
  const std::vector<std::string>& warnings() const { return warnings_; }

  // Value oracle: f(S).
  double value(AgentSet s) const;
  // f(i|S\{i}) for i in S, f(S u {i}) - f(S) otherwise.
  double marginal(AgentId i, AgentSet s) const;
  // c_i / f(i|S\{i}); +infinity when the marginal vanishes.
  double cutoff_wage(AgentId i, AgentSet team) const;
  // f({i}) without building a mask at call sites.
  double singleton_value(AgentId i) const { return value(agent_bit(i)); }

 private:
  void validate_and_index();

  int n_ = 0;
  std::vector<double> costs_;
  RewardModel reward_;
  Tolerance cmp_;
  bool additive_ = false;
  bool submodular_ = false;
  std::vector<double> value_cache_;  // dense 2^n values for non-additive models
  std::vector<std::vector<std::uint64_t>> cover_masks_;  // per-agent element bit blocks
  std::vector<std::string> warnings_;
};

// A team plus per-agent linear shares; alpha is index-aligned with the
// instance and zero outside the team.
struct TeamContract {
  AgentSet team = 0;
  std::vector<double> alpha;

  double share(AgentId i) const { return alpha[static_cast<std::size_t>(i)]; }
  double total_share() const;
};

TeamContract make_contract(const Instance& inst, AgentSet team,
                           const std::vector<double>& member_shares);
void validate_contract(const Instance& inst, const TeamContract& contract);

// Rev(S, alpha) = (1 - sum of shares) * f(S). May be negative.
double revenue(const Instance& inst, const TeamContract& contract);

// Central indifference helper: does agent i weakly prefer exerting effort at
// share alpha_i when the agents in `exerting` (which must include i) do?
// Indifference counts as yes.
bool prefers_effort(const Instance& inst, double alpha_i, AgentId i, AgentSet exerting);

// True iff every team member weakly prefers effort at their share.
bool is_feasible(const Instance& inst, const TeamContract& contract);

struct PriceVector {
  std::vector<double> prices;  // index-aligned with agents
  AgentSet ground = 0;
};

// Demand oracle: a subset of `ground` maximizing f(S) - sum of prices.
// Additive models are answered greedily; other models enumerate all subsets of
// the ground set (rejected above `enum_cap` agents). Among maximizers, returns
// the inclusion-wise maximal one with the smallest bitmask.
AgentSet demand_set(const Instance& inst, const PriceVector& pv,
                    int enum_cap = kDefaultEnumCap);

inline constexpr double kInfiniteWage = std::numeric_limits<double>::infinity();

}  // namespace fairteam
