#include "fairteam/instance.hpp"

#include <algorithm>
#include <cmath>

namespace fairteam {

namespace {

double coverage_value(const std::vector<double>& weights,
                      const std::vector<std::vector<std::uint64_t>>& masks,
                      AgentSet s) {
  if (s == 0 || masks.empty()) return 0.0;
  const std::size_t blocks = masks.front().size();
  std::vector<std::uint64_t> covered(blocks, 0);
  for (AgentSet rest = s; rest != 0; rest &= rest - 1) {
    const auto& m = masks[static_cast<std::size_t>(lowest_agent(rest))];
    for (std::size_t b = 0; b < blocks; ++b) covered[b] |= m[b];
  }
  double total = 0.0;
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::uint64_t word = covered[b]; word != 0; word &= word - 1) {
      total += weights[b * 64 + static_cast<std::size_t>(std::countr_zero(word))];
    }
  }
  return total;
}

// Local characterization of diminishing marginals: f(i | S u {j}) <= f(i | S)
// for all S and distinct i, j outside S. Equivalent to the subset form.
bool table_is_submodular(const std::vector<double>& table, int n, double eps) {
  const AgentSet all = full_team(n);
  for (AgentSet s = 0; s <= all; ++s) {
    for (AgentId i = 0; i < n; ++i) {
      if (contains(s, i)) continue;
      const double gain_here = table[s | agent_bit(i)] - table[s];
      for (AgentId j = 0; j < n; ++j) {
        if (j == i || contains(s, j)) continue;
        const AgentSet larger = s | agent_bit(j);
        const double gain_larger = table[larger | agent_bit(i)] - table[larger];
        if (gain_larger > gain_here + eps) return false;
      }
    }
    if (s == all) break;
  }
  return true;
}

}  // namespace

Instance::Instance(std::vector<double> costs, RewardModel reward, double tol)
    : n_(static_cast<int>(costs.size())),
      costs_(std::move(costs)),
      reward_(std::move(reward)) {
  if (tol < 0.0) throw SchemaError("tolerance must be nonnegative");
  cmp_.eps = tol;
  validate_and_index();
}

void Instance::validate_and_index() {
  if (n_ > kMaxAgents) {
    throw SchemaError("at most " + std::to_string(kMaxAgents) + " agents supported");
  }
  for (double c : costs_) {
    if (!(c > 0.0) || !std::isfinite(c)) {
      throw SchemaError("effort costs must be strictly positive and finite");
    }
  }

  if (const auto* add = std::get_if<AdditiveReward>(&reward_)) {
    if (static_cast<int>(add->values.size()) != n_) {
      throw SchemaError("additive reward needs one value per agent");
    }
    double total = 0.0;
    for (double v : add->values) {
      if (v < 0.0 || !std::isfinite(v)) throw SchemaError("reward values must be nonnegative");
      total += v;
    }
    additive_ = true;
    submodular_ = true;
    if (total > 1.0 + cmp_.eps) {
      warnings_.push_back("total reward exceeds 1; values are not success probabilities");
    }
    return;
  }

  if (const auto* tab = std::get_if<ExplicitTableReward>(&reward_)) {
    if (n_ > kMaxTableAgents) {
      throw SchemaError("explicit tables support at most " +
                        std::to_string(kMaxTableAgents) + " agents");
    }
    const std::size_t want = std::size_t{1} << n_;
    if (tab->table.size() != want) {
      throw SchemaError("explicit table must have 2^n entries");
    }
    if (tab->table[0] != 0.0) throw SchemaError("reward must be normalized: f(empty) = 0");
    double top = 0.0;
    for (double v : tab->table) {
      if (!std::isfinite(v)) throw SchemaError("table entries must be finite");
      top = std::max(top, v);
    }
    for (AgentSet s = 0; s < want; ++s) {
      for (AgentId i = 0; i < n_; ++i) {
        if (contains(s, i)) continue;
        if (tab->table[s] > tab->table[s | agent_bit(i)] + cmp_.eps) {
          throw SchemaError("explicit table is not monotone");
        }
      }
    }
    submodular_ = table_is_submodular(tab->table, n_, cmp_.eps);
    value_cache_ = tab->table;
    if (top > 1.0 + cmp_.eps) {
      warnings_.push_back("reward exceeds 1; values are not success probabilities");
    }
    return;
  }

  const auto& cov = std::get<CoverageReward>(reward_);
  if (static_cast<int>(cov.agent_covers.size()) != n_) {
    throw SchemaError("coverage reward needs one element list per agent");
  }
  const int m = static_cast<int>(cov.element_weights.size());
  double total = 0.0;
  for (double w : cov.element_weights) {
    if (w < 0.0 || !std::isfinite(w)) throw SchemaError("element weights must be nonnegative");
    total += w;
  }
  const std::size_t blocks = static_cast<std::size_t>((m + 63) / 64);
  cover_masks_.assign(static_cast<std::size_t>(n_),
                      std::vector<std::uint64_t>(blocks, 0));
  for (AgentId i = 0; i < n_; ++i) {
    for (int e : cov.agent_covers[static_cast<std::size_t>(i)]) {
      if (e < 0 || e >= m) throw SchemaError("coverage element index out of range");
      cover_masks_[static_cast<std::size_t>(i)][static_cast<std::size_t>(e) / 64] |=
          std::uint64_t{1} << (e % 64);
    }
  }
  submodular_ = true;
  if (total > 1.0 + cmp_.eps) {
    warnings_.push_back("total element weight exceeds 1; values are not success probabilities");
  }
  if (n_ <= kValueCacheMaxAgents) {
    const std::size_t count = std::size_t{1} << n_;
    value_cache_.assign(count, 0.0);
    for (AgentSet s = 1; s < count; ++s) {
      value_cache_[s] = coverage_value(cov.element_weights, cover_masks_, s);
    }
  }
}

double Instance::value(AgentSet s) const {
  if (additive_) {
    const auto& values = std::get<AdditiveReward>(reward_).values;
    double total = 0.0;
    for (AgentSet rest = s; rest != 0; rest &= rest - 1) {
      total += values[static_cast<std::size_t>(lowest_agent(rest))];
    }
    return total;
  }
  if (!value_cache_.empty()) return value_cache_[s];
  const auto& cov = std::get<CoverageReward>(reward_);
  return coverage_value(cov.element_weights, cover_masks_, s);
}

double Instance::marginal(AgentId i, AgentSet s) const {
  if (additive_) {
    return std::get<AdditiveReward>(reward_).values[static_cast<std::size_t>(i)];
  }
  if (contains(s, i)) return value(s) - value(without_agent(s, i));
  return value(with_agent(s, i)) - value(s);
}

double Instance::cutoff_wage(AgentId i, AgentSet team) const {
  if (!contains(team, i)) throw PreconditionError("cut-off wage requires a team member");
  const double gain = marginal(i, team);
  if (gain <= 0.0) return kInfiniteWage;
  return cost(i) / gain;
}

double TeamContract::total_share() const {
  double total = 0.0;
  for (AgentSet rest = team; rest != 0; rest &= rest - 1) {
    total += alpha[static_cast<std::size_t>(lowest_agent(rest))];
  }
  return total;
}

TeamContract make_contract(const Instance& inst, AgentSet team,
                           const std::vector<double>& member_shares) {
  TeamContract c;
  c.team = team;
  c.alpha.assign(static_cast<std::size_t>(inst.n()), 0.0);
  const auto ids = members(team);
  if (ids.size() != member_shares.size()) {
    throw PreconditionError("one share per team member expected");
  }
  for (std::size_t k = 0; k < ids.size(); ++k) {
    c.alpha[static_cast<std::size_t>(ids[k])] = member_shares[k];
  }
  validate_contract(inst, c);
  return c;
}

void validate_contract(const Instance& inst, const TeamContract& contract) {
  if (static_cast<int>(contract.alpha.size()) != inst.n()) {
    throw PreconditionError("contract shares must be index-aligned with agents");
  }
  if ((contract.team & ~inst.all_agents()) != 0) {
    throw PreconditionError("team contains unknown agents");
  }
  for (AgentId i = 0; i < inst.n(); ++i) {
    const double a = contract.alpha[static_cast<std::size_t>(i)];
    if (a < 0.0 || !std::isfinite(a)) throw PreconditionError("shares must be nonnegative");
    if (!contains(contract.team, i) && a != 0.0) {
      throw PreconditionError("non-members must have zero share");
    }
  }
}

double revenue(const Instance& inst, const TeamContract& contract) {
  return (1.0 - contract.total_share()) * inst.value(contract.team);
}

bool prefers_effort(const Instance& inst, double alpha_i, AgentId i, AgentSet exerting) {
  const double gain = alpha_i * inst.marginal(i, exerting) - inst.cost(i);
  return inst.cmp().weakly_ge(gain, 0.0);
}

bool is_feasible(const Instance& inst, const TeamContract& contract) {
  for (AgentSet rest = contract.team; rest != 0; rest &= rest - 1) {
    const AgentId i = lowest_agent(rest);
    if (!prefers_effort(inst, contract.share(i), i, contract.team)) return false;
  }
  return true;
}

namespace {

struct BitRow {
  std::vector<std::uint64_t> words;
  explicit BitRow(std::size_t bits) : words(bits / 64 + 1, 0) {}
  bool get(std::size_t i) const { return (words[i / 64] >> (i % 64)) & 1; }
  void set(std::size_t i) { words[i / 64] |= std::uint64_t{1} << (i % 64); }
};

// Inclusion-wise maximal maximizer with the smallest bitmask. Works in the
// compressed ground-set index space with bit-packed rows so even cap-sized
// ground sets stay within a few megabytes.
AgentSet exhaustive_demand(const Instance& inst, const PriceVector& pv) {
  const auto ground_ids = members(pv.ground);
  const int g = static_cast<int>(ground_ids.size());
  const std::size_t count = std::size_t{1} << g;

  const auto evaluate = [&](std::size_t m, AgentSet* out_set) {
    AgentSet s = 0;
    double prices = 0.0;
    for (std::size_t rest = m; rest != 0; rest &= rest - 1) {
      const AgentId agent = ground_ids[static_cast<std::size_t>(std::countr_zero(rest))];
      s = with_agent(s, agent);
      prices += pv.prices[static_cast<std::size_t>(agent)];
    }
    if (out_set != nullptr) *out_set = s;
    return inst.value(s) - prices;
  };

  double best = 0.0;
  for (std::size_t m = 1; m < count; ++m) best = std::max(best, evaluate(m, nullptr));

  const Tolerance& cmp = inst.cmp();
  BitRow tied(count);
  for (std::size_t m = 0; m < count; ++m) {
    if (cmp.weakly_ge(evaluate(m, nullptr), best)) tied.set(m);
  }

  // covered(m) = some tied set contains m
  BitRow covered = tied;
  for (int b = 0; b < g; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t m = 0; m < count; ++m) {
      if (!(m & bit) && covered.get(m | bit)) covered.set(m);
    }
  }

  for (std::size_t m = 0; m < count; ++m) {
    if (!tied.get(m)) continue;
    bool maximal = true;
    for (int b = 0; b < g && maximal; ++b) {
      const std::size_t bit = std::size_t{1} << b;
      if (!(m & bit) && covered.get(m | bit)) maximal = false;
    }
    if (maximal) {
      AgentSet s = 0;
      evaluate(m, &s);
      return s;
    }
  }
  return 0;  // unreachable: the empty set always ties with itself
}

}  // namespace

AgentSet demand_set(const Instance& inst, const PriceVector& pv, int enum_cap) {
  if ((pv.ground & ~inst.all_agents()) != 0) {
    throw PreconditionError("demand ground set contains unknown agents");
  }
  if (pv.prices.size() != static_cast<std::size_t>(inst.n())) {
    throw PreconditionError("price vector must be index-aligned with agents");
  }
  if (inst.is_additive()) {
    AgentSet chosen = 0;
    for (AgentSet rest = pv.ground; rest != 0; rest &= rest - 1) {
      const AgentId i = lowest_agent(rest);
      if (inst.cmp().weakly_ge(inst.singleton_value(i),
                               pv.prices[static_cast<std::size_t>(i)])) {
        chosen = with_agent(chosen, i);
      }
    }
    return chosen;
  }
  if (set_size(pv.ground) > enum_cap) {
    throw CapExceededError("demand enumeration over " +
                           std::to_string(set_size(pv.ground)) +
                           " agents exceeds the cap of " + std::to_string(enum_cap));
  }
  return exhaustive_demand(inst, pv);
}

}  // namespace fairteam
