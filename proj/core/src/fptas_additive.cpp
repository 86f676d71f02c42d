#include "fairteam/fptas_additive.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fairteam/fairness.hpp"

namespace fairteam {

namespace {

void require_additive(const Instance& inst, const char* what) {
  if (!inst.is_additive()) {
    throw PreconditionError(std::string(what) + " requires an additive reward model");
  }
}

std::vector<AgentId> agents_by_value_desc(const Instance& inst) {
  std::vector<AgentId> order(static_cast<std::size_t>(inst.n()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](AgentId a, AgentId b) {
    return inst.singleton_value(a) > inst.singleton_value(b);
  });
  return order;
}

}  // namespace

SolveResult nondiscriminatory_additive(const Instance& inst) {
  require_additive(inst, "the greedy non-discriminatory solver");
  const auto order = agents_by_value_desc(inst);

  AgentSet best_team = 0;
  double best_share = 0.0;
  double best_revenue = 0.0;

  for (AgentId anchor : order) {
    const double f_anchor = inst.singleton_value(anchor);
    if (f_anchor <= 0.0) continue;
    const double share = inst.cost(anchor) / f_anchor;

    AgentSet team = agent_bit(anchor);
    double f_team = f_anchor;
    int count = 1;
    for (AgentId j : order) {
      if (j == anchor) continue;
      const double f_j = inst.singleton_value(j);
      if (f_j <= 0.0) continue;
      if (!inst.cmp().weakly_le(inst.cost(j) / f_j, share)) continue;
      if ((1.0 - (count + 1) * share) * (f_team + f_j) > (1.0 - count * share) * f_team) {
        team = with_agent(team, j);
        f_team += f_j;
        ++count;
      }
    }
    const double rev = (1.0 - count * share) * f_team;
    if (rev > best_revenue) {
      best_revenue = rev;
      best_team = team;
      best_share = share;
    }
  }

  SolveResult result;
  result.team = best_team;
  result.revenue = best_revenue;
  result.algorithm = "nd-greedy";
  result.contract.team = best_team;
  result.contract.alpha.assign(static_cast<std::size_t>(inst.n()), 0.0);
  if (best_team != 0) {
    result.minimum_share = best_share;
    for (AgentSet rest = best_team; rest != 0; rest &= rest - 1) {
      result.contract.alpha[static_cast<std::size_t>(lowest_agent(rest))] = best_share;
    }
  }
  return result;
}

ShareBound lower_bound_share(const Instance& inst, AgentSet s, double x) {
  require_additive(inst, "the share lower bound");
  if (!(x > 0.0)) throw PreconditionError("share lower bound needs x > 0");
  if (s == 0) throw PreconditionError("share lower bound needs a nonempty team");
  ShareBound out;
  for (AgentSet rest = s; rest != 0; rest &= rest - 1) {
    const AgentId i = lowest_agent(rest);
    const double f_i = inst.singleton_value(i);
    if (f_i <= 0.0) throw PreconditionError("share lower bound needs f(i) > 0 on the team");
    const double term = (inst.cost(i) / f_i) * (1.0 - f_i / x);
    if (out.agent < 0 || term > out.value) {
      out.value = term;
      out.agent = i;
    }
  }
  return out;
}

AgentId max_value_agent(const Instance& inst, AgentSet s) {
  if (s == 0) throw PreconditionError("argmax over an empty team");
  AgentId best = -1;
  double best_value = 0.0;
  for (AgentSet rest = s; rest != 0; rest &= rest - 1) {
    const AgentId i = lowest_agent(rest);
    const double f_i = inst.singleton_value(i);
    if (best < 0 || f_i > best_value) {
      best = i;
      best_value = f_i;
    }
  }
  return best;
}

double fptas_epsilon(double gamma, int n) {
  return 0.5 * gamma * gamma / (gamma + n * (1.0 - gamma));
}

double approx_min_share(const Instance& inst, AgentId i_bar, double x_tilde,
                        double epsilon) {
  require_additive(inst, "the approximate minimum share");
  if (!(x_tilde > 0.0)) throw PreconditionError("approximate minimum share needs x > 0");
  const double f_bar = inst.singleton_value(i_bar);
  if (f_bar <= 0.0) throw PreconditionError("approximate minimum share needs f(i) > 0");
  const double inflated = x_tilde / (1.0 - epsilon / (2.0 * inst.n()));
  return (inst.cost(i_bar) / f_bar) * (1.0 - f_bar / inflated);
}

AgentSet domain_set(const Instance& inst, AgentId i_bar, double x_tilde,
                    AgentId i_star, double epsilon) {
  require_additive(inst, "the domain set");
  const double f_star = inst.singleton_value(i_star);
  if (inst.singleton_value(i_bar) > f_star) {
    throw PreconditionError("domain set needs f(i_bar) <= f(i_star)");
  }
  const double bound = approx_min_share(inst, i_bar, x_tilde, epsilon);
  const double inflated = x_tilde / (1.0 - epsilon / (2.0 * inst.n()));
  AgentSet out = 0;
  for (AgentId i = 0; i < inst.n(); ++i) {
    const double f_i = inst.singleton_value(i);
    if (f_i <= 0.0 || f_i > f_star) continue;
    const double term = (inst.cost(i) / f_i) * (1.0 - f_i / inflated);
    if (inst.cmp().weakly_le(term, bound)) out = with_agent(out, i);
  }
  return out;
}

namespace {

struct DpState {
  std::int64_t y = 0;
  double share = 0.0;
  AgentSet team = 0;
};

std::int64_t grid_units(double value, double disc_step) {
  return static_cast<std::int64_t>(std::floor(value / disc_step));
}

// One knapsack stage: merge the carried states with their agent-a extensions,
// keeping the cheaper share per reward level. Ties keep the carried state.
void dp_stage(std::vector<DpState>& states, AgentId a, std::int64_t units,
              double alpha, std::int64_t y_cap) {
  std::vector<DpState> shifted;
  shifted.reserve(states.size());
  for (const DpState& s : states) {
    if (y_cap >= 0 && s.y + units > y_cap) continue;
    shifted.push_back({s.y + units, s.share + alpha, with_agent(s.team, a)});
  }
  std::vector<DpState> merged;
  merged.reserve(states.size() + shifted.size());
  std::size_t p = 0, q = 0;
  while (p < states.size() || q < shifted.size()) {
    if (q == shifted.size() || (p < states.size() && states[p].y < shifted[q].y)) {
      merged.push_back(states[p++]);
    } else if (p == states.size() || shifted[q].y < states[p].y) {
      merged.push_back(shifted[q++]);
    } else {
      merged.push_back(shifted[q].share < states[p].share ? shifted[q] : states[p]);
      ++p;
      ++q;
    }
  }
  states = std::move(merged);
}

std::vector<DpState> dp_seed(const Instance& inst, AgentSet domain, AgentId i_star,
                             AgentId i_bar, const std::vector<double>& alpha_tilde,
                             double disc_step) {
  if (!(disc_step > 0.0)) throw PreconditionError("discretization step must be positive");
  if (!contains(domain, i_star) || !contains(domain, i_bar)) {
    throw PreconditionError("the knapsack domain must contain both guessed agents");
  }
  DpState seed;
  seed.team = with_agent(agent_bit(i_star), i_bar);
  seed.y = grid_units(inst.singleton_value(i_star), disc_step);
  seed.share = alpha_tilde[static_cast<std::size_t>(i_star)];
  if (i_bar != i_star) {
    seed.y += grid_units(inst.singleton_value(i_bar), disc_step);
    seed.share += alpha_tilde[static_cast<std::size_t>(i_bar)];
  }
  return {seed};
}

}  // namespace

DpTable dp_table(const Instance& inst, AgentSet domain, AgentId i_star,
                 AgentId i_bar, const std::vector<double>& alpha_tilde,
                 double disc_step) {
  require_additive(inst, "the knapsack table");
  auto states = dp_seed(inst, domain, i_star, i_bar, alpha_tilde, disc_step);

  DpTable table;
  table.disc_step = disc_step;
  auto snapshot = [&table](const std::vector<DpState>& row) {
    std::map<std::int64_t, DpCell> cells;
    for (const DpState& s : row) cells[s.y] = DpCell{s.share, s.team};
    table.stages.push_back(std::move(cells));
  };
  snapshot(states);

  const AgentSet rest_domain = without_agent(without_agent(domain, i_star), i_bar);
  for (AgentSet rest = rest_domain; rest != 0; rest &= rest - 1) {
    const AgentId a = lowest_agent(rest);
    dp_stage(states, a, grid_units(inst.singleton_value(a), disc_step),
             alpha_tilde[static_cast<std::size_t>(a)], -1);
    table.stage_agents.push_back(a);
    snapshot(states);
  }
  return table;
}

std::optional<DpSolution> dp_solve(const Instance& inst, AgentSet domain,
                                   AgentId i_star, AgentId i_bar, double x_tilde,
                                   const std::vector<double>& alpha_tilde,
                                   double disc_step) {
  require_additive(inst, "the knapsack solver");
  if (!(disc_step > 0.0)) throw PreconditionError("discretization step must be positive");
  const double ratio = x_tilde / disc_step;
  const auto target = static_cast<std::int64_t>(std::llround(ratio));
  if (std::fabs(ratio - static_cast<double>(target)) > 1e-6) {
    throw PreconditionError("reward estimate is off the discretization grid");
  }

  auto states = dp_seed(inst, domain, i_star, i_bar, alpha_tilde, disc_step);
  if (states.front().y > target) return std::nullopt;

  const AgentSet rest_domain = without_agent(without_agent(domain, i_star), i_bar);
  for (AgentSet rest = rest_domain; rest != 0; rest &= rest - 1) {
    const AgentId a = lowest_agent(rest);
    dp_stage(states, a, grid_units(inst.singleton_value(a), disc_step),
             alpha_tilde[static_cast<std::size_t>(a)], target);
  }
  for (const DpState& s : states) {
    if (s.y == target) {
      return DpSolution{s.team, s.share, (1.0 - s.share) * x_tilde};
    }
  }
  return std::nullopt;
}

namespace {

// Reachable subset sums of the filtered agents, as a bitset over grid units.
std::vector<std::uint64_t> reachable_sums(const std::vector<std::int64_t>& units,
                                          std::int64_t max_units) {
  const std::size_t words = static_cast<std::size_t>(max_units / 64) + 1;
  std::vector<std::uint64_t> reach(words, 0);
  reach[0] = 1;
  for (std::int64_t u : units) {
    if (u == 0) continue;  // zero-height agents do not move the sum
    const auto word_shift = static_cast<std::size_t>(u / 64);
    const int bit_shift = static_cast<int>(u % 64);
    for (std::size_t w = words; w-- > word_shift;) {
      std::uint64_t moved = reach[w - word_shift] << bit_shift;
      if (bit_shift != 0 && w > word_shift) {
        moved |= reach[w - word_shift - 1] >> (64 - bit_shift);
      }
      reach[w] |= moved;
    }
  }
  return reach;
}

constexpr std::int64_t kMaxGridUnits = std::int64_t{1} << 27;

}  // namespace

std::optional<FptasCandidate> fptas_case2(const Instance& inst, double gamma) {
  require_additive(inst, "the discretized search");
  if (!(gamma > 0.0) || gamma > 1.0) throw PreconditionError("gamma must lie in (0, 1]");
  const int n = inst.n();
  const double epsilon = fptas_epsilon(gamma, n);

  std::optional<FptasCandidate> best;
  std::vector<double> alpha_tilde(static_cast<std::size_t>(n), 0.0);

  for (AgentId i_star = 0; i_star < n; ++i_star) {
    const double f_star = inst.singleton_value(i_star);
    if (f_star <= 0.0) continue;
    const double disc_step = epsilon * f_star / (2.0 * n * n);

    std::vector<AgentId> filtered;
    std::vector<std::int64_t> filtered_units;
    std::int64_t total_units = 0;
    for (AgentId i = 0; i < n; ++i) {
      const double f_i = inst.singleton_value(i);
      if (f_i <= 0.0 || f_i > f_star) continue;
      filtered.push_back(i);
      filtered_units.push_back(grid_units(f_i, disc_step));
      total_units += filtered_units.back();
    }
    if (total_units > kMaxGridUnits) {
      throw CapExceededError("discretization grid too large; increase gamma");
    }

    const auto try_estimate = [&](double x_tilde) {
      for (AgentId i_bar : filtered) {
        const AgentSet domain = domain_set(inst, i_bar, x_tilde, i_star, epsilon);
        if (!contains(domain, i_star) || !contains(domain, i_bar)) continue;

        const double bound = approx_min_share(inst, i_bar, x_tilde, epsilon);
        for (AgentSet rest = domain; rest != 0; rest &= rest - 1) {
          const AgentId i = lowest_agent(rest);
          alpha_tilde[static_cast<std::size_t>(i)] =
              std::max(inst.cost(i) / inst.singleton_value(i), bound);
        }

        const auto dp =
            dp_solve(inst, domain, i_star, i_bar, x_tilde, alpha_tilde, disc_step);
        if (!dp.has_value() || dp->objective <= 0.0) continue;
        const bool improves =
            !best.has_value() || dp->objective > best->objective ||
            (dp->objective == best->objective && dp->team < best->team);
        if (!improves) continue;
        std::vector<double> shares(static_cast<std::size_t>(n), 0.0);
        for (AgentSet rest = dp->team; rest != 0; rest &= rest - 1) {
          const AgentId i = lowest_agent(rest);
          shares[static_cast<std::size_t>(i)] = alpha_tilde[static_cast<std::size_t>(i)];
        }
        TeamContract contract{dp->team, shares};
        if (is_fair_definitional(inst, contract).fair) {
          best = FptasCandidate{dp->team, std::move(shares), dp->objective};
        }
      }
    };

    // Only grid values realizable as discretized subset sums can satisfy the
    // knapsack's equality constraint; everything else would come back empty.
    const auto reach = reachable_sums(filtered_units, total_units);
    for (std::size_t w = 0; w < reach.size(); ++w) {
      std::uint64_t word = reach[w];
      if (w == 0) word &= ~std::uint64_t{1};  // the empty sum is vacuous
      for (; word != 0; word &= word - 1) {
        const std::int64_t s_units =
            static_cast<std::int64_t>(w) * 64 + std::countr_zero(word);
        if (s_units > total_units) break;
        try_estimate(static_cast<double>(s_units) * disc_step);
      }
    }
  }
  return best;
}

SolveResult fptas(const Instance& inst, double gamma) {
  require_additive(inst, "the additive solver");
  if (!(gamma > 0.0) || gamma > 1.0) throw PreconditionError("gamma must lie in (0, 1]");

  SolveResult result;
  result.algorithm = "fptas";
  result.params["gamma"] = gamma;
  result.params["epsilon"] = fptas_epsilon(gamma, inst.n());
  result.contract.alpha.assign(static_cast<std::size_t>(inst.n()), 0.0);

  // Best single agent by standalone revenue.
  AgentSet single = 0;
  double single_rev = 0.0;
  for (AgentId i = 0; i < inst.n(); ++i) {
    const double f_i = inst.singleton_value(i);
    if (f_i <= 0.0) continue;
    const double rev = (1.0 - inst.cost(i) / f_i) * f_i;
    if (single == 0 || rev > single_rev) {
      single = agent_bit(i);
      single_rev = rev;
    }
  }

  std::vector<AgentSet> teams;
  if (single != 0) teams.push_back(single);
  if (const auto c2 = fptas_case2(inst, gamma); c2.has_value()) teams.push_back(c2->team);

  for (AgentSet team : teams) {
    const double min_share = optimal_minimum_share(inst, team);
    const TeamContract contract = least_incentive_contract(inst, team, min_share);
    const double rev = revenue(inst, contract);
    if (rev > result.revenue) {
      result.team = team;
      result.contract = contract;
      result.minimum_share = min_share;
      result.revenue = rev;
    }
  }
  return result;
}

}  // namespace fairteam
