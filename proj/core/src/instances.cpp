#include "fairteam/instances.hpp"

#include <algorithm>
#include <random>

namespace fairteam {

namespace {

// Pointwise max of additive tables, stored explicitly so equilibrium
// enumeration sees one uniform representation.
ExplicitTableReward xos_table(const std::vector<std::vector<double>>& clauses, int n) {
  ExplicitTableReward reward;
  reward.table.assign(std::size_t{1} << n, 0.0);
  for (AgentSet s = 1; s < reward.table.size(); ++s) {
    double best = 0.0;
    for (const auto& clause : clauses) {
      double sum = 0.0;
      for (AgentSet rest = s; rest != 0; rest &= rest - 1) {
        sum += clause[static_cast<std::size_t>(lowest_agent(rest))];
      }
      best = std::max(best, sum);
    }
    reward.table[s] = best;
  }
  return reward;
}

// 53-bit uniform draw in [0, 1); avoids distribution objects so streams are
// identical across standard libraries.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double positive_uniform(std::mt19937_64& rng) {
  return std::max(unit_uniform(rng), 1e-12);
}

}  // namespace

Instance worked_example(WorkedExample which) {
  switch (which) {
    case WorkedExample::kE1:
      return Instance({0.05, 0.05}, AdditiveReward{{0.5, 0.25}});
    case WorkedExample::kE2:
      return Instance({1.0 / 16, 1.0 / 8}, AdditiveReward{{0.5, 0.5}});
    case WorkedExample::kE3: {
      const std::vector<std::vector<double>> clauses = {
          {6.0, 6.0, 0.0, 0.0}, {0.0, 0.0, 6.5, 6.5}, {2.0, 2.0, 5.0, 5.0}};
      return Instance({0.34, 0.25, 0.5, 0.08}, xos_table(clauses, 4));
    }
  }
  throw PreconditionError("unknown worked example");
}

std::int64_t SubsetSumSpec::total() const {
  std::int64_t w = 0;
  for (std::int64_t x : weights) w += x;
  return w;
}

double SubsetSumSpec::delta_red() const {
  const auto m = static_cast<double>(weights.size());
  return 1.0 / (4.0 * static_cast<double>(total()) * m * static_cast<double>(k));
}

double SubsetSumSpec::threshold() const {
  const auto m = static_cast<double>(weights.size());
  return (static_cast<double>(total()) * delta_red() + static_cast<double>(k) / m) / 4.0;
}

SubsetSumInstance subset_sum_instance(const SubsetSumSpec& spec) {
  const int m = static_cast<int>(spec.weights.size());
  if (m == 0 || spec.k < 1 || spec.k > m) {
    throw PreconditionError("subset-sum spec needs weights and 1 <= k <= m");
  }
  for (std::int64_t w : spec.weights) {
    if (w < 1) throw PreconditionError("subset-sum weights must be positive integers");
  }
  const double delta = spec.delta_red();
  const double denom =
      static_cast<double>(spec.total()) * delta + static_cast<double>(spec.k) / m;
  std::vector<double> values(static_cast<std::size_t>(m));
  std::vector<double> costs(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const double f = static_cast<double>(spec.weights[static_cast<std::size_t>(i)]) * delta +
                     0.5 / m;
    values[static_cast<std::size_t>(i)] = f;
    costs[static_cast<std::size_t>(i)] = f * f / denom;
  }
  return {Instance(std::move(costs), AdditiveReward{std::move(values)}, 1e-12),
          spec.threshold()};
}

Instance random_instance(RandomKind kind, int n, std::uint64_t seed, double cost_scale) {
  if (n < 1 || n > kMaxAgents) throw PreconditionError("agent count out of range");
  if (!(cost_scale > 0.0)) throw PreconditionError("cost scale must be positive");
  std::mt19937_64 rng(seed);

  if (kind == RandomKind::kAdditive) {
    std::vector<double> values(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (double& v : values) {
      v = positive_uniform(rng);
      sum += v;
    }
    const double scale = sum * (1.0 + 1e-12);  // keeps the normalized sum below 1
    std::vector<double> costs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      values[static_cast<std::size_t>(i)] /= scale;
      costs[static_cast<std::size_t>(i)] =
          cost_scale * values[static_cast<std::size_t>(i)] * positive_uniform(rng);
    }
    return Instance(std::move(costs), AdditiveReward{std::move(values)});
  }

  const int m = 2 * n;
  CoverageReward reward;
  reward.element_weights.assign(static_cast<std::size_t>(m), 0.0);
  double sum = 0.0;
  for (double& w : reward.element_weights) {
    w = positive_uniform(rng);
    sum += w;
  }
  const double scale = sum * (1.0 + 1e-12);
  for (double& w : reward.element_weights) w /= scale;

  reward.agent_covers.assign(static_cast<std::size_t>(n), {});
  for (int i = 0; i < n; ++i) {
    auto& cover = reward.agent_covers[static_cast<std::size_t>(i)];
    for (int e = 0; e < m; ++e) {
      if (unit_uniform(rng) < 0.5) cover.push_back(e);
    }
    if (cover.empty()) cover.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(m)));
  }

  std::vector<double> costs(static_cast<std::size_t>(n));
  std::vector<double> singleton(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int e : reward.agent_covers[static_cast<std::size_t>(i)]) {
      singleton[static_cast<std::size_t>(i)] +=
          reward.element_weights[static_cast<std::size_t>(e)];
    }
    costs[static_cast<std::size_t>(i)] =
        std::max(cost_scale * singleton[static_cast<std::size_t>(i)] * positive_uniform(rng),
                 1e-12);
  }
  return Instance(std::move(costs), std::move(reward));
}

}  // namespace fairteam
