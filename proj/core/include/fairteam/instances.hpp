#pragma once

#include <cstdint>
#include <vector>

#include "fairteam/instance.hpp"

namespace fairteam {

// Worked two- and four-agent fixtures used across the test suites.
enum class WorkedExample { kE1, kE2, kE3 };

Instance worked_example(WorkedExample which);

// Subset-sum reduction: deciding whether the optimal fair revenue reaches the
// threshold answers whether some size-k subset of the weights sums to half the
// total.
struct SubsetSumSpec {
  std::vector<std::int64_t> weights;  // positive integers
  int k = 1;                          // required subset size

  std::int64_t total() const;
  double delta_red() const;  // 1 / (4 * W * m * k)
  double threshold() const;  // (W*delta + k/m) / 4
};

struct SubsetSumInstance {
  Instance instance;
  double threshold;
};

SubsetSumInstance subset_sum_instance(const SubsetSumSpec& spec);

enum class RandomKind { kAdditive, kCoverage };

// Seed-deterministic random instances. Additive values are normalized to sum
// at most 1; coverage uses 2n weighted ground elements with random covers.
// Costs are drawn in (0, cost_scale * f({i})].
Instance random_instance(RandomKind kind, int n, std::uint64_t seed, double cost_scale);

}  // namespace fairteam
