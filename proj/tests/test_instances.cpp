#include <doctest.h>

#include "fairteam/exact.hpp"
#include "fairteam/instances.hpp"
#include "fairteam/json_io.hpp"
#include "test_support.hpp"

using namespace fairteam;

TEST_CASE("worked fixtures") {
  const Instance e1 = worked_example(WorkedExample::kE1);
  CHECK(e1.n() == 2);
  CHECK(e1.value(0b11) == doctest::Approx(0.75));
  CHECK(e1.is_additive());

  const Instance e2 = worked_example(WorkedExample::kE2);
  CHECK(e2.cutoff_wage(0, 0b11) == doctest::Approx(1.0 / 8).epsilon(1e-12));
  CHECK(e2.cutoff_wage(1, 0b11) == doctest::Approx(1.0 / 4).epsilon(1e-12));

  const Instance e3 = worked_example(WorkedExample::kE3);
  CHECK(e3.n() == 4);
  CHECK_FALSE(e3.is_additive());
  CHECK_FALSE(e3.is_submodular());  // needed for the multi-equilibrium behavior
}

TEST_CASE("subset-sum reduction arithmetic") {
  const SubsetSumSpec spec{{1, 1, 2}, 2};
  CHECK(spec.total() == 4);
  CHECK(spec.delta_red() == doctest::Approx(1.0 / 96).epsilon(1e-12));
  CHECK(spec.threshold() == doctest::Approx(17.0 / 96).epsilon(1e-12));

  const auto built = subset_sum_instance(spec);
  CHECK(built.instance.n() == 3);
  CHECK(built.instance.singleton_value(0) ==
        doctest::Approx(1.0 / 96 + 1.0 / 6).epsilon(1e-12));
  CHECK(built.instance.singleton_value(2) ==
        doctest::Approx(2.0 / 96 + 1.0 / 6).epsilon(1e-12));
  CHECK(built.threshold == doctest::Approx(17.0 / 96).epsilon(1e-12));

  // {w_1, w_2} sums to W/2 with size 2, so the optimum reaches the threshold
  CHECK(optimal_fair_bruteforce(built.instance).revenue >= built.threshold - 1e-12);

  // no half-sum subset of size 1 exists for (1,1,1)
  const auto no_half = subset_sum_instance(SubsetSumSpec{{1, 1, 1}, 1});
  CHECK(optimal_fair_bruteforce(no_half.instance).revenue < no_half.threshold - 1e-12);

  CHECK_THROWS_AS(subset_sum_instance(SubsetSumSpec{{1, 1}, 3}), PreconditionError);
  CHECK_THROWS_AS(subset_sum_instance(SubsetSumSpec{{0, 1}, 1}), PreconditionError);
}

TEST_CASE("subset-sum decision matches the reduction on a small sweep") {
  for (int m = 1; m <= 4; ++m) {
    std::vector<std::int64_t> weights(static_cast<std::size_t>(m), 1);
    // odometer over weights in 1..3
    while (true) {
      std::int64_t total = 0;
      for (auto w : weights) total += w;
      for (int k = 1; k <= m; ++k) {
        bool exists = false;
        for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
          std::int64_t sum = 0;
          int size = 0;
          for (int b = 0; b < m; ++b) {
            if (mask & (std::size_t{1} << b)) {
              sum += weights[static_cast<std::size_t>(b)];
              ++size;
            }
          }
          if (size == k && 2 * sum == total) exists = true;
        }
        const auto built = subset_sum_instance(SubsetSumSpec{weights, k});
        const double opt = optimal_fair_bruteforce(built.instance).revenue;
        CHECK((opt >= built.threshold - 1e-12) == exists);
      }
      // next weight vector
      int pos = 0;
      while (pos < m && weights[static_cast<std::size_t>(pos)] == 3) {
        weights[static_cast<std::size_t>(pos)] = 1;
        ++pos;
      }
      if (pos == m) break;
      ++weights[static_cast<std::size_t>(pos)];
    }
  }
}

TEST_CASE("random instances are deterministic per seed") {
  const Instance a = random_instance(RandomKind::kAdditive, 5, 42, 0.5);
  const Instance b = random_instance(RandomKind::kAdditive, 5, 42, 0.5);
  CHECK(instance_to_json(a) == instance_to_json(b));

  const Instance c = random_instance(RandomKind::kCoverage, 6, 7, 0.5);
  const Instance d = random_instance(RandomKind::kCoverage, 6, 7, 0.5);
  CHECK(instance_to_json(c) == instance_to_json(d));
  CHECK(instance_to_json(a) != instance_to_json(c));
}

TEST_CASE("random additive values stay normalized") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Instance inst = random_instance(RandomKind::kAdditive, 3 + seed % 6, seed, 0.5);
    CHECK(inst.value(inst.all_agents()) <= 1.0 + 1e-9);
    for (AgentId i = 0; i < inst.n(); ++i) CHECK(inst.cost(i) > 0.0);
  }
}

TEST_CASE("random coverage instances have diminishing marginals") {
  const Instance inst = random_instance(RandomKind::kCoverage, 6, 7, 0.5);
  const AgentSet all = inst.all_agents();
  for (AgentSet s = 0; s <= all; ++s) {
    for (AgentId i = 0; i < inst.n(); ++i) {
      if (contains(s, i)) continue;
      for (AgentId j = 0; j < inst.n(); ++j) {
        if (j == i || contains(s, j)) continue;
        CHECK(inst.marginal(i, with_agent(with_agent(s, j), i)) <=
              inst.marginal(i, with_agent(s, i)) + 1e-12);
      }
    }
    if (s == all) break;
  }
  CHECK(inst.is_submodular());
}
