#include <doctest.h>

#include <cmath>

#include "fairteam/instance.hpp"
#include "fairteam/instances.hpp"
#include "test_support.hpp"

using namespace fairteam;

namespace {

// Independent evaluation of the four-agent XOS fixture: max over its three
// additive clauses, computed from scratch.
double e3_reference(AgentSet s) {
  static const double clauses[3][4] = {
      {6.0, 6.0, 0.0, 0.0}, {0.0, 0.0, 6.5, 6.5}, {2.0, 2.0, 5.0, 5.0}};
  double best = 0.0;
  for (const auto& clause : clauses) {
    double sum = 0.0;
    for (AgentId i = 0; i < 4; ++i) {
      if (contains(s, i)) sum += clause[i];
    }
    best = std::max(best, sum);
  }
  return best;
}

}  // namespace

TEST_CASE("value oracle on the worked fixtures") {
  const Instance e1 = worked_example(WorkedExample::kE1);
  CHECK(e1.value(0b11) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(e1.value(0) == 0.0);

  const Instance e3 = worked_example(WorkedExample::kE3);
  for (AgentSet s = 0; s < 16; ++s) {
    CHECK(e3.value(s) == doctest::Approx(e3_reference(s)).epsilon(1e-12));
  }
  CHECK(e3.value(0b1111) == doctest::Approx(14.0));
}

TEST_CASE("marginal contributions") {
  const Instance e1 = worked_example(WorkedExample::kE1);
  CHECK(e1.marginal(0, 0b11) == doctest::Approx(0.5));
  CHECK(e1.marginal(1, 0b11) == doctest::Approx(0.25));
  CHECK(e1.marginal(1, 0b01) == doctest::Approx(0.25));  // outside the set

  const Instance e3 = worked_example(WorkedExample::kE3);
  const double expected = e3_reference(0b1111) - e3_reference(0b1011);
  CHECK(expected == doctest::Approx(2.0));
  CHECK(e3.marginal(2, 0b1111) == doctest::Approx(expected));
}

TEST_CASE("cut-off wages") {
  const Instance e1 = worked_example(WorkedExample::kE1);
  CHECK(e1.cutoff_wage(0, 0b11) == doctest::Approx(0.1));
  CHECK(e1.cutoff_wage(1, 0b11) == doctest::Approx(0.2));
  CHECK_THROWS_AS(e1.cutoff_wage(0, 0b10), PreconditionError);

  const Instance flat({0.05, 0.05}, AdditiveReward{{0.5, 0.0}});
  CHECK(std::isinf(flat.cutoff_wage(1, 0b11)));
}

TEST_CASE("revenue") {
  const Instance e2 = worked_example(WorkedExample::kE2);
  const auto c = make_contract(e2, 0b11, {1.0 / 8, 1.0 / 4});
  CHECK(revenue(e2, c) == doctest::Approx(5.0 / 8).epsilon(1e-12));

  const Instance e1 = worked_example(WorkedExample::kE1);
  TeamContract empty{0, {0.0, 0.0}};
  CHECK(revenue(e1, empty) == 0.0);
  CHECK(revenue(e1, make_contract(e1, 0b11, {2.0 / 15, 0.2})) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("feasibility") {
  const Instance e1 = worked_example(WorkedExample::kE1);
  CHECK(is_feasible(e1, make_contract(e1, 0b11, {0.1, 0.2})));
  CHECK_FALSE(is_feasible(e1, make_contract(e1, 0b11, {0.05, 0.2})));
  CHECK(is_feasible(e1, TeamContract{0, {0.0, 0.0}}));
}

TEST_CASE("demand sets") {
  const Instance e1 = worked_example(WorkedExample::kE1);

  SUBCASE("strict winner") {
    const AgentSet s = demand_set(e1, {{0.3, 0.3}, 0b11});
    CHECK(s == 0b01);
    // objective matches the independent scan
    CHECK(e1.value(s) - 0.3 ==
          doctest::Approx(testutil::best_demand_objective(e1, {{0.3, 0.3}, 0b11})));
  }
  SUBCASE("zero prices select the whole ground set") {
    CHECK(demand_set(e1, {{0.0, 0.0}, 0b11}) == 0b11);
    const Instance e3 = worked_example(WorkedExample::kE3);
    CHECK(demand_set(e3, {{0.0, 0.0, 0.0, 0.0}, 0b1111}) == 0b1111);
  }
  SUBCASE("all-tie prices resolve to the maximal set") {
    CHECK(demand_set(e1, {{0.5, 0.25}, 0b11}) == 0b11);
  }
  SUBCASE("cap on non-additive enumeration") {
    const Instance e3 = worked_example(WorkedExample::kE3);
    CHECK_THROWS_AS(demand_set(e3, {{0.0, 0.0, 0.0, 0.0}, 0b1111}, 2), CapExceededError);
  }
}

TEST_CASE("demand optimality matches exhaustive enumeration") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Instance inst = testutil::random_submodular_instance(n, 100 + trial);
    PriceVector pv;
    pv.ground = inst.all_agents();
    pv.prices.assign(static_cast<std::size_t>(n), 0.0);
    for (auto& p : pv.prices) p = 0.3 * testutil::unit_uniform(rng);
    const AgentSet s = demand_set(inst, pv);
    double prices = 0.0;
    for (AgentSet rest = s; rest != 0; rest &= rest - 1) {
      prices += pv.prices[static_cast<std::size_t>(lowest_agent(rest))];
    }
    const double reference = testutil::best_demand_objective(inst, pv);
    CHECK(inst.value(s) - prices == doctest::Approx(reference).epsilon(1e-9));
  }
}

TEST_CASE("monotonicity and submodularity properties") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const Instance inst = testutil::random_submodular_instance(n, 500 + trial);
    const AgentSet all = inst.all_agents();
    for (int probe = 0; probe < 50; ++probe) {
      const AgentSet big = rng() & all;
      const AgentSet small = rng() & big;
      CHECK(inst.value(small) <= inst.value(big) + 1e-9);
      const AgentId i = static_cast<AgentId>(rng() % static_cast<std::uint64_t>(n));
      if (!contains(big, i)) {
        CHECK(inst.marginal(i, with_agent(big, i)) <=
              inst.marginal(i, with_agent(small, i)) + 1e-9);
      }
    }
  }
  // the flagged explicit table obeys the same diminishing-marginals bound
  const Instance e3 = worked_example(WorkedExample::kE3);
  CHECK_FALSE(e3.is_submodular());
}

TEST_CASE("payment accounting identity") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Instance inst = testutil::random_submodular_instance(n, 900 + trial);
    const auto team = testutil::random_usable_team(inst, rng);
    if (!team.has_value()) continue;
    const TeamContract c = testutil::random_feasible_contract(inst, *team, rng);
    double paid = 0.0;
    for (AgentSet rest = c.team; rest != 0; rest &= rest - 1) {
      const AgentId i = lowest_agent(rest);
      paid += c.share(i) * inst.value(c.team);
    }
    CHECK(revenue(inst, c) + paid == doctest::Approx(inst.value(c.team)).epsilon(1e-9));
  }
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(Instance({0.0, 0.1}, AdditiveReward{{0.5, 0.5}}), SchemaError);
  CHECK_THROWS_AS(Instance({0.1}, AdditiveReward{{0.5, 0.5}}), SchemaError);
  CHECK_THROWS_AS(Instance({0.1, 0.1}, ExplicitTableReward{{0.0, 0.5, 0.5}}), SchemaError);
  // non-monotone table
  CHECK_THROWS_AS(Instance({0.1, 0.1}, ExplicitTableReward{{0.0, 0.5, 0.4, 0.3}}),
                  SchemaError);
  // unnormalized table
  CHECK_THROWS_AS(Instance({0.1, 0.1}, ExplicitTableReward{{0.1, 0.5, 0.4, 0.6}}),
                  SchemaError);
  // out-of-range coverage element
  CoverageReward bad{{0.5}, {{1}}};
  CHECK_THROWS_AS(Instance({0.1}, std::move(bad)), SchemaError);

  const Instance e3 = worked_example(WorkedExample::kE3);
  CHECK_FALSE(e3.warnings().empty());  // rewards exceed 1
  const Instance e1 = worked_example(WorkedExample::kE1);
  CHECK(e1.warnings().empty());
}

TEST_CASE("contract validation") {
  const Instance e1 = worked_example(WorkedExample::kE1);
  TeamContract outside{0b01, {0.1, 0.2}};
  CHECK_THROWS_AS(validate_contract(e1, outside), PreconditionError);
  TeamContract negative{0b11, {-0.1, 0.2}};
  CHECK_THROWS_AS(validate_contract(e1, negative), PreconditionError);
}
