#include <doctest.h>

#include <cmath>

#include "fairteam/exact.hpp"
#include "fairteam/fairness.hpp"
#include "fairteam/instances.hpp"
#include "test_support.hpp"

using namespace fairteam;

TEST_CASE("optimal fair contracts on the worked fixtures") {
  const Instance e1 = worked_example(WorkedExample::kE1);
  const auto r1 = optimal_fair_bruteforce(e1);
  CHECK(r1.team == 0b11);
  CHECK(r1.revenue == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r1.contract.share(0) == doctest::Approx(2.0 / 15).epsilon(1e-12));
  CHECK(r1.contract.share(1) == doctest::Approx(0.2).epsilon(1e-12));
  REQUIRE(r1.minimum_share.has_value());
  CHECK(*r1.minimum_share == doctest::Approx(2.0 / 15).epsilon(1e-12));

  const Instance e2 = worked_example(WorkedExample::kE2);
  const auto r2 = optimal_fair_bruteforce(e2);
  CHECK(r2.team == 0b11);
  CHECK(r2.revenue == doctest::Approx(5.0 / 8).epsilon(1e-12));

  // incentivizing costs more than the reward -> stay idle
  const Instance lost({2.0}, AdditiveReward{{0.5}});
  const auto r3 = optimal_fair_bruteforce(lost);
  CHECK(r3.team == 0);
  CHECK(r3.revenue == 0.0);
  CHECK_FALSE(r3.minimum_share.has_value());
}

TEST_CASE("optimal non-discriminatory contracts on the worked fixtures") {
  const Instance e2 = worked_example(WorkedExample::kE2);
  const auto r2 = optimal_nondiscriminatory_bruteforce(e2);
  CHECK(r2.team == 0b11);
  CHECK(r2.revenue == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r2.contract.share(0) == doctest::Approx(0.25));
  CHECK(r2.contract.share(1) == doctest::Approx(0.25));

  // {0} at share 0.1 and {0,1} at share 0.2 tie at 0.45; the richer team wins
  const Instance e1 = worked_example(WorkedExample::kE1);
  const auto r1 = optimal_nondiscriminatory_bruteforce(e1);
  CHECK(r1.revenue == doctest::Approx(0.45).epsilon(1e-9));
  CHECK(r1.team == 0b11);
}

TEST_CASE("the 4/5 gap between fair and non-discriminatory optima") {
  const Instance e2 = worked_example(WorkedExample::kE2);
  const double fair = optimal_fair_bruteforce(e2).revenue;
  const double nd = optimal_nondiscriminatory_bruteforce(e2).revenue;
  CHECK(std::fabs(nd / fair - 0.8) <= 1e-12);
}

TEST_CASE("brute-force preconditions") {
  const Instance e3 = worked_example(WorkedExample::kE3);
  CHECK_THROWS_AS(optimal_fair_bruteforce(e3), PreconditionError);

  const Instance e1 = worked_example(WorkedExample::kE1);
  CHECK_THROWS_AS(optimal_fair_bruteforce(e1, 1), CapExceededError);
  CHECK_THROWS_AS(optimal_nondiscriminatory_bruteforce(e1, 1), CapExceededError);
}

TEST_CASE("outputs are fair and orderings hold on random instances") {
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 6;
    const Instance inst = testutil::random_submodular_instance(n, 7000 + trial);
    const auto fair = optimal_fair_bruteforce(inst);
    const auto nd = optimal_nondiscriminatory_bruteforce(inst);

    if (fair.team != 0) {
      CHECK(is_fair_definitional(inst, fair.contract).fair);
      CHECK(revenue(inst, fair.contract) == doctest::Approx(fair.revenue).epsilon(1e-9));
    }
    // non-discriminatory contracts are a subset of fair contracts
    CHECK(nd.revenue <= fair.revenue + 1e-9);
    // constant-factor loss bounds
    CHECK(nd.revenue >= fair.revenue / 12.0 - 1e-9);
    if (inst.is_additive()) CHECK(nd.revenue >= fair.revenue / 2.0 - 1e-9);
  }
}
