#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "mintplan/costs.h"
#include "testing/instances.h"

namespace mintplan {
namespace {

MintConfig HandConfig() {
  MintConfig c;
  c.blanking_breakpoints = {10, 14, 18};
  c.blanking_costs = {5, 9};
  c.annealing_base = 30;
  c.annealing_max = 45;
  c.annealing_cost = 7;
  c.striking_breakpoints = {100, 120, 140};
  c.striking_costs = {11, 20};
  return c;
}

TEST(UsageTest, HandEvaluated) {
  const std::vector<CoinSpec> specs = {{"a", 2, 0.1}, {"b", 0, 0.05}};
  const std::vector<double> order = {10, 20};
  const ResourceUsage u = Usage(order, specs);
  EXPECT_DOUBLE_EQ(u.blanking_days, 2.0);
  EXPECT_DOUBLE_EQ(u.annealing_tons, 20.0);
  EXPECT_DOUBLE_EQ(u.striking_count, 30.0);
  const std::vector<double> zero = {0, 0};
  const ResourceUsage z = Usage(zero, specs);
  EXPECT_EQ(z.blanking_days, 0);
  EXPECT_EQ(z.annealing_tons, 0);
  EXPECT_EQ(z.striking_count, 0);
}

TEST(UsageTest, LengthMismatch) {
  const std::vector<CoinSpec> specs = {{"a", 2, 0.1}};
  const std::vector<double> order = {1, 2};
  EXPECT_THROW(Usage(order, specs), std::invalid_argument);
}

TEST(UsageTest, Additive) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0, 50);
  const std::vector<CoinSpec> specs = {
      {"a", 1.5, 0.2}, {"b", 0, 0.07}, {"c", 0.3, 0.11}};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> a(3), b(3), sum(3);
    for (int d = 0; d < 3; ++d) {
      a[d] = u(rng);
      b[d] = u(rng);
      sum[d] = a[d] + b[d];
    }
    const ResourceUsage ua = Usage(a, specs), ub = Usage(b, specs),
                        us = Usage(sum, specs);
    for (Process p : kAllProcesses) {
      EXPECT_NEAR(us.of(p), ua.of(p) + ub.of(p), 1e-9);
    }
  }
}

TEST(StepCostTest, BlankingIntervalsAreRightClosed) {
  const MintConfig c = HandConfig();
  EXPECT_EQ(BlankingCost(0, c), 0);
  EXPECT_EQ(BlankingCost(10, c), 0);
  EXPECT_EQ(BlankingCost(10 + 1e-10, c), 0);  // inside boundary tolerance
  EXPECT_EQ(BlankingCost(10.001, c), 5);
  EXPECT_EQ(BlankingCost(12, c), 5);
  EXPECT_EQ(BlankingCost(14, c), 5);
  EXPECT_EQ(BlankingCost(14.5, c), 9);
  EXPECT_EQ(BlankingCost(18, c), 9);
  EXPECT_THROW(BlankingCost(18.5, c), CapacityExceeded);
}

TEST(StepCostTest, Annealing) {
  const MintConfig c = HandConfig();
  EXPECT_EQ(AnnealingCost(30, c), 0);
  EXPECT_EQ(AnnealingCost(31, c), 7);
  EXPECT_EQ(AnnealingCost(45, c), 7);
  EXPECT_THROW(AnnealingCost(46, c), CapacityExceeded);
}

TEST(StepCostTest, Striking) {
  const MintConfig c = HandConfig();
  EXPECT_EQ(StrikingCost(100, c), 0);
  EXPECT_EQ(StrikingCost(120, c), 11);
  EXPECT_EQ(StrikingCost(130, c), 20);
  EXPECT_EQ(StrikingCost(140, c), 20);
  try {
    StrikingCost(141, c);
    FAIL() << "expected CapacityExceeded";
  } catch (const CapacityExceeded& e) {
    EXPECT_EQ(e.process(), Process::kStriking);
    EXPECT_EQ(e.usage(), 141);
    EXPECT_EQ(e.limit(), 140);
  }
}

TEST(StepCostTest, MonotoneAndConstantOnIntervals) {
  const MintConfig c = HandConfig();
  std::mt19937_64 rng(11);
  for (Process p : kAllProcesses) {
    const StepLadder ladder = c.ladder(p);
    std::uniform_real_distribution<double> u(0, ladder.breakpoints.back());
    std::vector<double> samples(500);
    for (double& s : samples) s = u(rng);
    std::sort(samples.begin(), samples.end());
    double previous = -1;
    for (double s : samples) {
      const double cost = StepCost(s, ladder, p);
      EXPECT_GE(cost, previous);
      previous = cost;
      const int level = StepLevel(s, ladder.breakpoints, p);
      const double lo = level == 0 ? 0.0 : ladder.breakpoints[level - 1];
      const double hi = ladder.breakpoints[level];
      std::uniform_real_distribution<double> same(lo, hi);
      double other = same(rng);
      if (other <= lo + 1e-6) other = hi;
      EXPECT_EQ(StepCost(other, ladder, p), cost);
    }
  }
}

TEST(PlanCostTest, SumsPerProcessCosts) {
  MintConfig c = HandConfig();
  const std::vector<CoinSpec> specs = {{"a", 0, 1.0}, {"b", 0, 0.01}};
  MintingPlan plan;
  plan.orders = {{12, 0}, {0, 130}};  // blanking level 1, then striking level 2
  EXPECT_DOUBLE_EQ(PlanCost(plan, specs, c, {}), 25);
  EXPECT_DOUBLE_EQ(
      PlanCost(plan, specs, c, {}),
      QuarterCost(plan.orders[0], specs, c, {}, 0) +
          QuarterCost(plan.orders[1], specs, c, {}, 1));
  MintingPlan idle;
  idle.orders = {{1, 1}, {2, 2}};
  EXPECT_EQ(PlanCost(idle, specs, c, {}), 0);
}

TEST(PlanCostTest, DisruptionNamesQuarter) {
  const MintConfig c = HandConfig();
  const std::vector<CoinSpec> specs = {{"a", 0, 0.01}};
  MintingPlan plan;
  plan.orders = {{130}, {130}};
  EXPECT_DOUBLE_EQ(PlanCost(plan, specs, c, {}), 40);
  try {
    PlanCost(plan, specs, c, {{1, Process::kStriking, 0.5}});
    FAIL() << "expected CapacityExceeded";
  } catch (const CapacityExceeded& e) {
    EXPECT_EQ(e.quarter(), 1);
    EXPECT_EQ(e.process(), Process::kStriking);
  }
}

TEST(MinimalShiftsTest, SmallestCoveringLevel) {
  const MintConfig c = HandConfig();
  const std::vector<CoinSpec> specs = {{"a", 0, 0.12}};
  MintingPlan plan;
  plan.orders = {{100}, {50}};  // 12 days and exactly z_0 coins
  const ShiftSelection s = MinimalShifts(plan, specs, c, {});
  EXPECT_EQ(s.blanking, (std::vector<int>{1, 0}));
  EXPECT_EQ(s.striking, (std::vector<int>{0, 0}));
  EXPECT_EQ(s.annealing, (std::vector<int>{0, 0}));
}

TEST(MinimalShiftsTest, AgreesWithPlanCostOnRandomPlans) {
  const MintConfig c = HandConfig();
  const std::vector<CoinSpec> specs = {{"a", 0.3, 0.12}, {"b", 0.1, 0.05}};
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 70);
  for (int trial = 0; trial < 200; ++trial) {
    MintingPlan plan;
    for (int t = 0; t < 3; ++t) plan.orders.push_back({u(rng), u(rng)});
    double direct;
    try {
      direct = PlanCost(plan, specs, c, {});
    } catch (const CapacityExceeded&) {
      continue;
    }
    const ShiftSelection shifts = MinimalShifts(plan, specs, c, {});
    EXPECT_NEAR(ShiftCost(shifts, c), direct, 1e-12);
    EXPECT_EQ(MinimalShifts(plan, specs, c, {}), shifts);
    for (int t = 0; t < 3; ++t) {
      EXPECT_LE(shifts.blanking[t], c.blanking_levels());
      EXPECT_LE(shifts.striking[t], c.striking_levels());
      EXPECT_LE(shifts.annealing[t], 1);
    }
  }
}

TEST(UtilizationTest, SnapsAtBase) {
  EXPECT_EQ(UtilizationPercent(1000, 1000), 100.0);
  EXPECT_EQ(UtilizationPercent(1000 + 5e-10, 1000), 100.0);
  EXPECT_GT(UtilizationPercent(1000.001, 1000), 100.0);
  EXPECT_DOUBLE_EQ(UtilizationPercent(500, 1000), 50.0);
}

}  // namespace
}  // namespace mintplan
