#include <algorithm>
#include <cmath>

#include "gtest/gtest.h"
#include "mintplan/bnb.h"
#include "mintplan/costs.h"
#include "mintplan/mip.h"
#include "mintplan/oracle.h"
#include "testing/instances.h"

namespace mintplan {
namespace {

using ::mintplan::testing::SmallConfig;
using ::mintplan::testing::SmallScenario;

// T=1, |D|=1, nc=na=1.
ScenarioFile Unit() {
  ScenarioFile file;
  Scenario& s = file.scenario;
  s.horizon = 1;
  s.coin_specs = {{"c1", 0.5, 0.02}};
  s.demand = {{40}};
  s.operating_floor = {{10}};
  s.vault_cap = 200;
  s.safety_min = {5};
  s.initial_inventory = {20};
  MintConfig& c = file.config;
  c.blanking_breakpoints = {1, 2};
  c.blanking_costs = {3};
  c.annealing_base = 30;
  c.annealing_max = 40;
  c.annealing_cost = 2;
  c.striking_breakpoints = {60, 80};
  c.striking_costs = {7};
  return file;
}

const Row* FindRow(const StandardFormProblem& p, const std::string& label) {
  for (const Row& row : p.rows) {
    if (row.label == label) return &row;
  }
  return nullptr;
}

TEST(BuildTest, SmallestModelShape) {
  const ScenarioFile file = Unit();
  const MintProblem problem = Build(file.scenario, file.config);
  ASSERT_EQ(problem.lp.num_columns(), 6);
  std::vector<std::string> names;
  for (const Column& c : problem.lp.columns) names.push_back(c.name);
  EXPECT_EQ(problem.lp.BinaryColumns(), (std::vector<int>{2, 3, 4}));
  ASSERT_EQ(problem.lp.num_rows(), 9);
  std::vector<int> equations;
  for (const Row& row : problem.lp.rows) {
    equations.push_back(ProvenanceEquation(row.label));
  }
  std::sort(equations.begin(), equations.end());
  EXPECT_EQ(equations, (std::vector<int>{6, 7, 8, 9, 10, 11, 12, 13, 14}));
}

TEST(BuildTest, ClosedFormCounts) {
  for (int t = 1; t <= 3; ++t) {
    for (int d = 1; d <= 3; ++d) {
      for (int levels = 1; levels <= 3; ++levels) {
        InstanceShape shape{t, d, levels, 4 - levels};
        const ScenarioFile file = RandomInstance(t * 100 + d * 10 + levels, shape);
        const MintProblem problem = Build(file.scenario, file.config);
        const int nc = levels, na = 4 - levels;
        EXPECT_EQ(problem.lp.num_columns(), 2 * t * d + t * (nc + na + 1) + 1);
        EXPECT_EQ(problem.lp.num_rows(), 6 * t + 2 * t * d + d);
        EXPECT_EQ(problem.lp.BinaryColumns().size(),
                  static_cast<std::size_t>(t * (nc + na + 1)));
        for (const Row& row : problem.lp.rows) {
          EXPECT_GE(ProvenanceEquation(row.label), 6) << row.label;
          EXPECT_LE(ProvenanceEquation(row.label), 14) << row.label;
        }
      }
    }
  }
}

TEST(BuildTest, InventoryRowMovesConstantsRight) {
  ScenarioFile file{SmallScenario(), SmallConfig()};
  const MintProblem problem = Build(file.scenario, file.config);
  const ModelLayout& layout = problem.layout;
  const Row* row = FindRow(problem.lp, "eq11_inventory_t1_d2");
  ASSERT_NE(row, nullptr);
  EXPECT_EQ(row->relation, Relation::kEqual);
  EXPECT_EQ(row->rhs, 60 - 150);
  EXPECT_EQ(row->terms, (std::vector<std::pair<int, double>>{
                            {layout.f(0, 1), -1}, {layout.e(0, 1), 1}}));
  const Row* later = FindRow(problem.lp, "eq11_inventory_t2_d1");
  ASSERT_NE(later, nullptr);
  EXPECT_EQ(later->rhs, -120);
  EXPECT_EQ(later->terms.size(), 3);
}

TEST(BuildTest, CapacityRowsUseScaledBreakpoints) {
  ScenarioFile file{SmallScenario(), SmallConfig()};
  file.scenario.disruptions.push_back({1, Process::kStriking, 0.5});
  const MintProblem problem = Build(file.scenario, file.config);
  const ModelLayout& layout = problem.layout;
  const Row* row = FindRow(problem.lp, "eq07_striking_t2");
  ASSERT_NE(row, nullptr);
  EXPECT_EQ(row->rhs, 250);
  // Level j raises capacity from z_0 to z_j.
  for (const auto& [col, coef] : row->terms) {
    if (col == layout.a(1, 1)) EXPECT_EQ(coef, -(300 - 250));
    if (col == layout.a(1, 2)) EXPECT_EQ(coef, -(350 - 250));
  }
}

TEST(BuildTest, InjectedRows) {
  ScenarioFile file{SmallScenario(), SmallConfig()};
  const MintProblem base = Build(file.scenario, file.config);
  const ModelLayout& layout = base.layout;
  struct Case {
    InjectedKind kind;
    std::string label;
    std::vector<std::pair<int, double>> terms;
    double rhs;
  };
  const std::vector<Case> cases = {
      {InjectedKind::kForceBaseStriking, "eq15_force_base_striking_t1",
       {{layout.f(0, 0), 1}, {layout.f(0, 1), 1}}, 500},
      {InjectedKind::kForceBaseBlanking, "eq15_force_base_blanking_t1",
       {{layout.f(0, 0), 0.01}, {layout.f(0, 1), 0.015}}, 10},
      {InjectedKind::kForbidExtraStriking, "eq16_forbid_extra_striking_t1",
       {{layout.a(0, 1), 1}, {layout.a(0, 2), 1}}, 0},
      {InjectedKind::kForbidExtraBlanking, "eq16_forbid_extra_blanking_t1",
       {{layout.c(0, 1), 1}, {layout.c(0, 2), 1}}, 0},
      {InjectedKind::kForbidExtraAnnealing, "eq16_forbid_extra_annealing_t1",
       {{layout.h(0), 1}}, 0},
  };
  for (const Case& c : cases) {
    const MintProblem problem =
        Build(file.scenario, file.config, {{c.kind, 0}});
    ASSERT_EQ(problem.lp.num_rows(), base.lp.num_rows() + 1);
    const Row& row = problem.lp.rows.back();
    EXPECT_EQ(row.label, c.label);
    EXPECT_EQ(row.relation, Relation::kEqual);
    EXPECT_EQ(row.terms, c.terms);
    EXPECT_EQ(row.rhs, c.rhs);
    EXPECT_EQ(ProvenanceEquation(row.label),
              c.label.substr(0, 4) == "eq15" ? 15 : 16);
  }
}

TEST(BuildTest, RejectsInvalidScenario) {
  Scenario s = SmallScenario();
  s.vault_cap = 1;
  EXPECT_THROW(Build(s, SmallConfig()), std::invalid_argument);
}

TEST(ObjectiveModeTest, CloseCostsSwitchToLexicographic) {
  ScenarioFile file{SmallScenario(), SmallConfig()};
  // Every cost a multiple of 3, so distinct totals are at least 3 apart.
  file.config.blanking_costs = {3, 6};
  file.config.annealing_cost = 3;
  file.config.striking_costs = {9, 15};
  EXPECT_EQ(MinimumCostGap(file.config, 2), 3.0);
  EXPECT_EQ(Build(file.scenario, file.config).mode, ObjectiveMode::kSingle);
  file.config.striking_costs = {10, 11.5};
  EXPECT_LE(MinimumCostGap(file.config, 2), 2.0);
  EXPECT_EQ(Build(file.scenario, file.config).mode,
            ObjectiveMode::kLexicographic);
}

TEST(MinimumCostGapTest, HandComputed) {
  MintConfig c = SmallConfig();
  c.blanking_costs = {5, 9};
  c.annealing_cost = 4;
  c.striking_costs = {10, 18};
  // Per-quarter totals include 4, 5, 9, 10 and 9 = 5 + 4 appears twice, so
  // the closest distinct totals differ by 1.
  EXPECT_EQ(MinimumCostGap(c, 1), 1.0);
}

TEST(CheckSolutionTest, SolverAssignmentPasses) {
  ScenarioFile file{SmallScenario(), SmallConfig()};
  const MintProblem problem = Build(file.scenario, file.config);
  const Solution solution = SolveMip(problem);
  ASSERT_TRUE(solution.optimal());
  EXPECT_TRUE(CheckSolution(problem, solution).empty());
}

TEST(CheckSolutionTest, ReportsFloorAndLevelViolations) {
  ScenarioFile file{SmallScenario(), SmallConfig()};
  const MintProblem problem = Build(file.scenario, file.config);
  const Solution solution = SolveMip(problem);
  std::vector<double> values = AssignmentFromSolution(problem, solution);
  values[problem.layout.e(1, 0)] = file.scenario.operating_floor[1][0] - 1;
  auto labels = CheckSolution(problem, values);
  EXPECT_NE(std::find(labels.begin(), labels.end(), "eq14_floor_t2_d1"),
            labels.end());

  values = AssignmentFromSolution(problem, solution);
  values[problem.layout.a(0, 1)] = 1;
  values[problem.layout.a(0, 2)] = 1;
  labels = CheckSolution(problem, values);
  EXPECT_NE(std::find(labels.begin(), labels.end(), "eq08_striking_level_t1"),
            labels.end());
}

// Scaling every level cost by lambda scales the optimal cost, and a selection
// optimal after scaling is optimal before it.
TEST(CostScalingTest, ScalesCostKeepsOptimalSelections) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 80 && checked < 15; ++seed) {
    const ScenarioFile file = RandomInstance(seed, {});
    const MintProblem problem = Build(file.scenario, file.config);
    const Solution base = SolveMip(problem);
    if (!base.optimal() || base.cost == 0) continue;
    MintConfig scaled = file.config;
    const double lambda = 3.5;
    for (double& c : scaled.blanking_costs) c *= lambda;
    for (double& c : scaled.striking_costs) c *= lambda;
    scaled.annealing_cost *= lambda;
    const MintProblem scaled_problem = Build(file.scenario, scaled);
    const Solution other = SolveMip(scaled_problem);
    ASSERT_TRUE(other.optimal());
    EXPECT_NEAR(other.cost, lambda * base.cost, 1e-6) << "seed " << seed;
    EXPECT_NEAR(ShiftCost(other.shifts, file.config), base.cost, 1e-6);
    const OracleResult oracle = ExhaustiveSolve(problem);
    const OracleResult scaled_oracle = ExhaustiveSolve(scaled_problem);
    EXPECT_NEAR(scaled_oracle.cost, lambda * oracle.cost, 1e-6);
    ++checked;
  }
  EXPECT_GE(checked, 10);
}

}  // namespace
}  // namespace mintplan
