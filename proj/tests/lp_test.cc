#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "mintplan/lp_text.h"
#include "mintplan/lpsolve.h"
#include "mintplan/mip.h"
#include "mintplan/oracle.h"
#include "mintplan/scenario_io.h"
#include "testing/instances.h"
#include "testing/vertex_oracle.h"

namespace mintplan {
namespace {

using ::mintplan::testing::RandomLp;
using ::mintplan::testing::SolveByVertices;
using ::mintplan::testing::VertexStatus;

StandardFormProblem OneVariable(double upper) {
  StandardFormProblem p;
  p.AddColumn({"x", 0, upper, false}, -1);
  return p;
}

TEST(SolveLpTest, SingleConstraintOptimum) {
  StandardFormProblem p = OneVariable(10);
  p.AddRow({"cap", {{0, 1}}, Relation::kLessEqual, 5});
  const LpResult r = SolveLp(p);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.values[0], 5, 1e-12);
  EXPECT_NEAR(r.objective, -5, 1e-12);
}

TEST(SolveLpTest, ZeroObjective) {
  StandardFormProblem p = RandomLp(5, 3, 2);
  for (double& c : p.objective) c = 0;
  p.rows.clear();
  p.AddRow({"r", {{0, 1}, {1, 1}}, Relation::kGreaterEqual, 1});
  const LpResult r = SolveLp(p);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.objective, 0);
}

TEST(SolveLpTest, ContradictoryRows) {
  StandardFormProblem p = OneVariable(10);
  p.AddRow({"lo", {{0, 1}}, Relation::kGreaterEqual, 1});
  p.AddRow({"hi", {{0, 1}}, Relation::kLessEqual, 0});
  const LpResult r = SolveLp(p);
  EXPECT_EQ(r.status, LpStatus::kInfeasible);
  EXPECT_FALSE(r.infeasible_rows.empty());
}

TEST(SolveLpTest, Unbounded) {
  const LpResult r = SolveLp(OneVariable(kInfinity));
  EXPECT_EQ(r.status, LpStatus::kUnbounded);
}

TEST(SolveLpTest, CrossedBoundsAreInfeasible) {
  const StandardFormProblem p = OneVariable(10);
  const std::vector<double> lower = {3}, upper = {2};
  EXPECT_EQ(SolveLp(p, lower, upper).status, LpStatus::kInfeasible);
}

TEST(SolveLpTest, IterationLimit) {
  const StandardFormProblem p = RandomLp(1, 5, 5);
  LpOptions options;
  options.iteration_limit = 1;
  bool thrown = false;
  for (std::uint64_t seed = 1; seed < 40 && !thrown; ++seed) {
    try {
      SolveLp(RandomLp(seed, 5, 5), options);
    } catch (const IterationLimitExceeded&) {
      thrown = true;
    }
  }
  EXPECT_TRUE(thrown);
}

TEST(SolveLpTest, MatchesVertexEnumeration) {
  int counts[3] = {0, 0, 0};
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 1 + seed % 5;
    const int m = 1 + (seed / 5) % 5;
    const StandardFormProblem p = RandomLp(seed, n, m);
    const auto expected = SolveByVertices(p);
    const LpResult r = SolveLp(p);
    ++counts[static_cast<int>(expected.status)];
    switch (expected.status) {
      case VertexStatus::kOptimal:
        ASSERT_EQ(r.status, LpStatus::kOptimal) << "seed " << seed;
        EXPECT_NEAR(r.objective, expected.objective, 1e-7) << "seed " << seed;
        EXPECT_TRUE(CheckAssignment(p, r.values, 1e-7).empty());
        break;
      case VertexStatus::kInfeasible:
        EXPECT_EQ(r.status, LpStatus::kInfeasible) << "seed " << seed;
        break;
      case VertexStatus::kUnbounded:
        EXPECT_EQ(r.status, LpStatus::kUnbounded) << "seed " << seed;
        break;
    }
  }
  // The generator should exercise every outcome.
  EXPECT_GT(counts[0], 50);
  EXPECT_GT(counts[1], 10);
  EXPECT_GT(counts[2], 10);
}

TEST(SolveLpTest, NoSampledFeasiblePointBeatsOptimum) {
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const StandardFormProblem p = RandomLp(seed, 3, 3);
    const LpResult r = SolveLp(p);
    if (r.status != LpStatus::kOptimal) continue;
    for (int sample = 0; sample < 2000; ++sample) {
      std::vector<double> x(p.num_columns());
      for (int j = 0; j < p.num_columns(); ++j) {
        const double hi = std::isfinite(p.columns[j].upper)
                              ? p.columns[j].upper
                              : p.columns[j].lower + 20;
        x[j] = std::uniform_real_distribution<double>(p.columns[j].lower,
                                                      hi)(rng);
      }
      if (CheckAssignment(p, x, 0).empty()) {
        EXPECT_GE(p.ObjectiveValue(x), r.objective - 1e-9);
      }
    }
  }
}

TEST(SolveLpTest, Deterministic) {
  const ScenarioFile file = RandomInstance(4, {});
  const MintProblem problem = Build(file.scenario, file.config);
  const LpResult a = SolveLp(problem.lp);
  const LpResult b = SolveLp(problem.lp);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.basis, b.basis);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(StandardFormTest, AddRowNormalisesTerms) {
  StandardFormProblem p;
  p.AddColumn({"a", 0, 1, false});
  p.AddColumn({"b", 0, 1, false});
  p.AddRow({"r", {{1, 2}, {0, 0}, {0, 3}}, Relation::kEqual, 1});
  EXPECT_EQ(p.rows[0].terms, (std::vector<std::pair<int, double>>{{0, 3}, {1, 2}}));
  EXPECT_THROW(p.AddRow({"bad", {{2, 1}}, Relation::kEqual, 0}),
               std::out_of_range);
}

TEST(CheckAssignmentTest, ReportsRowsBoundsAndBinaries) {
  StandardFormProblem p;
  p.AddColumn({"x", 0, 4, false});
  p.AddColumn({"y", 0, 1, true});
  p.AddRow({"sum", {{0, 1}, {1, 1}}, Relation::kLessEqual, 3});
  EXPECT_TRUE(CheckAssignment(p, {2, 1}).empty());
  EXPECT_EQ(CheckAssignment(p, {5, 0.5}),
            (std::vector<std::string>{"sum", "bound:x", "binary:y"}));
}

TEST(LpTextTest, RoundTripsRandomProblems) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    StandardFormProblem p = RandomLp(seed, 1 + seed % 5, seed % 4);
    p.objective[0] = 1.0 / 3.0;
    if (seed % 2 == 0) p.columns[0].binary = true;
    const std::string text = ExportLpText(p);
    EXPECT_EQ(ParseLpText(text), p) << text;
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    InstanceShape shape;
    shape.quarters = 1 + seed % 3;
    const ScenarioFile file = RandomInstance(seed, shape);
    const MintProblem problem = Build(
        file.scenario, file.config,
        {{InjectedKind::kForceBaseStriking, 0},
         {InjectedKind::kForbidExtraAnnealing, 0}});
    const std::string text = ExportLpText(problem.lp);
    EXPECT_EQ(ParseLpText(text), problem.lp);
    EXPECT_EQ(ExportLpText(ParseLpText(text)), text);
  }
}

TEST(LpTextTest, SectionsAndLabels) {
  ScenarioFile file{::mintplan::testing::SmallScenario(),
                    ::mintplan::testing::SmallConfig()};
  file.scenario.horizon = 1;
  file.scenario.demand.resize(1);
  file.scenario.operating_floor.resize(1);
  const MintProblem problem = Build(file.scenario, file.config);
  const std::string text = ExportLpText(problem.lp);
  EXPECT_EQ(text.rfind("mintplan-lp v1\n", 0), 0);
  for (const Row& row : problem.lp.rows) {
    EXPECT_NE(text.find(" " + row.label + ":"), std::string::npos)
        << row.label;
  }
  const std::size_t binary = text.find("\nbinary\n");
  ASSERT_NE(binary, std::string::npos);
  const std::string section =
      text.substr(binary + 8, text.find("\nend") - binary - 8);
  std::string expected;
  for (int col : problem.lp.BinaryColumns()) {
    expected += " " + problem.lp.columns[col].name + "\n";
  }
  EXPECT_EQ(section + "\n", expected);
}

TEST(LpTextTest, ParseErrorsCarryLine) {
  try {
    ParseLpText(
        "mintplan-lp v1\nminimize\n obj: + 1 x\nsubject to\n r: + 1 y <= 2\n"
        "bounds\n 0 <= x <= inf\nbinary\nend\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5);
    EXPECT_NE(std::string(e.what()).find("unknown column y"), std::string::npos);
  }
  EXPECT_THROW(ParseLpText("not an lp\n"), ParseError);
}

}  // namespace
}  // namespace mintplan
