#include <stdexcept>

#include "gtest/gtest.h"
#include "mintplan/model.h"
#include "mintplan/scenario_io.h"
#include "testing/instances.h"

namespace mintplan {
namespace {

using ::mintplan::testing::SmallConfig;
using ::mintplan::testing::SmallScenario;

bool Mentions(const std::vector<std::string>& list, const std::string& text) {
  for (const std::string& item : list) {
    if (item.find(text) != std::string::npos) return true;
  }
  return false;
}

TEST(ValidateScenarioTest, WellFormedHasNoViolations) {
  EXPECT_TRUE(ValidateScenario(SmallScenario()).empty());
  EXPECT_TRUE(ValidateConfig(SmallConfig()).empty());
}

TEST(ValidateScenarioTest, InitialInventoryAboveVault) {
  Scenario s = SmallScenario();
  s.vault_cap = 109;  // initial total is 110
  const auto violations = ValidateScenario(s);
  ASSERT_EQ(violations.size(), 1);
  EXPECT_NE(violations[0].find("vault_cap"), std::string::npos);
}

TEST(ValidateScenarioTest, DemandRowCount) {
  Scenario s = SmallScenario();
  s.demand.pop_back();
  const auto violations = ValidateScenario(s);
  ASSERT_EQ(violations.size(), 1);
  EXPECT_NE(violations[0].find("demand"), std::string::npos);
}

TEST(ValidateScenarioTest, NamesDenominationAndQuarter) {
  Scenario s = SmallScenario();
  s.operating_floor[1][0] = -1;
  s.coin_specs[1].blanking_rate = 0;
  s.disruptions.push_back({0, Process::kStriking, 1.5});
  const auto violations = ValidateScenario(s);
  EXPECT_EQ(violations.size(), 3);
  EXPECT_TRUE(Mentions(violations, "operating_floor[1][0]"));
  EXPECT_TRUE(Mentions(violations, "denominations[1].blanking_rate"));
  EXPECT_TRUE(Mentions(violations, "disruptions[0].capacity_scale"));
}

TEST(ValidateConfigTest, LadderShapes) {
  MintConfig c = SmallConfig();
  c.striking_breakpoints = {500, 500, 700};
  c.blanking_costs = {9, 5};
  c.annealing_max = c.annealing_base;
  const auto violations = ValidateConfig(c);
  EXPECT_TRUE(Mentions(violations, "striking"));
  EXPECT_TRUE(Mentions(violations, "blanking"));
  EXPECT_TRUE(Mentions(violations, "annealing"));
}

TEST(EffectiveCapacityTest, IdentityWithoutDisruptions) {
  const Scenario s = SmallScenario();
  const MintConfig c = SmallConfig();
  for (int t = 0; t < s.horizon; ++t) {
    for (Process p : kAllProcesses) {
      EXPECT_EQ(EffectiveCapacity(c, s, t, p), c.ladder(p).breakpoints);
    }
  }
}

TEST(EffectiveCapacityTest, ScalesEveryBreakpoint) {
  Scenario s = SmallScenario();
  MintConfig c = SmallConfig();
  c.striking_breakpoints = {100, 120};
  c.striking_costs = {7};
  s.disruptions.push_back({1, Process::kStriking, 0.5});
  EXPECT_EQ(EffectiveCapacity(c, s, 1, "striking"),
            (std::vector<double>{50, 60}));
  EXPECT_EQ(EffectiveCapacity(c, s, 0, "striking"),
            (std::vector<double>{100, 120}));
  EXPECT_EQ(EffectiveCapacity(c, s, 1, "blanking"), c.blanking_breakpoints);
}

TEST(EffectiveCapacityTest, DisruptionsCompose) {
  Scenario one = SmallScenario();
  MintConfig c = SmallConfig();
  c.striking_breakpoints = {100, 120};
  c.striking_costs = {7};
  one.disruptions.push_back({0, Process::kStriking, 0.5});
  MintConfig halved = c;
  halved.striking_breakpoints = EffectiveCapacity(c, one, 0, Process::kStriking);
  Scenario other = SmallScenario();
  other.disruptions.push_back({0, Process::kStriking, 0.8});
  const double composed =
      EffectiveCapacity(halved, other, 0, Process::kStriking)[0];

  Scenario both = SmallScenario();
  both.disruptions = {{0, Process::kStriking, 0.5},
                      {0, Process::kStriking, 0.8}};
  EXPECT_DOUBLE_EQ(EffectiveCapacity(c, both, 0, Process::kStriking)[0],
                   composed);
  EXPECT_DOUBLE_EQ(composed, 40.0);
}

TEST(EffectiveCapacityTest, Errors) {
  const Scenario s = SmallScenario();
  EXPECT_THROW(EffectiveCapacity(SmallConfig(), s, 2, Process::kStriking),
               std::out_of_range);
  EXPECT_THROW(EffectiveCapacity(SmallConfig(), s, 0, "polishing"),
               std::invalid_argument);
}

TEST(RollInventoryTest, Recursion) {
  const Matrix inventory =
      RollInventory({5, 1}, {{10, 0}, {0, 4}}, {{3, 1}, {2, 2}});
  EXPECT_EQ(inventory, (Matrix{{12, 0}, {10, 2}}));
}

TEST(ScenarioJsonTest, RoundTripIsExact) {
  ScenarioFile file{SmallScenario(), SmallConfig()};
  file.scenario.demand[0][1] = 0.1 + 0.2;  // not representable in short form
  file.scenario.disruptions.push_back({1, Process::kAnnealing, 0.75});
  const std::string text = SerializeScenarioJson(file);
  const ScenarioFile parsed = ParseScenarioJson(text);
  EXPECT_EQ(parsed.scenario, file.scenario);
  EXPECT_EQ(parsed.config, file.config);
  EXPECT_EQ(SerializeScenarioJson(parsed), text);
}

TEST(ScenarioJsonTest, FixturesAreCanonical) {
  for (const char* name : {"tiny.json", "slack.json", "infeasible.json"}) {
    const std::string text =
        ReadTextFile(::mintplan::testing::FixturePath(name));
    EXPECT_EQ(SerializeScenarioJson(ParseScenarioJson(text)), text) << name;
  }
}

TEST(ScenarioJsonTest, SyntaxErrorCarriesLine) {
  const std::string text = "{\n  \"horizon\": 2,\n  \"demand\": [1,, 2]\n}\n";
  try {
    ParseScenarioJson(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_GT(e.column(), 1);
  }
}

TEST(ScenarioJsonTest, RejectsNegativeDemandAndMissingKeys) {
  ScenarioFile file{SmallScenario(), SmallConfig()};
  file.scenario.demand[1][0] = -4;
  EXPECT_THROW(ParseScenarioJson(SerializeScenarioJson(file)), ParseError);
  EXPECT_THROW(ParseScenarioJson("{\"horizon\": 1}"), ParseError);
  EXPECT_THROW(ParseScenarioJson("{\"horizon\": \"two\"}"), ParseError);
}

}  // namespace
}  // namespace mintplan
