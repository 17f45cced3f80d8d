// Rolling-horizon replay: each quarter, plan over the next few quarters with
// the forecast available at that time, execute only the first order, then
// advance inventory with the demand that actually occurred.

#ifndef MINTPLAN_ROLLING_H_
#define MINTPLAN_ROLLING_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mintplan/heuristics.h"
#include "mintplan/model.h"

namespace mintplan {

struct EpochInput {
  int index = 0;
  // Planning vintages; row 0 is this epoch's quarter. Either both or neither
  // are given. Without them the later epochs' realized values are used.
  std::optional<Matrix> forecast;
  std::optional<Matrix> floor_forecast;
  std::vector<double> realized_demand;
  std::vector<double> operating_floor;
  // Required on epoch 0. Later values must match the inventory implied by
  // the baseline orders.
  std::optional<std::vector<double>> inventory;
};

struct SimulationInput {
  std::vector<CoinSpec> specs;
  MintConfig config;
  double vault_cap = 0.0;
  std::vector<double> safety_min;
  // Quarters are epoch indices.
  std::vector<Disruption> disruptions;
  std::vector<EpochInput> epochs;
};

// Throws std::invalid_argument on dimension or ordering problems.
void ValidateSimulationInput(const SimulationInput& input);

struct SimulationOptions {
  PipelineOptions pipeline;
  std::vector<int> horizon_cycle = {5, 4, 3, 2};
  // Number of epochs to execute; -1 runs them all. Epochs past this point
  // still serve as perfect-foresight look-ahead.
  int epochs_to_run = -1;
};

struct QuarterRecord {
  int quarter = 0;
  int horizon = 0;
  std::vector<double> order;
  // Indexed by Process.
  std::array<double, 3> utilization{};
  std::array<int, 3> levels{};
  double cost = 0.0;
  double accumulated_cost = 0.0;
  std::vector<double> inventory;  // after realized demand
  std::vector<double> shortage;   // unmet realized demand, clamped to zero
  bool infeasible = false;
  // Realized inventory ended below the operating floor (forecast error).
  bool below_floor = false;
  bool striking_disrupted = false;
  // Procedure 1 injected the striking base equality and it was kept.
  bool filled_striking_base = false;
  std::string note;
};

struct SimulationReport {
  std::vector<QuarterRecord> quarters;
  bool perfect_foresight = false;
  std::array<int, 3> extended_counts{};
  int floor_misses = 0;
  double total_cost = 0.0;
  std::vector<double> initial_inventory;
};

SimulationReport RunSimulation(const SimulationInput& input,
                               const SimulationOptions& options = {});

// The scenario planned in epoch `epoch` with horizon `horizon` (truncated at
// the end of the history when forecasts are absent).
Scenario EpochScenario(const SimulationInput& input, int epoch, int horizon,
                       const std::vector<double>& inventory);

// One solve over the first `quarters` epochs with realized demand and floors.
Scenario MonolithicScenario(const SimulationInput& input, int quarters);

// Shortfall to the floor, rounded up and scaled down to the largest order the
// quarter's extended capacity allows.
std::vector<double> NaiveOrder(const std::vector<double>& inventory,
                               const std::vector<double>& demand,
                               const std::vector<double>& floor,
                               const SimulationInput& input, int quarter);

// NaiveOrder each quarter, planned on the forecast row 0 when present, for
// the first `quarters` epochs (-1 for all).
Matrix NaiveBaseline(const SimulationInput& input, int quarters = -1);

struct Comparison {
  // NaN where the baseline order exceeds a capacity.
  std::vector<double> baseline_costs;
  std::vector<double> baseline_accumulated;
  std::vector<std::string> annotations;
  double model_total = 0.0;
  double baseline_total = 0.0;
  double reduction_percent = 0.0;
  std::array<int, 3> model_counts{};
  std::array<int, 3> baseline_counts{};
};

// Baseline quarters that exceed capacity are annotated and left out of both
// totals.
Comparison Compare(const SimulationInput& input, const SimulationReport& report,
                   const Matrix& baseline);

int TotalActivations(const std::array<int, 3>& counts);

}  // namespace mintplan

#endif  // MINTPLAN_ROLLING_H_
