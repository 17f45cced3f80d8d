// Domain types for quarterly minting plans.
//
// Units used everywhere in the library:
//   * coin quantities in millions of coins,
//   * copper alloy weights in tons,
//   * blanking time in working days.
//
// Quarter indices are 0-based in code and in files. Shift levels are
// 0 for base capacity and 1..n for the extended (third shift) levels.

#ifndef MINTPLAN_MODEL_H_
#define MINTPLAN_MODEL_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mintplan {

// Row-major T x |D| matrix stored as a vector of rows.
using Matrix = std::vector<std::vector<double>>;

enum class Process { kBlanking, kAnnealing, kStriking };

inline constexpr Process kAllProcesses[] = {Process::kBlanking,
                                            Process::kAnnealing,
                                            Process::kStriking};

std::string_view ProcessName(Process process);
// Throws std::invalid_argument on an unknown name.
Process ParseProcess(std::string_view name);

struct CoinSpec {
  std::string id;
  // Tons of copper alloy per million coins. Zero for coins that are not
  // annealed.
  double alloy_weight = 0.0;
  // Working days of blanking per million coins.
  double blanking_rate = 0.0;

  bool operator==(const CoinSpec&) const = default;
};

// A capacity ladder: breakpoints b_0 < b_1 < ... < b_n and the costs of the
// n extended levels. Usage u costs 0 when u <= b_0 and costs[i-1] when
// b_{i-1} < u <= b_i.
struct StepLadder {
  std::vector<double> breakpoints;
  std::vector<double> costs;

  int levels() const { return static_cast<int>(costs.size()); }
  bool operator==(const StepLadder&) const = default;
};

struct MintConfig {
  std::vector<double> blanking_breakpoints;  // x_0 .. x_nc, working days
  std::vector<double> blanking_costs;        // C_1 .. C_nc
  double annealing_base = 0.0;               // y_0, tons
  double annealing_max = 0.0;                // y_1, tons
  double annealing_cost = 0.0;               // H
  std::vector<double> striking_breakpoints;  // z_0 .. z_na, millions of coins
  std::vector<double> striking_costs;        // A_1 .. A_na

  int blanking_levels() const {
    return static_cast<int>(blanking_costs.size());
  }
  int striking_levels() const {
    return static_cast<int>(striking_costs.size());
  }
  StepLadder ladder(Process process) const;

  bool operator==(const MintConfig&) const = default;
};

// Multiplies every breakpoint of `process` in `quarter` by `capacity_scale`.
struct Disruption {
  int quarter = 0;
  Process process = Process::kStriking;
  double capacity_scale = 1.0;

  bool operator==(const Disruption&) const = default;
};

struct Scenario {
  int horizon = 0;
  std::vector<CoinSpec> coin_specs;
  Matrix demand;           // P_t^d
  Matrix operating_floor;  // DEM_t^d
  double vault_cap = 0.0;  // IMAX
  std::vector<double> safety_min;         // IMIN^d
  std::vector<double> initial_inventory;  // E_0^d
  std::vector<Disruption> disruptions;

  int denominations() const { return static_cast<int>(coin_specs.size()); }
  bool operator==(const Scenario&) const = default;
};

struct MintingPlan {
  Matrix orders;     // f_t^d
  Matrix inventory;  // E_t^d after the quarter's production and demand

  bool operator==(const MintingPlan&) const = default;
};

// Per-quarter shift levels for each process. blanking[t] in {0..nc},
// annealing[t] in {0,1}, striking[t] in {0..na}.
struct ShiftSelection {
  std::vector<int> blanking;
  std::vector<int> annealing;
  std::vector<int> striking;

  const std::vector<int>& levels(Process process) const;
  std::vector<int>& levels(Process process);
  bool operator==(const ShiftSelection&) const = default;
};

enum class SolutionStatus { kOptimal, kInfeasible };

struct Solution {
  SolutionStatus status = SolutionStatus::kInfeasible;
  double objective = 0.0;  // cost - k
  double cost = 0.0;       // extra-shift cost of `shifts`
  MintingPlan plan;
  ShiftSelection shifts;
  double k = 0.0;

  bool optimal() const { return status == SolutionStatus::kOptimal; }
};

// Returns one human-readable description per violated invariant; empty when
// the scenario is well formed.
std::vector<std::string> ValidateScenario(const Scenario& scenario);
std::vector<std::string> ValidateConfig(const MintConfig& config);

// The breakpoints of `process` in quarter `quarter`, scaled by the product of
// every matching disruption. Throws std::out_of_range if quarter >= horizon.
std::vector<double> EffectiveCapacity(const MintConfig& config,
                                      const Scenario& scenario, int quarter,
                                      Process process);
std::vector<double> EffectiveCapacity(const MintConfig& config,
                                      const Scenario& scenario, int quarter,
                                      std::string_view process);

// Same scaling without a horizon check; used where only the disruption list is
// at hand.
std::vector<double> ScaledBreakpoints(const MintConfig& config,
                                      const std::vector<Disruption>& disruptions,
                                      int quarter, Process process);

// Inventory recursion E_t = E_{t-1} + f_t - P_t starting from `initial`.
Matrix RollInventory(const std::vector<double>& initial, const Matrix& orders,
                     const Matrix& demand);

}  // namespace mintplan

#endif  // MINTPLAN_MODEL_H_
