#include "mintplan/model.h"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace mintplan {
namespace {

std::string Format(const char* fmt, auto... args) {
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer), fmt, args...);
  return buffer;
}

bool IsNonNegative(double value) { return std::isfinite(value) && value >= 0; }

void CheckLadder(std::string_view name, const std::vector<double>& breakpoints,
                 const std::vector<double>& costs,
                 std::vector<std::string>* out) {
  if (breakpoints.size() != costs.size() + 1) {
    out->push_back(Format("mint_config.%s: %zu breakpoints for %zu costs "
                          "(expected one more breakpoint than costs)",
                          std::string(name).c_str(), breakpoints.size(),
                          costs.size()));
  }
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (!IsNonNegative(breakpoints[i])) {
      out->push_back(Format("mint_config.%s.breakpoints[%zu]: must be a "
                            "finite non-negative number",
                            std::string(name).c_str(), i));
    } else if (i > 0 && !(breakpoints[i] > breakpoints[i - 1])) {
      out->push_back(Format("mint_config.%s.breakpoints[%zu]: not strictly "
                            "increasing",
                            std::string(name).c_str(), i));
    }
  }
  for (std::size_t i = 0; i < costs.size(); ++i) {
    if (!IsNonNegative(costs[i])) {
      out->push_back(Format("mint_config.%s.costs[%zu]: must be a finite "
                            "non-negative number",
                            std::string(name).c_str(), i));
    } else if (i > 0 && costs[i] < costs[i - 1]) {
      out->push_back(Format("mint_config.%s.costs[%zu]: decreasing cost",
                            std::string(name).c_str(), i));
    }
  }
}

void CheckMatrix(std::string_view name, const Matrix& matrix, int rows,
                 int cols, std::vector<std::string>* out) {
  if (static_cast<int>(matrix.size()) != rows) {
    out->push_back(Format("%s: dimensions %zu rows, expected %d (horizon)",
                          std::string(name).c_str(), matrix.size(), rows));
    return;
  }
  for (int t = 0; t < rows; ++t) {
    if (static_cast<int>(matrix[t].size()) != cols) {
      out->push_back(Format("%s: dimensions row %d has %zu entries, expected "
                            "%d (denominations)",
                            std::string(name).c_str(), t, matrix[t].size(),
                            cols));
      continue;
    }
    for (int d = 0; d < cols; ++d) {
      if (!IsNonNegative(matrix[t][d])) {
        out->push_back(Format("%s[%d][%d]: must be a finite non-negative "
                              "number",
                              std::string(name).c_str(), t, d));
      }
    }
  }
}

void CheckVector(std::string_view name, const std::vector<double>& values,
                 int size, std::vector<std::string>* out) {
  if (static_cast<int>(values.size()) != size) {
    out->push_back(Format("%s: dimensions %zu entries, expected %d "
                          "(denominations)",
                          std::string(name).c_str(), values.size(), size));
    return;
  }
  for (int d = 0; d < size; ++d) {
    if (!IsNonNegative(values[d])) {
      out->push_back(Format("%s[%d]: must be a finite non-negative number",
                            std::string(name).c_str(), d));
    }
  }
}

}  // namespace

std::string_view ProcessName(Process process) {
  switch (process) {
    case Process::kBlanking:
      return "blanking";
    case Process::kAnnealing:
      return "annealing";
    case Process::kStriking:
      return "striking";
  }
  return "unknown";
}

Process ParseProcess(std::string_view name) {
  for (Process p : kAllProcesses) {
    if (ProcessName(p) == name) return p;
  }
  throw std::invalid_argument("unknown process '" + std::string(name) + "'");
}

StepLadder MintConfig::ladder(Process process) const {
  switch (process) {
    case Process::kBlanking:
      return {blanking_breakpoints, blanking_costs};
    case Process::kAnnealing:
      return {{annealing_base, annealing_max}, {annealing_cost}};
    case Process::kStriking:
      return {striking_breakpoints, striking_costs};
  }
  throw std::invalid_argument("unknown process");
}

const std::vector<int>& ShiftSelection::levels(Process process) const {
  switch (process) {
    case Process::kBlanking:
      return blanking;
    case Process::kAnnealing:
      return annealing;
    case Process::kStriking:
      break;
  }
  return striking;
}

std::vector<int>& ShiftSelection::levels(Process process) {
  return const_cast<std::vector<int>&>(
      static_cast<const ShiftSelection&>(*this).levels(process));
}

std::vector<std::string> ValidateConfig(const MintConfig& config) {
  std::vector<std::string> out;
  CheckLadder("blanking", config.blanking_breakpoints, config.blanking_costs,
              &out);
  CheckLadder("annealing", {config.annealing_base, config.annealing_max},
              {config.annealing_cost}, &out);
  CheckLadder("striking", config.striking_breakpoints, config.striking_costs,
              &out);
  return out;
}

std::vector<std::string> ValidateScenario(const Scenario& scenario) {
  std::vector<std::string> out;
  const int horizon = scenario.horizon;
  const int denoms = scenario.denominations();
  if (horizon < 1) {
    out.push_back(Format("horizon: %d, must be at least 1", horizon));
  }
  for (int d = 0; d < denoms; ++d) {
    const CoinSpec& spec = scenario.coin_specs[d];
    if (!IsNonNegative(spec.alloy_weight)) {
      out.push_back(Format("denominations[%d].alloy_weight: must be a finite "
                           "non-negative number",
                           d));
    }
    if (!(std::isfinite(spec.blanking_rate) && spec.blanking_rate > 0)) {
      out.push_back(Format("denominations[%d].blanking_rate: must be "
                           "positive",
                           d));
    }
  }
  CheckMatrix("demand", scenario.demand, horizon, denoms, &out);
  CheckMatrix("operating_floor", scenario.operating_floor, horizon, denoms,
              &out);
  if (!IsNonNegative(scenario.vault_cap)) {
    out.push_back("vault_cap: must be a finite non-negative number");
  }
  CheckVector("safety_min", scenario.safety_min, denoms, &out);
  CheckVector("initial_inventory", scenario.initial_inventory, denoms, &out);
  if (static_cast<int>(scenario.initial_inventory.size()) == denoms) {
    double total = 0;
    for (double e : scenario.initial_inventory) total += e;
    if (total > scenario.vault_cap) {
      out.push_back(Format("vault_cap: initial inventory total %.17g exceeds "
                           "vault_cap %.17g",
                           total, scenario.vault_cap));
    }
  }
  for (std::size_t i = 0; i < scenario.disruptions.size(); ++i) {
    const Disruption& disruption = scenario.disruptions[i];
    if (disruption.quarter < 0 || disruption.quarter >= horizon) {
      out.push_back(Format("disruptions[%zu].quarter: %d outside horizon",
                           i, disruption.quarter));
    }
    if (!(disruption.capacity_scale >= 0 && disruption.capacity_scale <= 1)) {
      out.push_back(Format("disruptions[%zu].capacity_scale: must lie in "
                           "[0, 1]",
                           i));
    }
  }
  return out;
}

std::vector<double> ScaledBreakpoints(const MintConfig& config,
                                      const std::vector<Disruption>& disruptions,
                                      int quarter, Process process) {
  std::vector<double> breakpoints = config.ladder(process).breakpoints;
  double scale = 1.0;
  for (const Disruption& disruption : disruptions) {
    if (disruption.quarter == quarter && disruption.process == process) {
      scale *= disruption.capacity_scale;
    }
  }
  if (scale != 1.0) {
    for (double& b : breakpoints) b *= scale;
  }
  return breakpoints;
}

std::vector<double> EffectiveCapacity(const MintConfig& config,
                                      const Scenario& scenario, int quarter,
                                      Process process) {
  if (quarter < 0 || quarter >= scenario.horizon) {
    throw std::out_of_range(Format("quarter %d outside horizon %d", quarter,
                                   scenario.horizon));
  }
  return ScaledBreakpoints(config, scenario.disruptions, quarter, process);
}

std::vector<double> EffectiveCapacity(const MintConfig& config,
                                      const Scenario& scenario, int quarter,
                                      std::string_view process) {
  return EffectiveCapacity(config, scenario, quarter, ParseProcess(process));
}

Matrix RollInventory(const std::vector<double>& initial, const Matrix& orders,
                     const Matrix& demand) {
  Matrix inventory(orders.size(), std::vector<double>(initial.size()));
  std::vector<double> current = initial;
  for (std::size_t t = 0; t < orders.size(); ++t) {
    for (std::size_t d = 0; d < initial.size(); ++d) {
      current[d] = current[d] + orders[t][d] - demand[t][d];
      inventory[t][d] = current[d];
    }
  }
  return inventory;
}

}  // namespace mintplan
