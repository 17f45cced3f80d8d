#include "mintplan/rolling.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mintplan/costs.h"

namespace mintplan {
namespace {

constexpr double kAuditSlack = 1e-6;

int Index(Process process) { return static_cast<int>(process); }

std::invalid_argument Invalid(const std::string& message) {
  return std::invalid_argument("simulation input: " + message);
}

void CheckWidth(const std::vector<double>& row, std::size_t width,
                const std::string& what) {
  if (row.size() != width) {
    throw Invalid(what + " has " + std::to_string(row.size()) +
                  " entries, expected " + std::to_string(width));
  }
}

std::vector<double> FloorToUnit(const std::vector<double>& order) {
  std::vector<double> out(order.size());
  for (std::size_t d = 0; d < order.size(); ++d) {
    out[d] = std::max(0.0, std::floor(order[d] + kAuditSlack));
  }
  return out;
}

}  // namespace

int TotalActivations(const std::array<int, 3>& counts) {
  return counts[0] + counts[1] + counts[2];
}

void ValidateSimulationInput(const SimulationInput& input) {
  const std::size_t width = input.specs.size();
  if (width == 0) throw Invalid("no denominations");
  if (auto problems = ValidateConfig(input.config); !problems.empty()) {
    throw Invalid(problems.front());
  }
  CheckWidth(input.safety_min, width, "safety_min");
  if (input.epochs.empty()) throw Invalid("no epochs");
  if (!input.epochs[0].inventory) throw Invalid("epoch 0 has no inventory");
  const int count = static_cast<int>(input.epochs.size());
  for (int e = 0; e < count; ++e) {
    const EpochInput& epoch = input.epochs[e];
    const std::string name = "epoch " + std::to_string(e);
    if (epoch.index != e) throw Invalid(name + " is out of order");
    CheckWidth(epoch.realized_demand, width, name + " realized_demand");
    CheckWidth(epoch.operating_floor, width, name + " operating_floor");
    if (epoch.inventory) CheckWidth(*epoch.inventory, width, name + " inventory");
    if (epoch.forecast.has_value() != epoch.floor_forecast.has_value()) {
      throw Invalid(name + " needs both forecast and floor_forecast");
    }
    if (epoch.forecast) {
      if (epoch.forecast->empty() ||
          epoch.forecast->size() != epoch.floor_forecast->size()) {
        throw Invalid(name + " forecast and floor_forecast lengths differ");
      }
      for (std::size_t t = 0; t < epoch.forecast->size(); ++t) {
        CheckWidth((*epoch.forecast)[t], width, name + " forecast row");
        CheckWidth((*epoch.floor_forecast)[t], width,
                   name + " floor_forecast row");
      }
    }
  }
  for (const Disruption& disruption : input.disruptions) {
    if (disruption.quarter < 0 || disruption.quarter >= count) {
      throw Invalid("disruption quarter " +
                    std::to_string(disruption.quarter) + " outside history");
    }
    if (!(disruption.capacity_scale > 0.0)) {
      throw Invalid("disruption capacity_scale must be positive");
    }
  }
}

Scenario EpochScenario(const SimulationInput& input, int epoch, int horizon,
                       const std::vector<double>& inventory) {
  const EpochInput& current = input.epochs.at(epoch);
  Scenario scenario;
  scenario.coin_specs = input.specs;
  scenario.vault_cap = input.vault_cap;
  scenario.safety_min = input.safety_min;
  scenario.initial_inventory = inventory;
  if (current.forecast) {
    const int h = std::min<int>(horizon, current.forecast->size());
    scenario.demand.assign(current.forecast->begin(),
                           current.forecast->begin() + h);
    scenario.operating_floor.assign(current.floor_forecast->begin(),
                                    current.floor_forecast->begin() + h);
  } else {
    const int h =
        std::min<int>(horizon, static_cast<int>(input.epochs.size()) - epoch);
    for (int t = 0; t < h; ++t) {
      scenario.demand.push_back(input.epochs[epoch + t].realized_demand);
      scenario.operating_floor.push_back(
          input.epochs[epoch + t].operating_floor);
    }
  }
  scenario.horizon = static_cast<int>(scenario.demand.size());
  for (const Disruption& disruption : input.disruptions) {
    const int local = disruption.quarter - epoch;
    if (local >= 0 && local < scenario.horizon) {
      scenario.disruptions.push_back(
          {local, disruption.process, disruption.capacity_scale});
    }
  }
  return scenario;
}

Scenario MonolithicScenario(const SimulationInput& input, int quarters) {
  Scenario scenario;
  scenario.horizon = quarters;
  scenario.coin_specs = input.specs;
  scenario.vault_cap = input.vault_cap;
  scenario.safety_min = input.safety_min;
  scenario.initial_inventory = *input.epochs.at(0).inventory;
  for (int t = 0; t < quarters; ++t) {
    scenario.demand.push_back(input.epochs.at(t).realized_demand);
    scenario.operating_floor.push_back(input.epochs[t].operating_floor);
  }
  for (const Disruption& disruption : input.disruptions) {
    if (disruption.quarter < quarters) scenario.disruptions.push_back(disruption);
  }
  return scenario;
}

std::vector<double> NaiveOrder(const std::vector<double>& inventory,
                               const std::vector<double>& demand,
                               const std::vector<double>& floor,
                               const SimulationInput& input, int quarter) {
  std::vector<double> order(inventory.size());
  for (std::size_t d = 0; d < order.size(); ++d) {
    const double need = floor[d] + demand[d] - inventory[d];
    order[d] = std::max(0.0, std::ceil(need - kAuditSlack));
  }
  const ResourceUsage usage = Usage(order, input.specs);
  double scale = 1.0;
  for (Process process : kAllProcesses) {
    const double limit =
        ScaledBreakpoints(input.config, input.disruptions, quarter, process)
            .back();
    if (usage.of(process) > limit) {
      scale = std::min(scale, limit / usage.of(process));
    }
  }
  if (scale < 1.0) {
    for (double& value : order) value = std::floor(value * scale);
  }
  return order;
}

Matrix NaiveBaseline(const SimulationInput& input, int quarters) {
  ValidateSimulationInput(input);
  const int count = quarters < 0
                        ? static_cast<int>(input.epochs.size())
                        : std::min<int>(quarters, input.epochs.size());
  Matrix orders;
  std::vector<double> inventory = *input.epochs[0].inventory;
  for (int e = 0; e < count; ++e) {
    const EpochInput& epoch = input.epochs[e];
    const std::vector<double>& demand =
        epoch.forecast ? (*epoch.forecast)[0] : epoch.realized_demand;
    const std::vector<double>& floor =
        epoch.floor_forecast ? (*epoch.floor_forecast)[0]
                             : epoch.operating_floor;
    orders.push_back(NaiveOrder(inventory, demand, floor, input, e));
    for (std::size_t d = 0; d < inventory.size(); ++d) {
      inventory[d] = std::max(
          0.0, inventory[d] + orders.back()[d] - epoch.realized_demand[d]);
    }
  }
  return orders;
}

SimulationReport RunSimulation(const SimulationInput& input,
                               const SimulationOptions& options) {
  ValidateSimulationInput(input);
  if (options.horizon_cycle.empty()) {
    throw std::invalid_argument("empty horizon cycle");
  }
  const int count = options.epochs_to_run < 0
                        ? static_cast<int>(input.epochs.size())
                        : std::min<int>(options.epochs_to_run,
                                        input.epochs.size());
  SimulationReport report;
  report.initial_inventory = *input.epochs[0].inventory;
  std::vector<double> inventory = report.initial_inventory;

  for (int e = 0; e < count; ++e) {
    const EpochInput& epoch = input.epochs[e];
    if (!epoch.forecast) report.perfect_foresight = true;
    const int nominal =
        options.horizon_cycle[e % options.horizon_cycle.size()];
    const Scenario scenario = EpochScenario(input, e, nominal, inventory);

    QuarterRecord record;
    record.quarter = e;
    record.horizon = scenario.horizon;
    // Realized demand below forecast can leave more stock than the vault
    // holds; such an epoch cannot be planned and falls back to NaiveOrder.
    PipelineResult result;
    if (auto problems = ValidateScenario(scenario); !problems.empty()) {
      result.failure = problems.front();
    } else {
      result = SolvePipeline(scenario, input.config, options.pipeline);
    }
    if (result.failure.empty()) {
      record.order = result.solution.plan.orders[0];
      for (const HeuristicStep& step : result.steps) {
        if (step.kind == InjectedKind::kForceBaseStriking && step.accepted) {
          record.filled_striking_base = true;
        }
      }
    } else {
      record.infeasible = true;
      record.note = result.failure;
      if (result.relaxed.optimal()) {
        record.order = FloorToUnit(result.relaxed.plan.orders[0]);
      } else {
        record.order = NaiveOrder(inventory, scenario.demand[0],
                                  scenario.operating_floor[0], input, e);
      }
    }

    const ResourceUsage usage = Usage(record.order, input.specs);
    for (Process process : kAllProcesses) {
      const std::vector<double> ladder =
          ScaledBreakpoints(input.config, input.disruptions, e, process);
      record.utilization[Index(process)] =
          UtilizationPercent(usage.of(process), ladder[0]);
      record.levels[Index(process)] =
          StepLevel(usage.of(process), ladder, process, e);
      if (record.levels[Index(process)] > 0) {
        ++report.extended_counts[Index(process)];
      }
      if (process == Process::kStriking) {
        record.striking_disrupted =
            ladder[0] != input.config.striking_breakpoints[0];
      }
    }
    record.cost = QuarterCost(record.order, input.specs, input.config,
                              input.disruptions, e);
    report.total_cost += record.cost;
    record.accumulated_cost = report.total_cost;

    record.shortage.assign(inventory.size(), 0.0);
    for (std::size_t d = 0; d < inventory.size(); ++d) {
      double next = inventory[d] + record.order[d] - epoch.realized_demand[d];
      if (next < 0.0) {
        record.shortage[d] = -next;
        next = 0.0;
      }
      if (next < epoch.operating_floor[d] - kAuditSlack) {
        record.below_floor = true;
      }
      inventory[d] = next;
    }
    if (record.below_floor) ++report.floor_misses;
    if (*std::max_element(record.shortage.begin(), record.shortage.end()) > 0) {
      if (!record.note.empty()) record.note += "; ";
      record.note += "stock-out";
    }
    record.inventory = inventory;
    report.quarters.push_back(std::move(record));
  }
  return report;
}

Comparison Compare(const SimulationInput& input, const SimulationReport& report,
                   const Matrix& baseline) {
  const std::size_t quarters = report.quarters.size();
  if (baseline.size() != quarters) {
    throw std::invalid_argument(
        "baseline has " + std::to_string(baseline.size()) +
        " quarters, report has " + std::to_string(quarters));
  }
  Comparison out;
  std::vector<double> inventory = report.initial_inventory;
  double accumulated = 0.0;
  for (std::size_t t = 0; t < quarters; ++t) {
    const int quarter = static_cast<int>(t);
    CheckWidth(baseline[t], input.specs.size(),
               "baseline quarter " + std::to_string(t));
    bool stock_out = false;
    for (std::size_t d = 0; d < inventory.size(); ++d) {
      inventory[d] += baseline[t][d] - input.epochs[t].realized_demand[d];
      if (inventory[d] < -kAuditSlack) stock_out = true;
    }
    if (stock_out) {
      out.annotations.push_back("quarter " + std::to_string(t) +
                                ": baseline inventory negative");
    }
    if (t + 1 < input.epochs.size() && input.epochs[t + 1].inventory) {
      const std::vector<double>& recorded = *input.epochs[t + 1].inventory;
      for (std::size_t d = 0; d < inventory.size(); ++d) {
        if (std::abs(recorded[d] - inventory[d]) > kAuditSlack) {
          throw std::invalid_argument(
              "history inventory at epoch " + std::to_string(t + 1) +
              " does not follow from the baseline orders and realized demand");
        }
      }
    }

    double cost = std::nan("");
    std::array<int, 3> levels{};
    try {
      cost = QuarterCost(baseline[t], input.specs, input.config,
                         input.disruptions, quarter);
      const ResourceUsage usage = Usage(baseline[t], input.specs);
      for (Process process : kAllProcesses) {
        levels[Index(process)] = StepLevel(
            usage.of(process),
            ScaledBreakpoints(input.config, input.disruptions, quarter,
                              process),
            process, quarter);
      }
    } catch (const CapacityExceeded& e) {
      out.annotations.push_back("quarter " + std::to_string(t) +
                                ": baseline " + e.what());
    }
    out.baseline_costs.push_back(cost);
    if (!std::isnan(cost)) {
      accumulated += cost;
      out.baseline_total += cost;
      out.model_total += report.quarters[t].cost;
      for (int p = 0; p < 3; ++p) {
        if (levels[p] > 0) ++out.baseline_counts[p];
        if (report.quarters[t].levels[p] > 0) ++out.model_counts[p];
      }
    }
    out.baseline_accumulated.push_back(accumulated);
  }
  if (out.baseline_total > 0.0) {
    out.reduction_percent =
        100.0 * (out.baseline_total - out.model_total) / out.baseline_total;
  }
  return out;
}

}  // namespace mintplan
