#include "mintplan/costs.h"

#include <cmath>
#include <cstdio>

namespace mintplan {

double ResourceUsage::of(Process process) const {
  switch (process) {
    case Process::kBlanking:
      return blanking_days;
    case Process::kAnnealing:
      return annealing_tons;
    case Process::kStriking:
      break;
  }
  return striking_count;
}

namespace {

std::string CapacityMessage(Process process, int quarter, double usage,
                            double limit) {
  char buffer[200];
  if (quarter >= 0) {
    std::snprintf(buffer, sizeof(buffer),
                  "%s capacity exceeded in quarter %d: usage %.9g > %.9g",
                  std::string(ProcessName(process)).c_str(), quarter, usage,
                  limit);
  } else {
    std::snprintf(buffer, sizeof(buffer),
                  "%s capacity exceeded: usage %.9g > %.9g",
                  std::string(ProcessName(process)).c_str(), usage, limit);
  }
  return buffer;
}

}  // namespace

CapacityExceeded::CapacityExceeded(Process process, int quarter, double usage,
                                   double limit)
    : std::runtime_error(CapacityMessage(process, quarter, usage, limit)),
      process_(process),
      quarter_(quarter),
      usage_(usage),
      limit_(limit) {}

ResourceUsage Usage(std::span<const double> order,
                    const std::vector<CoinSpec>& specs) {
  if (order.size() != specs.size()) {
    throw std::invalid_argument("order has " + std::to_string(order.size()) +
                                " entries for " +
                                std::to_string(specs.size()) +
                                " denominations");
  }
  ResourceUsage usage;
  for (std::size_t d = 0; d < specs.size(); ++d) {
    usage.blanking_days += specs[d].blanking_rate * order[d];
    usage.annealing_tons += specs[d].alloy_weight * order[d];
    usage.striking_count += order[d];
  }
  return usage;
}

int StepLevel(double usage, std::span<const double> breakpoints,
              Process process, int quarter) {
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (usage <= breakpoints[i] + kBoundaryTolerance) {
      return static_cast<int>(i);
    }
  }
  throw CapacityExceeded(process, quarter, usage,
                         breakpoints.empty() ? 0.0 : breakpoints.back());
}

double StepCost(double usage, const StepLadder& ladder, Process process,
                int quarter) {
  const int level = StepLevel(usage, ladder.breakpoints, process, quarter);
  return level == 0 ? 0.0 : ladder.costs[level - 1];
}

double BlankingCost(double days, const MintConfig& config) {
  return StepCost(days, config.ladder(Process::kBlanking), Process::kBlanking);
}

double AnnealingCost(double tons, const MintConfig& config) {
  return StepCost(tons, config.ladder(Process::kAnnealing),
                  Process::kAnnealing);
}

double StrikingCost(double count, const MintConfig& config) {
  return StepCost(count, config.ladder(Process::kStriking),
                  Process::kStriking);
}

double QuarterCost(std::span<const double> order,
                   const std::vector<CoinSpec>& specs, const MintConfig& config,
                   const std::vector<Disruption>& disruptions, int quarter) {
  const ResourceUsage usage = Usage(order, specs);
  double cost = 0.0;
  for (Process process : kAllProcesses) {
    StepLadder ladder = config.ladder(process);
    ladder.breakpoints =
        ScaledBreakpoints(config, disruptions, quarter, process);
    cost += StepCost(usage.of(process), ladder, process, quarter);
  }
  return cost;
}

double PlanCost(const MintingPlan& plan, const std::vector<CoinSpec>& specs,
                const MintConfig& config,
                const std::vector<Disruption>& disruptions) {
  double total = 0.0;
  for (std::size_t t = 0; t < plan.orders.size(); ++t) {
    total += QuarterCost(plan.orders[t], specs, config, disruptions,
                         static_cast<int>(t));
  }
  return total;
}

ShiftSelection MinimalShifts(const MintingPlan& plan,
                             const std::vector<CoinSpec>& specs,
                             const MintConfig& config,
                             const std::vector<Disruption>& disruptions) {
  ShiftSelection shifts;
  for (std::size_t t = 0; t < plan.orders.size(); ++t) {
    const int quarter = static_cast<int>(t);
    const ResourceUsage usage = Usage(plan.orders[t], specs);
    for (Process process : kAllProcesses) {
      shifts.levels(process).push_back(StepLevel(
          usage.of(process),
          ScaledBreakpoints(config, disruptions, quarter, process), process,
          quarter));
    }
  }
  return shifts;
}

double ShiftCost(const ShiftSelection& shifts, const MintConfig& config) {
  double cost = 0.0;
  for (Process process : kAllProcesses) {
    const StepLadder ladder = config.ladder(process);
    for (int level : shifts.levels(process)) {
      if (level > 0) cost += ladder.costs[level - 1];
    }
  }
  return cost;
}

double UtilizationPercent(double usage, double base) {
  if (std::abs(usage - base) <= kBoundaryTolerance) return 100.0;
  if (base <= 0) return usage > 0 ? HUGE_VAL : 0.0;
  return usage / base * 100.0;
}

}  // namespace mintplan
