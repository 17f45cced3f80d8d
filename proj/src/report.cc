#include "mintplan/report.h"

#include <cmath>
#include <cstdio>

namespace mintplan {
namespace {

std::string Fixed(double value, int digits = 2) {
  if (value == 0.0) value = 0.0;  // no "-0.00"
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

// Integral values print without decimals.
std::string Quantity(double value) {
  if (std::abs(value - std::round(value)) < 1e-9) return Fixed(std::round(value), 0);
  return Fixed(value, 6);
}

std::string Counts(const std::array<int, 3>& counts) {
  std::string out;
  for (Process process : kAllProcesses) {
    if (!out.empty()) out += ' ';
    out += std::string(ProcessName(process)) + ":" +
           std::to_string(counts[static_cast<int>(process)]);
  }
  return out;
}

}  // namespace

std::string FormatPipelineResult(const Scenario& scenario,
                                 const PipelineResult& result) {
  std::string out;
  const Solution& solution = result.solution;
  if (!result.failure.empty()) return "status: infeasible\n" + result.failure + "\n";
  out += "status: optimal\n";
  out += "objective: " + Fixed(solution.objective, 6) + "\n";
  out += "cost: " + Fixed(solution.cost, 6) + "\n";
  out += "k: " + Fixed(solution.k, 6) + "\n";
  out += "integerize: " +
         std::string(IntegerizeStatusName(result.integerize_status));
  if (result.integerize_cost_delta != 0.0) {
    out += " (cost delta " + Fixed(result.integerize_cost_delta, 6) + ")";
  }
  out += "\n";
  for (int t = 0; t < scenario.horizon; ++t) {
    out += "quarter " + std::to_string(t) + ":";
    for (int d = 0; d < scenario.denominations(); ++d) {
      out += " " + scenario.coin_specs[d].id + "=" +
             Quantity(solution.plan.orders[t][d]);
    }
    out += " | blanking=" + std::to_string(solution.shifts.blanking[t]) +
           " annealing=" + std::to_string(solution.shifts.annealing[t]) +
           " striking=" + std::to_string(solution.shifts.striking[t]) + "\n";
  }
  for (const HeuristicStep& step : result.steps) {
    out += "heuristic " + std::string(InjectedKindName(step.kind)) + ": ";
    if (!step.guard_fired) {
      out += "guard false\n";
    } else if (std::isnan(step.resolved_cost)) {
      out += "rejected (re-solve infeasible)\n";
    } else {
      out += std::string(step.accepted ? "accepted" : "rejected") +
             " (cost delta " + Fixed(step.cost_delta, 6) + ")\n";
    }
  }
  return out;
}

std::string SimulationCsv(const SimulationReport& report,
                          const std::vector<CoinSpec>& specs,
                          const Comparison* comparison) {
  std::string out = "quarter,horizon";
  for (const CoinSpec& spec : specs) out += ",order_" + spec.id;
  out +=
      ",util_blanking,util_annealing,util_striking,extra_cost,"
      "accumulated_cost,baseline_accumulated_cost,status\n";
  for (std::size_t i = 0; i < report.quarters.size(); ++i) {
    const QuarterRecord& q = report.quarters[i];
    out += std::to_string(q.quarter) + "," + std::to_string(q.horizon);
    for (double value : q.order) out += "," + Quantity(value);
    for (Process process : kAllProcesses) {
      out += "," + Fixed(q.utilization[static_cast<int>(process)]);
    }
    out += "," + Fixed(q.cost) + "," + Fixed(q.accumulated_cost) + ",";
    if (comparison) out += Fixed(comparison->baseline_accumulated[i]);
    out += q.infeasible ? ",infeasible\n" : ",ok\n";
  }
  if (report.perfect_foresight) out += "# mode perfect_foresight\n";
  out += "# summary model_total=" + Fixed(report.total_cost) +
         " model_extended=" + Counts(report.extended_counts) +
         " floor_misses=" + std::to_string(report.floor_misses);
  if (comparison) {
    out += " compared_model_total=" + Fixed(comparison->model_total) +
           " baseline_total=" + Fixed(comparison->baseline_total) +
           " reduction_percent=" + Fixed(comparison->reduction_percent) +
           " compared_model_extended=" + Counts(comparison->model_counts) +
           " baseline_extended=" + Counts(comparison->baseline_counts);
  }
  out += "\n";
  for (const QuarterRecord& q : report.quarters) {
    if (!q.note.empty()) {
      out += "# quarter " + std::to_string(q.quarter) + ": " + q.note + "\n";
    }
  }
  if (comparison) {
    for (const std::string& note : comparison->annotations) {
      out += "# " + note + "\n";
    }
  }
  return out;
}

}  // namespace mintplan
