// Text renderings of solver and simulation results.

#ifndef MINTPLAN_REPORT_H_
#define MINTPLAN_REPORT_H_

#include <string>

#include "mintplan/heuristics.h"
#include "mintplan/rolling.h"

namespace mintplan {

// Human-readable summary of a pipeline run: status, objective parts, the
// orders and shift levels per quarter and the heuristic steps.
std::string FormatPipelineResult(const Scenario& scenario,
                                 const PipelineResult& result);

// One row per executed quarter, then "# " comment lines with the summary.
// `comparison` may be null.
std::string SimulationCsv(const SimulationReport& report,
                          const std::vector<CoinSpec>& specs,
                          const Comparison* comparison);

}  // namespace mintplan

#endif  // MINTPLAN_REPORT_H_
