// Resource usage of a minting order and the three step-cost functions.
//
// Each process has a capacity ladder b_0 < b_1 < ... < b_n. Usage at or below
// b_0 is covered by the fixed rent and costs nothing; usage in (b_{i-1}, b_i]
// costs the i-th extended level. Boundary comparisons allow an absolute slack
// of kBoundaryTolerance so that LP round-off on a breakpoint stays on the
// cheaper side.

#ifndef MINTPLAN_COSTS_H_
#define MINTPLAN_COSTS_H_

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mintplan/model.h"

namespace mintplan {

inline constexpr double kBoundaryTolerance = 1e-9;

struct ResourceUsage {
  double blanking_days = 0.0;   // D(f)
  double annealing_tons = 0.0;  // W(f)
  double striking_count = 0.0;  // N(f)

  double of(Process process) const;
};

// Usage strictly beyond the last breakpoint of a ladder.
class CapacityExceeded : public std::runtime_error {
 public:
  CapacityExceeded(Process process, int quarter, double usage, double limit);

  Process process() const { return process_; }
  // -1 when the error is not tied to a quarter.
  int quarter() const { return quarter_; }
  double usage() const { return usage_; }
  double limit() const { return limit_; }

 private:
  Process process_;
  int quarter_;
  double usage_;
  double limit_;
};

// Throws std::invalid_argument when order.size() != specs.size().
ResourceUsage Usage(std::span<const double> order,
                    const std::vector<CoinSpec>& specs);

// Smallest level whose breakpoint covers `usage`.
int StepLevel(double usage, std::span<const double> breakpoints,
              Process process, int quarter = -1);
double StepCost(double usage, const StepLadder& ladder, Process process,
                int quarter = -1);

double BlankingCost(double days, const MintConfig& config);
double AnnealingCost(double tons, const MintConfig& config);
double StrikingCost(double count, const MintConfig& config);

// Extra-shift cost of one quarter's order against disruption-scaled ladders.
double QuarterCost(std::span<const double> order,
                   const std::vector<CoinSpec>& specs, const MintConfig& config,
                   const std::vector<Disruption>& disruptions, int quarter);

double PlanCost(const MintingPlan& plan, const std::vector<CoinSpec>& specs,
                const MintConfig& config,
                const std::vector<Disruption>& disruptions);

ShiftSelection MinimalShifts(const MintingPlan& plan,
                             const std::vector<CoinSpec>& specs,
                             const MintConfig& config,
                             const std::vector<Disruption>& disruptions);

// Sum of C_i, H and A_j over the selected levels.
double ShiftCost(const ShiftSelection& shifts, const MintConfig& config);

// usage / base * 100. Usage within kBoundaryTolerance of the base reports
// exactly 100.
double UtilizationPercent(double usage, double base);

}  // namespace mintplan

#endif  // MINTPLAN_COSTS_H_
