// The two first-quarter refinement procedures and the solve pipeline that
// chains build, branch and bound, integer repair and the procedures.
//
// Procedure 1 (fill base capacity): if quarter 1 leaves striking base
// capacity unused, re-solve with sum_d f_1^d = z_0 and keep the result when
// its cost equals the current cost; then the same for blanking with
// D(f_1) = x_0.
//
// Procedure 2 (postpone extended capacity): if quarter 1 runs striking,
// blanking or annealing above base, re-solve with that process's extra
// levels forbidden in quarter 1 and keep the result whenever it is feasible.
//
// Accepted injections accumulate, so later steps re-solve the already
// modified model.

#ifndef MINTPLAN_HEURISTICS_H_
#define MINTPLAN_HEURISTICS_H_

#include <optional>
#include <string>
#include <vector>

#include "mintplan/bnb.h"
#include "mintplan/mip.h"
#include "mintplan/model.h"

namespace mintplan {

enum class HeuristicOrder { kProcedure2First, kProcedure1First };

struct PipelineOptions {
  bool procedure1 = false;
  bool procedure2 = false;
  HeuristicOrder order = HeuristicOrder::kProcedure2First;
  // Procedure 1 compares the full objective (cost - K) instead of cost.
  bool strict_objective = false;
  bool integerize = true;
  IntegerizeOptions integerize_options;
  BuildOptions build;
  BranchAndBoundOptions solver;
};

struct HeuristicStep {
  InjectedKind kind = InjectedKind::kForceBaseStriking;
  bool guard_fired = false;
  bool accepted = false;
  // Cost of the re-solved model; NaN when it was infeasible or not run.
  double resolved_cost = 0.0;
  double cost_delta = 0.0;
};

struct HeuristicOutcome {
  Solution solution;
  std::vector<InjectedConstraint> injected;
  std::vector<HeuristicStep> steps;
};

// `injected` describes the model `solution` was solved on.
HeuristicOutcome Procedure1(const Scenario& scenario, const MintConfig& config,
                            const Solution& solution,
                            const std::vector<InjectedConstraint>& injected,
                            const PipelineOptions& options);
HeuristicOutcome Procedure2(const Scenario& scenario, const MintConfig& config,
                            const Solution& solution,
                            const std::vector<InjectedConstraint>& injected,
                            const PipelineOptions& options);

// build -> SolveMip -> Integerize (when enabled). Empty when the model is
// infeasible or integer repair fails.
std::optional<Solution> SolveModel(const Scenario& scenario,
                                   const MintConfig& config,
                                   const std::vector<InjectedConstraint>& injected,
                                   const PipelineOptions& options);

struct PipelineResult {
  Solution solution;
  // The branch-and-bound solution before integer repair.
  Solution relaxed;
  IntegerizeStatus integerize_status = IntegerizeStatus::kUnchanged;
  double integerize_cost_delta = 0.0;
  std::vector<HeuristicStep> steps;
  std::vector<InjectedConstraint> injected;
  // Empty on success; otherwise why no solution was produced.
  std::string failure;
};

PipelineResult SolvePipeline(const Scenario& scenario, const MintConfig& config,
                             const PipelineOptions& options);

// Names the first constraint family the LP relaxation cannot satisfy, or
// explains that only the binary structure is infeasible.
std::string DiagnoseInfeasibility(const MintProblem& problem);

}  // namespace mintplan

#endif  // MINTPLAN_HEURISTICS_H_
