#include "mintplan/heuristics.h"

#include <algorithm>
#include <cmath>

#include "mintplan/costs.h"
#include "mintplan/lpsolve.h"

namespace mintplan {
namespace {

constexpr double kCompareTolerance = 1e-6;

// How far below base a first-quarter usage must sit for Procedure 1 to act.
// With integer repair on, there must be room for at least one more unit.
double FillSlack(const Scenario& scenario, Process process,
                 const PipelineOptions& options) {
  if (!options.integerize) return kCompareTolerance;
  double unit = options.integerize_options.granularity;
  if (process == Process::kBlanking) {
    double rate = kInfinity;
    for (const CoinSpec& spec : scenario.coin_specs) {
      rate = std::min(rate, spec.blanking_rate);
    }
    unit *= rate;
  }
  return unit - kBoundaryTolerance;
}

struct Context {
  const Scenario& scenario;
  const MintConfig& config;
  const PipelineOptions& options;
  HeuristicOutcome outcome;

  double FirstQuarterUsage(Process process) const {
    return Usage(outcome.solution.plan.orders[0], scenario.coin_specs)
        .of(process);
  }
  double FirstQuarterBase(Process process) const {
    return EffectiveCapacity(config, scenario, 0, process)[0];
  }

  // Re-solves with `kind` added; `accept` decides on the candidate.
  template <typename Accept>
  void Step(InjectedKind kind, bool guard, Accept accept) {
    HeuristicStep step;
    step.kind = kind;
    step.guard_fired = guard;
    if (!guard) {
      step.resolved_cost = std::nan("");
      outcome.steps.push_back(step);
      return;
    }
    std::vector<InjectedConstraint> injected = outcome.injected;
    injected.push_back({kind, 0});
    const std::optional<Solution> candidate =
        SolveModel(scenario, config, injected, options);
    if (!candidate) {
      step.resolved_cost = std::nan("");
      outcome.steps.push_back(step);
      return;
    }
    step.resolved_cost = candidate->cost;
    step.cost_delta = candidate->cost - outcome.solution.cost;
    if (accept(*candidate)) {
      step.accepted = true;
      outcome.solution = *candidate;
      outcome.injected = std::move(injected);
    }
    outcome.steps.push_back(step);
  }
};

}  // namespace

std::optional<Solution> SolveModel(
    const Scenario& scenario, const MintConfig& config,
    const std::vector<InjectedConstraint>& injected,
    const PipelineOptions& options) {
  const MintProblem problem =
      Build(scenario, config, injected, {}, options.build);
  Solution solution = SolveMip(problem, options.solver);
  if (!solution.optimal()) return std::nullopt;
  if (!options.integerize) return solution;
  IntegerizeResult repaired = Integerize(
      solution, problem, options.integerize_options, options.solver);
  if (repaired.status == IntegerizeStatus::kRepairInfeasible) {
    return std::nullopt;
  }
  return repaired.solution;
}

HeuristicOutcome Procedure1(const Scenario& scenario, const MintConfig& config,
                            const Solution& solution,
                            const std::vector<InjectedConstraint>& injected,
                            const PipelineOptions& options) {
  Context ctx{scenario, config, options, {solution, injected, {}}};
  auto same_cost = [&](const Solution& candidate) {
    if (options.strict_objective) {
      return std::abs(candidate.objective - ctx.outcome.solution.objective) <=
             kCompareTolerance;
    }
    return std::abs(candidate.cost - ctx.outcome.solution.cost) <=
           kCompareTolerance;
  };
  ctx.Step(InjectedKind::kForceBaseStriking,
           ctx.FirstQuarterUsage(Process::kStriking) <
               ctx.FirstQuarterBase(Process::kStriking) -
                   FillSlack(scenario, Process::kStriking, options),
           same_cost);
  ctx.Step(InjectedKind::kForceBaseBlanking,
           ctx.FirstQuarterUsage(Process::kBlanking) <
               ctx.FirstQuarterBase(Process::kBlanking) -
                   FillSlack(scenario, Process::kBlanking, options),
           same_cost);
  return ctx.outcome;
}

HeuristicOutcome Procedure2(const Scenario& scenario, const MintConfig& config,
                            const Solution& solution,
                            const std::vector<InjectedConstraint>& injected,
                            const PipelineOptions& options) {
  Context ctx{scenario, config, options, {solution, injected, {}}};
  auto feasible = [](const Solution&) { return true; };
  const std::pair<Process, InjectedKind> steps[] = {
      {Process::kStriking, InjectedKind::kForbidExtraStriking},
      {Process::kBlanking, InjectedKind::kForbidExtraBlanking},
      {Process::kAnnealing, InjectedKind::kForbidExtraAnnealing},
  };
  for (const auto& [process, kind] : steps) {
    ctx.Step(kind,
             ctx.FirstQuarterUsage(process) >
                 ctx.FirstQuarterBase(process) + kCompareTolerance,
             feasible);
  }
  return ctx.outcome;
}

std::string DiagnoseInfeasibility(const MintProblem& problem) {
  const LpResult lp = SolveLp(problem.lp);
  if (lp.status == LpStatus::kInfeasible && !lp.infeasible_rows.empty()) {
    const std::string& label = problem.lp.rows[lp.infeasible_rows.front()].label;
    const char* family = "constraint";
    switch (ProvenanceEquation(label)) {
      case 6:
      case 7:
      case 9:
        family = "capacity";
        break;
      case 8:
      case 10:
        family = "shift level";
        break;
      case 11:
        family = "inventory balance";
        break;
      case 12:
        family = "safety minimum";
        break;
      case 13:
        family = "vault capacity";
        break;
      case 14:
        family = "operating floor";
        break;
      case 15:
      case 16:
        family = "injected";
        break;
    }
    return std::string(family) + " constraint family cannot be satisfied "
           "(first violated row: " + label + ")";
  }
  return "no shift-level assignment satisfies every constraint";
}

PipelineResult SolvePipeline(const Scenario& scenario, const MintConfig& config,
                             const PipelineOptions& options) {
  PipelineResult result;
  const MintProblem problem = Build(scenario, config, {}, {}, options.build);
  result.relaxed = SolveMip(problem, options.solver);
  if (!result.relaxed.optimal()) {
    result.solution = result.relaxed;
    result.failure = "infeasible: " + DiagnoseInfeasibility(problem);
    return result;
  }
  Solution current = result.relaxed;
  if (options.integerize) {
    IntegerizeResult repaired = Integerize(
        current, problem, options.integerize_options, options.solver);
    result.integerize_status = repaired.status;
    result.integerize_cost_delta = repaired.cost_delta;
    if (repaired.status == IntegerizeStatus::kRepairInfeasible) {
      result.solution = current;
      result.failure = "integer repair failed: " + repaired.detail;
      return result;
    }
    current = repaired.solution;
  }

  std::vector<InjectedConstraint> injected;
  auto run = [&](bool first) {
    HeuristicOutcome outcome =
        first ? Procedure1(scenario, config, current, injected, options)
              : Procedure2(scenario, config, current, injected, options);
    current = std::move(outcome.solution);
    injected = std::move(outcome.injected);
    result.steps.insert(result.steps.end(), outcome.steps.begin(),
                        outcome.steps.end());
  };
  const bool p1_first = options.order == HeuristicOrder::kProcedure1First;
  if (p1_first && options.procedure1) run(true);
  if (options.procedure2) run(false);
  if (!p1_first && options.procedure1) run(true);

  result.solution = std::move(current);
  result.injected = std::move(injected);
  return result;
}

}  // namespace mintplan
