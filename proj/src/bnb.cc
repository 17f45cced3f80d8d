#include "mintplan/bnb.h"

#include <algorithm>
#include <cmath>
#include <queue>

#include "mintplan/costs.h"

namespace mintplan {
namespace {

struct Node {
  double bound;
  std::int64_t sequence;
  // (column, value) fixings applied on top of the problem bounds.
  std::vector<std::pair<int, int>> fixings;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    return a.sequence > b.sequence;
  }
};

bool AllBinariesExact(const std::vector<int>& binaries,
                      const std::vector<double>& values) {
  for (int j : binaries) {
    if (values[j] != 0.0 && values[j] != 1.0) return false;
  }
  return true;
}

}  // namespace

NodeLimitExceeded::NodeLimitExceeded(std::int64_t limit)
    : std::runtime_error("branch-and-bound node limit " +
                         std::to_string(limit) + " exceeded") {}

MipResult BranchAndBound(const StandardFormProblem& problem,
                         const BranchAndBoundOptions& options) {
  const int n = problem.num_columns();
  const std::vector<int> binaries = problem.BinaryColumns();
  std::vector<double> base_lower(n), base_upper(n);
  for (int j = 0; j < n; ++j) {
    base_lower[j] = problem.columns[j].lower;
    base_upper[j] = problem.columns[j].upper;
  }
  auto rank = [&](int column) {
    return options.branch_rank.empty() ? column : options.branch_rank[column];
  };

  MipResult result;
  double incumbent = kInfinity;
  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  std::int64_t sequence = 0;
  open.push({-kInfinity, sequence++, {}});
  std::vector<double> lower, upper;

  while (!open.empty()) {
    Node node = open.top();
    open.pop();
    if (options.prune &&
        node.bound >= incumbent - options.incumbent_tolerance) {
      continue;
    }
    if (++result.stats.nodes > options.node_limit) {
      throw NodeLimitExceeded(options.node_limit);
    }
    lower = base_lower;
    upper = base_upper;
    for (const auto& [column, value] : node.fixings) {
      lower[column] = upper[column] = value;
    }
    LpResult lp = SolveLp(problem, lower, upper, options.lp);
    result.stats.lp_iterations += lp.iterations;
    if (lp.status == LpStatus::kUnbounded) {
      throw std::runtime_error("branch and bound: unbounded relaxation");
    }
    if (lp.status != LpStatus::kOptimal) continue;
    if (std::isfinite(node.bound) &&
        lp.objective <
            node.bound - 1e-7 * std::max(1.0, std::abs(node.bound))) {
      ++result.stats.bound_violations;
    }
    if (options.prune &&
        lp.objective >= incumbent - options.incumbent_tolerance) {
      continue;
    }

    int branch = -1;
    double best_fraction = 0.0;
    for (int j : binaries) {
      const double v = lp.values[j];
      const double fraction = std::min(v - std::floor(v), std::ceil(v) - v);
      if (fraction <= options.integrality_tolerance) continue;
      if (branch < 0 || fraction > best_fraction + 1e-12 ||
          (fraction >= best_fraction - 1e-12 && rank(j) < rank(branch))) {
        branch = j;
        best_fraction = fraction;
      }
    }

    if (branch < 0) {
      std::vector<double> values = std::move(lp.values);
      double objective = lp.objective;
      if (!AllBinariesExact(binaries, values)) {
        // Snap binaries and re-solve the continuous part against them.
        for (int j : binaries) {
          lower[j] = upper[j] = std::round(values[j]);
        }
        LpResult snapped = SolveLp(problem, lower, upper, options.lp);
        result.stats.lp_iterations += snapped.iterations;
        if (snapped.status != LpStatus::kOptimal) continue;
        values = std::move(snapped.values);
        objective = snapped.objective;
      }
      if (objective < incumbent) {
        incumbent = objective;
        result.status = MipStatus::kOptimal;
        result.objective = objective;
        result.values = std::move(values);
      }
      continue;
    }

    for (int value : {0, 1}) {
      Node child{lp.objective, sequence++, node.fixings};
      child.fixings.push_back({branch, value});
      open.push(std::move(child));
    }
  }
  return result;
}

std::vector<int> MintBranchRank(const ModelLayout& layout, int num_columns) {
  std::vector<int> rank(num_columns);
  for (int j = 0; j < num_columns; ++j) rank[j] = 1'000'000 + j;
  const int max_levels =
      std::max({layout.blanking_levels(), layout.striking_levels(), 1});
  const Process order[] = {Process::kStriking, Process::kBlanking,
                           Process::kAnnealing};
  for (int p = 0; p < 3; ++p) {
    for (int t = 0; t < layout.horizon(); ++t) {
      for (int level = 1; level <= layout.Levels(order[p]); ++level) {
        rank[layout.LevelColumn(t, order[p], level)] =
            (p * layout.horizon() + t) * max_levels + level;
      }
    }
  }
  return rank;
}

Solution SolutionFromValues(const MintProblem& problem,
                            const std::vector<double>& values) {
  const ModelLayout& layout = problem.layout;
  const Scenario& s = problem.scenario;
  Solution solution;
  solution.status = SolutionStatus::kOptimal;
  solution.plan.orders.assign(layout.horizon(),
                              std::vector<double>(layout.denominations()));
  for (int t = 0; t < layout.horizon(); ++t) {
    for (int d = 0; d < layout.denominations(); ++d) {
      solution.plan.orders[t][d] = values[layout.f(t, d)];
    }
  }
  solution.plan.inventory =
      RollInventory(s.initial_inventory, solution.plan.orders, s.demand);

  ShiftSelection from_binaries;
  for (int t = 0; t < layout.horizon(); ++t) {
    for (Process process : kAllProcesses) {
      int level = 0;
      for (int l = 1; l <= layout.Levels(process); ++l) {
        if (values[layout.LevelColumn(t, process, l)] > 0.5) level = l;
      }
      from_binaries.levels(process).push_back(level);
    }
  }
  try {
    solution.shifts = MinimalShifts(solution.plan, s.coin_specs,
                                    problem.config, s.disruptions);
  } catch (const CapacityExceeded&) {
    solution.shifts = from_binaries;
  }
  for (const LevelFloor& floor : problem.level_floors) {
    int& level = solution.shifts.levels(floor.process)[floor.quarter];
    level = std::max(level, floor.min_level);
  }
  solution.k = values[layout.k()];
  solution.cost = ShiftCost(solution.shifts, problem.config);
  solution.objective = solution.cost - solution.k;
  return solution;
}

Solution SolveMip(const MintProblem& problem,
                  const BranchAndBoundOptions& options,
                  BranchAndBoundStats* stats) {
  BranchAndBoundOptions opts = options;
  if (opts.branch_rank.empty()) {
    opts.branch_rank = MintBranchRank(problem.layout, problem.lp.num_columns());
  }
  BranchAndBoundStats total;
  auto accumulate = [&total](const BranchAndBoundStats& s) {
    total.nodes += s.nodes;
    total.lp_iterations += s.lp_iterations;
    total.bound_violations += s.bound_violations;
  };

  MipResult result;
  if (problem.mode == ObjectiveMode::kSingle) {
    result = BranchAndBound(problem.lp, opts);
    accumulate(result.stats);
  } else {
    const int k = problem.layout.k();
    StandardFormProblem cost_only = problem.lp;
    cost_only.objective[k] = 0.0;
    MipResult first = BranchAndBound(cost_only, opts);
    accumulate(first.stats);
    if (first.status == MipStatus::kOptimal) {
      StandardFormProblem k_only = problem.lp;
      Row cap{"lex_cost_cap", {}, Relation::kLessEqual,
              first.objective + opts.incumbent_tolerance};
      for (int j = 0; j < k_only.num_columns(); ++j) {
        if (j != k && k_only.objective[j] != 0.0) {
          cap.terms.push_back({j, k_only.objective[j]});
        }
        k_only.objective[j] = 0.0;
      }
      k_only.objective[k] = -1.0;
      k_only.AddRow(std::move(cap));
      result = BranchAndBound(k_only, opts);
      accumulate(result.stats);
      if (result.status != MipStatus::kOptimal) result = first;
    } else {
      result = first;
    }
  }
  if (stats != nullptr) *stats = total;

  if (result.status != MipStatus::kOptimal) {
    Solution infeasible;
    infeasible.status = SolutionStatus::kInfeasible;
    return infeasible;
  }
  return SolutionFromValues(problem, result.values);
}

}  // namespace mintplan
