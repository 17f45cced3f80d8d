#include <algorithm>
#include <cmath>
#include <cstdio>

#include "mintplan/bnb.h"
#include "mintplan/costs.h"

namespace mintplan {
namespace {

constexpr double kSnapTolerance = 1e-6;
constexpr double kFloorTolerance = 1e-9;

class Repair {
 public:
  Repair(const Solution& solution, const MintProblem& problem,
         double granularity)
      : solution_(solution),
        s_(problem.scenario),
        g_(granularity),
        horizon_(s_.horizon),
        denoms_(s_.denominations()) {
    for (int t = 0; t < horizon_; ++t) {
      std::vector<double> cap(3);
      for (Process process : kAllProcesses) {
        const std::vector<double> bp =
            EffectiveCapacity(problem.config, s_, t, process);
        cap[static_cast<int>(process)] =
            bp[solution.shifts.levels(process)[t]];
      }
      caps_.push_back(cap);
    }
    units_.assign(horizon_, std::vector<long long>(denoms_, 0));
    integral_ = true;
    for (int t = 0; t < horizon_; ++t) {
      for (int d = 0; d < denoms_; ++d) {
        const double q = solution.plan.orders[t][d] / g_;
        const double r = std::round(q);
        if (std::abs(q - r) <= kSnapTolerance) {
          units_[t][d] = static_cast<long long>(r);
        } else {
          units_[t][d] = static_cast<long long>(std::floor(q));
          integral_ = false;
        }
      }
    }
    Refresh();
  }

  bool integral() const { return integral_; }

  // Which of the quarter-`t` limits adding one unit of `d` would break.
  struct Block {
    bool vault = false;
    bool process[3] = {false, false, false};
    bool any() const { return vault || process[0] || process[1] || process[2]; }
  };

  Block Check(int t, int d) const {
    Block block;
    std::vector<double> order = Orders()[t];
    order[d] += g_;
    const ResourceUsage usage = Usage(order, s_.coin_specs);
    for (Process process : kAllProcesses) {
      const int p = static_cast<int>(process);
      if (usage.of(process) > caps_[t][p] + kFloorTolerance) {
        block.process[p] = true;
      }
    }
    for (int u = t; u < horizon_; ++u) {
      double total = 0.0;
      for (int e = 0; e < denoms_; ++e) total += inventory_[u][e];
      if (total + g_ > s_.vault_cap + kFloorTolerance) block.vault = true;
    }
    return block;
  }

  void Add(int t, int d) {
    ++units_[t][d];
    ++additions_;
    Refresh();
  }

  int additions() const { return additions_; }

  Matrix Orders() const {
    Matrix orders(horizon_, std::vector<double>(denoms_));
    for (int t = 0; t < horizon_; ++t) {
      for (int d = 0; d < denoms_; ++d) orders[t][d] = units_[t][d] * g_;
    }
    return orders;
  }

  const Matrix& inventory() const { return inventory_; }

  double Remainder(int t, int d) const {
    return solution_.plan.orders[t][d] - units_[t][d] * g_;
  }

 private:
  void Refresh() {
    inventory_ = RollInventory(s_.initial_inventory, Orders(), s_.demand);
  }

  const Solution& solution_;
  const Scenario& s_;
  double g_;
  int horizon_;
  int denoms_;
  std::vector<std::vector<double>> caps_;
  std::vector<std::vector<long long>> units_;
  Matrix inventory_;
  bool integral_ = true;
  int additions_ = 0;
};

IntegerizeResult Fail(const Solution& solution, std::string detail) {
  IntegerizeResult result;
  result.solution = solution;
  result.status = IntegerizeStatus::kRepairInfeasible;
  result.detail = std::move(detail);
  return result;
}

IntegerizeResult Run(const Solution& solution, const MintProblem& problem,
                     const IntegerizeOptions& options,
                     const BranchAndBoundOptions& solver, int depth) {
  const Scenario& s = problem.scenario;
  const int horizon = s.horizon;
  const int denoms = s.denominations();
  Repair repair(solution, problem, options.granularity);
  const bool was_integral = repair.integral();
  double k = solution.k;
  std::vector<bool> k_blocked(denoms, false);

  while (true) {
    const Matrix& inv = repair.inventory();
    int worst_t = -1;
    int worst_d = -1;
    double worst = kFloorTolerance;
    bool worst_is_floor = false;
    for (int t = 0; t < horizon; ++t) {
      for (int d = 0; d < denoms; ++d) {
        const double floor_gap = s.operating_floor[t][d] - inv[t][d];
        double deficit = floor_gap;
        if (t == horizon - 1 && !k_blocked[d]) {
          deficit = std::max(deficit, s.safety_min[d] * k - inv[t][d]);
        }
        if (deficit > worst) {
          worst = deficit;
          worst_t = t;
          worst_d = d;
          worst_is_floor = floor_gap > kFloorTolerance;
        }
      }
    }
    if (worst_t < 0) break;

    bool placed = false;
    for (int u = worst_t; u >= 0 && !placed; --u) {
      if (!repair.Check(u, worst_d).any()) {
        repair.Add(u, worst_d);
        placed = true;
      }
    }
    if (placed) continue;
    if (!worst_is_floor) {
      k_blocked[worst_d] = true;
      continue;
    }

    // Escalate the first process blocking an otherwise vault-feasible unit.
    const Process order[] = {Process::kStriking, Process::kBlanking,
                             Process::kAnnealing};
    for (int u = worst_t; u >= 0; --u) {
      const Repair::Block block = repair.Check(u, worst_d);
      if (block.vault) continue;
      for (Process process : order) {
        const int level = solution.shifts.levels(process)[u];
        if (!block.process[static_cast<int>(process)] ||
            level >= problem.layout.Levels(process)) {
          continue;
        }
        if (depth >= options.max_escalations) {
          return Fail(solution, "escalation limit reached");
        }
        const LevelFloor floor{u, process, level + 1};
        std::vector<LevelFloor> floors = problem.level_floors;
        floors.push_back(floor);
        const MintProblem escalated =
            Build(s, problem.config, problem.injected, floors, problem.options);
        const Solution resolved = SolveMip(escalated, solver);
        if (!resolved.optimal()) {
          char buffer[160];
          std::snprintf(buffer, sizeof(buffer),
                        "escalating %s in quarter %d is infeasible",
                        std::string(ProcessName(process)).c_str(), u);
          return Fail(solution, buffer);
        }
        IntegerizeResult result =
            Run(resolved, escalated, options, solver, depth + 1);
        if (result.status == IntegerizeStatus::kRepairInfeasible) {
          return Fail(solution, result.detail);
        }
        result.escalations.insert(result.escalations.begin(), floor);
        result.status = IntegerizeStatus::kEscalated;
        result.cost_delta = result.solution.cost - solution.cost;
        return result;
      }
    }
    char buffer[160];
    std::snprintf(buffer, sizeof(buffer),
                  "operating floor of denomination %d in quarter %d cannot "
                  "be restored",
                  worst_d, worst_t);
    return Fail(solution, buffer);
  }

  // Keep injected base-capacity equalities as tight as whole units allow.
  for (const InjectedConstraint& inj : problem.injected) {
    if (inj.kind != InjectedKind::kForceBaseStriking &&
        inj.kind != InjectedKind::kForceBaseBlanking) {
      continue;
    }
    const int t = inj.quarter;
    const bool striking = inj.kind == InjectedKind::kForceBaseStriking;
    const double target =
        EffectiveCapacity(problem.config, s,
                          t, striking ? Process::kStriking
                                      : Process::kBlanking)[0];
    while (true) {
      const ResourceUsage usage = Usage(repair.Orders()[t], s.coin_specs);
      int best = -1;
      for (int d = 0; d < denoms; ++d) {
        const double step = options.granularity *
                            (striking ? 1.0 : s.coin_specs[d].blanking_rate);
        const double current =
            striking ? usage.striking_count : usage.blanking_days;
        if (current + step > target + kFloorTolerance) continue;
        if (repair.Check(t, d).any()) continue;
        if (best < 0 || repair.Remainder(t, d) > repair.Remainder(t, best)) {
          best = d;
        }
      }
      if (best < 0) break;
      repair.Add(t, best);
    }
  }

  for (int d = 0; d < denoms; ++d) {
    if (s.safety_min[d] > 0) {
      k = std::min(k, repair.inventory()[horizon - 1][d] / s.safety_min[d]);
    }
  }
  k = std::max(k, 0.0);

  IntegerizeResult result;
  result.solution = solution;
  result.solution.plan.orders = repair.Orders();
  result.solution.plan.inventory = repair.inventory();
  result.solution.k = k;
  result.solution.objective = result.solution.cost - k;
  result.status = (was_integral && repair.additions() == 0 && k == solution.k)
                      ? IntegerizeStatus::kUnchanged
                      : IntegerizeStatus::kRepaired;
  return result;
}

}  // namespace

std::string_view IntegerizeStatusName(IntegerizeStatus status) {
  switch (status) {
    case IntegerizeStatus::kUnchanged:
      return "unchanged";
    case IntegerizeStatus::kRepaired:
      return "repaired";
    case IntegerizeStatus::kEscalated:
      return "escalated";
    case IntegerizeStatus::kRepairInfeasible:
      return "repair-infeasible";
  }
  return "unknown";
}

IntegerizeResult Integerize(const Solution& solution,
                            const MintProblem& problem,
                            const IntegerizeOptions& options,
                            const BranchAndBoundOptions& solver) {
  if (!solution.optimal()) {
    throw std::invalid_argument("integerize needs an optimal relaxation");
  }
  if (!(options.granularity > 0)) {
    throw std::invalid_argument("granularity must be positive");
  }
  return Run(solution, problem, options, solver, 0);
}

IntegerizeResult Integerize(const Solution& solution, const Scenario& scenario,
                            const MintConfig& config,
                            const IntegerizeOptions& options) {
  return Integerize(solution, Build(scenario, config), options);
}

}  // namespace mintplan
