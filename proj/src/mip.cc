#include "mintplan/mip.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "mintplan/costs.h"

namespace mintplan {
namespace {

std::string Label(const char* fmt, auto... args) {
  char buffer[96];
  std::snprintf(buffer, sizeof(buffer), fmt, args...);
  return buffer;
}

// Sorted values with near-duplicates (within 1e-9) merged.
void SortUnique(std::vector<double>* values) {
  std::sort(values->begin(), values->end());
  std::vector<double> out;
  for (double v : *values) {
    if (out.empty() || v - out.back() > 1e-9) out.push_back(v);
  }
  *values = std::move(out);
}

}  // namespace

ModelLayout::ModelLayout(int horizon, int denominations, int blanking_levels,
                         int striking_levels)
    : horizon_(horizon),
      denominations_(denominations),
      blanking_levels_(blanking_levels),
      striking_levels_(striking_levels) {}

int ModelLayout::LevelColumn(int t, Process process, int level) const {
  switch (process) {
    case Process::kBlanking:
      return c(t, level);
    case Process::kAnnealing:
      return h(t);
    case Process::kStriking:
      break;
  }
  return a(t, level);
}

int ModelLayout::Levels(Process process) const {
  switch (process) {
    case Process::kBlanking:
      return blanking_levels_;
    case Process::kAnnealing:
      return 1;
    case Process::kStriking:
      break;
  }
  return striking_levels_;
}

std::string_view InjectedKindName(InjectedKind kind) {
  switch (kind) {
    case InjectedKind::kForceBaseStriking:
      return "force_base_striking";
    case InjectedKind::kForceBaseBlanking:
      return "force_base_blanking";
    case InjectedKind::kForbidExtraStriking:
      return "forbid_extra_striking";
    case InjectedKind::kForbidExtraBlanking:
      return "forbid_extra_blanking";
    case InjectedKind::kForbidExtraAnnealing:
      return "forbid_extra_annealing";
  }
  return "unknown";
}

InjectedKind ParseInjectedKind(std::string_view name) {
  for (InjectedKind kind :
       {InjectedKind::kForceBaseStriking, InjectedKind::kForceBaseBlanking,
        InjectedKind::kForbidExtraStriking, InjectedKind::kForbidExtraBlanking,
        InjectedKind::kForbidExtraAnnealing}) {
    if (InjectedKindName(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown injected constraint '" +
                              std::string(name) + "'");
}

double MinimumCostGap(const MintConfig& config, int horizon,
                      std::size_t max_totals) {
  std::vector<double> quarter;
  std::vector<double> blanking = {0.0};
  for (double c : config.blanking_costs) blanking.push_back(c);
  std::vector<double> striking = {0.0};
  for (double a : config.striking_costs) striking.push_back(a);
  for (double b : blanking) {
    for (double h : {0.0, config.annealing_cost}) {
      for (double s : striking) quarter.push_back(b + h + s);
    }
  }
  SortUnique(&quarter);
  std::vector<double> totals = {0.0};
  for (int t = 0; t < horizon; ++t) {
    std::vector<double> next;
    next.reserve(totals.size() * quarter.size());
    for (double a : totals) {
      for (double q : quarter) next.push_back(a + q);
    }
    SortUnique(&next);
    if (next.size() > max_totals) return 0.0;
    totals = std::move(next);
  }
  double gap = kInfinity;
  for (std::size_t i = 1; i < totals.size(); ++i) {
    gap = std::min(gap, totals[i] - totals[i - 1]);
  }
  return gap;
}

MintProblem Build(const Scenario& scenario, const MintConfig& config,
                  const std::vector<InjectedConstraint>& injected,
                  const std::vector<LevelFloor>& level_floors,
                  const BuildOptions& options) {
  std::vector<std::string> violations = ValidateConfig(config);
  for (std::string& v : ValidateScenario(scenario)) {
    violations.push_back(std::move(v));
  }
  if (!violations.empty()) {
    throw std::invalid_argument("cannot build model: " + violations.front());
  }

  MintProblem out;
  out.scenario = scenario;
  out.config = config;
  out.injected = injected;
  out.level_floors = level_floors;
  out.options = options;
  const int horizon = scenario.horizon;
  const int denoms = scenario.denominations();
  const int nc = config.blanking_levels();
  const int na = config.striking_levels();
  out.layout = ModelLayout(horizon, denoms, nc, na);
  const ModelLayout& layout = out.layout;
  StandardFormProblem& lp = out.lp;

  std::vector<std::vector<double>> x(horizon), y(horizon), z(horizon);
  for (int t = 0; t < horizon; ++t) {
    x[t] = EffectiveCapacity(config, scenario, t, Process::kBlanking);
    y[t] = EffectiveCapacity(config, scenario, t, Process::kAnnealing);
    z[t] = EffectiveCapacity(config, scenario, t, Process::kStriking);
  }

  // Columns, in layout order.
  for (int t = 0; t < horizon; ++t) {
    for (int d = 0; d < denoms; ++d) {
      const CoinSpec& spec = scenario.coin_specs[d];
      double upper = std::min(z[t].back(), x[t].back() / spec.blanking_rate);
      if (spec.alloy_weight > 0) {
        upper = std::min(upper, y[t].back() / spec.alloy_weight);
      }
      lp.AddColumn({Label("f_%d_%d", t + 1, d + 1), 0.0, upper, false});
    }
  }
  for (int t = 0; t < horizon; ++t) {
    for (int d = 0; d < denoms; ++d) {
      lp.AddColumn(
          {Label("E_%d_%d", t + 1, d + 1), 0.0, scenario.vault_cap, false});
    }
  }
  for (int t = 0; t < horizon; ++t) {
    for (int i = 1; i <= nc; ++i) {
      lp.AddColumn({Label("c_%d_%d", t + 1, i), 0.0, 1.0, true},
                   config.blanking_costs[i - 1]);
    }
    lp.AddColumn({Label("h_%d", t + 1), 0.0, 1.0, true},
                 config.annealing_cost);
    for (int j = 1; j <= na; ++j) {
      lp.AddColumn({Label("a_%d_%d", t + 1, j), 0.0, 1.0, true},
                   config.striking_costs[j - 1]);
    }
  }
  lp.AddColumn({"K", 0.0, options.k_max, false}, -1.0);

  for (int t = 0; t < horizon; ++t) {
    const int q = t + 1;
    Row annealing{Label("eq06_annealing_t%d", q), {}, Relation::kLessEqual,
                  y[t][0]};
    for (int d = 0; d < denoms; ++d) {
      annealing.terms.push_back(
          {layout.f(t, d), scenario.coin_specs[d].alloy_weight});
    }
    annealing.terms.push_back({layout.h(t), -(y[t][1] - y[t][0])});
    lp.AddRow(std::move(annealing));

    Row striking{Label("eq07_striking_t%d", q), {}, Relation::kLessEqual,
                 z[t][0]};
    for (int d = 0; d < denoms; ++d) striking.terms.push_back({layout.f(t, d), 1.0});
    for (int j = 1; j <= na; ++j) {
      striking.terms.push_back({layout.a(t, j), -(z[t][j] - z[t][0])});
    }
    lp.AddRow(std::move(striking));

    Row striking_one{Label("eq08_striking_level_t%d", q), {},
                     Relation::kLessEqual, 1.0};
    for (int j = 1; j <= na; ++j) striking_one.terms.push_back({layout.a(t, j), 1.0});
    lp.AddRow(std::move(striking_one));

    Row blanking{Label("eq09_blanking_t%d", q), {}, Relation::kLessEqual,
                 x[t][0]};
    for (int d = 0; d < denoms; ++d) {
      blanking.terms.push_back(
          {layout.f(t, d), scenario.coin_specs[d].blanking_rate});
    }
    for (int i = 1; i <= nc; ++i) {
      blanking.terms.push_back({layout.c(t, i), -(x[t][i] - x[t][0])});
    }
    lp.AddRow(std::move(blanking));

    Row blanking_one{Label("eq10_blanking_level_t%d", q), {},
                     Relation::kLessEqual, 1.0};
    for (int i = 1; i <= nc; ++i) blanking_one.terms.push_back({layout.c(t, i), 1.0});
    lp.AddRow(std::move(blanking_one));
  }

  for (int t = 0; t < horizon; ++t) {
    for (int d = 0; d < denoms; ++d) {
      Row inventory{Label("eq11_inventory_t%d_d%d", t + 1, d + 1),
                    {{layout.e(t, d), 1.0}, {layout.f(t, d), -1.0}},
                    Relation::kEqual,
                    -scenario.demand[t][d]};
      if (t == 0) {
        inventory.rhs += scenario.initial_inventory[d];
      } else {
        inventory.terms.push_back({layout.e(t - 1, d), -1.0});
      }
      lp.AddRow(std::move(inventory));
    }
  }

  for (int d = 0; d < denoms; ++d) {
    lp.AddRow({Label("eq12_safety_min_d%d", d + 1),
               {{layout.e(horizon - 1, d), 1.0},
                {layout.k(), -scenario.safety_min[d]}},
               Relation::kGreaterEqual,
               0.0});
  }

  for (int t = 0; t < horizon; ++t) {
    Row vault{Label("eq13_vault_t%d", t + 1), {}, Relation::kLessEqual,
              scenario.vault_cap};
    for (int d = 0; d < denoms; ++d) vault.terms.push_back({layout.e(t, d), 1.0});
    lp.AddRow(std::move(vault));
  }

  for (int t = 0; t < horizon; ++t) {
    for (int d = 0; d < denoms; ++d) {
      lp.AddRow({Label("eq14_floor_t%d_d%d", t + 1, d + 1),
                 {{layout.e(t, d), 1.0}},
                 Relation::kGreaterEqual,
                 scenario.operating_floor[t][d]});
    }
  }

  for (const InjectedConstraint& inj : injected) {
    const int t = inj.quarter;
    if (t < 0 || t >= horizon) {
      throw std::invalid_argument("injected constraint outside horizon");
    }
    Row row;
    row.relation = Relation::kEqual;
    switch (inj.kind) {
      case InjectedKind::kForceBaseStriking:
        row.label = Label("eq15_force_base_striking_t%d", t + 1);
        for (int d = 0; d < denoms; ++d) row.terms.push_back({layout.f(t, d), 1.0});
        row.rhs = z[t][0];
        break;
      case InjectedKind::kForceBaseBlanking:
        row.label = Label("eq15_force_base_blanking_t%d", t + 1);
        for (int d = 0; d < denoms; ++d) {
          row.terms.push_back(
              {layout.f(t, d), scenario.coin_specs[d].blanking_rate});
        }
        row.rhs = x[t][0];
        break;
      case InjectedKind::kForbidExtraStriking:
        row.label = Label("eq16_forbid_extra_striking_t%d", t + 1);
        for (int j = 1; j <= na; ++j) row.terms.push_back({layout.a(t, j), 1.0});
        break;
      case InjectedKind::kForbidExtraBlanking:
        row.label = Label("eq16_forbid_extra_blanking_t%d", t + 1);
        for (int i = 1; i <= nc; ++i) row.terms.push_back({layout.c(t, i), 1.0});
        break;
      case InjectedKind::kForbidExtraAnnealing:
        row.label = Label("eq16_forbid_extra_annealing_t%d", t + 1);
        row.terms.push_back({layout.h(t), 1.0});
        break;
    }
    lp.AddRow(std::move(row));
  }

  for (const LevelFloor& floor : level_floors) {
    const int levels = layout.Levels(floor.process);
    if (floor.quarter < 0 || floor.quarter >= horizon || floor.min_level < 1 ||
        floor.min_level > levels) {
      throw std::invalid_argument("level floor outside the model");
    }
    Row row{Label("level_floor_%s_t%d_l%d",
                  std::string(ProcessName(floor.process)).c_str(),
                  floor.quarter + 1, floor.min_level),
            {},
            Relation::kGreaterEqual,
            1.0};
    for (int level = floor.min_level; level <= levels; ++level) {
      row.terms.push_back(
          {layout.LevelColumn(floor.quarter, floor.process, level), 1.0});
    }
    lp.AddRow(std::move(row));
  }

  const bool gap_ok = MinimumCostGap(config, horizon) > options.k_max;
  out.mode = (options.force_lexicographic || !gap_ok)
                 ? ObjectiveMode::kLexicographic
                 : ObjectiveMode::kSingle;
  return out;
}

int ProvenanceEquation(const std::string& label) {
  if (label.size() < 5 || label.compare(0, 2, "eq") != 0) return 0;
  if (label[2] < '0' || label[2] > '9' || label[3] < '0' || label[3] > '9' ||
      label[4] != '_') {
    return 0;
  }
  const int eq = (label[2] - '0') * 10 + (label[3] - '0');
  return (eq >= 6 && eq <= 16) ? eq : 0;
}

std::vector<double> AssignmentFromSolution(const MintProblem& problem,
                                           const Solution& solution) {
  const ModelLayout& layout = problem.layout;
  std::vector<double> values(layout.num_columns(), 0.0);
  for (int t = 0; t < layout.horizon(); ++t) {
    for (int d = 0; d < layout.denominations(); ++d) {
      values[layout.f(t, d)] = solution.plan.orders[t][d];
      values[layout.e(t, d)] = solution.plan.inventory[t][d];
    }
    for (Process process : kAllProcesses) {
      const int level = solution.shifts.levels(process)[t];
      if (level > 0) values[layout.LevelColumn(t, process, level)] = 1.0;
    }
  }
  values[layout.k()] = solution.k;
  return values;
}

std::vector<std::string> CheckSolution(const MintProblem& problem,
                                       const std::vector<double>& assignment) {
  return CheckAssignment(problem.lp, assignment);
}

std::vector<std::string> CheckSolution(const MintProblem& problem,
                                       const Solution& solution) {
  return CheckAssignment(problem.lp,
                         AssignmentFromSolution(problem, solution));
}

double CostComponent(const MintProblem& problem,
                     const std::vector<double>& values) {
  double cost = 0.0;
  for (int j = 0; j < problem.lp.num_columns(); ++j) {
    if (j == problem.layout.k()) continue;
    cost += problem.lp.objective[j] * values[j];
  }
  return cost;
}

}  // namespace mintplan
