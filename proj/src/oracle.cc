#include "mintplan/oracle.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "mintplan/lpsolve.h"

namespace mintplan {

OracleResult ExhaustiveSolve(const MintProblem& problem, int max_binaries) {
  const StandardFormProblem& lp = problem.lp;
  const std::vector<int> binaries = lp.BinaryColumns();
  const int count = static_cast<int>(binaries.size());
  if (count > max_binaries) {
    throw std::invalid_argument("too many binaries for exhaustive search");
  }
  const int k = problem.layout.k();
  StandardFormProblem maximize_k = lp;
  std::fill(maximize_k.objective.begin(), maximize_k.objective.end(), 0.0);
  maximize_k.objective[k] = -1.0;

  std::vector<double> lower(lp.num_columns()), upper(lp.num_columns());
  for (int j = 0; j < lp.num_columns(); ++j) {
    lower[j] = lp.columns[j].lower;
    upper[j] = lp.columns[j].upper;
  }
  OracleResult best;
  for (std::int64_t mask = 0; mask < (std::int64_t{1} << count); ++mask) {
    ++best.assignments;
    double cost = 0.0;
    for (int b = 0; b < count; ++b) {
      const double value = (mask >> b) & 1 ? 1.0 : 0.0;
      lower[binaries[b]] = upper[binaries[b]] = value;
      cost += lp.objective[binaries[b]] * value;
    }
    const LpResult result = SolveLp(maximize_k, lower, upper);
    if (result.status != LpStatus::kOptimal) continue;
    const double k_value = result.values[k];
    const double objective = cost - k_value;
    bool better;
    if (best.status != SolutionStatus::kOptimal) {
      better = true;
    } else if (problem.mode == ObjectiveMode::kSingle) {
      better = objective < best.objective - 1e-9;
    } else {
      better = cost < best.cost - 1e-9 ||
               (cost <= best.cost + 1e-9 && k_value > best.k + 1e-9);
    }
    if (better) {
      best.status = SolutionStatus::kOptimal;
      best.objective = objective;
      best.cost = cost;
      best.k = k_value;
    }
  }
  return best;
}

ScenarioFile RandomInstance(std::uint64_t seed, const InstanceShape& shape) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };
  auto round2 = [](double v) { return std::round(v * 100.0) / 100.0; };

  ScenarioFile file;
  Scenario& s = file.scenario;
  MintConfig& c = file.config;
  const int denoms = shape.denominations;
  s.horizon = shape.quarters;
  for (int d = 0; d < denoms; ++d) {
    CoinSpec spec;
    spec.id = "d" + std::to_string(d + 1);
    spec.alloy_weight = uniform(0, 1) < 0.3 ? 0.0 : round2(uniform(0.5, 3.0));
    spec.blanking_rate = round2(uniform(0.05, 0.25));
    s.coin_specs.push_back(spec);
  }

  auto ladder = [&](double base, int levels, std::vector<double>* breakpoints,
                    std::vector<double>* costs) {
    breakpoints->push_back(round2(base));
    double cost = 0.0;
    for (int i = 0; i < levels; ++i) {
      breakpoints->push_back(round2(breakpoints->back() + uniform(0.1, 0.3) * base));
      cost += round2(uniform(1.0, 15.0));
      costs->push_back(cost);
    }
  };
  const double z0 = uniform(40, 100);
  ladder(z0, shape.striking_levels, &c.striking_breakpoints, &c.striking_costs);
  double mean_rate = 0.0;
  double mean_weight = 0.0;
  for (const CoinSpec& spec : s.coin_specs) {
    mean_rate += spec.blanking_rate / denoms;
    mean_weight += spec.alloy_weight / denoms;
  }
  ladder(mean_rate * z0 * uniform(0.8, 1.2), shape.blanking_levels,
         &c.blanking_breakpoints, &c.blanking_costs);
  c.annealing_base = round2(std::max(1.0, mean_weight * z0 * uniform(0.8, 1.3)));
  c.annealing_max = round2(c.annealing_base * uniform(1.1, 1.4));
  c.annealing_cost = round2(uniform(1.0, 12.0));

  const double load = uniform(0.5, 1.4);
  double total_floor = 0.0;
  for (int t = 0; t < s.horizon; ++t) {
    std::vector<double> demand(denoms), floor(denoms);
    for (int d = 0; d < denoms; ++d) {
      demand[d] = round2(z0 * load / denoms * uniform(0.6, 1.4));
      floor[d] = round2(demand[d] * uniform(0.1, 0.5));
    }
    s.demand.push_back(demand);
    s.operating_floor.push_back(floor);
  }
  for (int d = 0; d < denoms; ++d) {
    s.initial_inventory.push_back(round2(s.operating_floor[0][d] * uniform(0.5, 2.0)));
    s.safety_min.push_back(round2(s.operating_floor.back()[d] * uniform(0.5, 1.5)));
    total_floor += s.operating_floor[0][d];
  }
  double initial_total = 0.0;
  for (double e : s.initial_inventory) initial_total += e;
  s.vault_cap = round2(std::max(initial_total, total_floor) + z0 * uniform(0.3, 1.2));
  return file;
}

}  // namespace mintplan
