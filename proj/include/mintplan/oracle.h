// Exhaustive reference solver for small minting models, and the random
// instance family it is run on.

#ifndef MINTPLAN_ORACLE_H_
#define MINTPLAN_ORACLE_H_

#include <cstdint>

#include "mintplan/mip.h"
#include "mintplan/scenario_io.h"

namespace mintplan {

struct OracleResult {
  SolutionStatus status = SolutionStatus::kInfeasible;
  double objective = 0.0;
  double cost = 0.0;
  double k = 0.0;
  std::int64_t assignments = 0;
};

// Enumerates every 0/1 assignment of the binary columns, fixes it, maximizes
// K with the LP engine and keeps the best assignment under the problem's
// objective mode. Throws std::invalid_argument above `max_binaries`.
OracleResult ExhaustiveSolve(const MintProblem& problem, int max_binaries = 16);

struct InstanceShape {
  int quarters = 2;
  int denominations = 2;
  int blanking_levels = 2;
  int striking_levels = 2;
};

// Deterministic per (seed, shape). Instances are valid scenarios; demand
// ranges from comfortably inside base capacity to beyond the last level, so
// both feasible and infeasible instances occur.
ScenarioFile RandomInstance(std::uint64_t seed, const InstanceShape& shape);

}  // namespace mintplan

#endif  // MINTPLAN_ORACLE_H_
