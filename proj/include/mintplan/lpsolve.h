// Dense bounded-variable primal simplex.
//
// Every row gets a slack (fixed at zero for equalities) and an artificial
// variable. Phase 1 minimizes the sum of artificials from the all-lower-bound
// point; phase 2 fixes the artificials at zero and optimizes the real
// objective. Entering and leaving choices follow Bland's rule throughout, so
// the method terminates on degenerate problems.
//
// Binary flags are ignored: binaries are solved as their [0, 1] bounds.
// Every column needs a finite lower bound; upper bounds may be infinite.

#ifndef MINTPLAN_LPSOLVE_H_
#define MINTPLAN_LPSOLVE_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "mintplan/lp_problem.h"

namespace mintplan {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpOptions {
  double pivot_tolerance = 1e-9;
  double feasibility_tolerance = 1e-7;
  double optimality_tolerance = 1e-9;
  // 0 selects 50 * (rows + columns).
  std::int64_t iteration_limit = 0;
};

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;
  // One value per problem column; meaningful when status is kOptimal.
  std::vector<double> values;
  // Internal variable basic in each row. Variables 0..n-1 are the columns,
  // n..n+m-1 the row slacks and n+m..n+2m-1 the artificials.
  std::vector<int> basis;
  // Rows still carrying a positive artificial at the end of phase 1.
  std::vector<int> infeasible_rows;
  std::int64_t iterations = 0;
};

class IterationLimitExceeded : public std::runtime_error {
 public:
  explicit IterationLimitExceeded(std::int64_t limit);
};

LpResult SolveLp(const StandardFormProblem& problem,
                 const LpOptions& options = {});

// Solves with the column bounds replaced by `lower` / `upper`.
LpResult SolveLp(const StandardFormProblem& problem,
                 std::span<const double> lower, std::span<const double> upper,
                 const LpOptions& options = {});

}  // namespace mintplan

#endif  // MINTPLAN_LPSOLVE_H_
