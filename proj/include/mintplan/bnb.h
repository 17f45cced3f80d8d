// Branch and bound over binary columns, the minting-model driver built on it,
// and the integer repair of coin quantities.

#ifndef MINTPLAN_BNB_H_
#define MINTPLAN_BNB_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mintplan/lp_problem.h"
#include "mintplan/lpsolve.h"
#include "mintplan/mip.h"
#include "mintplan/model.h"

namespace mintplan {

struct BranchAndBoundOptions {
  std::int64_t node_limit = 1'000'000;
  // When false every node is expanded until its relaxation is integral or
  // infeasible; only the final comparison picks the best leaf.
  bool prune = true;
  double incumbent_tolerance = 1e-6;
  double integrality_tolerance = 1e-6;
  // Tie-break among equally fractional binaries: lower rank first. Empty
  // means column order.
  std::vector<int> branch_rank;
  LpOptions lp;
};

struct BranchAndBoundStats {
  std::int64_t nodes = 0;
  std::int64_t lp_iterations = 0;
  // Children whose relaxation came out below their parent's bound. Always
  // zero for a correct LP engine.
  std::int64_t bound_violations = 0;
};

enum class MipStatus { kOptimal, kInfeasible };

struct MipResult {
  MipStatus status = MipStatus::kInfeasible;
  double objective = 0.0;
  std::vector<double> values;
  BranchAndBoundStats stats;
};

class NodeLimitExceeded : public std::runtime_error {
 public:
  explicit NodeLimitExceeded(std::int64_t limit);
};

// Best-first search, FIFO among equal bounds, branching on the most
// fractional binary.
MipResult BranchAndBound(const StandardFormProblem& problem,
                         const BranchAndBoundOptions& options = {});

// Branching order for the minting model: striking, then blanking, then
// annealing; earlier quarters and lower levels first within a process.
std::vector<int> MintBranchRank(const ModelLayout& layout, int num_columns);

// Solves `problem`, honouring its objective mode. The returned solution has
// inventories recomputed from the orders and shift levels normalized to the
// cheapest levels covering the orders (but never below a level floor).
Solution SolveMip(const MintProblem& problem,
                  const BranchAndBoundOptions& options = {},
                  BranchAndBoundStats* stats = nullptr);

// Builds a Solution from raw column values of `problem`.
Solution SolutionFromValues(const MintProblem& problem,
                            const std::vector<double>& values);

// --- Integer repair -------------------------------------------------------
//
// Orders are floored to multiples of `granularity`, inventories recomputed,
// and floors (operating floors and E_T >= IMIN K) restored by adding single
// units, largest deficit first, at the deficit's own quarter or the latest
// earlier quarter where the unit fits the selected shift levels and the
// vault. Injected equalities on quarter sums are then topped up as far as
// whole units allow. Safety-minimum deficits that cannot be produced lower K
// instead. When an operating floor cannot be restored, the blocking process
// is escalated one level through a LevelFloor and the model re-solved.

enum class IntegerizeStatus {
  kUnchanged,         // already integral
  kRepaired,          // same shift selection
  kEscalated,         // re-solved with higher levels; see cost_delta
  kRepairInfeasible,  // no integral plan found; solution is the input
};

std::string_view IntegerizeStatusName(IntegerizeStatus status);

struct IntegerizeOptions {
  double granularity = 1.0;
  int max_escalations = 16;
};

struct IntegerizeResult {
  Solution solution;
  IntegerizeStatus status = IntegerizeStatus::kUnchanged;
  double cost_delta = 0.0;
  std::vector<LevelFloor> escalations;
  std::string detail;
};

IntegerizeResult Integerize(const Solution& solution,
                            const MintProblem& problem,
                            const IntegerizeOptions& options = {},
                            const BranchAndBoundOptions& solver = {});
IntegerizeResult Integerize(const Solution& solution, const Scenario& scenario,
                            const MintConfig& config,
                            const IntegerizeOptions& options = {});

}  // namespace mintplan

#endif  // MINTPLAN_BNB_H_
