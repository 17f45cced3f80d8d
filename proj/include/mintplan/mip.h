// Mixed-integer model of the minting problem.
//
//   minimize   sum_t sum_i C_i c_t^i + sum_t H h_t + sum_t sum_j A_j a_t^j - K
//   subject to, for every quarter t and denomination d,
//     (6)  W(f_t) <= y_0 + (y_1 - y_0) h_t
//     (7)  sum_d f_t^d <= z_0 + sum_j (z_j - z_0) a_t^j
//     (8)  sum_j a_t^j <= 1
//     (9)  D(f_t) <= x_0 + sum_i (x_i - x_0) c_t^i
//     (10) sum_i c_t^i <= 1
//     (11) E_t^d = E_{t-1}^d + f_t^d - P_t^d
//     (12) E_T^d >= IMIN^d K
//     (13) sum_d E_t^d <= IMAX
//     (14) E_t^d >= DEM_t^d
//
// With at most one level active, (7) and (9) give level j exactly the
// capacity z_j (x_i) that the step-cost functions charge for it.
//
// Breakpoints are disruption-scaled per quarter. Rows carry labels of the form
// "eqNN_<name>_t<q>[_d<d>]" with 1-based quarter and denomination numbers.
//
// K is bounded to [0, k_max]. When two distinct achievable cost totals can be
// closer than k_max, a single objective could trade cost for K; such problems
// are flagged lexicographic and SolveMip minimizes cost first and maximizes K
// second.

#ifndef MINTPLAN_MIP_H_
#define MINTPLAN_MIP_H_

#include <string>
#include <vector>

#include "mintplan/lp_problem.h"
#include "mintplan/model.h"

namespace mintplan {

// Column numbering of the model. Per quarter the binary block is
// c_t^1..c_t^nc, h_t, a_t^1..a_t^na.
class ModelLayout {
 public:
  ModelLayout() = default;
  ModelLayout(int horizon, int denominations, int blanking_levels,
              int striking_levels);

  int horizon() const { return horizon_; }
  int denominations() const { return denominations_; }
  int blanking_levels() const { return blanking_levels_; }
  int striking_levels() const { return striking_levels_; }

  int f(int t, int d) const { return t * denominations_ + d; }
  int e(int t, int d) const {
    return horizon_ * denominations_ + t * denominations_ + d;
  }
  // level in 1..nc
  int c(int t, int level) const { return BinaryBase(t) + level - 1; }
  int h(int t) const { return BinaryBase(t) + blanking_levels_; }
  // level in 1..na
  int a(int t, int level) const {
    return BinaryBase(t) + blanking_levels_ + level;
  }
  int k() const { return BinaryBase(horizon_); }
  int num_columns() const { return k() + 1; }
  // Rows before injection: 6T + 2TD + D.
  int num_base_rows() const {
    return 6 * horizon_ + 2 * horizon_ * denominations_ + denominations_;
  }
  // Column of the binary that selects `level` (>= 1) of `process` in `t`.
  int LevelColumn(int t, Process process, int level) const;
  int Levels(Process process) const;

 private:
  int BinaryBase(int t) const {
    return 2 * horizon_ * denominations_ +
           t * (blanking_levels_ + striking_levels_ + 1);
  }

  int horizon_ = 0;
  int denominations_ = 0;
  int blanking_levels_ = 0;
  int striking_levels_ = 0;
};

enum class InjectedKind {
  kForceBaseStriking,     // sum_d f_q^d = z_0
  kForceBaseBlanking,     // D(f_q) = x_0
  kForbidExtraStriking,   // sum_j a_q^j = 0
  kForbidExtraBlanking,   // sum_i c_q^i = 0
  kForbidExtraAnnealing,  // h_q = 0
};

std::string_view InjectedKindName(InjectedKind kind);
InjectedKind ParseInjectedKind(std::string_view name);

struct InjectedConstraint {
  InjectedKind kind = InjectedKind::kForceBaseStriking;
  int quarter = 0;

  bool operator==(const InjectedConstraint&) const = default;
};

// Requires `process` in `quarter` to run at `min_level` or above. Used when
// integer repair cannot fit inside the relaxed shift selection.
struct LevelFloor {
  int quarter = 0;
  Process process = Process::kStriking;
  int min_level = 1;

  bool operator==(const LevelFloor&) const = default;
};

enum class ObjectiveMode { kSingle, kLexicographic };

struct BuildOptions {
  double k_max = 2.0;
  // Forces the lexicographic mode regardless of the cost gap test.
  bool force_lexicographic = false;
};

struct MintProblem {
  StandardFormProblem lp;
  ModelLayout layout;
  Scenario scenario;
  MintConfig config;
  std::vector<InjectedConstraint> injected;
  std::vector<LevelFloor> level_floors;
  ObjectiveMode mode = ObjectiveMode::kSingle;
  BuildOptions options;
};

// Throws std::invalid_argument if the scenario or config is invalid.
MintProblem Build(const Scenario& scenario, const MintConfig& config,
                  const std::vector<InjectedConstraint>& injected = {},
                  const std::vector<LevelFloor>& level_floors = {},
                  const BuildOptions& options = {});

// Smallest positive difference between two distinct totals of per-quarter
// level costs over `horizon` quarters; +inf if every total is equal. Returns
// 0 if the enumeration would exceed `max_totals` values.
double MinimumCostGap(const MintConfig& config, int horizon,
                      std::size_t max_totals = 1'000'000);

// The equation number a row label refers to (6..16), or 0 for other rows.
int ProvenanceEquation(const std::string& label);

// Column values for `solution` (plan, shift levels, K).
std::vector<double> AssignmentFromSolution(const MintProblem& problem,
                                           const Solution& solution);

// Labels of violated rows of `problem`.
std::vector<std::string> CheckSolution(const MintProblem& problem,
                                       const std::vector<double>& assignment);
std::vector<std::string> CheckSolution(const MintProblem& problem,
                                       const Solution& solution);

// Cost part (objective without the K term) of a column assignment.
double CostComponent(const MintProblem& problem,
                     const std::vector<double>& values);

}  // namespace mintplan

#endif  // MINTPLAN_MIP_H_
