#include "mintplan/lpsolve.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace mintplan {
namespace {

class Simplex {
 public:
  Simplex(const StandardFormProblem& problem, std::span<const double> lower,
          std::span<const double> upper, const LpOptions& options);

  LpResult Run();

 private:
  enum class Outcome { kOptimal, kUnbounded };

  double& At(int row, int var) { return tab_[row * width_ + var]; }
  int Slack(int row) const { return n_ + row; }
  int Artificial(int row) const { return n_ + m_ + row; }

  void ComputeReducedCosts();
  Outcome Optimize();
  void Pivot(int row, int var);
  void RecomputeBasicValues();

  const StandardFormProblem& problem_;
  LpOptions options_;
  int m_;
  int n_;
  int width_;
  std::vector<double> tab_;
  std::vector<double> lo_;
  std::vector<double> up_;
  std::vector<double> x_;
  std::vector<bool> at_upper_;
  std::vector<double> cost_;
  std::vector<double> reduced_;
  std::vector<int> basis_;
  std::vector<int> row_of_;
  std::vector<double> art_sign_;
  std::vector<double> slack_sign_;
  std::int64_t iterations_ = 0;
  std::int64_t limit_;
};

Simplex::Simplex(const StandardFormProblem& problem,
                 std::span<const double> lower, std::span<const double> upper,
                 const LpOptions& options)
    : problem_(problem),
      options_(options),
      m_(problem.num_rows()),
      n_(problem.num_columns()),
      width_(n_ + 2 * m_) {
  limit_ = options.iteration_limit > 0
               ? options.iteration_limit
               : 50 * static_cast<std::int64_t>(m_ + n_);
  tab_.assign(static_cast<std::size_t>(m_) * width_, 0.0);
  lo_.assign(width_, 0.0);
  up_.assign(width_, kInfinity);
  x_.assign(width_, 0.0);
  at_upper_.assign(width_, false);
  row_of_.assign(width_, -1);
  basis_.assign(m_, -1);
  art_sign_.assign(m_, 1.0);
  slack_sign_.assign(m_, 0.0);

  for (int j = 0; j < n_; ++j) {
    lo_[j] = lower[j];
    up_[j] = upper[j];
    if (!std::isfinite(lo_[j])) {
      throw std::invalid_argument("column '" + problem.columns[j].name +
                                  "' needs a finite lower bound");
    }
    x_[j] = lo_[j];
  }
  for (int i = 0; i < m_; ++i) {
    const Row& row = problem.rows[i];
    double residual = row.rhs;
    for (const auto& [column, coefficient] : row.terms) {
      residual -= coefficient * x_[column];
    }
    switch (row.relation) {
      case Relation::kLessEqual:
        slack_sign_[i] = 1.0;
        break;
      case Relation::kGreaterEqual:
        slack_sign_[i] = -1.0;
        break;
      case Relation::kEqual:
        slack_sign_[i] = 1.0;
        up_[Slack(i)] = 0.0;
        break;
    }
    const double sign = residual >= 0 ? 1.0 : -1.0;
    art_sign_[i] = sign;
    for (const auto& [column, coefficient] : row.terms) {
      At(i, column) = sign * coefficient;
    }
    At(i, Slack(i)) = sign * slack_sign_[i];
    At(i, Artificial(i)) = 1.0;
    basis_[i] = Artificial(i);
    row_of_[Artificial(i)] = i;
    x_[Artificial(i)] = std::abs(residual);
  }
}

void Simplex::ComputeReducedCosts() {
  reduced_ = cost_;
  for (int i = 0; i < m_; ++i) {
    const double cb = cost_[basis_[i]];
    if (cb == 0.0) continue;
    const double* row = &tab_[i * width_];
    for (int j = 0; j < width_; ++j) reduced_[j] -= cb * row[j];
  }
}

void Simplex::Pivot(int row, int var) {
  double* pivot_row = &tab_[row * width_];
  const double inv = 1.0 / pivot_row[var];
  for (int j = 0; j < width_; ++j) pivot_row[j] *= inv;
  pivot_row[var] = 1.0;
  for (int i = 0; i < m_; ++i) {
    if (i == row) continue;
    double* target = &tab_[i * width_];
    const double factor = target[var];
    if (factor == 0.0) continue;
    for (int j = 0; j < width_; ++j) {
      if (pivot_row[j] != 0.0) target[j] -= factor * pivot_row[j];
    }
    target[var] = 0.0;
  }
  const double factor = reduced_[var];
  if (factor != 0.0) {
    for (int j = 0; j < width_; ++j) reduced_[j] -= factor * pivot_row[j];
    reduced_[var] = 0.0;
  }
}

Simplex::Outcome Simplex::Optimize() {
  ComputeReducedCosts();
  const double tol = options_.optimality_tolerance;
  const double piv = options_.pivot_tolerance;
  while (true) {
    int entering = -1;
    for (int j = 0; j < width_; ++j) {
      if (row_of_[j] >= 0 || lo_[j] == up_[j]) continue;
      if ((!at_upper_[j] && reduced_[j] < -tol) ||
          (at_upper_[j] && reduced_[j] > tol)) {
        entering = j;
        break;
      }
    }
    if (entering < 0) return Outcome::kOptimal;
    if (++iterations_ > limit_) throw IterationLimitExceeded(limit_);

    const double dir = at_upper_[entering] ? -1.0 : 1.0;
    double step = up_[entering] - lo_[entering];
    int leave_row = -1;
    int leave_var = entering;
    for (int i = 0; i < m_; ++i) {
      const double alpha = At(i, entering) * dir;
      const int var = basis_[i];
      double ratio;
      if (alpha > piv) {
        ratio = (x_[var] - lo_[var]) / alpha;
      } else if (alpha < -piv && std::isfinite(up_[var])) {
        ratio = (up_[var] - x_[var]) / -alpha;
      } else {
        continue;
      }
      ratio = std::max(ratio, 0.0);
      if (ratio < step - 1e-12 ||
          (ratio <= step + 1e-12 && var < leave_var)) {
        step = ratio;
        leave_row = i;
        leave_var = var;
      }
    }
    if (!std::isfinite(step)) return Outcome::kUnbounded;

    const double delta = dir * step;
    if (delta != 0.0) {
      x_[entering] += delta;
      for (int i = 0; i < m_; ++i) {
        const double a = At(i, entering);
        if (a != 0.0) x_[basis_[i]] -= a * delta;
      }
    }
    if (leave_row < 0) {
      at_upper_[entering] = !at_upper_[entering];
      x_[entering] = at_upper_[entering] ? up_[entering] : lo_[entering];
      continue;
    }
    const bool to_lower = At(leave_row, entering) * dir > 0;
    x_[leave_var] = to_lower ? lo_[leave_var] : up_[leave_var];
    at_upper_[leave_var] = !to_lower;
    row_of_[leave_var] = -1;
    basis_[leave_row] = entering;
    row_of_[entering] = leave_row;
    at_upper_[entering] = false;
    Pivot(leave_row, entering);
  }
}

void Simplex::RecomputeBasicValues() {
  std::vector<double> rhs(m_);
  for (int r = 0; r < m_; ++r) rhs[r] = problem_.rows[r].rhs;
  for (int r = 0; r < m_; ++r) {
    for (const auto& [column, coefficient] : problem_.rows[r].terms) {
      if (row_of_[column] < 0) rhs[r] -= coefficient * x_[column];
    }
    if (row_of_[Slack(r)] < 0) rhs[r] -= slack_sign_[r] * x_[Slack(r)];
    if (row_of_[Artificial(r)] < 0) {
      rhs[r] -= art_sign_[r] * x_[Artificial(r)];
    }
  }
  for (int i = 0; i < m_; ++i) {
    double value = 0.0;
    for (int r = 0; r < m_; ++r) {
      value += At(i, Artificial(r)) * art_sign_[r] * rhs[r];
    }
    x_[basis_[i]] = value;
  }
}

LpResult Simplex::Run() {
  LpResult result;
  double scale = 1.0;
  for (const Row& row : problem_.rows) scale = std::max(scale, std::abs(row.rhs));

  cost_.assign(width_, 0.0);
  for (int i = 0; i < m_; ++i) cost_[Artificial(i)] = 1.0;
  Optimize();
  double infeasibility = 0.0;
  for (int i = 0; i < m_; ++i) infeasibility += x_[Artificial(i)];
  if (infeasibility > options_.feasibility_tolerance * scale) {
    result.status = LpStatus::kInfeasible;
    for (int i = 0; i < m_; ++i) {
      if (x_[Artificial(i)] > options_.feasibility_tolerance) {
        result.infeasible_rows.push_back(i);
      }
    }
    result.iterations = iterations_;
    result.basis = basis_;
    return result;
  }

  for (int i = 0; i < m_; ++i) {
    const int art = Artificial(i);
    up_[art] = 0.0;
    if (row_of_[art] < 0) {
      x_[art] = 0.0;
      at_upper_[art] = false;
    }
  }
  cost_.assign(width_, 0.0);
  for (int j = 0; j < n_; ++j) cost_[j] = problem_.objective[j];
  const Outcome outcome = Optimize();
  result.iterations = iterations_;
  result.basis = basis_;
  if (outcome == Outcome::kUnbounded) {
    result.status = LpStatus::kUnbounded;
    return result;
  }

  RecomputeBasicValues();
  result.status = LpStatus::kOptimal;
  result.values.assign(x_.begin(), x_.begin() + n_);
  for (int j = 0; j < n_; ++j) {
    result.values[j] = std::clamp(result.values[j], lo_[j], up_[j]);
  }
  result.objective = problem_.ObjectiveValue(result.values);
  return result;
}

}  // namespace

IterationLimitExceeded::IterationLimitExceeded(std::int64_t limit)
    : std::runtime_error("simplex iteration limit " + std::to_string(limit) +
                         " exceeded") {}

LpResult SolveLp(const StandardFormProblem& problem,
                 std::span<const double> lower, std::span<const double> upper,
                 const LpOptions& options) {
  if (static_cast<int>(lower.size()) != problem.num_columns() ||
      static_cast<int>(upper.size()) != problem.num_columns()) {
    throw std::invalid_argument("bound vectors do not match the columns");
  }
  for (int j = 0; j < problem.num_columns(); ++j) {
    if (upper[j] < lower[j]) {
      LpResult result;
      result.status = LpStatus::kInfeasible;
      return result;
    }
  }
  Simplex simplex(problem, lower, upper, options);
  return simplex.Run();
}

LpResult SolveLp(const StandardFormProblem& problem, const LpOptions& options) {
  std::vector<double> lower(problem.num_columns());
  std::vector<double> upper(problem.num_columns());
  for (int j = 0; j < problem.num_columns(); ++j) {
    lower[j] = problem.columns[j].lower;
    upper[j] = problem.columns[j].upper;
  }
  return SolveLp(problem, lower, upper, options);
}

}  // namespace mintplan
