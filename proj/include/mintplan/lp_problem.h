// Solver-neutral linear program with optional binary columns.

#ifndef MINTPLAN_LP_PROBLEM_H_
#define MINTPLAN_LP_PROBLEM_H_

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace mintplan {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct Column {
  std::string name;
  double lower = 0.0;
  double upper = kInfinity;
  bool binary = false;

  bool operator==(const Column&) const = default;
};

struct Row {
  // Provenance label, e.g. "eq11_inventory_t1_d2".
  std::string label;
  // (column, coefficient) pairs in increasing column order, no zeros.
  std::vector<std::pair<int, double>> terms;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;

  double Activity(const std::vector<double>& values) const;
  bool operator==(const Row&) const = default;
};

// minimize objective . x subject to rows and column bounds.
struct StandardFormProblem {
  std::vector<Column> columns;
  std::vector<double> objective;
  std::vector<Row> rows;

  int num_columns() const { return static_cast<int>(columns.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
  int AddColumn(Column column, double cost = 0.0);
  void AddRow(Row row);
  double ObjectiveValue(const std::vector<double>& values) const;
  std::vector<int> BinaryColumns() const;

  bool operator==(const StandardFormProblem&) const = default;
};

inline constexpr double kAuditTolerance = 1e-6;

// Labels of rows violated by more than `tolerance`, then "bound:<name>" for
// bound violations and "binary:<name>" for binaries away from {0, 1}.
std::vector<std::string> CheckAssignment(const StandardFormProblem& problem,
                                         const std::vector<double>& values,
                                         double tolerance = kAuditTolerance);

}  // namespace mintplan

#endif  // MINTPLAN_LP_PROBLEM_H_
