#include "mintplan/lp_problem.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mintplan {

double Row::Activity(const std::vector<double>& values) const {
  double sum = 0.0;
  for (const auto& [column, coefficient] : terms) {
    sum += coefficient * values[column];
  }
  return sum;
}

int StandardFormProblem::AddColumn(Column column, double cost) {
  columns.push_back(std::move(column));
  objective.push_back(cost);
  return num_columns() - 1;
}

void StandardFormProblem::AddRow(Row row) {
  std::sort(row.terms.begin(), row.terms.end());
  std::erase_if(row.terms, [](const auto& term) { return term.second == 0.0; });
  for (const auto& [column, coefficient] : row.terms) {
    if (column < 0 || column >= num_columns()) {
      throw std::out_of_range("row '" + row.label +
                              "' references a missing column");
    }
  }
  rows.push_back(std::move(row));
}

double StandardFormProblem::ObjectiveValue(
    const std::vector<double>& values) const {
  double sum = 0.0;
  for (int j = 0; j < num_columns(); ++j) sum += objective[j] * values[j];
  return sum;
}

std::vector<int> StandardFormProblem::BinaryColumns() const {
  std::vector<int> out;
  for (int j = 0; j < num_columns(); ++j) {
    if (columns[j].binary) out.push_back(j);
  }
  return out;
}

std::vector<std::string> CheckAssignment(const StandardFormProblem& problem,
                                         const std::vector<double>& values,
                                         double tolerance) {
  if (static_cast<int>(values.size()) != problem.num_columns()) {
    throw std::invalid_argument("assignment does not cover every column");
  }
  std::vector<std::string> violated;
  for (const Row& row : problem.rows) {
    const double activity = row.Activity(values);
    bool ok = true;
    switch (row.relation) {
      case Relation::kLessEqual:
        ok = activity <= row.rhs + tolerance;
        break;
      case Relation::kEqual:
        ok = std::abs(activity - row.rhs) <= tolerance;
        break;
      case Relation::kGreaterEqual:
        ok = activity >= row.rhs - tolerance;
        break;
    }
    if (!ok) violated.push_back(row.label);
  }
  for (int j = 0; j < problem.num_columns(); ++j) {
    const Column& column = problem.columns[j];
    if (!(values[j] >= column.lower - tolerance &&
          values[j] <= column.upper + tolerance)) {
      violated.push_back("bound:" + column.name);
    }
  }
  for (int j = 0; j < problem.num_columns(); ++j) {
    if (!problem.columns[j].binary) continue;
    const double v = values[j];
    if (std::min(std::abs(v), std::abs(v - 1.0)) > tolerance) {
      violated.push_back("binary:" + problem.columns[j].name);
    }
  }
  return violated;
}

}  // namespace mintplan
