// Reference LP solver for tiny problems: enumerate every vertex of the
// feasible polyhedron and keep the best one.
//
// A vertex is the solution of n linearly independent active constraints,
// chosen among the rows (as equalities) and the finite column bounds. All
// lower bounds are required to be finite, so a feasible polyhedron always
// has a vertex. Unboundedness is decided the same way on the recession cone
// cut down to the box [-1, 1]^n.

#ifndef MINTPLAN_TESTS_TESTING_VERTEX_ORACLE_H_
#define MINTPLAN_TESTS_TESTING_VERTEX_ORACLE_H_

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "mintplan/lp_problem.h"

namespace mintplan::testing {

enum class VertexStatus { kOptimal, kInfeasible, kUnbounded };

struct VertexResult {
  VertexStatus status = VertexStatus::kInfeasible;
  double objective = 0.0;
  std::vector<double> point;
  int vertices = 0;
};

namespace internal {

// Dense hyperplane a.x (rel) b.
struct Half {
  std::vector<double> a;
  Relation relation;
  double b;
};

inline std::optional<std::vector<double>> SolveSquare(
    std::vector<std::vector<double>> m, std::vector<double> rhs) {
  const int n = static_cast<int>(rhs.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (std::abs(m[pivot][col]) < 1e-9) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

inline bool Satisfies(const Half& h, const std::vector<double>& x, double tol) {
  double lhs = 0.0;
  double scale = std::max(1.0, std::abs(h.b));
  for (std::size_t i = 0; i < x.size(); ++i) {
    lhs += h.a[i] * x[i];
    scale = std::max(scale, std::abs(h.a[i] * x[i]));
  }
  tol *= scale;
  switch (h.relation) {
    case Relation::kLessEqual:
      return lhs <= h.b + tol;
    case Relation::kGreaterEqual:
      return lhs >= h.b - tol;
    case Relation::kEqual:
      return std::abs(lhs - h.b) <= tol;
  }
  return false;
}

// Best vertex of {x : all halves}, or nullopt when there is none.
inline std::optional<VertexResult> BestVertex(const std::vector<Half>& halves,
                                              const std::vector<double>& cost) {
  const int n = static_cast<int>(cost.size());
  const int k = static_cast<int>(halves.size());
  std::optional<VertexResult> best;
  int count = 0;
  if (n == 0) {
    for (const Half& h : halves) {
      if (!Satisfies(h, {}, 1e-9)) return std::nullopt;
    }
    return VertexResult{VertexStatus::kOptimal, 0.0, {}, 1};
  }
  std::vector<int> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i;
  if (n > k) return std::nullopt;
  while (true) {
    std::vector<std::vector<double>> m;
    std::vector<double> rhs;
    for (int i : pick) {
      m.push_back(halves[i].a);
      rhs.push_back(halves[i].b);
    }
    if (auto x = SolveSquare(m, rhs)) {
      bool feasible = true;
      for (const Half& h : halves) {
        if (!Satisfies(h, *x, 1e-9)) {
          feasible = false;
          break;
        }
      }
      if (feasible) {
        ++count;
        double value = 0.0;
        for (int i = 0; i < n; ++i) value += cost[i] * (*x)[i];
        if (!best || value < best->objective) {
          best = VertexResult{VertexStatus::kOptimal, value, *x, 0};
        }
      }
    }
    // Next n-combination of k in lexicographic order.
    int i = n - 1;
    while (i >= 0 && pick[i] == k - n + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (best) best->vertices = count;
  return best;
}

}  // namespace internal

inline VertexResult SolveByVertices(const StandardFormProblem& problem) {
  using internal::Half;
  const int n = problem.num_columns();
  std::vector<Half> halves, cone;
  auto dense = [n](const Row& row) {
    std::vector<double> a(n, 0.0);
    for (const auto& [col, coef] : row.terms) a[col] = coef;
    return a;
  };
  auto unit = [n](int i) {
    std::vector<double> a(n, 0.0);
    a[i] = 1.0;
    return a;
  };
  for (const Row& row : problem.rows) {
    halves.push_back({dense(row), row.relation, row.rhs});
    cone.push_back({dense(row), row.relation, 0.0});
  }
  for (int i = 0; i < n; ++i) {
    const Column& c = problem.columns[i];
    halves.push_back({unit(i), Relation::kGreaterEqual, c.lower});
    cone.push_back({unit(i), Relation::kGreaterEqual, 0.0});
    if (std::isfinite(c.upper)) {
      halves.push_back({unit(i), Relation::kLessEqual, c.upper});
      cone.push_back({unit(i), Relation::kLessEqual, 0.0});
    } else {
      cone.push_back({unit(i), Relation::kLessEqual, 1.0});
    }
  }

  const auto best = internal::BestVertex(halves, problem.objective);
  if (!best) return {};
  // Cone directions are already >= 0 for every column with a finite lower
  // bound, so only the upper box bound is needed.
  const auto ray = internal::BestVertex(cone, problem.objective);
  if (ray && ray->objective < -1e-9) {
    return {VertexStatus::kUnbounded, -std::numeric_limits<double>::infinity(),
            {}, best->vertices};
  }
  return *best;
}

}  // namespace mintplan::testing

#endif  // MINTPLAN_TESTS_TESTING_VERTEX_ORACLE_H_
