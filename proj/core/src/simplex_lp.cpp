#include "credalkit/simplex_lp.hpp"

#include <cstddef>
#include <stdexcept>

namespace credalkit {

namespace {

// Dense rational tableau: rows 0..m-1 are constraints, row m is the
// reduced-cost row (z_j - c_j convention), the last column the RHS.
struct Tableau {
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> basis;  // basic column of each constraint row

  std::size_t constraint_count() const { return basis.size(); }
  std::size_t rhs_column() const { return rows.front().size() - 1; }

  void pivot(std::size_t pivot_row, std::size_t pivot_col) {
    const std::size_t width = rows.front().size();
    const Rational pivot_value = rows[pivot_row][pivot_col];
    for (std::size_t j = 0; j < width; ++j) rows[pivot_row][j] /= pivot_value;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot_row) continue;
      const Rational factor = rows[i][pivot_col];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < width; ++j) {
        rows[i][j] -= factor * rows[pivot_row][j];
      }
    }
    basis[pivot_row] = pivot_col;
  }

  // Primal simplex with Bland's rule over the given eligible columns.
  // Returns false when an entering column proves the problem unbounded.
  bool iterate(std::size_t eligible_columns) {
    const std::size_t m = constraint_count();
    const std::size_t rhs = rhs_column();
    for (;;) {
      std::size_t entering = eligible_columns;
      for (std::size_t j = 0; j < eligible_columns; ++j) {
        if (rows[m][j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering == eligible_columns) return true;  // optimal

      bool found = false;
      std::size_t leaving_row = 0;
      Rational best_ratio;
      for (std::size_t i = 0; i < m; ++i) {
        if (rows[i][entering] <= 0) continue;
        Rational ratio = rows[i][rhs] / rows[i][entering];
        if (!found || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leaving_row])) {
          found = true;
          best_ratio = ratio;
          leaving_row = i;
        }
      }
      if (!found) return false;  // unbounded
      pivot(leaving_row, entering);
    }
  }
};

}  // namespace

LpSolution solve_simplex(const LpProblem& problem) {
  const std::size_t m = problem.constraints.size();
  const std::size_t n = problem.objective.size();
  if (problem.rhs.size() != m) {
    throw std::invalid_argument("simplex: rhs size does not match rows");
  }
  for (const auto& row : problem.constraints) {
    if (row.size() != n) {
      throw std::invalid_argument("simplex: row width does not match objective");
    }
  }

  LpSolution solution;
  if (m == 0) {
    for (const auto& c : problem.objective) {
      if (c > 0) {
        solution.status = LpStatus::Unbounded;
        return solution;
      }
    }
    solution.status = LpStatus::Optimal;
    solution.value = 0;
    solution.variables.assign(n, Rational(0));
    return solution;
  }

  // Phase one: artificial basis, maximize minus the artificial sum.
  Tableau tableau;
  tableau.rows.assign(m + 1, std::vector<Rational>(n + m + 1, Rational(0)));
  tableau.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = problem.rhs[i] < 0;
    for (std::size_t j = 0; j < n; ++j) {
      tableau.rows[i][j] =
          flip ? -problem.constraints[i][j] : problem.constraints[i][j];
    }
    tableau.rows[i][n + i] = 1;
    tableau.rows[i][n + m] = flip ? -problem.rhs[i] : problem.rhs[i];
    tableau.basis[i] = n + i;
  }
  // Reduced costs for the artificial objective: r_j = -sum_i T[i][j] on
  // structural columns, 0 on artificial ones; value = -sum_i b_i.
  for (std::size_t j = 0; j <= n + m; ++j) {
    if (j >= n && j < n + m) continue;
    Rational sum = 0;
    for (std::size_t i = 0; i < m; ++i) sum += tableau.rows[i][j];
    tableau.rows[m][j] = -sum;
  }

  tableau.iterate(n + m);
  if (tableau.rows[m][n + m] != 0) {
    solution.status = LpStatus::Infeasible;
    return solution;
  }

  // Drive remaining artificials out of the basis; rows with no structural
  // support are redundant and get dropped.
  std::vector<bool> drop(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (tableau.basis[i] < n) continue;
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (tableau.rows[i][j] != 0) {
        col = j;
        break;
      }
    }
    if (col == n) {
      drop[i] = true;
    } else {
      tableau.pivot(i, col);
    }
  }

  // Phase two tableau: structural columns only, surviving rows only.
  Tableau phase2;
  for (std::size_t i = 0; i < m; ++i) {
    if (drop[i]) continue;
    std::vector<Rational> row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = tableau.rows[i][j];
    row[n] = tableau.rows[i][n + m];
    phase2.rows.push_back(std::move(row));
    phase2.basis.push_back(tableau.basis[i]);
  }
  const std::size_t m2 = phase2.basis.size();
  std::vector<Rational> cost_row(n + 1, Rational(0));
  for (std::size_t j = 0; j <= n; ++j) {
    Rational z = 0;
    for (std::size_t i = 0; i < m2; ++i) {
      z += problem.objective[phase2.basis[i]] * phase2.rows[i][j];
    }
    cost_row[j] = z - (j < n ? problem.objective[j] : Rational(0));
  }
  phase2.rows.push_back(std::move(cost_row));

  if (!phase2.iterate(n)) {
    solution.status = LpStatus::Unbounded;
    return solution;
  }

  solution.status = LpStatus::Optimal;
  solution.variables.assign(n, Rational(0));
  for (std::size_t i = 0; i < m2; ++i) {
    solution.variables[phase2.basis[i]] = phase2.rows[i][n];
  }
  solution.value = 0;
  for (std::size_t j = 0; j < n; ++j) {
    solution.value += problem.objective[j] * solution.variables[j];
  }
  return solution;
}

}  // namespace credalkit
