#pragma once

#include <vector>

#include "credalkit/rational.hpp"

namespace credalkit {

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// maximize objective·x  subject to  constraints·x = rhs, x >= 0.
/// Rows may be linearly dependent; redundant rows are dropped during
/// phase one.
struct LpProblem {
  std::vector<std::vector<Rational>> constraints;
  std::vector<Rational> rhs;
  std::vector<Rational> objective;
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> variables;
};

/// Exact two-phase primal simplex over rationals. Bland's rule for both
/// the entering and the leaving choice, so the method terminates without
/// any perturbation or tolerance.
LpSolution solve_simplex(const LpProblem& problem);

}  // namespace credalkit
