#pragma once

// Dense two-phase tableau simplex for the small linear programs behind the
// constrained game (tens of variables). Minimization form.

#include <vector>

#include "jamgame/error.hpp"

namespace jamgame {

enum class LpRelation { kLessEqual, kEqual, kGreaterEqual };

struct LpConstraint {
  std::vector<double> coeffs;
  LpRelation relation = LpRelation::kLessEqual;
  double rhs = 0.0;
};

struct LpVariableBound {
  double lower = 0.0;
  bool free = false;  // ignores `lower`
};

struct LpProblem {
  std::vector<double> objective;  // minimized
  std::vector<LpConstraint> constraints;
  // Empty means every variable is >= 0.
  std::vector<LpVariableBound> bounds;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> primal;
  // One multiplier per original constraint, in the convention
  // objective = Σ dual[r]·rhs[r] + Σ reduced_cost[k]·lower[k]:
  // dual <= 0 on <= rows, >= 0 on >= rows, free on = rows.
  std::vector<double> dual;
  double objective_value = 0.0;
  double dual_objective = 0.0;
  // Unbounded: a primal ray along which the objective decreases.
  // Infeasible: phase-one multipliers, one per constraint.
  std::vector<double> certificate;
  double primal_residual = 0.0;
  double complementarity_residual = 0.0;
  int iterations = 0;
};

struct LpTolerances {
  double feasibility = 1e-9;
  double optimality = 1e-9;
  double pivot = 1e-12;
  // Consecutive degenerate pivots before switching to Bland's rule.
  int degeneracy_limit = 50;
  int max_iterations = 100000;
};

// Dantzig pricing with lowest-index ties; Bland's rule once the degeneracy
// counter trips. Identical problems give bitwise-identical solutions.
// Throws Error(kNumericalBreakdown) when every improving column only offers
// pivots below the pivot threshold, or the iteration cap is hit.
LpSolution solve_lp(const LpProblem& problem, const LpTolerances& tol = {});

}  // namespace jamgame
