#pragma once

// Reference computations that share no code path with the LP solver or the
// adaptive quadrature; used to check them.

#include <functional>
#include <span>

#include "jamgame/model.hpp"

namespace jamgame::oracles {

// Exact minimum of g·y over {y >= 0, Σy = 1, Jᵀy <= budget (or = budget)}
// by enumerating the polytope's vertices: affordable pure strategies and
// two-point mixtures whose mean power is exactly the budget.
double min_over_budget_polytope(std::span<const double> g,
                                std::span<const double> powers, double budget,
                                ConstraintMode mode);

struct MeshBounds {
  double lower = 0.0;  // max over the x-mesh of the exact inner minimum
  double upper = 0.0;  // min over the feasible y-mesh of max_i (C·y)_i
};

// Brute-force minimax on a simplex mesh of step 1/resolution for both
// players (at-most budget only). Both bounds are sound: lower <= value <=
// upper. Intended for games with at most four pure strategies per side.
MeshBounds mesh_minimax(const PayoffMatrix& matrix,
                        std::span<const double> powers, double budget,
                        int resolution);

// Composite midpoint rule with `panels` equal panels, compensated summation.
double midpoint_integral(const std::function<double(double)>& f, double a,
                         double b, long panels);

}  // namespace jamgame::oracles
