#pragma once

// Exact equilibria of the budget-constrained jamming game via linear
// programming.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jamgame/lp.hpp"
#include "jamgame/model.hpp"

namespace jamgame {

struct SolverDiagnostics {
  LpStatus status = LpStatus::kOptimal;
  double primal_residual = 0.0;
  double duality_gap = 0.0;
  double complementarity_residual = 0.0;
  // max_i (C·y*)_i - value; a profitable transmitter deviation if > 0.
  double transmitter_deviation = 0.0;
  // value - min_{y in budget polytope} x*ᵀ·C·y; a profitable jammer
  // deviation if > 0.
  double jammer_deviation = 0.0;
  int iterations = 0;
};

struct GameSolution {
  double value;
  MixedStrategy x_star;
  MixedStrategy y_star;
  double jammer_average_power;
  ConstraintMode mode;
  SolverDiagnostics diagnostics;
};

// Solves max_x min_{y ∈ Y} xᵀ·C·y where Y is the simplex intersected with
// Jᵀy = j_ave (kEquality) or Jᵀy <= j_ave (kAtMost).
//
// The jammer's side is one LP (minimize t s.t. C·y <= t·1). Among the
// transmitter's optimal strategies the one returned is:
//   - a pure row that is safe against every column, when such a row already
//     secures the value (the lowest rate once the jammer is strong enough);
//   - otherwise the optimal strategy with the least mass on low rates,
//     found by a second LP over the transmitter's guarantee polytope.
// At budgets where the value function kinks the optimal set is a segment,
// so this selection is what makes the returned strategy canonical.
GameSolution solve_constrained_game(const PayoffMatrix& matrix,
                                    std::span<const double> jammer_powers,
                                    double j_ave, ConstraintMode mode);

GameSolution solve_game(const GameConfig& config);

struct TransmitterResponse {
  std::size_t index = 0;
  double value = 0.0;
};

// Row maximizing (C·y)_i; near-ties (relative 1e-12) go to the larger index.
TransmitterResponse best_response_transmitter(const PayoffMatrix& matrix,
                                              const MixedStrategy& y);

struct JammerResponse {
  MixedStrategy strategy;
  double value;
};

// Minimizes xᵀ·C·y over the budget polytope.
JammerResponse best_response_jammer(const PayoffMatrix& matrix,
                                    const MixedStrategy& x, double j_ave,
                                    std::span<const double> jammer_powers,
                                    ConstraintMode mode);
JammerResponse best_response_jammer(const PayoffMatrix& matrix,
                                    const MixedStrategy& x, double j_ave,
                                    const PowerVector& powers,
                                    ConstraintMode mode);

struct SweepEntry {
  double j_ave = 0.0;
  std::optional<GameSolution> solution;
  std::optional<ErrorCode> error;
  std::string message;
};

// One solve per budget, in input order. Failures are recorded per entry.
std::vector<SweepEntry> sweep(const GameConfig& config,
                              std::span<const double> j_ave_list);

}  // namespace jamgame
