#include "jamgame/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

namespace jamgame {

namespace {

LpRelation budget_relation(ConstraintMode mode) {
  return mode == ConstraintMode::kEquality ? LpRelation::kEqual
                                           : LpRelation::kLessEqual;
}

void check_budget_inputs(const PayoffMatrix& matrix,
                         std::span<const double> powers, double j_ave) {
  if (powers.size() != matrix.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "jammer powers vs matrix columns");
  }
  if (!std::isfinite(j_ave) || j_ave < 0.0) {
    throw Error(ErrorCode::kBudgetOutOfRange, "j_ave must be finite and >= 0");
  }
}

LpSolution solve_or_throw(const LpProblem& problem, const char* what) {
  LpSolution sol = solve_lp(problem);
  if (sol.status == LpStatus::kInfeasible) {
    throw Error(ErrorCode::kInfeasible,
                std::string(what) + ": budget polytope is empty");
  }
  if (sol.status == LpStatus::kUnbounded) {
    throw Error(ErrorCode::kNumericalBreakdown,
                std::string(what) + ": LP reported unbounded");
  }
  return sol;
}

// Transmitter guarantee polytope: x in the simplex, mu free, lambda the
// budget multiplier, with (xᵀC)_j + lambda·J_j >= mu for every column.
// Guarantee = mu - lambda·j_ave. Picks the strategy minimizing the mean row
// index among those guaranteeing at least `floor`.
std::optional<std::vector<double>> highest_rate_optimal_strategy(
    const PayoffMatrix& matrix, std::span<const double> powers, double j_ave,
    ConstraintMode mode, double floor) {
  const std::size_t rows = matrix.rows();
  const std::size_t cols = matrix.cols();
  const std::size_t mu = rows;
  const std::size_t lambda = rows + 1;
  const std::size_t width = rows + 2;

  LpProblem lp;
  lp.objective.assign(width, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    lp.objective[i] = static_cast<double>(i);
  }
  lp.bounds.assign(width, LpVariableBound{});
  lp.bounds[mu].free = true;
  lp.bounds[lambda].free = mode == ConstraintMode::kEquality;

  for (std::size_t j = 0; j < cols; ++j) {
    LpConstraint row;
    row.coeffs.assign(width, 0.0);
    for (std::size_t i = 0; i < rows; ++i) row.coeffs[i] = -matrix(i, j);
    row.coeffs[mu] = 1.0;
    row.coeffs[lambda] = -powers[j];
    row.relation = LpRelation::kLessEqual;
    row.rhs = 0.0;
    lp.constraints.push_back(std::move(row));
  }
  LpConstraint simplex;
  simplex.coeffs.assign(width, 0.0);
  std::fill_n(simplex.coeffs.begin(), rows, 1.0);
  simplex.relation = LpRelation::kEqual;
  simplex.rhs = 1.0;
  lp.constraints.push_back(std::move(simplex));

  LpConstraint guarantee;
  guarantee.coeffs.assign(width, 0.0);
  guarantee.coeffs[mu] = 1.0;
  guarantee.coeffs[lambda] = -j_ave;
  guarantee.relation = LpRelation::kGreaterEqual;
  guarantee.rhs = floor;
  lp.constraints.push_back(std::move(guarantee));

  try {
    const LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::kOptimal) return std::nullopt;
    return std::vector<double>(sol.primal.begin(), sol.primal.begin() + rows);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::vector<double> clean_probabilities(std::vector<double> p) {
  for (double& v : p) {
    if (v < 0.0 && v > -MixedStrategy::kProbabilityTolerance) v = 0.0;
  }
  return p;
}

}  // namespace

GameSolution solve_constrained_game(const PayoffMatrix& matrix,
                                    std::span<const double> jammer_powers,
                                    double j_ave, ConstraintMode mode) {
  check_budget_inputs(matrix, jammer_powers, j_ave);
  const std::size_t rows = matrix.rows();
  const std::size_t cols = matrix.cols();
  const std::size_t t = cols;
  const std::size_t width = cols + 1;

  LpProblem lp;
  lp.objective.assign(width, 0.0);
  lp.objective[t] = 1.0;
  lp.bounds.assign(width, LpVariableBound{});
  lp.bounds[t].free = true;
  for (std::size_t i = 0; i < rows; ++i) {
    LpConstraint row;
    row.coeffs.assign(width, 0.0);
    for (std::size_t j = 0; j < cols; ++j) row.coeffs[j] = matrix(i, j);
    row.coeffs[t] = -1.0;
    row.relation = LpRelation::kLessEqual;
    lp.constraints.push_back(std::move(row));
  }
  LpConstraint simplex;
  simplex.coeffs.assign(width, 0.0);
  std::fill_n(simplex.coeffs.begin(), cols, 1.0);
  simplex.relation = LpRelation::kEqual;
  simplex.rhs = 1.0;
  lp.constraints.push_back(std::move(simplex));
  LpConstraint budget;
  budget.coeffs.assign(width, 0.0);
  std::copy(jammer_powers.begin(), jammer_powers.end(), budget.coeffs.begin());
  budget.relation = budget_relation(mode);
  budget.rhs = j_ave;
  lp.constraints.push_back(std::move(budget));

  const LpSolution sol = solve_or_throw(lp, "jammer LP");
  const double value = sol.primal[t];

  MixedStrategy y_star = MixedStrategy::make(
      clean_probabilities({sol.primal.begin(), sol.primal.begin() + cols}),
      Role::kJammer);

  // Row multipliers are <= 0 in the minimization convention.
  std::vector<double> dual_x(rows);
  for (std::size_t i = 0; i < rows; ++i) dual_x[i] = -sol.dual[i];

  const double tie = 1e-12 * std::max(1.0, std::abs(value));
  std::optional<std::size_t> safe_row;
  double safe_floor = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rows; ++i) {
    const auto r = matrix.row(i);
    const double floor = *std::min_element(r.begin(), r.end());
    if (floor >= value - tie && floor >= safe_floor) {
      safe_row = i;
      safe_floor = floor;
    }
  }

  std::vector<double> x;
  if (safe_row) {
    x.assign(rows, 0.0);
    x[*safe_row] = 1.0;
  } else {
    const double slack = 1e-11 * std::max(1.0, std::abs(value));
    auto refined = highest_rate_optimal_strategy(matrix, jammer_powers, j_ave,
                                                 mode, value - slack);
    x = refined ? std::move(*refined) : std::move(dual_x);
    if (!refined) {
      const double s = std::accumulate(x.begin(), x.end(), 0.0);
      for (double& v : x) v /= s;
    }
  }
  MixedStrategy x_star =
      MixedStrategy::make(clean_probabilities(std::move(x)), Role::kTransmitter);

  SolverDiagnostics diag;
  diag.status = sol.status;
  diag.primal_residual = sol.primal_residual;
  diag.duality_gap = std::abs(sol.objective_value - sol.dual_objective);
  diag.complementarity_residual = sol.complementarity_residual;
  diag.iterations = sol.iterations;
  const std::vector<double> cy = matrix.row_payoffs(y_star.probs());
  diag.transmitter_deviation = *std::max_element(cy.begin(), cy.end()) - value;
  diag.jammer_deviation =
      value -
      best_response_jammer(matrix, x_star, j_ave, jammer_powers, mode).value;

  const double power = average_power(y_star.probs(), jammer_powers);
  return GameSolution{value, std::move(x_star), std::move(y_star), power, mode,
                      diag};
}

GameSolution solve_game(const GameConfig& config) {
  const PayoffMatrix matrix = payoff_matrix(config);
  const PowerVector powers = power_vector(config);
  return solve_constrained_game(matrix, powers.levels(), config.j_ave(),
                                config.mode());
}

TransmitterResponse best_response_transmitter(const PayoffMatrix& matrix,
                                              const MixedStrategy& y) {
  const std::vector<double> cy = matrix.row_payoffs(y.probs());
  const double top = *std::max_element(cy.begin(), cy.end());
  const double tie = 1e-12 * std::max(1.0, std::abs(top));
  std::size_t index = cy.size() - 1;
  while (cy[index] < top - tie) --index;
  return {index, cy[index]};
}

JammerResponse best_response_jammer(const PayoffMatrix& matrix,
                                    const MixedStrategy& x, double j_ave,
                                    std::span<const double> jammer_powers,
                                    ConstraintMode mode) {
  check_budget_inputs(matrix, jammer_powers, j_ave);
  const std::vector<double> g = matrix.column_payoffs(x.probs());
  const std::size_t cols = matrix.cols();

  LpProblem lp;
  lp.objective = g;
  LpConstraint simplex;
  simplex.coeffs.assign(cols, 1.0);
  simplex.relation = LpRelation::kEqual;
  simplex.rhs = 1.0;
  lp.constraints.push_back(std::move(simplex));
  LpConstraint budget;
  budget.coeffs.assign(jammer_powers.begin(), jammer_powers.end());
  budget.relation = budget_relation(mode);
  budget.rhs = j_ave;
  lp.constraints.push_back(std::move(budget));

  const LpSolution sol = solve_or_throw(lp, "jammer best response");
  return JammerResponse{
      MixedStrategy::make(clean_probabilities(sol.primal), Role::kJammer),
      sol.objective_value};
}

JammerResponse best_response_jammer(const PayoffMatrix& matrix,
                                    const MixedStrategy& x, double j_ave,
                                    const PowerVector& powers,
                                    ConstraintMode mode) {
  return best_response_jammer(matrix, x, j_ave, powers.levels(), mode);
}

std::vector<SweepEntry> sweep(const GameConfig& config,
                              std::span<const double> j_ave_list) {
  std::vector<SweepEntry> out;
  out.reserve(j_ave_list.size());
  for (double j_ave : j_ave_list) {
    SweepEntry entry;
    entry.j_ave = j_ave;
    try {
      entry.solution = solve_game(config.with_budget(j_ave));
    } catch (const Error& e) {
      entry.error = e.code();
      entry.message = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace jamgame
