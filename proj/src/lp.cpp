#include "jamgame/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

namespace jamgame {

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

enum class ColumnKind { kStructural, kSlack, kArtificial };

// Standard-form image of one original variable.
struct VariableMap {
  std::size_t plus = 0;
  std::optional<std::size_t> minus;  // set for free variables
  double shift = 0.0;
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_((rows + 1) * (cols + 1), 0.0),
        basis_(rows, 0) {}

  double& at(std::size_t r, std::size_t c) { return data_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const {
    return data_[r * (cols_ + 1) + c];
  }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double rhs(std::size_t r) const { return at(r, cols_); }
  // Reduced-cost row lives after the constraint rows.
  double& cost(std::size_t c) { return at(rows_, c); }
  double cost(std::size_t c) const { return at(rows_, c); }
  double& objective_rhs() { return at(rows_, cols_); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const double p = at(pr, pc);
    for (std::size_t c = 0; c <= cols_; ++c) at(pr, c) /= p;
    at(pr, pc) = 1.0;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      const double factor = at(r, pc);
      if (factor == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) at(r, c) -= factor * at(pr, c);
      at(r, pc) = 0.0;
    }
    basis_[pr] = pc;
  }

  // Loads reduced costs d = c - c_B·B⁻¹A for the given column costs.
  void price(const std::vector<double>& costs) {
    for (std::size_t c = 0; c < cols_; ++c) cost(c) = costs[c];
    objective_rhs() = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
      const double cb = costs[basis_[r]];
      if (cb == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) at(rows_, c) -= cb * at(r, c);
    }
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
  std::vector<std::size_t> basis_;
};

enum class PhaseOutcome { kOptimal, kUnbounded };

struct PhaseResult {
  PhaseOutcome outcome = PhaseOutcome::kOptimal;
  std::size_t unbounded_column = 0;
};

PhaseResult run_simplex(Tableau& t, const std::vector<bool>& may_enter,
                        const LpTolerances& tol, int& iterations) {
  bool bland = false;
  int degenerate_run = 0;
  std::vector<bool> basic(t.cols(), false);

  while (true) {
    std::fill(basic.begin(), basic.end(), false);
    for (std::size_t b : t.basis()) basic[b] = true;

    // Improving columns in pricing order.
    std::vector<std::size_t> candidates;
    for (std::size_t c = 0; c < t.cols(); ++c) {
      if (may_enter[c] && !basic[c] && t.cost(c) < -tol.optimality) {
        candidates.push_back(c);
      }
    }
    if (candidates.empty()) return {};
    if (!bland) {
      std::stable_sort(candidates.begin(), candidates.end(),
                       [&](std::size_t a, std::size_t b) {
                         return t.cost(a) < t.cost(b);
                       });
    }

    bool pivoted = false;
    for (std::size_t q : candidates) {
      std::optional<std::size_t> leave;
      double best_ratio = std::numeric_limits<double>::infinity();
      bool any_positive = false;
      for (std::size_t r = 0; r < t.rows(); ++r) {
        const double a = t.at(r, q);
        if (a <= 0.0) continue;
        any_positive = true;
        if (a <= tol.pivot) continue;
        const double ratio = std::max(t.rhs(r), 0.0) / a;
        if (!leave || ratio < best_ratio - 1e-12) {
          leave = r;
          best_ratio = ratio;
        } else if (std::abs(ratio - best_ratio) <= 1e-12) {
          const std::size_t incumbent = *leave;
          const bool prefer =
              bland ? t.basis()[r] < t.basis()[incumbent]
                    : (a > t.at(incumbent, q) ||
                       (a == t.at(incumbent, q) &&
                        t.basis()[r] < t.basis()[incumbent]));
          if (prefer) {
            leave = r;
            best_ratio = std::min(best_ratio, ratio);
          }
        }
      }
      if (!any_positive) {
        return {PhaseOutcome::kUnbounded, q};
      }
      if (!leave) continue;  // only sub-threshold pivots in this column

      if (best_ratio <= 1e-12) {
        if (++degenerate_run > tol.degeneracy_limit) bland = true;
      } else {
        degenerate_run = 0;
      }
      t.pivot(*leave, q);
      pivoted = true;
      break;
    }
    if (!pivoted) {
      throw Error(ErrorCode::kNumericalBreakdown,
                  "no pivot element above threshold in any improving column");
    }
    if (++iterations > tol.max_iterations) {
      throw Error(ErrorCode::kNumericalBreakdown, "simplex iteration cap hit");
    }
  }
}

}  // namespace

LpSolution solve_lp(const LpProblem& problem, const LpTolerances& tol) {
  const std::size_t n = problem.objective.size();
  const std::size_t m = problem.constraints.size();
  for (const auto& row : problem.constraints) {
    if (row.coeffs.size() != n) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "constraint width differs from objective width");
    }
    if (!std::isfinite(row.rhs) ||
        !std::all_of(row.coeffs.begin(), row.coeffs.end(),
                     [](double v) { return std::isfinite(v); })) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite LP coefficient");
    }
  }
  if (!problem.bounds.empty() && problem.bounds.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "bounds width differs from objective width");
  }
  const auto bound = [&](std::size_t k) {
    return problem.bounds.empty() ? LpVariableBound{} : problem.bounds[k];
  };

  // Column layout: structural (free variables split in two), then one
  // slack/surplus per inequality, then one artificial per >= / = row.
  std::vector<VariableMap> vars(n);
  std::size_t cols = 0;
  for (std::size_t k = 0; k < n; ++k) {
    vars[k].plus = cols++;
    if (bound(k).free) {
      vars[k].minus = cols++;
    } else {
      vars[k].shift = bound(k).lower;
    }
  }

  std::vector<double> sign(m, 1.0);
  std::vector<LpRelation> relation(m);
  std::vector<double> rhs(m);
  for (std::size_t r = 0; r < m; ++r) {
    const auto& row = problem.constraints[r];
    double b = row.rhs;
    for (std::size_t k = 0; k < n; ++k) b -= row.coeffs[k] * vars[k].shift;
    relation[r] = row.relation;
    if (b < 0.0) {
      sign[r] = -1.0;
      b = -b;
      if (row.relation == LpRelation::kLessEqual) {
        relation[r] = LpRelation::kGreaterEqual;
      } else if (row.relation == LpRelation::kGreaterEqual) {
        relation[r] = LpRelation::kLessEqual;
      }
    }
    rhs[r] = b;
  }

  std::vector<std::optional<std::size_t>> slack_col(m);
  std::vector<std::optional<std::size_t>> artificial_col(m);
  for (std::size_t r = 0; r < m; ++r) {
    if (relation[r] != LpRelation::kEqual) slack_col[r] = cols++;
  }
  for (std::size_t r = 0; r < m; ++r) {
    if (relation[r] != LpRelation::kLessEqual) artificial_col[r] = cols++;
  }

  std::vector<ColumnKind> kind(cols, ColumnKind::kStructural);
  for (std::size_t r = 0; r < m; ++r) {
    if (slack_col[r]) kind[*slack_col[r]] = ColumnKind::kSlack;
    if (artificial_col[r]) kind[*artificial_col[r]] = ColumnKind::kArtificial;
  }

  Tableau t(m, cols);
  // Column that started as +e_r; its reduced cost yields the row's dual.
  std::vector<std::size_t> identity_col(m);
  for (std::size_t r = 0; r < m; ++r) {
    const auto& row = problem.constraints[r];
    for (std::size_t k = 0; k < n; ++k) {
      const double a = sign[r] * row.coeffs[k];
      t.at(r, vars[k].plus) = a;
      if (vars[k].minus) t.at(r, *vars[k].minus) = -a;
    }
    if (slack_col[r]) {
      t.at(r, *slack_col[r]) =
          relation[r] == LpRelation::kLessEqual ? 1.0 : -1.0;
    }
    if (artificial_col[r]) t.at(r, *artificial_col[r]) = 1.0;
    t.rhs(r) = rhs[r];
    identity_col[r] = artificial_col[r] ? *artificial_col[r] : *slack_col[r];
    t.basis()[r] = identity_col[r];
  }

  LpSolution out;
  out.dual.assign(m, 0.0);

  // Phase one: minimize the sum of artificials.
  std::vector<double> phase1_cost(cols, 0.0);
  for (std::size_t c = 0; c < cols; ++c) {
    if (kind[c] == ColumnKind::kArtificial) phase1_cost[c] = 1.0;
  }
  std::vector<bool> may_enter(cols, true);
  t.price(phase1_cost);
  run_simplex(t, may_enter, tol, out.iterations);

  double scale = 1.0;
  for (double b : rhs) scale = std::max(scale, b);
  const double infeasibility = -t.objective_rhs();
  if (infeasibility > tol.feasibility * scale) {
    out.status = LpStatus::kInfeasible;
    out.certificate.assign(m, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
      const std::size_t c = identity_col[r];
      out.certificate[r] = sign[r] * (phase1_cost[c] - t.cost(c));
    }
    return out;
  }

  // Drive zero-level artificials out of the basis; rows where that is
  // impossible are redundant and keep their artificial at zero.
  for (std::size_t r = 0; r < m; ++r) {
    if (kind[t.basis()[r]] != ColumnKind::kArtificial) continue;
    std::optional<std::size_t> best;
    double best_abs = tol.pivot;
    for (std::size_t c = 0; c < cols; ++c) {
      if (kind[c] == ColumnKind::kArtificial) continue;
      if (std::find(t.basis().begin(), t.basis().end(), c) != t.basis().end()) {
        continue;
      }
      if (std::abs(t.at(r, c)) > best_abs) {
        best_abs = std::abs(t.at(r, c));
        best = c;
      }
    }
    if (best) t.pivot(r, *best);
  }

  // Phase two.
  std::vector<double> phase2_cost(cols, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    phase2_cost[vars[k].plus] = problem.objective[k];
    if (vars[k].minus) phase2_cost[*vars[k].minus] = -problem.objective[k];
  }
  for (std::size_t c = 0; c < cols; ++c) {
    may_enter[c] = kind[c] != ColumnKind::kArtificial;
  }
  t.price(phase2_cost);
  const PhaseResult phase2 = run_simplex(t, may_enter, tol, out.iterations);

  std::vector<double> x_std(cols, 0.0);
  for (std::size_t r = 0; r < m; ++r) x_std[t.basis()[r]] = t.rhs(r);
  const auto to_original = [&](const std::vector<double>& v) {
    std::vector<double> x(n);
    for (std::size_t k = 0; k < n; ++k) {
      x[k] = v[vars[k].plus] - (vars[k].minus ? v[*vars[k].minus] : 0.0);
    }
    return x;
  };

  if (phase2.outcome == PhaseOutcome::kUnbounded) {
    out.status = LpStatus::kUnbounded;
    std::vector<double> ray_std(cols, 0.0);
    ray_std[phase2.unbounded_column] = 1.0;
    for (std::size_t r = 0; r < m; ++r) {
      ray_std[t.basis()[r]] = -t.at(r, phase2.unbounded_column);
    }
    out.certificate = to_original(ray_std);
    out.primal = to_original(x_std);
    for (std::size_t k = 0; k < n; ++k) out.primal[k] += vars[k].shift;
    return out;
  }

  out.status = LpStatus::kOptimal;
  out.primal = to_original(x_std);
  for (std::size_t k = 0; k < n; ++k) out.primal[k] += vars[k].shift;
  for (std::size_t r = 0; r < m; ++r) {
    out.dual[r] = sign[r] * (phase2_cost[identity_col[r]] -
                             t.cost(identity_col[r]));
  }

  // Certificates in the original space.
  out.objective_value = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    out.objective_value += problem.objective[k] * out.primal[k];
  }
  out.dual_objective = 0.0;
  double primal_residual = 0.0;
  double complementarity = 0.0;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& row = problem.constraints[r];
    double activity = 0.0;
    for (std::size_t k = 0; k < n; ++k) activity += row.coeffs[k] * out.primal[k];
    const double slack = row.rhs - activity;
    switch (row.relation) {
      case LpRelation::kLessEqual:
        primal_residual = std::max(primal_residual, -slack);
        break;
      case LpRelation::kGreaterEqual:
        primal_residual = std::max(primal_residual, slack);
        break;
      case LpRelation::kEqual:
        primal_residual = std::max(primal_residual, std::abs(slack));
        break;
    }
    complementarity = std::max(complementarity, std::abs(out.dual[r] * slack));
    out.dual_objective += out.dual[r] * row.rhs;
  }
  for (std::size_t k = 0; k < n; ++k) {
    double reduced = problem.objective[k];
    for (std::size_t r = 0; r < m; ++r) {
      reduced -= out.dual[r] * problem.constraints[r].coeffs[k];
    }
    if (bound(k).free) continue;
    primal_residual = std::max(primal_residual, bound(k).lower - out.primal[k]);
    complementarity = std::max(
        complementarity, std::abs(reduced * (out.primal[k] - bound(k).lower)));
    out.dual_objective += reduced * bound(k).lower;
  }
  out.primal_residual = primal_residual;
  out.complementarity_residual = complementarity;
  return out;
}

}  // namespace jamgame
