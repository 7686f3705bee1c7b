#include <cmath>
#include <random>

#include "jamgame/lp.hpp"
#include "support.hpp"

namespace jamgame {
namespace {

LpConstraint row(std::vector<double> c, LpRelation rel, double rhs) {
  return LpConstraint{std::move(c), rel, rhs};
}

TEST(SolveLp, SingleLowerBound) {
  LpProblem p;
  p.objective = {1.0};
  p.constraints = {row({1.0}, LpRelation::kGreaterEqual, 3.0)};
  const LpSolution s = solve_lp(p);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.primal[0], 3.0, 1e-12);
  EXPECT_NEAR(s.objective_value, 3.0, 1e-12);
  EXPECT_NEAR(s.dual[0], 1.0, 1e-12);
}

TEST(SolveLp, DegenerateFacePinnedToFirstVertex) {
  LpProblem p;
  p.objective = {-1.0, -1.0};
  p.constraints = {row({1.0, 1.0}, LpRelation::kLessEqual, 1.0)};
  const LpSolution s = solve_lp(p);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.objective_value, -1.0, 1e-12);
  EXPECT_EQ(s.primal[0], 1.0);
  EXPECT_EQ(s.primal[1], 0.0);
}

TEST(SolveLp, MatchingPenniesGameValue) {
  // min t s.t. A·y <= t, Σy = 1 with A = identity.
  LpProblem p;
  p.objective = {0.0, 0.0, 1.0};
  p.bounds = {{}, {}, {0.0, true}};
  p.constraints = {row({1.0, 0.0, -1.0}, LpRelation::kLessEqual, 0.0),
                   row({0.0, 1.0, -1.0}, LpRelation::kLessEqual, 0.0),
                   row({1.0, 1.0, 0.0}, LpRelation::kEqual, 1.0)};
  const LpSolution s = solve_lp(p);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.objective_value, 0.5, 1e-12);
  EXPECT_NEAR(s.primal[0], 0.5, 1e-12);
  // The row multipliers are the row player's mixed strategy.
  EXPECT_NEAR(-s.dual[0], 0.5, 1e-12);
  EXPECT_NEAR(-s.dual[1], 0.5, 1e-12);
}

TEST(SolveLp, ReportsInfeasibility) {
  LpProblem p;
  p.objective = {1.0};
  p.constraints = {row({1.0}, LpRelation::kLessEqual, 1.0),
                   row({1.0}, LpRelation::kGreaterEqual, 2.0)};
  const LpSolution s = solve_lp(p);
  EXPECT_EQ(s.status, LpStatus::kInfeasible);
  EXPECT_EQ(s.certificate.size(), 2u);
}

TEST(SolveLp, ReportsUnboundedWithRay) {
  LpProblem p;
  p.objective = {-1.0, 0.0};
  p.constraints = {row({1.0, -1.0}, LpRelation::kLessEqual, 1.0)};
  const LpSolution s = solve_lp(p);
  ASSERT_EQ(s.status, LpStatus::kUnbounded);
  ASSERT_EQ(s.certificate.size(), 2u);
  EXPECT_LT(-s.certificate[0], 0.0);
  EXPECT_LE(s.certificate[0] - s.certificate[1], 1e-12);
}

TEST(SolveLp, FreeVariablesAndShiftedBounds) {
  // min x + y, x free with x >= -5 via a row, y >= 2.
  LpProblem p;
  p.objective = {1.0, 1.0};
  p.bounds = {{0.0, true}, {2.0, false}};
  p.constraints = {row({1.0, 0.0}, LpRelation::kGreaterEqual, -5.0)};
  const LpSolution s = solve_lp(p);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.primal[0], -5.0, 1e-12);
  EXPECT_NEAR(s.primal[1], 2.0, 1e-12);
  EXPECT_NEAR(s.objective_value, -3.0, 1e-12);
}

TEST(SolveLp, NegativeRightHandSides) {
  // max x s.t. -x >= -4  ->  x <= 4.
  LpProblem p;
  p.objective = {-1.0};
  p.constraints = {row({-1.0}, LpRelation::kGreaterEqual, -4.0)};
  const LpSolution s = solve_lp(p);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.primal[0], 4.0, 1e-12);
}

TEST(SolveLp, RedundantEqualityRows) {
  LpProblem p;
  p.objective = {1.0, 2.0};
  p.constraints = {row({1.0, 1.0}, LpRelation::kEqual, 1.0),
                   row({2.0, 2.0}, LpRelation::kEqual, 2.0)};
  const LpSolution s = solve_lp(p);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.objective_value, 1.0, 1e-12);
  EXPECT_LT(s.primal_residual, 1e-9);
}

// Random feasible bounded LPs: a known interior point guarantees
// feasibility, a box guarantees boundedness.
LpProblem random_problem(std::mt19937_64& rng, int n, int m) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x0(n);
  for (double& v : x0) v = 0.5 + 0.5 * (u(rng) + 1.0);
  LpProblem p;
  p.objective.resize(n);
  for (double& c : p.objective) c = u(rng);
  for (int r = 0; r < m; ++r) {
    std::vector<double> a(n);
    double ax = 0.0;
    for (int k = 0; k < n; ++k) {
      a[k] = u(rng);
      ax += a[k] * x0[k];
    }
    const int kind = static_cast<int>(rng() % 3);
    if (kind == 0) p.constraints.push_back(row(a, LpRelation::kLessEqual, ax + 0.3));
    if (kind == 1) p.constraints.push_back(row(a, LpRelation::kGreaterEqual, ax - 0.3));
    if (kind == 2) p.constraints.push_back(row(a, LpRelation::kEqual, ax));
  }
  for (int k = 0; k < n; ++k) {
    std::vector<double> a(n, 0.0);
    a[k] = 1.0;
    p.constraints.push_back(row(a, LpRelation::kLessEqual, 10.0));
  }
  return p;
}

TEST(SolveLpProperty, FeasibleStrongDualityAndComplementarity) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const int m = 1 + static_cast<int>(rng() % (n - 1));
    const LpProblem p = random_problem(rng, n, m);
    const LpSolution s = solve_lp(p);
    ASSERT_EQ(s.status, LpStatus::kOptimal) << "trial " << trial;
    EXPECT_LT(s.primal_residual, 1e-9);
    EXPECT_LT(std::abs(s.objective_value - s.dual_objective), 1e-8);
    EXPECT_LT(s.complementarity_residual, 1e-8);
    for (std::size_t r = 0; r < p.constraints.size(); ++r) {
      const LpRelation rel = p.constraints[r].relation;
      if (rel == LpRelation::kLessEqual) EXPECT_LE(s.dual[r], 1e-9);
      if (rel == LpRelation::kGreaterEqual) EXPECT_GE(s.dual[r], -1e-9);
    }
  }
}

TEST(SolveLpProperty, BitwiseDeterministic) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const LpProblem p = random_problem(rng, 6, 4);
    const LpSolution a = solve_lp(p);
    const LpSolution b = solve_lp(p);
    EXPECT_EQ(a.primal, b.primal);
    EXPECT_EQ(a.dual, b.dual);
    EXPECT_EQ(a.iterations, b.iterations);
  }
}

TEST(SolveLp, RejectsRaggedRows) {
  LpProblem p;
  p.objective = {1.0, 1.0};
  p.constraints = {row({1.0}, LpRelation::kLessEqual, 1.0)};
  EXPECT_JAMGAME_ERROR(solve_lp(p), ErrorCode::kDimensionMismatch);
}

}  // namespace
}  // namespace jamgame
