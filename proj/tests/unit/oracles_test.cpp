#include <cmath>

#include "jamgame/solver.hpp"
#include "jamgame/validation/oracles.hpp"
#include "support.hpp"

namespace jamgame {
namespace {

TEST(BudgetPolytopeMinimum, VertexEnumeration) {
  const std::vector<double> powers = {0.0, 0.5, 1.0};
  const std::vector<double> g = {3.0, 1.0, 0.0};
  // Best: all mass split between 0 and 1.0 at mean 0.25 costs 2.25, or
  // between 0 and 0.5 at mean 0.25 costs 2.0.
  EXPECT_DOUBLE_EQ(oracles::min_over_budget_polytope(g, powers, 0.25,
                                                     ConstraintMode::kAtMost),
                   2.0);
  EXPECT_DOUBLE_EQ(oracles::min_over_budget_polytope(g, powers, 1.0,
                                                     ConstraintMode::kEquality),
                   0.0);
}

TEST(MeshMinimax, MatchingPenniesBrackets) {
  const PayoffMatrix m(2, 2, {1.0, 0.0, 0.0, 1.0});
  const std::vector<double> powers = {0.0, 0.0};
  const auto b = oracles::mesh_minimax(m, powers, 1.0, 100);
  EXPECT_DOUBLE_EQ(b.lower, 0.5);
  EXPECT_DOUBLE_EQ(b.upper, 0.5);
}

TEST(MeshMinimax, BracketsLpValueOnCoarseMesh) {
  const GameConfig c = GameConfig::make(1, 1, 1, 0.2, 2);
  const auto b = oracles::mesh_minimax(payoff_matrix(c),
                                       power_vector(c).levels(), 0.2, 200);
  const double v = solve_game(c).value;
  EXPECT_LE(b.lower, v + 1e-12);
  EXPECT_GE(b.upper, v - 1e-12);
  EXPECT_LT(b.upper - b.lower, 1e-2);
}

TEST(MidpointIntegral, Exactness) {
  EXPECT_NEAR(oracles::midpoint_integral([](double x) { return 2 * x + 1; }, 0,
                                         3, 7),
              12.0, 1e-13);
}

}  // namespace
}  // namespace jamgame
