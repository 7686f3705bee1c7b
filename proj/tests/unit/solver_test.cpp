#include <cmath>
#include <random>

#include "jamgame/analytic.hpp"
#include "jamgame/io.hpp"
#include "jamgame/solver.hpp"
#include "support.hpp"

namespace jamgame {
namespace {

using testing::ref;

void expect_certificate(const GameSolution& s, const PayoffMatrix& c,
                        const PowerVector& pv, double j_ave) {
  EXPECT_LE(best_response_transmitter(c, s.y_star).value, s.value + 1e-8);
  EXPECT_GE(best_response_jammer(c, s.x_star, j_ave, pv, s.mode).value,
            s.value - 1e-8);
  EXPECT_LT(s.diagnostics.primal_residual, 1e-9);
  EXPECT_LT(s.diagnostics.duality_gap, 1e-8);
}

TEST(SolveGame, SilentJammer) {
  const GameSolution s = solve_game(ref(0.0));
  EXPECT_NEAR(s.value, 0.5, 1e-12);
  EXPECT_EQ(s.x_star[0], 1.0);
  EXPECT_EQ(s.y_star[0], 1.0);
}

TEST(SolveGame, FullBudgetEquality) {
  const GameSolution s = solve_game(ref(1.0, ConstraintMode::kEquality));
  EXPECT_NEAR(s.value, testing::kR2, 1e-12);
  EXPECT_EQ(s.x_star[2], 1.0);
  EXPECT_NEAR(s.jammer_average_power, 1.0, 1e-12);
}

TEST(SolveGame, FirstGridBudget) {
  const GameSolution s = solve_game(ref(testing::kJAve0));
  EXPECT_NEAR(s.value, testing::kR1, 1e-12);
}

// Off-grid values from an independent LP solver (HiGHS via scipy).
TEST(SolveGame, OffGridValuesAgreeWithExternalSolver) {
  struct Case {
    double pt, noise, j_max;
    int nt;
    double j_ave, value;
  } cases[] = {{1, 1, 1, 2, 0.2, 0.33942668600524395},
               {10, 1, 5, 4, 0.6, 1.0886711540991816},
               {10, 1, 5, 4, 1.0, 0.9079136190587774},
               {0.1, 1, 0.5, 8, 0.05, 0.05185733651054875},
               {3, 2, 4, 6, 1.1, 0.3132220517937966}};
  for (const Case& k : cases) {
    for (ConstraintMode mode :
         {ConstraintMode::kAtMost, ConstraintMode::kEquality}) {
      const GameConfig c =
          GameConfig::make(k.pt, k.noise, k.j_max, k.j_ave, k.nt, mode);
      EXPECT_NEAR(solve_game(c).value, k.value, 1e-9);
    }
  }
}

TEST(SolveGame, InvariantsOnRandomConfigs) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 150; ++trial) {
    const int nt = 1 + static_cast<int>(rng() % 12);
    const auto mode = trial % 2 ? ConstraintMode::kAtMost
                                : ConstraintMode::kEquality;
    const double j_max = 0.2 + 4 * u(rng);
    const GameConfig c = GameConfig::make(0.1 + 10 * u(rng), 0.5 + u(rng),
                                          j_max, u(rng) * j_max, nt, mode);
    const GameSolution s = solve_game(c);
    const RateVector rv = rate_vector(c);
    EXPECT_GE(s.value, rv.rates.back() - 1e-12);
    EXPECT_LE(s.value, rv.rates.front() + 1e-12);
    if (mode == ConstraintMode::kAtMost) {
      EXPECT_LE(s.jammer_average_power, c.j_ave() + 1e-9);
      if (c.j_ave() < threshold(c).j_th) {
        EXPECT_LT(std::abs(s.jammer_average_power - c.j_ave()), 1e-8);
      }
    } else {
      EXPECT_LT(std::abs(s.jammer_average_power - c.j_ave()), 1e-9);
    }
    expect_certificate(s, payoff_matrix(c), power_vector(c), c.j_ave());
  }
}

TEST(SolveGame, ClampAboveThreshold) {
  const GameConfig c = GameConfig::make(10, 1, 5, 0, 4);
  const double j_th = threshold(c).j_th;
  for (double j : {j_th, j_th + 0.1, 5.0}) {
    const GameSolution s = solve_game(c.with_budget(j));
    EXPECT_NEAR(s.value, rate_vector(c).rates.back(), 1e-9);
    EXPECT_GE(s.x_star[4], 1 - 1e-8);
  }
}

TEST(SolveGame, NegativeBudgetRejected) {
  const PayoffMatrix c = payoff_matrix(ref());
  const PowerVector pv = power_vector(ref());
  EXPECT_JAMGAME_ERROR(
      solve_constrained_game(c, pv.levels(), -0.1, ConstraintMode::kAtMost),
      ErrorCode::kBudgetOutOfRange);
  const std::vector<double> short_powers = {0.0, 1.0};
  EXPECT_JAMGAME_ERROR(
      solve_constrained_game(c, short_powers, 0.1, ConstraintMode::kAtMost),
      ErrorCode::kDimensionMismatch);
}

TEST(SolveGame, EqualityBudgetOutsidePowerRangeIsInfeasible) {
  const PayoffMatrix c = payoff_matrix(ref());
  const PowerVector pv = power_vector(ref());
  EXPECT_JAMGAME_ERROR(
      solve_constrained_game(c, pv.levels(), 1.5, ConstraintMode::kEquality),
      ErrorCode::kInfeasible);
}

TEST(BestResponseTransmitter, ReferenceCases) {
  const PayoffMatrix c = payoff_matrix(ref());
  auto r = best_response_transmitter(c, MixedStrategy::pure(3, 0, Role::kJammer));
  EXPECT_EQ(r.index, 0u);
  EXPECT_EQ(r.value, 0.5);
  r = best_response_transmitter(c, MixedStrategy::pure(3, 2, Role::kJammer));
  EXPECT_EQ(r.index, 2u);
  EXPECT_NEAR(r.value, testing::kR2, 1e-15);
  // Above the semi-uniform threshold bound only the lowest rate is safe.
  r = best_response_transmitter(c, semi_uniform(ref(), 0.4, 2));
  EXPECT_EQ(r.index, 2u);
  EXPECT_NEAR(r.value, testing::kR2, 1e-15);
}

TEST(BestResponseJammer, ReferenceCases) {
  const GameConfig g = ref();
  const PayoffMatrix c = payoff_matrix(g);
  const PowerVector pv = power_vector(g);
  auto top = MixedStrategy::pure(3, 0, Role::kTransmitter);
  EXPECT_NEAR(best_response_jammer(c, top, 0.5, pv, ConstraintMode::kAtMost).value,
              0.0, 1e-12);
  auto low = MixedStrategy::pure(3, 2, Role::kTransmitter);
  for (double b : {0.0, 0.3, 1.0}) {
    EXPECT_NEAR(best_response_jammer(c, low, b, pv, ConstraintMode::kAtMost).value,
                testing::kR2, 1e-12);
  }
  const auto x_hat = transmitter_opt(g, 1);
  EXPECT_NEAR(best_response_jammer(c, x_hat, testing::kJth, pv,
                                   ConstraintMode::kAtMost)
                  .value,
              testing::kR2, 1e-12);
}

TEST(Sweep, OrderAndGridValues) {
  const GameConfig c = GameConfig::make(10, 1, 5, 0, 4);
  std::vector<double> budgets;
  std::vector<double> values;
  for (const GridPoint& g : grid_points(c)) {
    budgets.push_back(g.j_ave_m);
    values.push_back(g.value);
  }
  const auto rows = sweep(c, budgets);
  ASSERT_EQ(rows.size(), budgets.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    EXPECT_EQ(rows[k].j_ave, budgets[k]);
    ASSERT_TRUE(rows[k].solution);
    EXPECT_NEAR(rows[k].solution->value, values[k], 1e-9);
  }
}

TEST(Sweep, ZeroBudgetAndMonotoneValues) {
  const GameConfig c = GameConfig::make(3, 2, 4, 0, 6);
  const auto single = sweep(c, std::vector<double>{0.0});
  EXPECT_NEAR(single[0].solution->value, rate_vector(c).rates[0], 1e-12);
  const auto rows = sweep(c, io::budget_grid(0.0, 4.0, 81));
  for (std::size_t k = 1; k < rows.size(); ++k) {
    EXPECT_LE(rows[k].solution->value, rows[k - 1].solution->value + 1e-12);
  }
}

TEST(Sweep, RecordsPerEntryErrors) {
  const auto rows = sweep(ref(), std::vector<double>{0.1, 2.0, 0.2});
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_TRUE(rows[0].solution);
  EXPECT_FALSE(rows[1].solution);
  EXPECT_EQ(rows[1].error, ErrorCode::kBudgetOutOfRange);
  EXPECT_TRUE(rows[2].solution);
}

}  // namespace
}  // namespace jamgame
