#include <cmath>

#include "jamgame/continuous.hpp"
#include "jamgame/model.hpp"
#include "jamgame/validation/oracles.hpp"
#include "support.hpp"

namespace jamgame {
namespace {

using testing::ref;

TEST(AdaptiveSimpson, PolynomialAndTranscendental) {
  const auto cubic = adaptive_simpson([](double x) { return x * x * x; }, 0, 2, 1e-12);
  EXPECT_NEAR(cubic.value, 4.0, 1e-13);
  const auto s = adaptive_simpson([](double x) { return std::sin(x); }, 0, M_PI, 1e-12);
  EXPECT_NEAR(s.value, 2.0, 1e-11);
  EXPECT_GT(s.intervals, 1u);
}

TEST(AdaptiveSimpson, GivesUpOnBudgetExhaustion) {
  EXPECT_JAMGAME_ERROR(
      adaptive_simpson([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                       1e-14, 64),
      ErrorCode::kQuadratureNonConvergence);
}

TEST(RateContinuous, MatchesGrid) {
  EXPECT_DOUBLE_EQ(rate_continuous(ref(), 0.0), 0.5);
  EXPECT_NEAR(rate_continuous(ref(), 1.0), testing::kR2, 1e-15);
  EXPECT_NEAR(rate_continuous(ref(), 0.5), testing::kR1, 1e-15);
  EXPECT_JAMGAME_ERROR(rate_continuous(ref(), 1.1), ErrorCode::kPowerOutOfRange);
  const GameConfig c = GameConfig::make(3, 2, 5, 0, 13);
  const RateVector rv = rate_vector(c);
  for (int i = 0; i <= 13; ++i) {
    EXPECT_NEAR(rate_continuous(c, rv.assumed_powers[i]), rv.rates[i], 1e-15);
  }
}

TEST(JthLimit, ReferenceValues) {
  const ContinuousReport r = jth_limit(ref());
  EXPECT_NEAR(r.j_th_lim_ub, testing::kJthLimUb, 1e-14);
  EXPECT_NEAR(r.integral, testing::kIntegral, 1e-11);
  EXPECT_NEAR(r.j_th_lim, testing::kJthLim, 1e-11);
  EXPECT_LT(r.quadrature_error_estimate, 1e-10 * r.integral);
  const double midpoint = oracles::midpoint_integral(
      [](double j) { return 1.0 / rate_continuous(ref(), j); }, 0.0, 1.0,
      1'000'000);
  EXPECT_NEAR(r.integral, midpoint, 1e-8);
}

TEST(JthLimit, RangeOverConfigs) {
  for (double pt : {1e-6, 1e-3, 1.0, 1e3}) {
    for (double j_max : {0.01, 1.0, 100.0}) {
      const ContinuousReport r = jth_limit(GameConfig::make(pt, 1, j_max, 0, 1));
      EXPECT_GT(r.j_th_lim, 0.0);
      EXPECT_LT(r.j_th_lim, j_max);
    }
  }
}

TEST(JthLimit, GuardsTinyTransmitPower) {
  EXPECT_JAMGAME_ERROR(jth_limit(GameConfig::make(1e-7, 1, 1, 0, 2)),
                       ErrorCode::kDomainTooExtreme);
}

TEST(ConvergenceCurve, MatchesDiscreteThresholdAndNarrows) {
  const std::vector<int> one = {2};
  const auto c1 = convergence_curve(ref(), one);
  ASSERT_EQ(c1.size(), 1u);
  EXPECT_NEAR(c1[0].second, testing::kJth, 1e-14);

  const std::vector<int> nts = {2, 4, 8, 16, 32, 64, 128, 256};
  const auto curve = convergence_curve(ref(), nts);
  for (const auto& [nt, j] : curve) {
    EXPECT_GT(j, 0.0);
    EXPECT_LT(j, 1.0);
  }
  EXPECT_LT(std::abs(curve.back().second - testing::kJthLim),
            std::abs(curve.front().second - testing::kJthLim));
}

TEST(ConvergenceCurve, RejectsUnsortedList) {
  const std::vector<int> bad = {8, 4};
  EXPECT_JAMGAME_ERROR(convergence_curve(ref(), bad), ErrorCode::kInvalidArgument);
}

TEST(RiemannSum, ErrorHalvesWithGridDoubling) {
  const GameConfig c = ref();
  auto error_at = [&](int nt) {
    const RateVector rv = rate_vector(c.with_grid(nt));
    double sum = 0.0;
    for (int i = 0; i < nt; ++i) sum += 1.0 / rv.rates[i];
    return std::abs(sum * c.j_max() / nt - testing::kIntegral);
  };
  for (int nt = 32; nt <= 512; nt *= 2) {
    const double ratio = error_at(nt) / error_at(2 * nt);
    EXPECT_NEAR(ratio, 2.0, 0.4) << nt;
  }
}

}  // namespace
}  // namespace jamgame
