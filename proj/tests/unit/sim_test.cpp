#include <cmath>
#include <random>

#include "jamgame/analytic.hpp"
#include "jamgame/sim.hpp"
#include "support.hpp"

namespace jamgame {
namespace {

using testing::ref;

MixedStrategy e(std::size_t i, Role r) { return MixedStrategy::pure(3, i, r); }

TEST(Simulate, DeterministicOutcomes) {
  const SimReport ok = simulate(ref(), e(0, Role::kTransmitter),
                                e(0, Role::kJammer), 1000, 42);
  EXPECT_EQ(ok.mean_throughput, 0.5);
  EXPECT_EQ(ok.loss_rate, 0.0);
  EXPECT_EQ(ok.std_error, 0.0);
  const SimReport lost = simulate(ref(), e(0, Role::kTransmitter),
                                  e(2, Role::kJammer), 1000, 42);
  EXPECT_EQ(lost.mean_throughput, 0.0);
  EXPECT_EQ(lost.loss_rate, 1.0);
  EXPECT_EQ(lost.empirical_jammer_power, 1.0);
}

TEST(Simulate, GridEquilibriumThroughput) {
  const SimReport r = simulate(ref(), transmitter_opt(ref(), 1),
                               jammer_opt(ref(), 1), 1'000'000, 1);
  EXPECT_LE(std::abs(r.mean_throughput - testing::kR2), 4 * r.std_error);
  EXPECT_LE(std::abs(r.empirical_jammer_power - testing::kJth),
            4 * r.jammer_power_std_error);
}

TEST(Simulate, Errors) {
  EXPECT_JAMGAME_ERROR(simulate(ref(), e(0, Role::kTransmitter),
                                MixedStrategy::pure(2, 0, Role::kJammer), 10, 1),
                       ErrorCode::kDimensionMismatch);
  EXPECT_JAMGAME_ERROR(simulate(ref(), e(0, Role::kTransmitter),
                                e(0, Role::kJammer), 0, 1),
                       ErrorCode::kZeroPackets);
}

TEST(Simulate, ReproducibleAndSeedSensitive) {
  const auto x = MixedStrategy::uniform(3, Role::kTransmitter);
  const auto y = MixedStrategy::uniform(3, Role::kJammer);
  const SimReport a = simulate(ref(), x, y, 10'000, 99);
  EXPECT_EQ(a, simulate(ref(), x, y, 10'000, 99));
  EXPECT_NE(a.mean_throughput, simulate(ref(), x, y, 10'000, 100).mean_throughput);
  EXPECT_EQ(a.seed, 99u);
  EXPECT_EQ(a.packets, 10'000u);
}

// Expected numbers come from a separate Python implementation of
// MT19937-64 with the same stream order and inverse-CDF rule.
TEST(Simulate, GoldenReport) {
  const auto x = MixedStrategy::make({0.2, 0.3, 0.5}, Role::kTransmitter);
  const auto y = MixedStrategy::make({0.5, 0.25, 0.25}, Role::kJammer);
  const SimReport r = simulate(ref(), x, y, 1000, 7);
  EXPECT_EQ(r.loss_rate, 0.17);
  EXPECT_NEAR(r.mean_throughput, 0.2821284095392087, 1e-15);
  EXPECT_NEAR(r.empirical_jammer_power, 0.358, 1e-15);
}

TEST(SimulateProperty, UnbiasedLossAndPower) {
  std::mt19937_64 rng(31);
  const GameConfig c = GameConfig::make(2, 1, 3, 0, 5);
  const PayoffMatrix mat = payoff_matrix(c);
  const PowerVector pv = power_vector(c);
  int misses = 0;
  const int trials = 100;
  for (int t = 0; t < trials; ++t) {
    std::vector<double> xs(6), ys(6);
    double sx = 0, sy = 0;
    for (int k = 0; k < 6; ++k) {
      xs[k] = -std::log1p(-std::generate_canonical<double, 53>(rng));
      ys[k] = -std::log1p(-std::generate_canonical<double, 53>(rng));
      sx += xs[k];
      sy += ys[k];
    }
    for (int k = 0; k < 6; ++k) {
      xs[k] /= sx;
      ys[k] /= sy;
    }
    const auto x = MixedStrategy::make(xs, Role::kTransmitter);
    const auto y = MixedStrategy::make(ys, Role::kJammer);
    const SimReport r = simulate(c, x, y, 100'000, rng());
    if (std::abs(r.mean_throughput - expected_payoff(mat, x, y)) > 4 * r.std_error) {
      ++misses;
    }
    EXPECT_LE(std::abs(r.empirical_jammer_power - average_power(y, pv)),
              4 * r.jammer_power_std_error + 1e-15);
    double loss = 0.0;
    for (int i = 0; i < 6; ++i) {
      double above = 0.0;
      for (int j = i + 1; j < 6; ++j) above += ys[j];
      loss += xs[i] * above;
    }
    const double binom = std::sqrt(loss * (1 - loss) / 100'000);
    EXPECT_LE(std::abs(r.loss_rate - loss), 4 * binom + 1e-15);
    EXPECT_GE(r.mean_throughput, 0.0);
    EXPECT_LE(r.mean_throughput, rate_vector(c).rates[0]);
  }
  EXPECT_LE(misses, 1);
}

TEST(JammerPreset, ParseAndPrint) {
  EXPECT_EQ(JammerPreset::parse("barrage").kind, PresetKind::kBarrage);
  EXPECT_EQ(JammerPreset::parse("semi-uniform").kind, PresetKind::kSemiUniform);
  const JammerPreset g = JammerPreset::parse("grid:3");
  EXPECT_EQ(g.kind, PresetKind::kOptimalGrid);
  EXPECT_EQ(g.m, 3);
  EXPECT_EQ(g.to_string(), "grid:3");
  EXPECT_JAMGAME_ERROR(JammerPreset::parse("grid:x"), ErrorCode::kInvalidArgument);
  EXPECT_JAMGAME_ERROR(JammerPreset::parse("pulsed"), ErrorCode::kInvalidArgument);
}

TEST(SimulatePreset, ReferenceCases) {
  const SimReport barrage = simulate_preset_jammer(
      ref(), e(2, Role::kTransmitter), JammerPreset::parse("barrage"), 1000, 1);
  EXPECT_NEAR(barrage.mean_throughput, testing::kR2, 1e-15);

  const SimReport su = simulate_preset_jammer(
      ref(0.3), e(0, Role::kTransmitter), JammerPreset::parse("semi-uniform"),
      100'000, 2);
  const double binom = std::sqrt(0.4 * 0.6 / 100'000);
  EXPECT_LE(std::abs(su.loss_rate - 0.4), 4 * binom);

  const SimReport grid = simulate_preset_jammer(
      ref(), transmitter_opt(ref(), 0), JammerPreset::parse("grid:0"), 100'000, 3);
  EXPECT_LE(std::abs(grid.mean_throughput - testing::kR1), 4 * grid.std_error);
}

}  // namespace
}  // namespace jamgame
