#include "jamgame/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace jamgame {

namespace {

constexpr double kGridMatchTolerance = 1e-9;

void check_grid_index(const GameConfig& config, int m) {
  if (m < 0 || m >= config.nt()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "m must lie in [0, nt), got " + std::to_string(m));
  }
}

}  // namespace

MixedStrategy semi_uniform(const GameConfig& config, double j_ave,
                           int support_top) {
  const int n = config.nt();
  if (support_top < 1 || support_top > n) {
    throw Error(ErrorCode::kIndexOutOfRange, "support_top must lie in [1, nt]");
  }
  if (!(j_ave >= 0.0 && j_ave <= config.j_max())) {
    throw Error(ErrorCode::kBudgetOutOfRange, "j_ave must lie in [0, j_max]");
  }
  const double k = support_top;
  const double ratio = j_ave / config.j_max();
  double atom = 1.0 - 2.0 * n / (k + 1.0) * ratio;
  const double mass = 2.0 * n / (k * (k + 1.0)) * ratio;
  if (atom < -MixedStrategy::kProbabilityTolerance) {
    throw Error(ErrorCode::kInfeasibleSemiUniform,
                "zero-power atom would be " + std::to_string(atom));
  }
  atom = std::max(atom, 0.0);
  std::vector<double> probs(static_cast<std::size_t>(n) + 1, 0.0);
  probs[0] = atom;
  for (int j = 1; j <= support_top; ++j) probs[static_cast<std::size_t>(j)] = mass;
  return MixedStrategy::make(std::move(probs), Role::kJammer);
}

ThresholdReport threshold(const GameConfig& config) {
  const RateVector rv = rate_vector(config);
  const AlphaTable alpha = alpha_table(rv);
  const int n = config.nt();
  const double r_low = rv.rates.back();
  const double j_max = config.j_max();

  ThresholdReport out;
  out.j_th = (1.0 - alpha.inv_alpha[static_cast<std::size_t>(n - 1)] * r_low /
                        n) *
             j_max;
  out.z_profile.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.z_profile[static_cast<std::size_t>(i)] =
        0.5 * j_max * (n + 1.0) / (n - i) *
        (1.0 - r_low / rv.rates[static_cast<std::size_t>(i)]);
  }
  out.j_th_upper = out.z_profile[0];
  return out;
}

std::vector<GridPoint> grid_points(const GameConfig& config) {
  const RateVector rv = rate_vector(config);
  const AlphaTable alpha = alpha_table(rv);
  const int n = config.nt();
  std::vector<GridPoint> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    const auto um = static_cast<std::size_t>(m);
    const double next_rate = rv.rates[um + 1];
    const double budget =
        (m + 1 - alpha.inv_alpha[um] * next_rate) * config.j_max() / n;
    out.push_back(GridPoint{m, budget, next_rate});
  }
  return out;
}

MixedStrategy transmitter_opt(const GameConfig& config, int m) {
  check_grid_index(config, m);
  const RateVector rv = rate_vector(config);
  const AlphaTable alpha = alpha_table(rv);
  const auto um = static_cast<std::size_t>(m);
  std::vector<double> probs(rv.rates.size(), 0.0);
  for (std::size_t i = 0; i <= um; ++i) {
    probs[i] = 1.0 / (rv.rates[i] * alpha.inv_alpha[um]);
  }
  return MixedStrategy::make(std::move(probs), Role::kTransmitter);
}

MixedStrategy jammer_opt(const GameConfig& config, int m) {
  check_grid_index(config, m);
  const RateVector rv = rate_vector(config);
  const auto top = static_cast<std::size_t>(m) + 1;
  const double r = rv.rates[top];
  std::vector<double> probs(rv.rates.size(), 0.0);
  probs[0] = r / rv.rates[0];
  for (std::size_t j = 1; j <= top; ++j) {
    probs[j] = (1.0 / rv.rates[j] - 1.0 / rv.rates[j - 1]) * r;
  }
  return MixedStrategy::make(std::move(probs), Role::kJammer);
}

EffectivenessReport effectiveness(const GameConfig& config, double j_ave) {
  if (!(j_ave > 0.0 && j_ave <= config.j_max())) {
    throw Error(ErrorCode::kBudgetOutOfRange, "j_ave must lie in (0, j_max]");
  }
  const ThresholdReport th = threshold(config);
  if (j_ave >= th.j_th - kGridMatchTolerance) {
    return {config.j_max(), config.j_max() / j_ave};
  }
  for (const GridPoint& g : grid_points(config)) {
    if (std::abs(j_ave - g.j_ave_m) <= kGridMatchTolerance) {
      const double j_eff = grid_power(g.m + 1, config.nt(), config.j_max());
      return {j_eff, j_eff / j_ave};
    }
  }
  throw Error(ErrorCode::kNotOnGrid,
              "no closed form below the threshold between grid budgets");
}

double semi_uniform_equivalence_check(const GameConfig& config, int m) {
  const MixedStrategy x_hat = transmitter_opt(config, m);
  const MixedStrategy y_hat = jammer_opt(config, m);
  const double mean = average_power(y_hat, power_vector(config));
  const MixedStrategy y_su = semi_uniform(config, mean, m + 1);
  const PayoffMatrix c = payoff_matrix(config);
  return std::abs(expected_payoff(c, x_hat, y_su) -
                  expected_payoff(c, x_hat, y_hat));
}

}  // namespace jamgame
