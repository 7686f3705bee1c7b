#include "jamgame/sim.hpp"

#include <charconv>
#include <cmath>
#include <random>
#include <vector>

#include "jamgame/analytic.hpp"

namespace jamgame {

namespace {

double unit_draw(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

class InverseCdf {
 public:
  explicit InverseCdf(const MixedStrategy& s) : cumulative_(s.size()) {
    double acc = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      acc += s[k];
      cumulative_[k] = acc;
      if (s[k] > 0.0) last_positive_ = k;
    }
  }

  std::size_t operator()(double u) const {
    for (std::size_t k = 0; k < cumulative_.size(); ++k) {
      if (u < cumulative_[k]) return k;
    }
    return last_positive_;  // u beyond a sum that rounded below one
  }

 private:
  std::vector<double> cumulative_;
  std::size_t last_positive_ = 0;
};

// Welford running mean and variance.
struct Moments {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double v) {
    ++n;
    const double d = v - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (v - mean);
  }
  double std_error() const {
    if (n < 2) return 0.0;
    const double var = m2 / static_cast<double>(n - 1);
    return std::sqrt(var / static_cast<double>(n));
  }
};

}  // namespace

SimReport simulate(const GameConfig& config, const MixedStrategy& x,
                   const MixedStrategy& y, std::uint64_t packets,
                   std::uint64_t seed) {
  const std::size_t n = static_cast<std::size_t>(config.nt()) + 1;
  if (x.size() != n || y.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "strategies must have nt + 1 entries");
  }
  if (packets == 0) throw Error(ErrorCode::kZeroPackets, "packets must be >= 1");

  const RateVector rv = rate_vector(config);
  const PowerVector powers = power_vector(config);
  const InverseCdf pick_rate(x);
  const InverseCdf pick_power(y);
  std::mt19937_64 gen(seed);

  Moments throughput;
  Moments power;
  std::uint64_t lost = 0;
  for (std::uint64_t p = 0; p < packets; ++p) {
    const std::size_t i = pick_rate(unit_draw(gen));
    const std::size_t j = pick_power(unit_draw(gen));
    const bool survives = j <= i;
    if (!survives) ++lost;
    throughput.add(survives ? rv.rates[i] : 0.0);
    power.add(powers[j]);
  }

  SimReport report;
  report.packets = packets;
  report.mean_throughput = throughput.mean;
  report.loss_rate = static_cast<double>(lost) / static_cast<double>(packets);
  report.empirical_jammer_power = power.mean;
  report.std_error = throughput.std_error();
  report.jammer_power_std_error = power.std_error();
  report.seed = seed;
  return report;
}

JammerPreset JammerPreset::parse(std::string_view text) {
  if (text == "barrage") return {PresetKind::kBarrage, 0};
  if (text == "semi-uniform") return {PresetKind::kSemiUniform, 0};
  constexpr std::string_view kGrid = "grid:";
  if (text.substr(0, kGrid.size()) == kGrid) {
    const std::string_view digits = text.substr(kGrid.size());
    int m = -1;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && m >= 0) {
      return {PresetKind::kOptimalGrid, m};
    }
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown jammer preset '" + std::string(text) + "'");
}

std::string JammerPreset::to_string() const {
  switch (kind) {
    case PresetKind::kBarrage: return "barrage";
    case PresetKind::kSemiUniform: return "semi-uniform";
    case PresetKind::kOptimalGrid: return "grid:" + std::to_string(m);
  }
  return "unknown";
}

MixedStrategy preset_strategy(const GameConfig& config,
                              const JammerPreset& preset) {
  const std::size_t n = static_cast<std::size_t>(config.nt()) + 1;
  switch (preset.kind) {
    case PresetKind::kBarrage:
      return MixedStrategy::pure(n, n - 1, Role::kJammer);
    case PresetKind::kSemiUniform:
      return semi_uniform(config, config.j_ave(), config.nt());
    case PresetKind::kOptimalGrid:
      return jammer_opt(config, preset.m);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown preset kind");
}

SimReport simulate_preset_jammer(const GameConfig& config,
                                 const MixedStrategy& x,
                                 const JammerPreset& preset,
                                 std::uint64_t packets, std::uint64_t seed) {
  return simulate(config, x, preset_strategy(config, preset), packets, seed);
}

}  // namespace jamgame
