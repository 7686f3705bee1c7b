#pragma once

// Seeded packet-level Monte Carlo of the jamming game.
//
// Generator: std::mt19937_64 seeded with the run seed. Each packet consumes
// two 64-bit outputs, transmitter first, then jammer; each is mapped to a
// uniform double in [0, 1) from its top 53 bits. A pure strategy is chosen
// by inverse CDF: the first index whose cumulative weight is strictly
// greater than the draw. The report is therefore a pure function of
// (config, x, y, packets, seed) on any IEEE-754 platform.

#include <cstdint>
#include <string>
#include <string_view>

#include "jamgame/model.hpp"

namespace jamgame {

struct SimReport {
  std::uint64_t packets = 0;
  double mean_throughput = 0.0;
  double loss_rate = 0.0;
  double empirical_jammer_power = 0.0;
  double std_error = 0.0;               // of mean_throughput
  double jammer_power_std_error = 0.0;  // of empirical_jammer_power
  std::uint64_t seed = 0;

  bool operator==(const SimReport&) const = default;
};

SimReport simulate(const GameConfig& config, const MixedStrategy& x,
                   const MixedStrategy& y, std::uint64_t packets,
                   std::uint64_t seed);

enum class PresetKind { kBarrage, kSemiUniform, kOptimalGrid };

struct JammerPreset {
  PresetKind kind = PresetKind::kBarrage;
  int m = 0;  // kOptimalGrid only

  // "barrage", "semi-uniform" or "grid:<m>".
  static JammerPreset parse(std::string_view text);
  std::string to_string() const;
};

// barrage: all mass on J_Max; semi-uniform: full-support semi-uniform pmf at
// config.j_ave(); grid:<m>: the optimal jammer strategy at grid point m.
MixedStrategy preset_strategy(const GameConfig& config,
                              const JammerPreset& preset);

SimReport simulate_preset_jammer(const GameConfig& config,
                                 const MixedStrategy& x,
                                 const JammerPreset& preset,
                                 std::uint64_t packets, std::uint64_t seed);

}  // namespace jamgame
