#pragma once

// Closed-form objects of the discrete game: the jamming threshold and its
// semi-uniform upper bound, the budgets at which the game value is exactly a
// grid rate, the optimal strategies at those budgets, and the jammer's
// effectiveness factor.

#include <vector>

#include "jamgame/model.hpp"

namespace jamgame {

struct ThresholdReport {
  double j_th = 0.0;        // budget above which the value is R_{N_T}
  double j_th_upper = 0.0;  // bound obtained with a semi-uniform jammer
  // Z_i, i = 0..N_T-1: budget a semi-uniform jammer needs to make the
  // lowest rate beat rate i. Strictly decreasing, z_profile[0] = j_th_upper.
  std::vector<double> z_profile;
};

struct GridPoint {
  int m = 0;
  double j_ave_m = 0.0;
  double value = 0.0;  // R_{m+1}
};

struct EffectivenessReport {
  double j_eff = 0.0;     // barrage power with the same effect
  double e_factor = 0.0;  // j_eff / j_ave
};

// Semi-uniform pmf on {0, ..., support_top}: an atom at zero power and equal
// mass on the remaining support, with mean power exactly j_ave.
// Throws kInfeasibleSemiUniform if the atom at zero would be negative.
MixedStrategy semi_uniform(const GameConfig& config, double j_ave,
                           int support_top);

ThresholdReport threshold(const GameConfig& config);

// Budgets J_Ave,m for m = 0..N_T-1; the last one equals threshold().j_th.
std::vector<GridPoint> grid_points(const GameConfig& config);

// x̂_m: mass proportional to 1/R_i on rates 0..m.
MixedStrategy transmitter_opt(const GameConfig& config, int m);

// ŷ_m: holds every transmitter strategy to at most R_{m+1} while spending
// exactly J_Ave,m.
MixedStrategy jammer_opt(const GameConfig& config, int m);

// Defined at grid budgets and at or above the threshold; elsewhere throws
// kNotOnGrid. Grid matching uses an absolute tolerance of 1e-9.
EffectivenessReport effectiveness(const GameConfig& config, double j_ave);

// |x̂ᵀ·C·y_SU - x̂ᵀ·C·ŷ| where y_SU is the truncated semi-uniform pmf with
// the same support and mean power as ŷ.
double semi_uniform_equivalence_check(const GameConfig& config, int m);

}  // namespace jamgame
