#pragma once

// Continuum-strategy limit of the jamming threshold.

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "jamgame/model.hpp"

namespace jamgame {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute
  std::size_t intervals = 0;
};

// Adaptive Simpson with Richardson-corrected panels. Panels are combined
// left to right, so the result does not depend on evaluation order.
// Throws kQuadratureNonConvergence when the subdivision budget runs out.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f,
                                  double a, double b, double rel_tol,
                                  std::size_t max_intervals = 1u << 20);

struct ContinuousReport {
  double j_th_lim = 0.0;
  double j_th_lim_ub = 0.0;
  double integral = 0.0;  // ∫_0^{J_Max} 1/R(J) dJ
  double quadrature_error_estimate = 0.0;
};

// R(J) for any power in [0, j_max]; throws kPowerOutOfRange otherwise.
double rate_continuous(const GameConfig& config, double j);

// Requires pt >= 1e-6·noise (kDomainTooExtreme otherwise).
ContinuousReport jth_limit(const GameConfig& config);

// Discrete threshold j_th for each grid size; nt_list must be strictly
// ascending.
std::vector<std::pair<int, double>> convergence_curve(
    const GameConfig& config, std::span<const int> nt_list);

}  // namespace jamgame
