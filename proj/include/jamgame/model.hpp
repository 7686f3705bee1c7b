#pragma once

// Domain types of the rate-adaptation vs. power-limited jammer game: channel
// configuration, the transmitter's rate grid, the jammer's power grid, the
// lower-triangular capacity payoff matrix and mixed strategies over it.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "jamgame/error.hpp"

namespace jamgame {

// Which constrained strategy space the jammer plays in: average power
// exactly equal to the budget, or at most the budget.
enum class ConstraintMode { kEquality, kAtMost };

std::string_view to_string(ConstraintMode mode);
// Accepts "eq" / "le" (and the long forms "equality" / "at_most").
ConstraintMode parse_constraint_mode(std::string_view text);

// Validated channel and game parameters. All powers are linear.
class GameConfig {
 public:
  static GameConfig make(double pt, double noise, double j_max, double j_ave,
                         int nt, ConstraintMode mode = ConstraintMode::kAtMost,
                         double log_base = 2.0);

  double pt() const { return pt_; }
  double noise() const { return noise_; }
  double j_max() const { return j_max_; }
  double j_ave() const { return j_ave_; }
  // Grid size N_T; the jammer uses the same grid (N_J = N_T).
  int nt() const { return nt_; }
  ConstraintMode mode() const { return mode_; }
  double log_base() const { return log_base_; }

  GameConfig with_budget(double j_ave) const;
  GameConfig with_grid(int nt) const;
  GameConfig with_mode(ConstraintMode mode) const;

 private:
  GameConfig(double pt, double noise, double j_max, double j_ave, int nt,
             ConstraintMode mode, double log_base)
      : pt_(pt), noise_(noise), j_max_(j_max), j_ave_(j_ave), nt_(nt),
        mode_(mode), log_base_(log_base) {}

  double pt_;
  double noise_;
  double j_max_;
  double j_ave_;
  int nt_;
  ConstraintMode mode_;
  double log_base_;
};

GameConfig make_config(double pt, double noise, double j_max, double j_ave,
                       int nt, ConstraintMode mode = ConstraintMode::kAtMost,
                       double log_base = 2.0);

// AWGN capacity ½·log_b(1 + pt/(noise + jamming)).
double capacity(double pt, double noise, double jamming, double log_base);

// Jamming power levels J_j = (j/N_T)·J_Max, j = 0..N_T.
class PowerVector {
 public:
  explicit PowerVector(std::vector<double> levels);

  std::span<const double> levels() const { return levels_; }
  std::size_t size() const { return levels_.size(); }
  double operator[](std::size_t j) const { return levels_[j]; }

 private:
  std::vector<double> levels_;
};

PowerVector power_vector(const GameConfig& config);

// Grid power (index/nt)·j_max, computed the same way everywhere so that
// power comparisons agree with index comparisons.
double grid_power(int index, int nt, double j_max);

struct RateVector {
  std::vector<double> rates;           // R_i, strictly decreasing
  std::vector<double> assumed_powers;  // J_T the rate was sized for
};

RateVector rate_vector(const GameConfig& config);

// Transmitter payoff for one packet: R(j_t) if the actual power does not
// exceed the assumed one, otherwise the packet is lost.
double payoff(double j_t, double j, const GameConfig& config);

// Dense row-major payoff matrix; rows are transmitter pure strategies and
// columns jammer pure strategies.
class PayoffMatrix {
 public:
  PayoffMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(entries_).subspan(i * cols_, cols_);
  }
  std::span<const double> entries() const { return entries_; }

  // C·y, the payoff of every transmitter row against y.
  std::vector<double> row_payoffs(std::span<const double> y) const;
  // xᵀ·C, the payoff of every jammer column against x.
  std::vector<double> column_payoffs(std::span<const double> x) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

PayoffMatrix payoff_matrix(const GameConfig& config);

enum class Role { kTransmitter, kJammer };

// Probability vector over pure strategies. Entries lie in [0, 1] and sum to
// one within kProbabilityTolerance; construction renormalizes deviations
// below the tolerance and rejects anything larger.
class MixedStrategy {
 public:
  static constexpr double kProbabilityTolerance = 1e-12;

  static MixedStrategy make(std::vector<double> probs, Role role);
  static MixedStrategy pure(std::size_t size, std::size_t index, Role role);
  static MixedStrategy uniform(std::size_t size, Role role);

  std::span<const double> probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  Role role() const { return role_; }

 private:
  MixedStrategy(std::vector<double> probs, Role role)
      : probs_(std::move(probs)), role_(role) {}

  std::vector<double> probs_;
  Role role_;
};

// Bilinear form xᵀ·C·y.
double expected_payoff(const PayoffMatrix& matrix, const MixedStrategy& x,
                       const MixedStrategy& y);

// yᵀ·J.
double average_power(const MixedStrategy& y, const PowerVector& powers);
double average_power(std::span<const double> y, std::span<const double> powers);

// Partial sums of reciprocal rates, inv_alpha[m] = Σ_{i≤m} 1/R_i.
struct AlphaTable {
  std::vector<double> inv_alpha;

  double alpha(std::size_t m) const { return 1.0 / inv_alpha[m]; }
};

AlphaTable alpha_table(const RateVector& rates);

// A game on independent transmitter and jammer grids (N_T ≠ N_J allowed).
struct RectangularGame {
  PayoffMatrix matrix;
  std::vector<double> assumed_powers;  // one per row
  std::vector<double> rates;           // one per row
  std::vector<double> jammer_powers;   // one per column
};

// Rows follow config's N_T grid; columns use a uniform grid of nj+1 powers.
RectangularGame rectangular_game(const GameConfig& config, int nj);

struct ReducedGame {
  PayoffMatrix matrix;
  std::vector<std::size_t> row_index;  // reduced row -> original row
  std::vector<std::size_t> col_index;  // reduced column -> original column
  std::vector<double> rates;
  std::vector<double> jammer_powers;
};

// Removes dominated pure strategies. Jammer columns that kill the same set
// of rows collapse to the cheapest one; transmitter rows that survive the
// same set of columns collapse to the highest rate. Repeats to a fixed
// point. Only uniform grids starting at zero are accepted.
ReducedGame reduce_dominated(const RectangularGame& game);

}  // namespace jamgame
