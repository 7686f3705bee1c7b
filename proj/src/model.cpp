#include "jamgame/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace jamgame {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + ": " + std::to_string(a) + " vs " +
                    std::to_string(b));
  }
}

bool is_uniform_from_zero(std::span<const double> levels) {
  if (levels.empty() || levels[0] != 0.0) return false;
  if (levels.size() == 1) return true;
  const double step = levels.back() / static_cast<double>(levels.size() - 1);
  if (!(step > 0.0)) return false;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const double expected = step * static_cast<double>(k);
    if (std::abs(levels[k] - expected) > 1e-12 * levels.back()) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(ConstraintMode mode) {
  return mode == ConstraintMode::kEquality ? "eq" : "le";
}

ConstraintMode parse_constraint_mode(std::string_view text) {
  if (text == "eq" || text == "equality") return ConstraintMode::kEquality;
  if (text == "le" || text == "at_most") return ConstraintMode::kAtMost;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown constraint mode '" + std::string(text) + "'");
}

GameConfig GameConfig::make(double pt, double noise, double j_max,
                            double j_ave, int nt, ConstraintMode mode,
                            double log_base) {
  if (!positive_finite(pt)) {
    throw Error(ErrorCode::kNonPositiveParameter, "pt must be > 0");
  }
  if (!positive_finite(noise)) {
    throw Error(ErrorCode::kNonPositiveParameter, "noise must be > 0");
  }
  if (!positive_finite(j_max)) {
    throw Error(ErrorCode::kNonPositiveParameter, "j_max must be > 0");
  }
  if (!positive_finite(log_base)) {
    throw Error(ErrorCode::kNonPositiveParameter, "log_base must be > 0");
  }
  if (log_base == 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "log_base must differ from 1");
  }
  if (!(j_ave >= 0.0 && j_ave <= j_max)) {
    throw Error(ErrorCode::kBudgetOutOfRange,
                "j_ave must lie in [0, j_max], got " + std::to_string(j_ave));
  }
  if (nt < 1) {
    throw Error(ErrorCode::kZeroGrid, "nt must be >= 1");
  }
  return GameConfig(pt, noise, j_max, j_ave, nt, mode, log_base);
}

GameConfig GameConfig::with_budget(double j_ave) const {
  return make(pt_, noise_, j_max_, j_ave, nt_, mode_, log_base_);
}

GameConfig GameConfig::with_grid(int nt) const {
  return make(pt_, noise_, j_max_, j_ave_, nt, mode_, log_base_);
}

GameConfig GameConfig::with_mode(ConstraintMode mode) const {
  return make(pt_, noise_, j_max_, j_ave_, nt_, mode, log_base_);
}

GameConfig make_config(double pt, double noise, double j_max, double j_ave,
                       int nt, ConstraintMode mode, double log_base) {
  return GameConfig::make(pt, noise, j_max, j_ave, nt, mode, log_base);
}

double capacity(double pt, double noise, double jamming, double log_base) {
  return 0.5 * std::log1p(pt / (noise + jamming)) / std::log(log_base);
}

PowerVector::PowerVector(std::vector<double> levels)
    : levels_(std::move(levels)) {}

double grid_power(int index, int nt, double j_max) {
  return (static_cast<double>(index) / static_cast<double>(nt)) * j_max;
}

PowerVector power_vector(const GameConfig& config) {
  std::vector<double> levels(static_cast<std::size_t>(config.nt()) + 1);
  for (int j = 0; j <= config.nt(); ++j) {
    levels[static_cast<std::size_t>(j)] =
        grid_power(j, config.nt(), config.j_max());
  }
  return PowerVector(std::move(levels));
}

RateVector rate_vector(const GameConfig& config) {
  RateVector out;
  const auto n = static_cast<std::size_t>(config.nt()) + 1;
  out.rates.resize(n);
  out.assumed_powers.resize(n);
  for (int i = 0; i <= config.nt(); ++i) {
    const double assumed = grid_power(i, config.nt(), config.j_max());
    out.assumed_powers[static_cast<std::size_t>(i)] = assumed;
    out.rates[static_cast<std::size_t>(i)] =
        capacity(config.pt(), config.noise(), assumed, config.log_base());
  }
  return out;
}

double payoff(double j_t, double j, const GameConfig& config) {
  const auto in_range = [&](double p) {
    return p >= 0.0 && p <= config.j_max();
  };
  if (!in_range(j_t) || !in_range(j)) {
    throw Error(ErrorCode::kPowerOutOfRange,
                "powers must lie in [0, j_max]");
  }
  if (j_t >= j) {
    return capacity(config.pt(), config.noise(), j_t, config.log_base());
  }
  return 0.0;
}

PayoffMatrix::PayoffMatrix(std::size_t rows, std::size_t cols,
                           std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require_same_size(entries_.size(), rows_ * cols_, "payoff matrix entries");
}

std::vector<double> PayoffMatrix::row_payoffs(std::span<const double> y) const {
  require_same_size(y.size(), cols_, "jammer strategy vs matrix columns");
  std::vector<double> out(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * y[j];
    out[i] = acc;
  }
  return out;
}

std::vector<double> PayoffMatrix::column_payoffs(
    std::span<const double> x) const {
  require_same_size(x.size(), rows_, "transmitter strategy vs matrix rows");
  std::vector<double> out(cols_, 0.0);
  for (std::size_t j = 0; j < cols_; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) acc += x[i] * (*this)(i, j);
    out[j] = acc;
  }
  return out;
}

PayoffMatrix payoff_matrix(const GameConfig& config) {
  const RateVector rates = rate_vector(config);
  const std::size_t n = rates.rates.size();
  std::vector<double> entries(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) entries[i * n + j] = rates.rates[i];
  }
  return PayoffMatrix(n, n, std::move(entries));
}

MixedStrategy MixedStrategy::make(std::vector<double> probs, Role role) {
  if (probs.empty()) {
    throw Error(ErrorCode::kInvalidStrategy, "empty strategy");
  }
  double sum = 0.0;
  for (double& p : probs) {
    if (!std::isfinite(p) || p < -kProbabilityTolerance ||
        p > 1.0 + kProbabilityTolerance) {
      throw Error(ErrorCode::kInvalidStrategy,
                  "probability outside [0, 1]: " + std::to_string(p));
    }
    p = std::clamp(p, 0.0, 1.0);
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbabilityTolerance) {
    throw Error(ErrorCode::kInvalidStrategy,
                "probabilities sum to " + std::to_string(sum));
  }
  if (sum != 1.0) {
    for (double& p : probs) p /= sum;
  }
  return MixedStrategy(std::move(probs), role);
}

MixedStrategy MixedStrategy::pure(std::size_t size, std::size_t index,
                                  Role role) {
  if (index >= size) {
    throw Error(ErrorCode::kIndexOutOfRange, "pure strategy index");
  }
  std::vector<double> probs(size, 0.0);
  probs[index] = 1.0;
  return MixedStrategy(std::move(probs), role);
}

MixedStrategy MixedStrategy::uniform(std::size_t size, Role role) {
  if (size == 0) throw Error(ErrorCode::kInvalidStrategy, "empty strategy");
  return MixedStrategy(
      std::vector<double>(size, 1.0 / static_cast<double>(size)), role);
}

double expected_payoff(const PayoffMatrix& matrix, const MixedStrategy& x,
                       const MixedStrategy& y) {
  require_same_size(x.size(), matrix.rows(), "x vs matrix rows");
  require_same_size(y.size(), matrix.cols(), "y vs matrix columns");
  const std::vector<double> cy = matrix.row_payoffs(y.probs());
  double acc = 0.0;
  for (std::size_t i = 0; i < cy.size(); ++i) acc += x[i] * cy[i];
  return acc;
}

double average_power(std::span<const double> y,
                     std::span<const double> powers) {
  require_same_size(y.size(), powers.size(), "strategy vs power levels");
  double acc = 0.0;
  for (std::size_t j = 0; j < y.size(); ++j) acc += y[j] * powers[j];
  return acc;
}

double average_power(const MixedStrategy& y, const PowerVector& powers) {
  return average_power(y.probs(), powers.levels());
}

AlphaTable alpha_table(const RateVector& rates) {
  AlphaTable table;
  table.inv_alpha.resize(rates.rates.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < rates.rates.size(); ++i) {
    acc += 1.0 / rates.rates[i];
    table.inv_alpha[i] = acc;
  }
  return table;
}

RectangularGame rectangular_game(const GameConfig& config, int nj) {
  if (nj < 1) throw Error(ErrorCode::kZeroGrid, "nj must be >= 1");
  const RateVector rv = rate_vector(config);
  std::vector<double> jammer(static_cast<std::size_t>(nj) + 1);
  for (int j = 0; j <= nj; ++j) {
    jammer[static_cast<std::size_t>(j)] = grid_power(j, nj, config.j_max());
  }
  const std::size_t rows = rv.rates.size();
  const std::size_t cols = jammer.size();
  std::vector<double> entries(rows * cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (rv.assumed_powers[i] >= jammer[j]) entries[i * cols + j] = rv.rates[i];
    }
  }
  return RectangularGame{PayoffMatrix(rows, cols, std::move(entries)),
                         rv.assumed_powers, rv.rates, std::move(jammer)};
}

ReducedGame reduce_dominated(const RectangularGame& game) {
  const PayoffMatrix& c = game.matrix;
  require_same_size(game.rates.size(), c.rows(), "rates vs rows");
  require_same_size(game.assumed_powers.size(), c.rows(),
                    "assumed powers vs rows");
  require_same_size(game.jammer_powers.size(), c.cols(),
                    "jammer powers vs columns");
  if (!is_uniform_from_zero(game.jammer_powers) ||
      !is_uniform_from_zero(game.assumed_powers)) {
    throw Error(ErrorCode::kUnsupportedGrid,
                "dominance reduction needs uniform grids starting at zero");
  }

  std::vector<std::size_t> rows(c.rows());
  std::vector<std::size_t> cols(c.cols());
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);

  const auto zero_mask_of_column = [&](std::size_t j) {
    std::vector<bool> mask;
    mask.reserve(rows.size());
    for (std::size_t i : rows) mask.push_back(c(i, j) == 0.0);
    return mask;
  };
  const auto zero_mask_of_row = [&](std::size_t i) {
    std::vector<bool> mask;
    mask.reserve(cols.size());
    for (std::size_t j : cols) mask.push_back(c(i, j) == 0.0);
    return mask;
  };

  bool changed = true;
  while (changed) {
    changed = false;

    // Columns with an identical kill set pay the same; the jammer keeps the
    // cheapest.
    std::vector<std::size_t> kept_cols;
    std::vector<std::vector<bool>> seen;
    for (std::size_t j : cols) {
      auto mask = zero_mask_of_column(j);
      auto it = std::find(seen.begin(), seen.end(), mask);
      if (it == seen.end()) {
        seen.push_back(std::move(mask));
        kept_cols.push_back(j);
        continue;
      }
      std::size_t& incumbent =
          kept_cols[static_cast<std::size_t>(it - seen.begin())];
      if (game.jammer_powers[j] < game.jammer_powers[incumbent]) incumbent = j;
      changed = true;
    }
    std::sort(kept_cols.begin(), kept_cols.end());
    cols = std::move(kept_cols);

    // Rows surviving the same columns differ only in rate; the highest wins.
    std::vector<std::size_t> kept_rows;
    seen.clear();
    for (std::size_t i : rows) {
      auto mask = zero_mask_of_row(i);
      auto it = std::find(seen.begin(), seen.end(), mask);
      if (it == seen.end()) {
        seen.push_back(std::move(mask));
        kept_rows.push_back(i);
        continue;
      }
      std::size_t& incumbent =
          kept_rows[static_cast<std::size_t>(it - seen.begin())];
      if (game.rates[i] > game.rates[incumbent]) incumbent = i;
      changed = true;
    }
    std::sort(kept_rows.begin(), kept_rows.end());
    rows = std::move(kept_rows);
  }

  if (rows.size() != cols.size()) {
    throw Error(ErrorCode::kUnsupportedGrid,
                "dominance reduction did not produce a square matrix");
  }

  std::vector<double> entries;
  entries.reserve(rows.size() * cols.size());
  for (std::size_t i : rows) {
    for (std::size_t j : cols) entries.push_back(c(i, j));
  }
  ReducedGame out{PayoffMatrix(rows.size(), cols.size(), std::move(entries)),
                  rows, cols, {}, {}};
  for (std::size_t i : rows) out.rates.push_back(game.rates[i]);
  for (std::size_t j : cols) out.jammer_powers.push_back(game.jammer_powers[j]);
  return out;
}

}  // namespace jamgame
