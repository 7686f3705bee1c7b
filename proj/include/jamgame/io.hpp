#pragma once

// Text serialization used by the command-line tool.
//
// Scalars are printed with 12 significant digits ("%.12g": decimal point,
// no grouping, lowercase exponent). Strategy vectors are printed with
// round-trip precision so a strategy file re-loads bit-exactly and still
// passes the 1e-12 normalization check.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "jamgame/analytic.hpp"
#include "jamgame/continuous.hpp"
#include "jamgame/sim.hpp"
#include "jamgame/solver.hpp"

namespace jamgame::io {

std::string format_number(double v);
// Shortest representation that parses back to the same double.
std::string format_exact(double v);
// v rounded to 12 significant digits.
double round12(double v);

nlohmann::json strategy_to_json(const MixedStrategy& s);
// Expects a JSON array of probabilities; validated as a MixedStrategy.
MixedStrategy strategy_from_json(std::string_view text, Role role);

nlohmann::json solution_to_json(const GameSolution& s);
nlohmann::json threshold_to_json(const ThresholdReport& r);
nlohmann::json continuous_to_json(const ContinuousReport& r);
nlohmann::json sim_report_to_json(const SimReport& r);
nlohmann::json grid_points_to_json(const GameConfig& config);
nlohmann::json sweep_to_json(std::span<const SweepEntry> rows);

std::string rates_to_csv(const RateVector& rates);
std::string sweep_to_csv(std::span<const SweepEntry> rows);
std::string grid_points_to_csv(const GameConfig& config);
std::string convergence_to_csv(std::span<const std::pair<int, double>> curve);

// `steps` evenly spaced budgets from lo to hi inclusive; the last equals hi.
std::vector<double> budget_grid(double lo, double hi, int steps);

}  // namespace jamgame::io
