#include "jamgame/io.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace jamgame::io {

using nlohmann::json;

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_exact(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double round12(double v) { return std::stod(format_number(v)); }

json strategy_to_json(const MixedStrategy& s) {
  json arr = json::array();
  for (double p : s.probs()) arr.push_back(p);
  return arr;
}

MixedStrategy strategy_from_json(std::string_view text, Role role) {
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidStrategy,
                std::string("strategy file is not JSON: ") + e.what());
  }
  if (!parsed.is_array()) {
    throw Error(ErrorCode::kInvalidStrategy,
                "strategy file must hold a JSON array");
  }
  std::vector<double> probs;
  probs.reserve(parsed.size());
  for (const json& v : parsed) {
    if (!v.is_number()) {
      throw Error(ErrorCode::kInvalidStrategy,
                  "strategy entries must be numbers");
    }
    probs.push_back(v.get<double>());
  }
  return MixedStrategy::make(std::move(probs), role);
}

json solution_to_json(const GameSolution& s) {
  const SolverDiagnostics& d = s.diagnostics;
  return json{
      {"value", round12(s.value)},
      {"x_star", strategy_to_json(s.x_star)},
      {"y_star", strategy_to_json(s.y_star)},
      {"jammer_average_power", round12(s.jammer_average_power)},
      {"mode", std::string(to_string(s.mode))},
      {"residuals",
       {{"lp_status", to_string(d.status)},
        {"primal", round12(d.primal_residual)},
        {"duality_gap", round12(d.duality_gap)},
        {"complementarity", round12(d.complementarity_residual)},
        {"transmitter_deviation", round12(d.transmitter_deviation)},
        {"jammer_deviation", round12(d.jammer_deviation)},
        {"iterations", d.iterations}}},
  };
}

json threshold_to_json(const ThresholdReport& r) {
  json z = json::array();
  for (double v : r.z_profile) z.push_back(round12(v));
  return json{{"j_th", round12(r.j_th)},
              {"j_th_upper", round12(r.j_th_upper)},
              {"z_profile", z}};
}

json continuous_to_json(const ContinuousReport& r) {
  return json{{"j_th_lim", round12(r.j_th_lim)},
              {"j_th_lim_ub", round12(r.j_th_lim_ub)},
              {"integral", round12(r.integral)},
              {"quadrature_error_estimate", round12(r.quadrature_error_estimate)}};
}

json sim_report_to_json(const SimReport& r) {
  return json{{"packets", r.packets},
              {"mean_throughput", round12(r.mean_throughput)},
              {"loss_rate", round12(r.loss_rate)},
              {"empirical_jammer_power", round12(r.empirical_jammer_power)},
              {"std_error", round12(r.std_error)},
              {"jammer_power_std_error", round12(r.jammer_power_std_error)},
              {"seed", r.seed}};
}

json grid_points_to_json(const GameConfig& config) {
  json arr = json::array();
  for (const GridPoint& g : grid_points(config)) {
    arr.push_back(json{{"m", g.m},
                       {"j_ave_m", round12(g.j_ave_m)},
                       {"value", round12(g.value)},
                       {"x_hat", strategy_to_json(transmitter_opt(config, g.m))},
                       {"y_hat", strategy_to_json(jammer_opt(config, g.m))}});
  }
  return arr;
}

json sweep_to_json(std::span<const SweepEntry> rows) {
  json arr = json::array();
  for (const SweepEntry& e : rows) {
    json row;
    if (e.solution) {
      row = solution_to_json(*e.solution);
    } else {
      row["error"] = std::string(error_code_name(*e.error));
      row["message"] = e.message;
    }
    row["j_ave"] = round12(e.j_ave);
    arr.push_back(std::move(row));
  }
  return arr;
}

std::string rates_to_csv(const RateVector& rates) {
  std::ostringstream out;
  out << "i,assumed_power,rate\n";
  for (std::size_t i = 0; i < rates.rates.size(); ++i) {
    out << i << ',' << format_number(rates.assumed_powers[i]) << ','
        << format_number(rates.rates[i]) << '\n';
  }
  return out.str();
}

namespace {

std::string join_exact(const MixedStrategy& s) {
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k > 0) out += ';';
    out += format_exact(s[k]);
  }
  return out;
}

}  // namespace

std::string sweep_to_csv(std::span<const SweepEntry> rows) {
  std::ostringstream out;
  out << "j_ave,value,x_star,y_star,jammer_average_power,mode,error\n";
  for (const SweepEntry& e : rows) {
    out << format_number(e.j_ave) << ',';
    if (e.solution) {
      const GameSolution& s = *e.solution;
      out << format_number(s.value) << ',' << join_exact(s.x_star) << ','
          << join_exact(s.y_star) << ','
          << format_number(s.jammer_average_power) << ',' << to_string(s.mode)
          << ",\n";
    } else {
      out << ",,,,," << error_code_name(*e.error) << '\n';
    }
  }
  return out.str();
}

std::string grid_points_to_csv(const GameConfig& config) {
  std::ostringstream out;
  out << "m,j_ave_m,value,j_eff,e_factor\n";
  for (const GridPoint& g : grid_points(config)) {
    out << g.m << ',' << format_number(g.j_ave_m) << ','
        << format_number(g.value) << ',';
    if (g.j_ave_m > 0.0) {
      const EffectivenessReport e = effectiveness(config, g.j_ave_m);
      out << format_number(e.j_eff) << ',' << format_number(e.e_factor);
    } else {
      out << ',';
    }
    out << '\n';
  }
  return out.str();
}

std::string convergence_to_csv(std::span<const std::pair<int, double>> curve) {
  std::ostringstream out;
  out << "nt,j_th\n";
  for (const auto& [nt, j_th] : curve) {
    out << nt << ',' << format_number(j_th) << '\n';
  }
  return out.str();
}

std::vector<double> budget_grid(double lo, double hi, int steps) {
  if (steps < 1) {
    throw Error(ErrorCode::kInvalidArgument, "steps must be >= 1");
  }
  if (!(lo <= hi)) {
    throw Error(ErrorCode::kInvalidArgument, "budget range must be ascending");
  }
  std::vector<double> out(static_cast<std::size_t>(steps));
  if (steps == 1) {
    out[0] = lo;
    return out;
  }
  const double span = hi - lo;
  for (int k = 0; k < steps; ++k) {
    out[static_cast<std::size_t>(k)] =
        lo + span * (static_cast<double>(k) / static_cast<double>(steps - 1));
  }
  out.back() = hi;
  return out;
}

}  // namespace jamgame::io
