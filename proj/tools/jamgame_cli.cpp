// jamgame: command-line front end. Data goes to stdout, diagnostics to
// stderr. Exit codes: 0 ok, 1 validation failure, 2 usage, 3 numerical.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jamgame/analytic.hpp"
#include "jamgame/continuous.hpp"
#include "jamgame/io.hpp"
#include "jamgame/sim.hpp"
#include "jamgame/solver.hpp"
#include "jamgame/validation/acceptance.hpp"

namespace {

using namespace jamgame;

constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct SharedFlags {
  double pt = 0.0;
  double noise = 0.0;
  double j_max = 0.0;
  double j_ave = 0.0;
  int nt = 0;
  std::string mode = "le";
  double log_base = 2.0;
  std::string format;

  GameConfig config() const {
    return GameConfig::make(pt, noise, j_max, j_ave, nt,
                            parse_constraint_mode(mode), log_base);
  }
};

// validate falls back to the reference config (pt = noise = j_max = 1,
// nt = 2) when flags are omitted; every other command requires them.
std::map<const CLI::App*, std::string> default_format;

void add_shared(CLI::App* cmd, SharedFlags& f, bool required,
                std::vector<std::string> formats) {
  auto* pt = cmd->add_option("--pt", f.pt, "transmit power (linear)");
  auto* noise = cmd->add_option("--noise", f.noise, "noise power (linear)");
  auto* jmax = cmd->add_option("--jmax", f.j_max, "jammer peak power");
  auto* nt = cmd->add_option("--nt", f.nt, "grid size N_T");
  if (required) {
    pt->required();
    noise->required();
    jmax->required();
    nt->required();
  }
  cmd->add_option("--jave", f.j_ave, "jammer average power budget")
      ->capture_default_str();
  cmd->add_option("--mode", f.mode, "budget constraint: eq or le")
      ->check(CLI::IsMember({"eq", "le"}))
      ->capture_default_str();
  cmd->add_option("--log-base", f.log_base, "logarithm base of the rates")
      ->capture_default_str();
  default_format[cmd] = formats.front();
  cmd->add_option("--format", f.format,
                  "output format (default " + formats.front() + ")")
      ->check(CLI::IsMember(formats));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << text << '\n';
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

nlohmann::json rates_to_json(const RateVector& rv) {
  auto out = nlohmann::json::array();
  for (std::size_t i = 0; i < rv.rates.size(); ++i) {
    out.push_back({{"i", i},
                   {"assumed_power", io::round12(rv.assumed_powers[i])},
                   {"rate", io::round12(rv.rates[i])}});
  }
  return out;
}

nlohmann::json convergence_to_json(
    const std::vector<std::pair<int, double>>& curve) {
  auto out = nlohmann::json::array();
  for (const auto& [nt, j_th] : curve) {
    out.push_back({{"nt", nt}, {"j_th", io::round12(j_th)}});
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rate adaptation against a power-limited jammer"};
  app.require_subcommand(1);

  SharedFlags f;

  auto* rates = app.add_subcommand("rates", "rate and assumed-power grid");
  add_shared(rates, f, true, {"csv", "json"});

  auto* solve = app.add_subcommand("solve", "equilibrium at one budget");
  add_shared(solve, f, true, {"json", "csv"});
  std::string x_out, y_out;
  solve->add_option("--x-out", x_out, "write x* as a strategy file");
  solve->add_option("--y-out", y_out, "write y* as a strategy file");

  auto* thresh = app.add_subcommand("threshold", "jamming threshold");
  add_shared(thresh, f, true, {"json"});

  auto* cont = app.add_subcommand("continuous", "continuum threshold limit");
  add_shared(cont, f, true, {"json"});

  auto* sweep_cmd = app.add_subcommand("sweep", "value over a budget range");
  add_shared(sweep_cmd, f, true, {"csv", "json"});
  std::optional<double> jave_min, jave_max;
  int steps = 0;
  sweep_cmd->add_option("--jave-min", jave_min, "first budget (default 0)");
  sweep_cmd->add_option("--jave-max", jave_max, "last budget (default jmax)");
  sweep_cmd->add_option("--steps", steps, "number of budgets, inclusive")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* grid = app.add_subcommand("grid", "grid budgets and effectiveness");
  add_shared(grid, f, true, {"csv", "json"});

  auto* eff = app.add_subcommand("effectiveness", "effectiveness at --jave");
  add_shared(eff, f, true, {"json"});

  auto* conv = app.add_subcommand("convergence", "threshold versus N_T");
  add_shared(conv, f, false, {"csv", "json"});
  std::vector<int> nt_list = {8, 16, 32, 64, 128, 256};
  conv->add_option("--nt-list", nt_list, "grid sizes, ascending")
      ->delimiter(',');

  auto* su = app.add_subcommand("semi-uniform", "semi-uniform jammer pmf");
  add_shared(su, f, true, {"json"});
  int support = 0;
  su->add_option("--support", support, "top index of the support (default nt)");

  auto* sim = app.add_subcommand("simulate", "packet-level Monte Carlo");
  add_shared(sim, f, true, {"json"});
  std::uint64_t packets = 1'000'000;
  std::uint64_t seed = 1;
  std::string x_file, y_file, preset;
  sim->add_option("--packets", packets)->capture_default_str();
  sim->add_option("--seed", seed)->capture_default_str();
  sim->add_option("--x-file", x_file, "transmitter strategy file")
      ->required();
  auto* y_opt = sim->add_option("--y-file", y_file, "jammer strategy file");
  auto* p_opt = sim->add_option("--preset", preset,
                                "barrage | semi-uniform | grid:<m>");
  y_opt->excludes(p_opt);
  p_opt->excludes(y_opt);

  auto* validate = app.add_subcommand("validate", "run the acceptance suite");
  add_shared(validate, f, false, {"text"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "jamgame: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (f.format.empty()) f.format = default_format.at(app.get_subcommands().front());
    if (conv->parsed() || validate->parsed()) {
      if (f.pt == 0.0) f.pt = 1.0;
      if (f.noise == 0.0) f.noise = 1.0;
      if (f.j_max == 0.0) f.j_max = 1.0;
      if (f.nt == 0) f.nt = 2;
    }
    const GameConfig config = f.config();

    if (rates->parsed()) {
      const RateVector rv = rate_vector(config);
      if (f.format == "csv") {
        std::cout << io::rates_to_csv(rv);
      } else {
        emit(rates_to_json(rv));
      }
    } else if (solve->parsed()) {
      const GameSolution s = solve_game(config);
      if (f.format == "json") {
        emit(io::solution_to_json(s));
      } else {
        SweepEntry row;
        row.j_ave = config.j_ave();
        row.solution = s;
        std::cout << io::sweep_to_csv(std::span<const SweepEntry>(&row, 1));
      }
      if (!x_out.empty()) write_file(x_out, io::strategy_to_json(s.x_star).dump());
      if (!y_out.empty()) write_file(y_out, io::strategy_to_json(s.y_star).dump());
    } else if (thresh->parsed()) {
      emit(io::threshold_to_json(threshold(config)));
    } else if (cont->parsed()) {
      emit(io::continuous_to_json(jth_limit(config)));
    } else if (sweep_cmd->parsed()) {
      const double lo = jave_min.value_or(0.0);
      const double hi = jave_max.value_or(config.j_max());
      const std::vector<double> budgets = io::budget_grid(lo, hi, steps);
      const auto rows = sweep(config, budgets);
      if (f.format == "csv") {
        std::cout << io::sweep_to_csv(rows);
      } else {
        emit(io::sweep_to_json(rows));
      }
      for (const SweepEntry& r : rows) {
        if (r.error) std::cerr << "jamgame: j_ave=" << r.j_ave << ": "
                               << r.message << '\n';
      }
    } else if (grid->parsed()) {
      if (f.format == "csv") {
        std::cout << io::grid_points_to_csv(config);
      } else {
        emit(io::grid_points_to_json(config));
      }
    } else if (eff->parsed()) {
      const EffectivenessReport e = effectiveness(config, config.j_ave());
      emit({{"j_eff", io::round12(e.j_eff)},
            {"e_factor", io::round12(e.e_factor)}});
    } else if (conv->parsed()) {
      const auto curve = convergence_curve(config, nt_list);
      if (f.format == "csv") {
        std::cout << io::convergence_to_csv(curve);
      } else {
        emit(convergence_to_json(curve));
      }
    } else if (su->parsed()) {
      const int top = support == 0 ? config.nt() : support;
      emit(io::strategy_to_json(semi_uniform(config, config.j_ave(), top)));
    } else if (sim->parsed()) {
      if (y_file.empty() && preset.empty()) {
        std::cerr << "jamgame: simulate needs --y-file or --preset\n";
        return kExitUsage;
      }
      const MixedStrategy x =
          io::strategy_from_json(read_file(x_file), Role::kTransmitter);
      const SimReport r =
          preset.empty()
              ? simulate(config, x,
                         io::strategy_from_json(read_file(y_file), Role::kJammer),
                         packets, seed)
              : simulate_preset_jammer(config, x, JammerPreset::parse(preset),
                                       packets, seed);
      emit(io::sim_report_to_json(r));
    } else if (validate->parsed()) {
      int failed = 0;
      for (const auto& r : acceptance::run_all(config)) {
        std::cout << acceptance::format_line(r) << std::endl;
        if (!r.passed) ++failed;
      }
      if (failed > 0) {
        std::cerr << "jamgame: " << failed << " acceptance criteria failed\n";
        return kExitValidation;
      }
    }
  } catch (const Error& e) {
    std::cerr << "jamgame: " << e.what() << '\n';
    return is_numerical(e.code()) ? kExitNumerical : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "jamgame: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
