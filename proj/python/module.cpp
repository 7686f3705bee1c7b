#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jamgame/analytic.hpp"
#include "jamgame/continuous.hpp"
#include "jamgame/sim.hpp"
#include "jamgame/solver.hpp"

namespace py = pybind11;
using namespace jamgame;

namespace {

std::vector<double> to_list(const MixedStrategy& s) {
  return {s.probs().begin(), s.probs().end()};
}

py::dict solution_dict(const GameSolution& s) {
  py::dict d;
  d["value"] = s.value;
  d["x_star"] = to_list(s.x_star);
  d["y_star"] = to_list(s.y_star);
  d["jammer_average_power"] = s.jammer_average_power;
  d["mode"] = std::string(to_string(s.mode));
  py::dict r;
  r["lp_status"] = to_string(s.diagnostics.status);
  r["primal"] = s.diagnostics.primal_residual;
  r["duality_gap"] = s.diagnostics.duality_gap;
  r["complementarity"] = s.diagnostics.complementarity_residual;
  r["transmitter_deviation"] = s.diagnostics.transmitter_deviation;
  r["jammer_deviation"] = s.diagnostics.jammer_deviation;
  r["iterations"] = s.diagnostics.iterations;
  d["residuals"] = r;
  return d;
}

}  // namespace

PYBIND11_MODULE(_jamgame, m) {
  m.doc() = "Rate adaptation against a power-limited jammer";

  static py::exception<Error> error(m, "JamgameError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<GameConfig>(m, "GameConfig")
      .def(py::init([](double pt, double noise, double j_max, double j_ave,
                       int nt, const std::string& mode, double log_base) {
             return GameConfig::make(pt, noise, j_max, j_ave, nt,
                                     parse_constraint_mode(mode), log_base);
           }),
           py::arg("pt"), py::arg("noise"), py::arg("j_max"),
           py::arg("j_ave") = 0.0, py::arg("nt") = 2, py::arg("mode") = "le",
           py::arg("log_base") = 2.0)
      .def_property_readonly("pt", &GameConfig::pt)
      .def_property_readonly("noise", &GameConfig::noise)
      .def_property_readonly("j_max", &GameConfig::j_max)
      .def_property_readonly("j_ave", &GameConfig::j_ave)
      .def_property_readonly("nt", &GameConfig::nt)
      .def_property_readonly("mode",
                             [](const GameConfig& c) {
                               return std::string(to_string(c.mode()));
                             })
      .def_property_readonly("log_base", &GameConfig::log_base)
      .def("with_budget", &GameConfig::with_budget)
      .def("with_grid", &GameConfig::with_grid)
      .def("__repr__", [](const GameConfig& c) {
        return "GameConfig(pt=" + std::to_string(c.pt()) +
               ", noise=" + std::to_string(c.noise()) +
               ", j_max=" + std::to_string(c.j_max()) +
               ", j_ave=" + std::to_string(c.j_ave()) +
               ", nt=" + std::to_string(c.nt()) + ")";
      });

  m.def("rates", [](const GameConfig& c) { return rate_vector(c).rates; });
  m.def("powers", [](const GameConfig& c) {
    const auto l = power_vector(c).levels();
    return std::vector<double>(l.begin(), l.end());
  });
  m.def("payoff_matrix", [](const GameConfig& c) {
    const PayoffMatrix p = payoff_matrix(c);
    std::vector<std::vector<double>> out(p.rows());
    for (std::size_t i = 0; i < p.rows(); ++i) {
      out[i].assign(p.row(i).begin(), p.row(i).end());
    }
    return out;
  });
  m.def("solve", [](const GameConfig& c) { return solution_dict(solve_game(c)); });
  m.def("sweep", [](const GameConfig& c, const std::vector<double>& budgets) {
    py::list out;
    for (const SweepEntry& e : sweep(c, budgets)) {
      if (e.solution) {
        py::dict d = solution_dict(*e.solution);
        d["j_ave"] = e.j_ave;
        out.append(d);
      } else {
        py::dict d;
        d["j_ave"] = e.j_ave;
        d["error"] = std::string(error_code_name(*e.error));
        out.append(d);
      }
    }
    return out;
  });
  m.def("threshold", [](const GameConfig& c) {
    const ThresholdReport t = threshold(c);
    py::dict d;
    d["j_th"] = t.j_th;
    d["j_th_upper"] = t.j_th_upper;
    d["z_profile"] = t.z_profile;
    return d;
  });
  m.def("grid_points", [](const GameConfig& c) {
    py::list out;
    for (const GridPoint& g : grid_points(c)) {
      out.append(py::make_tuple(g.m, g.j_ave_m, g.value));
    }
    return out;
  });
  m.def("transmitter_opt",
        [](const GameConfig& c, int k) { return to_list(transmitter_opt(c, k)); });
  m.def("jammer_opt",
        [](const GameConfig& c, int k) { return to_list(jammer_opt(c, k)); });
  m.def("semi_uniform", [](const GameConfig& c, double j_ave, int top) {
    return to_list(semi_uniform(c, j_ave, top));
  });
  m.def("effectiveness", [](const GameConfig& c, double j_ave) {
    const EffectivenessReport e = effectiveness(c, j_ave);
    return py::make_tuple(e.j_eff, e.e_factor);
  });
  m.def("jth_limit", [](const GameConfig& c) {
    const ContinuousReport r = jth_limit(c);
    py::dict d;
    d["j_th_lim"] = r.j_th_lim;
    d["j_th_lim_ub"] = r.j_th_lim_ub;
    d["integral"] = r.integral;
    d["quadrature_error_estimate"] = r.quadrature_error_estimate;
    return d;
  });
  m.def("convergence_curve", [](const GameConfig& c, const std::vector<int>& nts) {
    return convergence_curve(c, nts);
  });
  m.def(
      "simulate",
      [](const GameConfig& c, const std::vector<double>& x,
         const std::vector<double>& y, std::uint64_t packets, std::uint64_t seed) {
        const SimReport r =
            simulate(c, MixedStrategy::make(x, Role::kTransmitter),
                     MixedStrategy::make(y, Role::kJammer), packets, seed);
        py::dict d;
        d["packets"] = r.packets;
        d["mean_throughput"] = r.mean_throughput;
        d["loss_rate"] = r.loss_rate;
        d["empirical_jammer_power"] = r.empirical_jammer_power;
        d["std_error"] = r.std_error;
        d["jammer_power_std_error"] = r.jammer_power_std_error;
        d["seed"] = r.seed;
        return d;
      },
      py::arg("config"), py::arg("x"), py::arg("y"),
      py::arg("packets") = 100000, py::arg("seed") = 1);
}
