#include "jamgame/validation/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>

#include "jamgame/analytic.hpp"
#include "jamgame/continuous.hpp"
#include "jamgame/io.hpp"
#include "jamgame/sim.hpp"
#include "jamgame/solver.hpp"
#include "jamgame/validation/oracles.hpp"

namespace jamgame::acceptance {

namespace {

std::string printf_string(const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

std::string describe(const GameConfig& c) {
  return printf_string("pt=%g noise=%g j_max=%g nt=%d mode=%s", c.pt(),
                       c.noise(), c.j_max(), c.nt(),
                       std::string(to_string(c.mode())).c_str());
}

// pt/noise in {0.1, 1, 10}, j_max/noise in {0.5, 1, 5}, nt in {2, 4, 8, 16}.
std::vector<GameConfig> config_sweep(ConstraintMode mode) {
  std::vector<GameConfig> out;
  for (double snr : {0.1, 1.0, 10.0}) {
    for (double jr : {0.5, 1.0, 5.0}) {
      for (int nt : {2, 4, 8, 16}) {
        out.push_back(GameConfig::make(snr, 1.0, jr, 0.0, nt, mode));
      }
    }
  }
  return out;
}

constexpr ConstraintMode kModes[] = {ConstraintMode::kAtMost,
                                     ConstraintMode::kEquality};

double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Flat Dirichlet draw; each coordinate is dropped with probability
// `sparsity`, keeping at least one.
std::vector<double> random_simplex_point(std::mt19937_64& rng, std::size_t n,
                                         double sparsity) {
  std::vector<double> p(n);
  double sum = 0.0;
  for (double& v : p) {
    v = unit(rng) < sparsity ? 0.0 : -std::log1p(-unit(rng));
    sum += v;
  }
  if (sum == 0.0) {
    p[rng() % n] = 1.0;
    sum = 1.0;
  }
  for (double& v : p) v /= sum;
  return p;
}

// Random jammer strategy with mean power exactly `budget`: a random simplex
// point mixed with the zero-power or full-power column as needed.
std::vector<double> random_budget_exact(std::mt19937_64& rng,
                                        std::span<const double> powers,
                                        double budget) {
  std::vector<double> y = random_simplex_point(rng, powers.size(), 0.3);
  const double mean = average_power(y, powers);
  const double top = powers.back();
  double w = 0.0;
  std::size_t anchor = 0;
  if (mean <= budget) {
    anchor = powers.size() - 1;
    w = (budget - mean) / (top - mean);
  } else {
    w = (mean - budget) / mean;
  }
  for (double& v : y) v *= 1.0 - w;
  y[anchor] += w;
  return y;
}

template <class Body>
CriterionResult timed(int id, const char* name, Body body) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  r.id = id;
  r.name = name;
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  return r;
}

}  // namespace

CriterionResult grid_point_exactness() {
  return timed(1, "grid-point exactness", [](CriterionResult& r) {
    double worst = 0.0;
    int solves = 0;
    std::string where;
    for (ConstraintMode mode : kModes) {
      for (const GameConfig& base : config_sweep(mode)) {
        for (const GridPoint& g : grid_points(base)) {
          const GameSolution s = solve_game(base.with_budget(g.j_ave_m));
          const double dev = std::abs(s.value - g.value);
          ++solves;
          if (dev > worst) {
            worst = dev;
            where = describe(base) + printf_string(" m=%d", g.m);
          }
        }
      }
    }
    r.passed = worst <= 1e-9;
    r.detail = printf_string("%d solves, max |value - R_{m+1}| = %.3e", solves,
                             worst);
    if (!r.passed) r.detail += " at " + where;
  });
}

CriterionResult strategy_agreement() {
  return timed(2, "strategy agreement", [](CriterionResult& r) {
    double worst = 0.0;
    double worst_gap = 0.0;
    int points = 0;
    std::string where;
    for (ConstraintMode mode : kModes) {
      for (const GameConfig& base : config_sweep(mode)) {
        const PayoffMatrix c = payoff_matrix(base);
        const PowerVector powers = power_vector(base);
        const int n = base.nt();
        for (const GridPoint& g : grid_points(base)) {
          const GameSolution s = solve_game(base.with_budget(g.j_ave_m));
          const MixedStrategy x_hat = transmitter_opt(base, g.m);
          ++points;
          if (g.m < n - 1) {
            for (std::size_t i = 0; i < x_hat.size(); ++i) {
              const double dev = std::abs(s.x_star[i] - x_hat[i]);
              if (dev > worst) {
                worst = dev;
                where = describe(base) + printf_string(" m=%d i=%zu", g.m, i);
              }
            }
          } else {
            // At the last grid budget the optimal set also holds the pure
            // lowest rate, which the solver prefers. x̂ must still be
            // optimal: its guarantee against the budget polytope is the value.
            const double guarantee = oracles::min_over_budget_polytope(
                c.column_payoffs(x_hat.probs()), powers.levels(), g.j_ave_m,
                mode);
            worst_gap = std::max(worst_gap, std::abs(guarantee - s.value));
            worst_gap =
                std::max(worst_gap, std::abs(s.diagnostics.jammer_deviation));
          }
        }
      }
    }
    r.passed = worst <= 1e-6 && worst_gap <= 1e-9;
    r.detail = printf_string(
        "%d grid points, max coordinate deviation %.3e; at m = N_T-1 "
        "max optimality gap of x_hat %.3e",
        points, worst, worst_gap);
    if (worst > 1e-6) r.detail += " at " + where;
  });
}

CriterionResult powerful_jammer_clamp() {
  return timed(3, "powerful-jammer clamp", [](CriterionResult& r) {
    double worst_value = 0.0;
    double worst_mass = 0.0;
    std::string where;
    for (ConstraintMode mode : kModes) {
      for (const GameConfig& base : config_sweep(mode)) {
        const double j_th = threshold(base).j_th;
        const double r_low = rate_vector(base).rates.back();
        for (double j : {j_th, 0.5 * (j_th + base.j_max()), base.j_max()}) {
          const GameSolution s = solve_game(base.with_budget(j));
          const double dv = std::abs(s.value - r_low);
          const double dm = 1.0 - s.x_star[s.x_star.size() - 1];
          if (dv > 1e-9 || dm > 1e-8) {
            where = describe(base) + printf_string(" j_ave=%.12g", j);
          }
          worst_value = std::max(worst_value, dv);
          worst_mass = std::max(worst_mass, dm);
        }
      }
    }
    r.passed = worst_value <= 1e-9 && worst_mass <= 1e-8;
    r.detail = printf_string("max |value - R_N| = %.3e, max 1 - x*[N] = %.3e",
                             worst_value, worst_mass);
    if (!r.passed) r.detail += " at " + where;
  });
}

CriterionResult bound_ordering() {
  return timed(4, "bound ordering", [](CriterionResult& r) {
    std::mt19937_64 rng(0x6a616d31);
    auto log_uniform = [&](double lo, double hi) {
      return lo * std::pow(hi / lo, unit(rng));
    };
    int violations = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    std::string first;
    for (int k = 0; k < 1000; ++k) {
      const double noise = log_uniform(0.1, 10.0);
      const double pt = noise * log_uniform(0.01, 100.0);
      const double j_max = noise * log_uniform(0.01, 100.0);
      const int nt = 1 + static_cast<int>(rng() % 64);
      const GameConfig c = GameConfig::make(pt, noise, j_max, 0.0, nt);
      const ThresholdReport th = threshold(c);
      // With one rate step both expressions coincide; allow rounding there.
      const double slack = 1e-12 * j_max;
      bool ok = th.j_th <= th.j_th_upper + slack;
      min_margin = std::min(min_margin, (th.j_th_upper - th.j_th) / j_max);
      for (std::size_t i = 1; i < th.z_profile.size(); ++i) {
        ok = ok && th.z_profile[i] < th.z_profile[i - 1];
      }
      if (!ok) {
        if (violations == 0) first = describe(c);
        ++violations;
      }
    }
    r.passed = violations == 0;
    r.detail = printf_string(
        "1000 configs, %d violations, min (j_th_upper - j_th)/j_max = %.3e",
        violations, min_margin);
    if (!r.passed) r.detail += ", first at " + first;
  });
}

CriterionResult minimax_guarantee_pair() {
  return timed(5, "minimax guarantee pair", [](CriterionResult& r) {
    std::mt19937_64 rng(0x6a616d35);
    int violations = 0;
    int trials = 0;
    double worst_x = -std::numeric_limits<double>::infinity();
    double worst_y = -std::numeric_limits<double>::infinity();
    for (ConstraintMode mode : kModes) {
      for (const GameConfig& base : config_sweep(mode)) {
        const PayoffMatrix c = payoff_matrix(base);
        const PowerVector powers = power_vector(base);
        const std::size_t n = c.rows();
        for (const GridPoint& g : grid_points(base)) {
          const MixedStrategy x_hat = transmitter_opt(base, g.m);
          const MixedStrategy y_hat = jammer_opt(base, g.m);
          for (int k = 0; k < 100; ++k) {
            const auto x = MixedStrategy::make(
                random_simplex_point(rng, n, 0.4), Role::kTransmitter);
            const auto y = MixedStrategy::make(
                random_budget_exact(rng, powers.levels(), g.j_ave_m),
                Role::kJammer);
            const double ex = expected_payoff(c, x, y_hat) - g.value;
            const double ey = g.value - expected_payoff(c, x_hat, y);
            worst_x = std::max(worst_x, ex);
            worst_y = std::max(worst_y, ey);
            if (ex > 1e-10) ++violations;
            if (ey > 1e-10) ++violations;
            trials += 2;
          }
        }
      }
    }
    r.passed = violations == 0;
    r.detail = printf_string(
        "%d trials, %d violations; max x'Cy_hat - R = %.3e, "
        "max R - x_hat'Cy = %.3e",
        trials, violations, worst_x, worst_y);
  });
}

CriterionResult semi_uniform_equivalence() {
  return timed(6, "semi-uniform equivalence", [](CriterionResult& r) {
    double worst = 0.0;
    int checks = 0;
    for (const GameConfig& base : config_sweep(ConstraintMode::kAtMost)) {
      for (int m = 0; m < base.nt(); ++m) {
        worst = std::max(worst, semi_uniform_equivalence_check(base, m));
        ++checks;
      }
    }
    r.passed = worst < 1e-10;
    r.detail = printf_string("%d grid points, max residual %.3e", checks, worst);
  });
}

CriterionResult small_instance_oracle() {
  return timed(7, "small-instance oracle", [](CriterionResult& r) {
    constexpr int kResolution = 1000;
    double worst = 0.0;
    int cases = 0;
    bool sound = true;
    std::string where;
    for (int nt : {1, 2, 3}) {
      const GameConfig base = GameConfig::make(1.0, 1.0, 1.0, 0.0, nt);
      const double j_th = threshold(base).j_th;
      const PayoffMatrix c = payoff_matrix(base);
      const PowerVector powers = power_vector(base);
      for (double f : {0.3, 0.7, 1.2}) {
        const double budget = std::min(f * j_th, base.j_max());
        const double value = solve_game(base.with_budget(budget)).value;
        const oracles::MeshBounds b =
            oracles::mesh_minimax(c, powers.levels(), budget, kResolution);
        const double dev =
            std::max(std::abs(b.lower - value), std::abs(b.upper - value));
        // The mesh bounds bracket the true value.
        const double eps = 1e-12;
        if (b.lower > value + eps || b.upper < value - eps) {
          sound = false;
          where = printf_string("nt=%d budget=%.6g", nt, budget);
        }
        if (dev > worst) {
          worst = dev;
          if (sound) where = printf_string("nt=%d budget=%.6g", nt, budget);
        }
        ++cases;
      }
    }
    r.passed = sound && worst <= 2e-3;
    r.detail = printf_string(
        "%d cases, mesh 1e-3, max |mesh bound - LP value| = %.3e, bounds %s",
        cases, worst, sound ? "bracket the LP value" : "do NOT bracket");
    if (!r.passed) r.detail += " at " + where;
  });
}

CriterionResult continuum_convergence(const GameConfig& reference) {
  return timed(8, "continuum convergence", [&](CriterionResult& r) {
    const GameConfig c = reference.with_mode(ConstraintMode::kAtMost);
    const ContinuousReport lim = jth_limit(c);
    const std::vector<int> nts = {8, 16, 32, 64, 128, 256};
    const auto curve = convergence_curve(c, nts);
    bool monotone = true;
    double prev = std::numeric_limits<double>::infinity();
    for (const auto& [nt, j_th] : curve) {
      const double gap = std::abs(j_th - lim.j_th_lim);
      monotone = monotone && gap < prev;
      prev = gap;
    }
    const double rel_last = prev / lim.j_th_lim;
    const double reference_integral = oracles::midpoint_integral(
        [&](double j) { return 1.0 / rate_continuous(c, j); }, 0.0, c.j_max(),
        1'000'000);
    const double quad_dev = std::abs(lim.integral - reference_integral);
    const double quad_tol = 1e-8 * std::max(1.0, std::abs(reference_integral));
    r.passed = monotone && rel_last < 0.01 && quad_dev <= quad_tol;
    r.detail = printf_string(
        "j_th_lim = %.9g, gap %s over N_T = 8..256, gap at 256 = %.3e%% of "
        "j_th_lim, |adaptive - midpoint| = %.3e",
        lim.j_th_lim, monotone ? "decreasing" : "NOT decreasing",
        100.0 * rel_last, quad_dev);
  });
}

CriterionResult simulator_unbiasedness(const GameConfig& reference) {
  return timed(9, "simulator unbiasedness", [&](CriterionResult& r) {
    constexpr std::uint64_t kPackets = 1'000'000;
    std::mt19937_64 rng(0x6a616d39);
    const PayoffMatrix c = payoff_matrix(reference);
    const PowerVector powers = power_vector(reference);
    const std::size_t n = c.rows();
    int violations = 0;
    double worst_z = 0.0;
    double worst_zp = 0.0;
    bool reproducible = true;
    for (int k = 0; k < 20; ++k) {
      const auto x = MixedStrategy::make(random_simplex_point(rng, n, 0.0),
                                         Role::kTransmitter);
      const auto y =
          MixedStrategy::make(random_simplex_point(rng, n, 0.0), Role::kJammer);
      const std::uint64_t seed = rng();
      const SimReport s = simulate(reference, x, y, kPackets, seed);
      const double dt = std::abs(s.mean_throughput - expected_payoff(c, x, y));
      const double dp =
          std::abs(s.empirical_jammer_power - average_power(y, powers));
      if (dt > 4.0 * s.std_error) ++violations;
      if (dp > 4.0 * s.jammer_power_std_error) ++violations;
      if (s.std_error > 0) worst_z = std::max(worst_z, dt / s.std_error);
      if (s.jammer_power_std_error > 0) {
        worst_zp = std::max(worst_zp, dp / s.jammer_power_std_error);
      }
      if (k < 3) {
        reproducible = reproducible &&
                       simulate(reference, x, y, kPackets, seed) == s;
      }
    }
    r.passed = violations == 0 && reproducible;
    r.detail = printf_string(
        "20 pairs x 1e6 packets, %d violations, max |z| throughput %.2f, "
        "power %.2f, reruns %s",
        violations, worst_z, worst_zp,
        reproducible ? "bitwise identical" : "DIFFER");
  });
}

CriterionResult monotonicity_and_nesting(const GameConfig& reference) {
  return timed(10, "monotonicity and nesting", [&](CriterionResult& r) {
    const std::vector<double> budgets =
        io::budget_grid(0.0, reference.j_max(), 200);
    const GameConfig le = reference.with_mode(ConstraintMode::kAtMost);
    const GameConfig eq = reference.with_mode(ConstraintMode::kEquality);
    int increases = 0;
    int nesting = 0;
    double prev = std::numeric_limits<double>::infinity();
    double worst_rise = 0.0;
    double worst_nest = -std::numeric_limits<double>::infinity();
    for (double b : budgets) {
      const double v_le = solve_game(le.with_budget(b)).value;
      const double v_eq = solve_game(eq.with_budget(b)).value;
      if (v_le > prev) {
        ++increases;
        worst_rise = std::max(worst_rise, v_le - prev);
      }
      prev = v_le;
      worst_nest = std::max(worst_nest, v_le - v_eq);
      if (v_le > v_eq + 1e-9) ++nesting;
    }
    r.passed = increases == 0 && nesting == 0;
    r.detail = printf_string(
        "200 budgets, %d increases (max %.3e), %d nesting violations, "
        "max v_le - v_eq = %.3e",
        increases, worst_rise, nesting, worst_nest);
  });
}

std::vector<CriterionResult> run_all(const GameConfig& reference) {
  return {grid_point_exactness(),
          strategy_agreement(),
          powerful_jammer_clamp(),
          bound_ordering(),
          minimax_guarantee_pair(),
          semi_uniform_equivalence(),
          small_instance_oracle(),
          continuum_convergence(reference),
          simulator_unbiasedness(reference),
          monotonicity_and_nesting(reference)};
}

std::string format_line(const CriterionResult& result) {
  return printf_string("%s %2d %s: %s (%.2f s)",
                       result.passed ? "PASS" : "FAIL", result.id,
                       result.name.c_str(), result.detail.c_str(),
                       result.seconds);
}

}  // namespace jamgame::acceptance
