#include "jamgame/continuous.hpp"

#include <cmath>
#include <string>

#include "jamgame/analytic.hpp"

namespace jamgame {

namespace {

constexpr double kMinimumSnr = 1e-6;
constexpr int kMaxDepth = 60;

struct Panel {
  double a, b;
  double fa, fm, fb;
  double whole;
};

class Integrator {
 public:
  Integrator(const std::function<double(double)>& f, std::size_t budget)
      : f_(f), budget_(budget) {}

  void run(const Panel& p, double tol, int depth) {
    const double m = 0.5 * (p.a + p.b);
    const double lm = 0.5 * (p.a + m);
    const double rm = 0.5 * (m + p.b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (m - p.a) / 6.0 * (p.fa + 4.0 * flm + p.fm);
    const double right = (p.b - m) / 6.0 * (p.fm + 4.0 * frm + p.fb);
    const double delta = left + right - p.whole;
    if (std::abs(delta) <= 15.0 * tol || depth >= kMaxDepth) {
      if (depth >= kMaxDepth && std::abs(delta) > 15.0 * tol) {
        throw Error(ErrorCode::kQuadratureNonConvergence,
                    "maximum bisection depth reached");
      }
      result_.value += left + right + delta / 15.0;
      result_.error_estimate += std::abs(delta) / 15.0;
      ++result_.intervals;
      return;
    }
    if (++splits_ > budget_) {
      throw Error(ErrorCode::kQuadratureNonConvergence,
                  "subdivision budget exhausted");
    }
    run({p.a, m, p.fa, flm, p.fm, left}, 0.5 * tol, depth + 1);
    run({m, p.b, p.fm, frm, p.fb, right}, 0.5 * tol, depth + 1);
  }

  QuadratureResult result() const { return result_; }

  double eval(double x) const {
    const double y = f_(x);
    if (!std::isfinite(y)) {
      throw Error(ErrorCode::kQuadratureNonConvergence,
                  "integrand is not finite at " + std::to_string(x));
    }
    return y;
  }

 private:
  const std::function<double(double)>& f_;
  std::size_t budget_;
  std::size_t splits_ = 0;
  QuadratureResult result_;
};

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f,
                                  double a, double b, double rel_tol,
                                  std::size_t max_intervals) {
  Integrator integrator(f, max_intervals);
  const double fa = integrator.eval(a);
  const double fb = integrator.eval(b);
  const double fm = integrator.eval(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double tol = rel_tol * std::abs(whole);
  integrator.run({a, b, fa, fm, fb, whole}, tol, 0);
  return integrator.result();
}

double rate_continuous(const GameConfig& config, double j) {
  if (!(j >= 0.0 && j <= config.j_max())) {
    throw Error(ErrorCode::kPowerOutOfRange, "j must lie in [0, j_max]");
  }
  return capacity(config.pt(), config.noise(), j, config.log_base());
}

ContinuousReport jth_limit(const GameConfig& config) {
  if (config.pt() < kMinimumSnr * config.noise()) {
    throw Error(ErrorCode::kDomainTooExtreme,
                "pt must be at least 1e-6 times the noise power");
  }
  const auto inverse_rate = [&config](double j) {
    return 1.0 / capacity(config.pt(), config.noise(), j, config.log_base());
  };
  const QuadratureResult q =
      adaptive_simpson(inverse_rate, 0.0, config.j_max(), 1e-12);
  const double r_top = rate_continuous(config, 0.0);
  const double r_low = rate_continuous(config, config.j_max());

  ContinuousReport out;
  out.integral = q.value;
  out.quadrature_error_estimate = q.error_estimate;
  out.j_th_lim = config.j_max() - r_low * q.value;
  out.j_th_lim_ub = 0.5 * (1.0 - r_low / r_top) * config.j_max();
  return out;
}

std::vector<std::pair<int, double>> convergence_curve(
    const GameConfig& config, std::span<const int> nt_list) {
  std::vector<std::pair<int, double>> out;
  out.reserve(nt_list.size());
  int previous = 0;
  for (int nt : nt_list) {
    if (nt <= previous) {
      throw Error(ErrorCode::kInvalidArgument,
                  "grid sizes must be positive and strictly ascending");
    }
    previous = nt;
    out.emplace_back(nt, threshold(config.with_grid(nt)).j_th);
  }
  return out;
}

}  // namespace jamgame
