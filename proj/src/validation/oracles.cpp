#include "jamgame/validation/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace jamgame::oracles {

namespace {

// y = wa·e_a + wb·e_b.
struct Vertex {
  std::size_t a, b;
  double wa, wb;
};

std::vector<Vertex> budget_vertices(std::span<const double> powers,
                                    double budget, ConstraintMode mode) {
  const double tol = 1e-12 * std::max(1.0, budget);
  std::vector<Vertex> out;
  for (std::size_t j = 0; j < powers.size(); ++j) {
    const bool ok = mode == ConstraintMode::kAtMost
                        ? powers[j] <= budget + tol
                        : std::abs(powers[j] - budget) <= tol;
    if (ok) out.push_back({j, j, 1.0, 0.0});
  }
  for (std::size_t a = 0; a < powers.size(); ++a) {
    for (std::size_t b = 0; b < powers.size(); ++b) {
      if (powers[a] < budget - tol && powers[b] > budget + tol) {
        const double wb = (budget - powers[a]) / (powers[b] - powers[a]);
        out.push_back({a, b, 1.0 - wb, wb});
      }
    }
  }
  if (out.empty()) {
    throw Error(ErrorCode::kInfeasible, "budget polytope is empty");
  }
  return out;
}

double min_over(const std::vector<Vertex>& vertices, const double* g) {
  double best = std::numeric_limits<double>::infinity();
  for (const Vertex& v : vertices) {
    best = std::min(best, v.wa * g[v.a] + v.wb * g[v.b]);
  }
  return best;
}

// Visits every composition of `total` into `parts` non-negative parts.
template <class Leaf>
void for_each_composition(int parts, int total, std::vector<int>& k, int depth,
                          int remaining, Leaf& leaf) {
  if (depth == parts - 1) {
    k[static_cast<std::size_t>(depth)] = remaining;
    leaf(k);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    k[static_cast<std::size_t>(depth)] = v;
    for_each_composition(parts, total, k, depth + 1, remaining - v, leaf);
  }
}

}  // namespace

double min_over_budget_polytope(std::span<const double> g,
                                std::span<const double> powers, double budget,
                                ConstraintMode mode) {
  if (g.size() != powers.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "g vs powers");
  }
  return min_over(budget_vertices(powers, budget, mode), g.data());
}

MeshBounds mesh_minimax(const PayoffMatrix& matrix,
                        std::span<const double> powers, double budget,
                        int resolution) {
  const std::size_t rows = matrix.rows();
  const std::size_t cols = matrix.cols();
  const auto vertices = budget_vertices(powers, budget, ConstraintMode::kAtMost);
  const double step = 1.0 / resolution;

  MeshBounds out;
  out.lower = -std::numeric_limits<double>::infinity();
  out.upper = std::numeric_limits<double>::infinity();

  // Transmitter mesh: exact inner minimum over the budget polytope.
  {
    std::vector<int> k(rows);
    std::vector<double> g(cols);
    auto leaf = [&](const std::vector<int>& kk) {
      std::fill(g.begin(), g.end(), 0.0);
      for (std::size_t i = 0; i < rows; ++i) {
        if (kk[i] == 0) continue;
        const double xi = kk[i] * step;
        const auto r = matrix.row(i);
        for (std::size_t j = 0; j < cols; ++j) g[j] += xi * r[j];
      }
      out.lower = std::max(out.lower, min_over(vertices, g.data()));
    };
    for_each_composition(static_cast<int>(rows), resolution, k, 0, resolution,
                         leaf);
  }

  // Jammer mesh: budget-feasible points only, exact best row response.
  {
    const double tol = 1e-12 * std::max(1.0, budget);
    std::vector<int> k(cols);
    std::vector<double> y(cols);
    auto leaf = [&](const std::vector<int>& kk) {
      double power = 0.0;
      for (std::size_t j = 0; j < cols; ++j) {
        y[j] = kk[j] * step;
        power += y[j] * powers[j];
      }
      if (power > budget + tol) return;
      double worst = -std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < rows; ++i) {
        const auto r = matrix.row(i);
        double acc = 0.0;
        for (std::size_t j = 0; j < cols; ++j) acc += r[j] * y[j];
        worst = std::max(worst, acc);
      }
      out.upper = std::min(out.upper, worst);
    };
    for_each_composition(static_cast<int>(cols), resolution, k, 0, resolution,
                         leaf);
  }
  return out;
}

double midpoint_integral(const std::function<double(double)>& f, double a,
                         double b, long panels) {
  const double h = (b - a) / static_cast<double>(panels);
  double sum = 0.0;
  double carry = 0.0;
  for (long p = 0; p < panels; ++p) {
    const double term = f(a + (static_cast<double>(p) + 0.5) * h) - carry;
    const double next = sum + term;
    carry = (next - sum) - term;
    sum = next;
  }
  return sum * h;
}

}  // namespace jamgame::oracles
