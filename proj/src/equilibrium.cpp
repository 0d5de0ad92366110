// Copyright 2026 The qgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgame/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qgame {
namespace {

constexpr double kDedupTol = 1e-9;
constexpr int kBisectionSteps = 200;

// Zeros of an indifference function sampled on `grid`. Grid points where the
// sampled value is within `zero_tol` of zero count as roots; sign changes
// between neighbours are bisected.
std::vector<double> IndifferenceRoots(const std::function<double(double)>& diff,
                                      std::span<const double> grid,
                                      std::span<const double> values, double zero_tol) {
  std::vector<double> roots;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (std::abs(values[k]) <= zero_tol) roots.push_back(grid[k]);
  }
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    double lo = grid[k], hi = grid[k + 1];
    double f_lo = values[k];
    const double f_hi = values[k + 1];
    if (std::abs(f_lo) <= zero_tol || std::abs(f_hi) <= zero_tol) continue;
    if ((f_lo < 0.0) == (f_hi < 0.0)) continue;
    for (int step = 0; step < kBisectionSteps && hi - lo > 1e-16; ++step) {
      const double mid = 0.5 * (lo + hi);
      const double f_mid = diff(mid);
      if (f_mid == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((f_mid < 0.0) == (f_lo < 0.0)) {
        lo = mid;
        f_lo = f_mid;
      } else {
        hi = mid;
      }
    }
    roots.push_back(0.5 * (lo + hi));
  }
  return roots;
}

std::vector<double> MergeCandidates(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  std::vector<double> out;
  for (double v : values) {
    if (out.empty() || v - out.back() > kDedupTol) out.push_back(v);
  }
  return out;
}

}  // namespace

bool Equilibrium::IsPure(double tol) const {
  auto edge = [tol](double x) { return std::abs(x) <= tol || std::abs(x - 1.0) <= tol; };
  return edge(p) && edge(q);
}

std::vector<double> UniformGrid(int n) {
  if (n < 2) throw std::invalid_argument("UniformGrid: need at least two points");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = static_cast<double>(i) / (n - 1);
  g.back() = 1.0;
  return g;
}

DeviationGains UnilateralDeviationGains(const ProfilePayoffFn& fn, double p, double q,
                                        int points) {
  const Payoffs base = fn(p, q);
  DeviationGains gains;
  for (double x : UniformGrid(points)) {
    gains.player1 = std::max(gains.player1, fn(x, q).player1 - base.player1);
    gains.player2 = std::max(gains.player2, fn(p, x).player2 - base.player2);
  }
  return gains;
}

EquilibriumReport FindEquilibria(const ProfilePayoffFn& fn, int grid_n, double eps,
                                 Exec exec) {
  if (grid_n < kDefaultGridN) {
    throw std::invalid_argument("FindEquilibria: grid_n must be at least 101");
  }
  if (!(eps >= 0.0)) throw std::invalid_argument("FindEquilibria: eps must be >= 0");

  const std::vector<double> grid = UniformGrid(grid_n);
  const std::vector<double> ends = {0.0, 1.0};

  // Indifference curves: player 1 against q, player 2 against p.
  const std::vector<Payoffs> by_q = EvaluateGrid(fn, ends, grid, exec);
  const std::vector<Payoffs> by_p = EvaluateGrid(fn, grid, ends, exec);
  std::vector<double> d1(grid_n), d2(grid_n);
  for (int k = 0; k < grid_n; ++k) {
    d1[k] = by_q[grid_n + k].player1 - by_q[k].player1;
    d2[k] = by_p[2 * k + 1].player2 - by_p[2 * k].player2;
  }
  auto diff1 = [&fn](double q) { return fn(1.0, q).player1 - fn(0.0, q).player1; };
  auto diff2 = [&fn](double p) { return fn(p, 1.0).player2 - fn(p, 0.0).player2; };
  std::vector<double> q_roots = IndifferenceRoots(diff1, grid, d1, eps);
  std::vector<double> p_roots = IndifferenceRoots(diff2, grid, d2, eps);

  std::vector<double> ps = grid, qs = grid;
  ps.insert(ps.end(), p_roots.begin(), p_roots.end());
  qs.insert(qs.end(), q_roots.begin(), q_roots.end());
  ps = MergeCandidates(std::move(ps));
  qs = MergeCandidates(std::move(qs));

  // Candidate scan: ε-best responses within the candidate sets. Both sets
  // contain the endpoints, so the row/column maxima are exact best-response
  // values for affine payoffs.
  const std::size_t rows = ps.size(), cols = qs.size();
  const std::vector<Payoffs> table = EvaluateGrid(fn, ps, qs, exec);
  std::vector<double> best1(cols, -INFINITY), best2(rows, -INFINITY);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const Payoffs& u = table[i * cols + j];
      best1[j] = std::max(best1[j], u.player1);
      best2[i] = std::max(best2[i], u.player2);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> survivors;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const Payoffs& u = table[i * cols + j];
      if (u.player1 >= best1[j] - eps && u.player2 >= best2[i] - eps) {
        survivors.emplace_back(i, j);
      }
    }
  }

  const std::vector<Equilibrium> checked = MapIndex<Equilibrium>(
      static_cast<int>(survivors.size()),
      [&](int k) {
        const auto [i, j] = survivors[k];
        Equilibrium e;
        e.p = ps[i];
        e.q = qs[j];
        e.payoffs = table[i * cols + j];
        e.slack = UnilateralDeviationGains(fn, e.p, e.q, kVerifyPoints).Max();
        return e;
      },
      exec);

  EquilibriumReport report;
  report.grid_n = grid_n;
  report.eps = eps;
  report.verify_points = kVerifyPoints;
  for (const Equilibrium& e : checked) {
    if (e.slack <= eps) report.equilibria.push_back(e);
  }
  report.degenerate = report.equilibria.size() == rows * cols;
  // Survivors were produced in (p, q) order, so the list is already sorted.
  return report;
}

EquilibriumReport ClassicalEquilibria(const PayoffTable& table, int grid_n, double eps,
                                      Exec exec) {
  return FindEquilibria(
      [table](double p, double q) { return ClassicalExpected({p, q}, table); }, grid_n,
      eps, exec);
}

EquilibriumReport PureEquilibria(const EquilibriumReport& report) {
  EquilibriumReport out = report;
  out.equilibria.clear();
  out.degenerate = false;
  for (const Equilibrium& e : report.equilibria) {
    if (e.IsPure()) out.equilibria.push_back(e);
  }
  return out;
}

}  // namespace qgame
