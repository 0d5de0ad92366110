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

#include "qgame/optimize.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qgame {

NelderMeadResult MaximizeNelderMead(const ObjectiveFn& f, std::vector<double> x0,
                                    const NelderMeadOptions& options) {
  const std::size_t n = x0.size();
  if (n == 0) throw std::invalid_argument("MaximizeNelderMead: empty start point");

  NelderMeadResult res;
  auto eval = [&](const std::vector<double>& x) {
    const double v = f(x);
    ++res.evaluations;
    if (res.evaluations == 1 || v > res.max_sampled) res.max_sampled = v;
    return v;
  };

  std::vector<std::vector<double>> simplex(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += options.initial_step;
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  auto point_along = [&](const std::vector<double>& centroid, const std::vector<double>& worst,
                         double coef) {
    std::vector<double> x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = centroid[k] + coef * (worst[k] - centroid[k]);
    return x;
  };

  for (int iter = 1; iter <= options.max_iters; ++iter) {
    res.iterations = iter;
    std::iota(order.begin(), order.end(), 0);
    // Descending by value; ties keep index order so runs are reproducible.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];
    res.trace.emplace_back(iter, values[best]);
    if (values[best] - values[worst] < options.value_tol) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[order[i]][k] / n;
    }

    const std::vector<double> reflected = point_along(centroid, simplex[worst], -1.0);
    const double f_reflected = eval(reflected);
    if (f_reflected > values[best]) {
      std::vector<double> expanded = point_along(centroid, simplex[worst], -2.0);
      const double f_expanded = eval(expanded);
      if (f_expanded > f_reflected) {
        simplex[worst] = std::move(expanded);
        values[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected > values[second]) {
      simplex[worst] = reflected;
      values[worst] = f_reflected;
      continue;
    }
    const bool outside = f_reflected > values[worst];
    std::vector<double> contracted =
        point_along(centroid, outside ? reflected : simplex[worst], 0.5);
    const double f_contracted = eval(contracted);
    if (f_contracted > (outside ? f_reflected : values[worst])) {
      simplex[worst] = std::move(contracted);
      values[worst] = f_contracted;
      continue;
    }
    for (std::size_t i = 1; i <= n; ++i) {
      std::vector<double>& x = simplex[order[i]];
      for (std::size_t k = 0; k < n; ++k) {
        x[k] = simplex[best][k] + 0.5 * (x[k] - simplex[best][k]);
      }
      values[order[i]] = eval(x);
    }
  }

  const auto best_it = std::max_element(values.begin(), values.end());
  res.value = *best_it;
  res.x = simplex[static_cast<std::size_t>(best_it - values.begin())];
  return res;
}

}  // namespace qgame
