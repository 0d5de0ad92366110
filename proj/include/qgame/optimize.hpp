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

#ifndef QGAME_OPTIMIZE_HPP_
#define QGAME_OPTIMIZE_HPP_

#include <utility>
#include <vector>

#include "qgame/kernels.hpp"

namespace qgame {

struct NelderMeadOptions {
  int max_iters = 400;
  /// Edge length of the axis-aligned starting simplex.
  double initial_step = 0.5;
  /// Stop when the spread of simplex values drops below this.
  double value_tol = 1e-13;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  /// Largest objective value seen at any evaluated point.
  double max_sampled = 0.0;
  int iterations = 0;
  int evaluations = 0;
  /// (iteration, best value so far), one entry per iteration.
  std::vector<std::pair<int, double>> trace;
};

/// Maximizes `f` with the Nelder–Mead simplex method (reflection 1,
/// expansion 2, contraction 1/2, shrink 1/2).
NelderMeadResult MaximizeNelderMead(const ObjectiveFn& f, std::vector<double> x0,
                                    const NelderMeadOptions& options = {});

}  // namespace qgame

#endif  // QGAME_OPTIMIZE_HPP_
