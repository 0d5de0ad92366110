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

#ifndef QGAME_KERNELS_HPP_
#define QGAME_KERNELS_HPP_

// Data-parallel inner loops. Every kernel has a serial reference and an
// OpenMP version; both write each result to its own slot, so the outputs are
// bit-identical regardless of thread count or scheduling.

#include <functional>
#include <span>
#include <vector>

#include "qgame/game.hpp"

namespace qgame {

enum class Exec { kSerial, kParallel };

/// Payoffs of a two-player game over mixing probabilities (p, q) ∈ [0,1]².
/// Must be safe to call concurrently.
using ProfilePayoffFn = std::function<Payoffs(double p, double q)>;

/// Objective over a flat parameter vector. Must be safe to call concurrently.
using ObjectiveFn = std::function<double(std::span<const double>)>;

namespace kernels {

/// Row-major table of fn(ps[i], qs[j]).
std::vector<Payoffs> EvaluateGridSerial(const ProfilePayoffFn& fn,
                                        std::span<const double> ps,
                                        std::span<const double> qs);
std::vector<Payoffs> EvaluateGridOmp(const ProfilePayoffFn& fn,
                                     std::span<const double> ps,
                                     std::span<const double> qs);

/// out[k] = f(points[k * dim .. (k+1) * dim)).
std::vector<double> EvaluateBatchSerial(const ObjectiveFn& f,
                                        std::span<const double> points, int dim);
std::vector<double> EvaluateBatchOmp(const ObjectiveFn& f,
                                     std::span<const double> points, int dim);

/// out[k] = task(k) for k in [0, count).
template <typename T>
std::vector<T> MapIndexSerial(int count, const std::function<T(int)>& task) {
  std::vector<T> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) out.push_back(task(k));
  return out;
}

template <typename T>
std::vector<T> MapIndexOmp(int count, const std::function<T(int)>& task) {
  std::vector<T> out(count);
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < count; ++k) out[k] = task(k);
  return out;
}

}  // namespace kernels

inline std::vector<Payoffs> EvaluateGrid(const ProfilePayoffFn& fn,
                                         std::span<const double> ps,
                                         std::span<const double> qs, Exec exec) {
  return exec == Exec::kSerial ? kernels::EvaluateGridSerial(fn, ps, qs)
                               : kernels::EvaluateGridOmp(fn, ps, qs);
}

inline std::vector<double> EvaluateBatch(const ObjectiveFn& f,
                                         std::span<const double> points, int dim,
                                         Exec exec) {
  return exec == Exec::kSerial ? kernels::EvaluateBatchSerial(f, points, dim)
                               : kernels::EvaluateBatchOmp(f, points, dim);
}

template <typename T>
std::vector<T> MapIndex(int count, const std::function<T(int)>& task, Exec exec) {
  return exec == Exec::kSerial ? kernels::MapIndexSerial<T>(count, task)
                               : kernels::MapIndexOmp<T>(count, task);
}

}  // namespace qgame

#endif  // QGAME_KERNELS_HPP_
