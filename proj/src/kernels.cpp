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

#include "qgame/kernels.hpp"

#include <cstddef>
#include <stdexcept>

namespace qgame::kernels {
namespace {

void CheckBatchShape(std::size_t size, int dim) {
  if (dim <= 0 || size % static_cast<std::size_t>(dim) != 0) {
    throw std::invalid_argument("batch size must be a positive multiple of dim");
  }
}

}  // namespace

std::vector<Payoffs> EvaluateGridSerial(const ProfilePayoffFn& fn,
                                        std::span<const double> ps,
                                        std::span<const double> qs) {
  std::vector<Payoffs> out(ps.size() * qs.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = 0; j < qs.size(); ++j) {
      out[i * qs.size() + j] = fn(ps[i], qs[j]);
    }
  }
  return out;
}

std::vector<Payoffs> EvaluateGridOmp(const ProfilePayoffFn& fn,
                                     std::span<const double> ps,
                                     std::span<const double> qs) {
  const long rows = static_cast<long>(ps.size());
  const long cols = static_cast<long>(qs.size());
  std::vector<Payoffs> out(ps.size() * qs.size());
#pragma omp parallel for schedule(static)
  for (long k = 0; k < rows * cols; ++k) {
    out[k] = fn(ps[k / cols], qs[k % cols]);
  }
  return out;
}

std::vector<double> EvaluateBatchSerial(const ObjectiveFn& f,
                                        std::span<const double> points, int dim) {
  CheckBatchShape(points.size(), dim);
  const std::size_t n = points.size() / dim;
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = f(points.subspan(k * dim, dim));
  return out;
}

std::vector<double> EvaluateBatchOmp(const ObjectiveFn& f,
                                     std::span<const double> points, int dim) {
  CheckBatchShape(points.size(), dim);
  const long n = static_cast<long>(points.size() / dim);
  std::vector<double> out(n);
#pragma omp parallel for schedule(static)
  for (long k = 0; k < n; ++k) out[k] = f(points.subspan(k * dim, dim));
  return out;
}

}  // namespace qgame::kernels
