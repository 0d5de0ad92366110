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

#include <cmath>
#include <numeric>

#include "gtest/gtest.h"
#include "qgame/analysis.hpp"
#include "qgame/equilibrium.hpp"

using namespace qgame;

namespace {

const PayoffTable kDefault = BosTable(BosParams{});

}  // namespace

TEST(Kernels, GridSerialMatchesParallelBitForBit) {
  const std::vector<double> ps = UniformGrid(301), qs = UniformGrid(257);
  const ProfilePayoffFn fn = [](double p, double q) {
    return MwPlay(PhiPlus(), RestrictedProfile{p, q}, kDefault).payoffs;
  };
  const auto a = kernels::EvaluateGridSerial(fn, ps, qs);
  const auto b = kernels::EvaluateGridOmp(fn, ps, qs);
  ASSERT_EQ(a.size(), ps.size() * qs.size());
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    ASSERT_EQ(a[i].player1, b[i].player1) << i;
    ASSERT_EQ(a[i].player2, b[i].player2) << i;
  }
}

TEST(Kernels, GridLayoutIsRowMajor) {
  const std::vector<double> ps = {0.0, 0.5, 1.0}, qs = {0.0, 1.0};
  const auto g = kernels::EvaluateGridSerial([](double p, double q) { return Payoffs{p, q}; }, ps, qs);
  ASSERT_EQ(g.size(), 6u);
  EXPECT_EQ(g[3].player1, 0.5);
  EXPECT_EQ(g[3].player2, 1.0);
}

TEST(Kernels, BatchSerialMatchesParallelBitForBit) {
  constexpr int kDim = 6, kCount = 2000;
  std::vector<double> pts(kDim * kCount);
  Rng rng(3);
  for (double& x : pts) x = rng.Uniform(-3.2, 3.2);
  const ObjectiveFn f = [](std::span<const double> x) {
    return UnitaryPayoff(kDefault, PhiPlus(), x);
  };
  const auto a = kernels::EvaluateBatchSerial(f, pts, kDim);
  const auto b = kernels::EvaluateBatchOmp(f, pts, kDim);
  ASSERT_EQ(a.size(), static_cast<std::size_t>(kCount));
  for (int i = 0; i < kCount; ++i) ASSERT_EQ(a[i], b[i]) << i;
}

TEST(Kernels, BatchRejectsRaggedInput) {
  const ObjectiveFn f = [](std::span<const double>) { return 0.0; };
  EXPECT_THROW(kernels::EvaluateBatchSerial(f, std::vector<double>(7), 3), std::invalid_argument);
  EXPECT_THROW(kernels::EvaluateBatchOmp(f, std::vector<double>(7), 3), std::invalid_argument);
}

TEST(Kernels, MapIndexPreservesOrder) {
  const std::function<int(int)> sq = [](int k) { return k * k; };
  const auto a = kernels::MapIndexSerial<int>(500, sq);
  const auto b = kernels::MapIndexOmp<int>(500, sq);
  EXPECT_EQ(a, b);
  EXPECT_EQ(b[499], 499 * 499);
}

TEST(Kernels, DispatchersFollowExec) {
  const std::vector<double> ps = UniformGrid(11);
  const ProfilePayoffFn fn = [](double p, double q) { return Payoffs{p * q, p + q}; };
  const auto a = EvaluateGrid(fn, ps, ps, Exec::kSerial);
  const auto b = EvaluateGrid(fn, ps, ps, Exec::kParallel);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].player1, b[i].player1);
}
