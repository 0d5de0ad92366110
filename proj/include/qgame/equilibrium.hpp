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

#ifndef QGAME_EQUILIBRIUM_HPP_
#define QGAME_EQUILIBRIUM_HPP_

// ε-Nash equilibria of two-player games whose strategies are mixing
// probabilities (p for player 1, q for player 2).
//
// The search assumes each player's payoff is affine in her own probability,
// which holds for the mixed extension of any finite game and for the
// probabilistic tactic mixtures of the quantized scheme. Under that
// assumption a player's best response to the opponent is decided by the sign
// of the endpoint difference D1(q) = E1(1,q) − E1(0,q) (resp. D2(p)), and
// interior equilibria sit on the roots of those differences. Roots are
// bracketed on the grid and refined by bisection; every reported profile is
// then re-checked against a dense grid of unilateral deviations.

#include <vector>

#include "qgame/game.hpp"
#include "qgame/kernels.hpp"

namespace qgame {

inline constexpr int kDefaultGridN = 101;
inline constexpr double kDefaultEps = 1e-6;
inline constexpr int kVerifyPoints = 1001;

struct Equilibrium {
  double p = 0.0;
  double q = 0.0;
  Payoffs payoffs;
  /// Largest unilateral-deviation gain found by the dense check (≤ eps).
  double slack = 0.0;

  bool IsPure(double tol = 1e-12) const;
};

struct EquilibriumReport {
  /// Sorted lexicographically by (p, q).
  std::vector<Equilibrium> equilibria;
  int grid_n = kDefaultGridN;
  double eps = kDefaultEps;
  int verify_points = kVerifyPoints;
  /// Every scanned profile was an equilibrium (payoffs do not depend on
  /// either player's choice).
  bool degenerate = false;
};

struct DeviationGains {
  double player1 = 0.0;
  double player2 = 0.0;
  double Max() const { return player1 > player2 ? player1 : player2; }
};

/// i/(n−1) for i in [0, n).
std::vector<double> UniformGrid(int n);

/// Best gain each player gets by deviating unilaterally to any of `points`
/// uniformly spaced probabilities.
DeviationGains UnilateralDeviationGains(const ProfilePayoffFn& fn, double p, double q,
                                        int points = kVerifyPoints);

/// Throws std::invalid_argument when grid_n < 101 or eps is negative.
EquilibriumReport FindEquilibria(const ProfilePayoffFn& fn, int grid_n = kDefaultGridN,
                                 double eps = kDefaultEps, Exec exec = Exec::kParallel);

/// Equilibria of the classical mixed extension of `table`.
EquilibriumReport ClassicalEquilibria(const PayoffTable& table, int grid_n = kDefaultGridN,
                                      double eps = kDefaultEps, Exec exec = Exec::kParallel);

/// Subset of `report` with both probabilities in {0, 1}.
EquilibriumReport PureEquilibria(const EquilibriumReport& report);

}  // namespace qgame

#endif  // QGAME_EQUILIBRIUM_HPP_
