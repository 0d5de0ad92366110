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

#ifndef QGAME_GAME_HPP_
#define QGAME_GAME_HPP_

#include <array>
#include <string>

#include "qgame/qcore.hpp"

namespace qgame {

/// Measurement outcome labels in basis order.
inline constexpr std::array<const char*, 4> kOutcomeLabels = {"00", "01", "10", "11"};

struct Payoffs {
  double player1 = 0.0;
  double player2 = 0.0;
};

/// Payoff pair for each of the four measurement outcomes.
class PayoffTable {
 public:
  /// Throws std::invalid_argument on non-finite payoffs.
  static PayoffTable FromEntries(const std::array<Payoffs, 4>& entries);

  const Payoffs& at(int outcome) const { return entries_.at(outcome); }
  const std::array<Payoffs, 4>& entries() const { return entries_; }

 private:
  explicit PayoffTable(const std::array<Payoffs, 4>& e) : entries_(e) {}
  std::array<Payoffs, 4> entries_;
};

/// Battle of the Sexes parameters. Requires alpha > beta > gamma_mis;
/// `allow_equal` relaxes the first inequality to alpha >= beta.
struct BosParams {
  double alpha = 5.0;
  double beta = 3.0;
  double gamma_mis = 1.0;
  bool allow_equal = false;

  /// Empty when valid, otherwise a diagnostic.
  std::string Violation() const;
};

/// 00 → (α,β), 11 → (β,α), mismatches → (γm,γm).
PayoffTable BosTable(const BosParams& params);

/// Sum over outcomes of dist(o)·u(o). `dist` must sum to 1 within 1e-9.
Payoffs ExpectedPayoffs(const OutcomeDist& dist, const PayoffTable& table);

/// Independent classical mixing; each probability is the chance of
/// choosing '1'.
struct ClassicalMixed {
  double p1 = 0.0;
  double p2 = 0.0;
};

/// Product distribution of two independent classical choices.
OutcomeDist ClassicalDistribution(const ClassicalMixed& m);
Payoffs ClassicalExpected(const ClassicalMixed& m, const PayoffTable& table);

}  // namespace qgame

#endif  // QGAME_GAME_HPP_
