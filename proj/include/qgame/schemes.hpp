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

#ifndef QGAME_SCHEMES_HPP_
#define QGAME_SCHEMES_HPP_

// The two quantization pipelines.
//
//   MW:     S ──[tactic 1 ⊗ tactic 2]── measure
//   Eisert: |00> ── J ──[A ⊗ B]── J† ── measure
//
// With S = J|00> the pipelines differ only by the closing J†.

#include <numbers>
#include <variant>

#include "qgame/game.hpp"
#include "qgame/qcore.hpp"

namespace qgame {

/// Probabilities that player 1 (p) and player 2 (q) apply σx instead of I.
struct RestrictedProfile {
  double p = 0.0;
  double q = 0.0;

  /// Throws std::invalid_argument unless both lie in [0, 1].
  void Validate() const;
};

struct UnitaryProfile {
  LocalUnitary a = LocalUnitary::Identity();
  LocalUnitary b = LocalUnitary::Identity();
};

struct ChannelProfile {
  LocalChannel k1 = LocalChannel::Identity();
  LocalChannel k2 = LocalChannel::Identity();
};

using TacticProfile = std::variant<RestrictedProfile, UnitaryProfile, ChannelProfile>;

enum class SchemeKind { kMarinattoWeber, kEisert };

struct SchemeConfig {
  SchemeKind kind = SchemeKind::kMarinattoWeber;
  TwoQubitState initial = PhiPlus();
  double gamma_e = std::numbers::pi / 2.0;

  static SchemeConfig MarinattoWeber(const TwoQubitState& initial) {
    return {SchemeKind::kMarinattoWeber, initial, std::numbers::pi / 2.0};
  }
  /// Throws std::invalid_argument when gamma_e is outside [0, π/2].
  static SchemeConfig Eisert(double gamma_e);
};

struct PlayResult {
  OutcomeDist dist{};
  Payoffs payoffs;
};

/// Mixture over {I, σx}² with weights (1−p)(1−q), (1−p)q, p(1−q), pq of the
/// correspondingly rotated |S><S|.
TwoQubitDensity MwFinalDensity(const TwoQubitState& s, const RestrictedProfile& r);

Payoffs MwExpectedPayoffs(const TwoQubitState& s, const RestrictedProfile& r,
                          const PayoffTable& table);

/// Closed form for S = |Φ+>: the outcome is 00 or 11 with total probability
/// m = (1−p)(1−q) + pq, split evenly, and 01 or 10 otherwise.
PlayResult PhiPlusRestrictedClosedForm(const RestrictedProfile& r, const PayoffTable& table);

/// Applies a tactic profile to S, measures and scores. Channel profiles are
/// applied seat 1 first; the order does not affect the result.
PlayResult MwPlay(const TwoQubitState& s, const TacticProfile& t, const PayoffTable& table);

/// Final state J†(A⊗B)J|00> before measurement.
TwoQubitState EisertFinalState(double gamma_e, const LocalUnitary& a, const LocalUnitary& b);

PlayResult EisertPlay(double gamma_e, const LocalUnitary& a, const LocalUnitary& b,
                      const PayoffTable& table);

/// Dispatches on the scheme kind. Eisert configs accept only UnitaryProfile.
PlayResult Play(const SchemeConfig& config, const TacticProfile& t, const PayoffTable& table);

struct BridgeRecord {
  /// MW play with S = J|00>.
  OutcomeDist mw{};
  /// Full Eisert pipeline.
  OutcomeDist eisert{};
  /// Eisert pipeline with the closing J† replaced by the identity.
  OutcomeDist eisert_without_inverse{};
  double tv_mw_eisert = 0.0;
  double tv_mw_without_inverse = 0.0;
  double tv_eisert_without_inverse = 0.0;
  Payoffs mw_payoffs;
  Payoffs eisert_payoffs;
};

BridgeRecord SchemeBridge(double gamma_e, const LocalUnitary& a, const LocalUnitary& b,
                          const PayoffTable& table);

}  // namespace qgame

#endif  // QGAME_SCHEMES_HPP_
