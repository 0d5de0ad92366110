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

#include "qgame/schemes.hpp"

#include <stdexcept>
#include <type_traits>

namespace qgame {

void RestrictedProfile::Validate() const {
  if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("RestrictedProfile: p and q must lie in [0, 1]");
  }
}

SchemeConfig SchemeConfig::Eisert(double gamma_e) {
  Entangler(gamma_e);  // range check
  return {SchemeKind::kEisert, TwoQubitState::Basis(0), gamma_e};
}

TwoQubitDensity MwFinalDensity(const TwoQubitState& s, const RestrictedProfile& r) {
  r.Validate();
  const LocalUnitary id = LocalUnitary::Identity();
  const LocalUnitary flip = LocalUnitary::PauliX();
  const std::array<double, 4> weights = {(1 - r.p) * (1 - r.q), (1 - r.p) * r.q,
                                         r.p * (1 - r.q), r.p * r.q};
  std::vector<TwoQubitDensity> parts;
  parts.reserve(4);
  for (const LocalUnitary* a : {&id, &flip}) {
    for (const LocalUnitary* b : {&id, &flip}) {
      const TwoQubitState rotated =
          ApplyLocalUnitary(ApplyLocalUnitary(s, *a, Seat::kPlayer1), *b, Seat::kPlayer2);
      parts.push_back(TwoQubitDensity::FromPure(rotated));
    }
  }
  return Mix(weights, parts);
}

Payoffs MwExpectedPayoffs(const TwoQubitState& s, const RestrictedProfile& r,
                          const PayoffTable& table) {
  return ExpectedPayoffs(OutcomeDistribution(MwFinalDensity(s, r)), table);
}

PlayResult PhiPlusRestrictedClosedForm(const RestrictedProfile& r, const PayoffTable& table) {
  r.Validate();
  const double m = (1 - r.p) * (1 - r.q) + r.p * r.q;
  PlayResult out;
  out.dist = {m / 2, (1 - m) / 2, (1 - m) / 2, m / 2};
  out.payoffs = ExpectedPayoffs(out.dist, table);
  return out;
}

PlayResult MwPlay(const TwoQubitState& s, const TacticProfile& t, const PayoffTable& table) {
  PlayResult out;
  std::visit(
      [&](const auto& profile) {
        using T = std::decay_t<decltype(profile)>;
        if constexpr (std::is_same_v<T, RestrictedProfile>) {
          out.dist = OutcomeDistribution(MwFinalDensity(s, profile));
        } else if constexpr (std::is_same_v<T, UnitaryProfile>) {
          out.dist = OutcomeDistribution(ApplyLocalUnitary(
              ApplyLocalUnitary(s, profile.a, Seat::kPlayer1), profile.b, Seat::kPlayer2));
        } else {
          const TwoQubitDensity rho = TwoQubitDensity::FromPure(s);
          out.dist = OutcomeDistribution(ApplyChannel(
              ApplyChannel(rho, profile.k1, Seat::kPlayer1), profile.k2, Seat::kPlayer2));
        }
      },
      t);
  out.payoffs = ExpectedPayoffs(out.dist, table);
  return out;
}

TwoQubitState EisertFinalState(double gamma_e, const LocalUnitary& a, const LocalUnitary& b) {
  const EntanglingGate j = Entangler(gamma_e);
  TwoQubitState s = ApplyGate(TwoQubitState::Basis(0), j);
  s = ApplyLocalUnitary(ApplyLocalUnitary(s, a, Seat::kPlayer1), b, Seat::kPlayer2);
  return ApplyGate(s, j.Adjoint());
}

PlayResult EisertPlay(double gamma_e, const LocalUnitary& a, const LocalUnitary& b,
                      const PayoffTable& table) {
  PlayResult out;
  out.dist = OutcomeDistribution(EisertFinalState(gamma_e, a, b));
  out.payoffs = ExpectedPayoffs(out.dist, table);
  return out;
}

PlayResult Play(const SchemeConfig& config, const TacticProfile& t, const PayoffTable& table) {
  if (config.kind == SchemeKind::kMarinattoWeber) return MwPlay(config.initial, t, table);
  const auto* unitary = std::get_if<UnitaryProfile>(&t);
  if (unitary == nullptr) {
    throw std::invalid_argument("Play: the Eisert scheme takes unitary moves only");
  }
  return EisertPlay(config.gamma_e, unitary->a, unitary->b, table);
}

BridgeRecord SchemeBridge(double gamma_e, const LocalUnitary& a, const LocalUnitary& b,
                          const PayoffTable& table) {
  const EntanglingGate j = Entangler(gamma_e);
  const TwoQubitState prepared = ApplyGate(TwoQubitState::Basis(0), j);

  BridgeRecord rec;
  const PlayResult mw = MwPlay(prepared, UnitaryProfile{a, b}, table);
  rec.mw = mw.dist;
  rec.mw_payoffs = mw.payoffs;

  const PlayResult full = EisertPlay(gamma_e, a, b, table);
  rec.eisert = full.dist;
  rec.eisert_payoffs = full.payoffs;

  const TwoQubitState open = ApplyLocalUnitary(
      ApplyLocalUnitary(ApplyGate(TwoQubitState::Basis(0), j), a, Seat::kPlayer1), b,
      Seat::kPlayer2);
  rec.eisert_without_inverse = OutcomeDistribution(open);

  rec.tv_mw_eisert = TotalVariation(rec.mw, rec.eisert);
  rec.tv_mw_without_inverse = TotalVariation(rec.mw, rec.eisert_without_inverse);
  rec.tv_eisert_without_inverse = TotalVariation(rec.eisert, rec.eisert_without_inverse);
  return rec;
}

}  // namespace qgame
