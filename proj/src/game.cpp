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

#include "qgame/game.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qgame {

PayoffTable PayoffTable::FromEntries(const std::array<Payoffs, 4>& entries) {
  for (int o = 0; o < 4; ++o) {
    if (!std::isfinite(entries[o].player1) || !std::isfinite(entries[o].player2)) {
      throw std::invalid_argument(std::string("PayoffTable: non-finite payoff for outcome ") +
                                  kOutcomeLabels[o]);
    }
  }
  return PayoffTable(entries);
}

std::string BosParams::Violation() const {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma_mis)) {
    return "alpha, beta and gamma_mis must be finite";
  }
  std::ostringstream msg;
  if (allow_equal ? !(alpha >= beta) : !(alpha > beta)) {
    msg << "alpha must be " << (allow_equal ? ">=" : ">") << " beta (alpha=" << alpha
        << ", beta=" << beta << ")";
    return msg.str();
  }
  if (!(beta > gamma_mis)) {
    msg << "beta must be > gamma_mis (beta=" << beta << ", gamma_mis=" << gamma_mis << ")";
    return msg.str();
  }
  return {};
}

PayoffTable BosTable(const BosParams& params) {
  if (std::string v = params.Violation(); !v.empty()) {
    throw std::invalid_argument("BosParams: " + v);
  }
  const Payoffs mis{params.gamma_mis, params.gamma_mis};
  return PayoffTable::FromEntries({Payoffs{params.alpha, params.beta}, mis, mis,
                                   Payoffs{params.beta, params.alpha}});
}

Payoffs ExpectedPayoffs(const OutcomeDist& dist, const PayoffTable& table) {
  double total = 0.0;
  for (double p : dist) total += p;
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("ExpectedPayoffs: distribution does not sum to 1");
  }
  Payoffs e;
  for (int o = 0; o < 4; ++o) {
    e.player1 += dist[o] * table.at(o).player1;
    e.player2 += dist[o] * table.at(o).player2;
  }
  return e;
}

OutcomeDist ClassicalDistribution(const ClassicalMixed& m) {
  if (!(m.p1 >= 0.0 && m.p1 <= 1.0 && m.p2 >= 0.0 && m.p2 <= 1.0)) {
    throw std::invalid_argument("ClassicalMixed: probabilities must lie in [0, 1]");
  }
  return {(1 - m.p1) * (1 - m.p2), (1 - m.p1) * m.p2, m.p1 * (1 - m.p2), m.p1 * m.p2};
}

Payoffs ClassicalExpected(const ClassicalMixed& m, const PayoffTable& table) {
  return ExpectedPayoffs(ClassicalDistribution(m), table);
}

}  // namespace qgame
