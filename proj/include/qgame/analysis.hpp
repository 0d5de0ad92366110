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

#ifndef QGAME_ANALYSIS_HPP_
#define QGAME_ANALYSIS_HPP_

// Claim-level analyses over the quantized Battle of the Sexes: equilibria of
// the restricted {I, σx} game, the conjugate-response identity, and payoff
// suprema over unitary and channel tactics.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qgame/equilibrium.hpp"
#include "qgame/schemes.hpp"

namespace qgame {

// ---------------------------------------------------------------------------
// Restricted-game equilibria

/// ε-equilibria of the MW game with payoff MwExpectedPayoffs over (p, q).
EquilibriumReport RestrictedEquilibria(const TwoQubitState& s, const PayoffTable& table,
                                       int grid_n = kDefaultGridN, double eps = kDefaultEps,
                                       Exec exec = Exec::kParallel);

struct DilemmaReport {
  int equilibrium_count = 0;
  int payoff_distinct_count = 0;
  std::vector<Payoffs> payoffs;
  /// All equilibrium payoff pairs agree within tol.
  bool all_payoffs_equal = false;
  int pure_count = 0;
  /// All pure equilibria (if any) pay the same pair within tol.
  bool pure_payoffs_equal = false;
  bool unique_solution = false;
  bool degenerate = false;
};

/// Throws std::invalid_argument on an empty report.
DilemmaReport MakeDilemmaReport(const EquilibriumReport& report, double tol = 1e-9);

// ---------------------------------------------------------------------------
// Conjugate response

/// |<Φ+|(A ⊗ A*)|Φ+>|.
double ConjugateOverlap(const LocalUnitary& a);

struct ConjugateCheckResult {
  bool passed = false;
  double worst_overlap = 1.0;
  int samples = 0;
  std::uint64_t seed = 0;
  double tol = kPhaseTol;
};

ConjugateCheckResult ConjugateResponseCheck(int samples, std::uint64_t seed,
                                            double tol = kPhaseTol);

// ---------------------------------------------------------------------------
// Payoff suprema

struct SupremumResult {
  double best_value = 0.0;
  TacticProfile best_profile = UnitaryProfile{};
  std::vector<double> best_params;
  /// Global best-so-far after the coarse scan (iteration 0) and after each
  /// local-refinement iteration, merged across restarts.
  std::vector<std::pair<int, double>> trace;
  std::uint64_t seed = 0;
  int restarts = 0;
  int evaluations = 0;
  /// Largest payoff seen at any evaluated profile.
  double max_sampled = 0.0;
};

/// Player 1's MW payoff when the players apply Su2(params[0..3)) and
/// Su2(params[3..6)).
double UnitaryPayoff(const PayoffTable& table, const TwoQubitState& s,
                     std::span<const double> params);
UnitaryProfile UnitaryProfileFromParams(std::span<const double> params);

inline constexpr int kMinRestarts = 8;

/// Multi-start Nelder–Mead over six Euler angles, seeded from the best points
/// of a coarse 4^6 angle grid plus seeded uniform draws. Throws
/// std::invalid_argument when restarts < 8 or iters < 1.
SupremumResult UnitaryPayoffSupremum(const PayoffTable& table, const TwoQubitState& s,
                                     int restarts = 16, int iters = 400,
                                     std::uint64_t seed = 42, Exec exec = Exec::kParallel);

/// Rank-2 channel from six angles (a, b, θ1, φ1, θ2, φ2):
/// K1 = Su2(θ1, φ1, 0)·diag(cos a, cos b), K2 = Su2(θ2, φ2, 0)·diag(sin a, sin b).
/// Covers unitaries of that form, dephasing and measure-and-set.
LocalChannel ParametrizedChannel(std::span<const double> params);

/// Player 1's MW payoff for channels ParametrizedChannel(params[0..6)) and
/// ParametrizedChannel(params[6..12)).
double ChannelPayoff(const PayoffTable& table, const TwoQubitState& s,
                     std::span<const double> params);

enum class ChannelMode { kDemo, kSearch };

struct NamedChannel {
  std::string name;
  LocalChannel channel;
};

/// Identity, dephase, measure-and-set 0/1, measure-and-flip.
std::vector<NamedChannel> DemoChannels();

struct DemoPlay {
  std::string channel1;
  std::string channel2;
  PlayResult result;
};

struct EntanglementWitness {
  /// |<00|ρ|11>| of the initial state.
  double before = 0.0;
  /// Same after measure-and-set-0 on seat 1 / seat 2.
  double after_seat1 = 0.0;
  double after_seat2 = 0.0;
};

struct ChannelSupremumResult {
  SupremumResult supremum;
  std::string best_channel1;
  std::string best_channel2;
  std::vector<DemoPlay> demo;
  /// Best value found by the parametrized search alone (search mode only).
  double search_value = 0.0;
  EntanglementWitness witness;
};

ChannelSupremumResult ChannelPayoffSupremum(const PayoffTable& table, const TwoQubitState& s,
                                            ChannelMode mode, int restarts = 16,
                                            int iters = 2000, std::uint64_t seed = 42,
                                            Exec exec = Exec::kParallel);

}  // namespace qgame

#endif  // QGAME_ANALYSIS_HPP_
