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

#ifndef QGAME_QCORE_HPP_
#define QGAME_QCORE_HPP_

// Exact two-qubit linear algebra: pure and mixed joint states, local
// unitaries and Kraus channels acting on one player's qubit, the entangling
// gate, and computational-basis measurement.
//
// Basis ordering is |00>, |01>, |10>, |11> with the first bit belonging to
// player 1. All value types validate their invariants on construction from
// external data and are immutable afterwards.

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace qgame {

using Cplx = std::complex<double>;

/// Row-major 2x2 complex matrix.
using Mat2 = std::array<Cplx, 4>;
/// Row-major 4x4 complex matrix.
using Mat4 = std::array<Cplx, 16>;
using Amplitudes = std::array<Cplx, 4>;
/// Born-rule probabilities of outcomes 00, 01, 10, 11.
using OutcomeDist = std::array<double, 4>;

inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kPhaseTol = 1e-9;
inline constexpr double kEigenFloor = -1e-10;

enum class Seat { kPlayer1, kPlayer2 };

const char* SeatName(Seat seat);

Mat2 Mul(const Mat2& a, const Mat2& b);
Mat2 Adjoint(const Mat2& m);
/// Max-abs entrywise distance.
double MaxAbsDiff(std::span<const Cplx> a, std::span<const Cplx> b);

class LocalUnitary {
 public:
  /// Throws std::invalid_argument unless u†u = I within `tol`.
  static LocalUnitary FromMatrix(const Mat2& u, double tol = kAlgebraTol);
  static LocalUnitary Identity();
  static LocalUnitary PauliX();

  const Mat2& matrix() const { return u_; }
  Cplx operator()(int row, int col) const { return u_[2 * row + col]; }
  Cplx Determinant() const;

 private:
  explicit LocalUnitary(const Mat2& u) : u_(u) {}
  Mat2 u_;
};

/// U = [[e^{iφ}cos(θ/2), e^{iλ}sin(θ/2)], [−e^{−iλ}sin(θ/2), e^{−iφ}cos(θ/2)]].
LocalUnitary Su2(double theta, double phi, double lam);

/// Elementwise complex conjugate.
LocalUnitary Conjugate(const LocalUnitary& u);

/// Explicit pseudo-random source. Same seed, same sequence.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double Normal() { return normal_(engine_); }
  double Uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

/// Haar-distributed element of SU(2).
LocalUnitary RandomSu2(Rng& rng);

/// Trace-preserving Kraus channel on a single qubit (1 to 4 operators).
class LocalChannel {
 public:
  /// Throws std::invalid_argument on an empty or oversized operator list or
  /// when sum K†K differs from I by more than `tol`.
  static LocalChannel FromKraus(std::vector<Mat2> kraus,
                                double tol = kAlgebraTol);
  static LocalChannel Identity();
  static LocalChannel FromUnitary(const LocalUnitary& u);
  /// Measure in the computational basis and reset to |target>.
  static LocalChannel MeasureAndSet(int target);
  /// Measure in the computational basis, keep the outcome.
  static LocalChannel Dephase();
  /// Measure in the computational basis, then flip the outcome.
  static LocalChannel MeasureAndFlip();

  std::span<const Mat2> kraus() const { return kraus_; }
  /// Largest entry of |sum K†K − I|.
  double CompletenessError() const;

 private:
  explicit LocalChannel(std::vector<Mat2> kraus) : kraus_(std::move(kraus)) {}
  std::vector<Mat2> kraus_;
};

double CompletenessError(std::span<const Mat2> kraus);

class TwoQubitState {
 public:
  /// Throws std::invalid_argument on non-finite amplitudes or when the norm
  /// differs from 1 by more than `tol`.
  static TwoQubitState FromAmplitudes(const Amplitudes& amp,
                                      double tol = kAlgebraTol);
  /// |b1 b2> with index = 2*b1 + b2.
  static TwoQubitState Basis(int index);

  const Amplitudes& amplitudes() const { return amp_; }
  Cplx operator[](int i) const { return amp_[i]; }
  double NormSquared() const;

 private:
  friend class StateOps;
  explicit TwoQubitState(const Amplitudes& amp) : amp_(amp) {}
  Amplitudes amp_;
};

/// (|00> + |11>)/√2 with real amplitudes.
TwoQubitState PhiPlus();
/// (|01> + |10>)/√2.
TwoQubitState PsiPlus();

class TwoQubitDensity {
 public:
  /// Throws std::invalid_argument unless rho is finite, Hermitian, unit trace
  /// and has no eigenvalue below kEigenFloor.
  static TwoQubitDensity FromMatrix(const Mat4& rho, double tol = kAlgebraTol);
  static TwoQubitDensity FromPure(const TwoQubitState& s);

  const Mat4& matrix() const { return rho_; }
  Cplx operator()(int row, int col) const { return rho_[4 * row + col]; }
  Cplx Trace() const;
  double HermiticityError() const;
  double MinEigenvalue() const;
  /// |<00|rho|11>|, the coherence between the two agreeing outcomes.
  double Coherence0011() const;

 private:
  friend class StateOps;
  explicit TwoQubitDensity(const Mat4& rho) : rho_(rho) {}
  Mat4 rho_;
};

/// Convex combination sum_k w_k rho_k. Weights must be non-negative and sum
/// to 1 within kAlgebraTol.
TwoQubitDensity Mix(std::span<const double> weights,
                    std::span<const TwoQubitDensity> parts);

class EntanglingGate {
 public:
  static EntanglingGate FromMatrix(const Mat4& j, double tol = kAlgebraTol);
  const Mat4& matrix() const { return j_; }
  EntanglingGate Adjoint() const;

 private:
  explicit EntanglingGate(const Mat4& j) : j_(j) {}
  Mat4 j_;
};

/// J = exp(i γ σx⊗σx / 2) = cos(γ/2) I + i sin(γ/2) σx⊗σx, γ ∈ [0, π/2].
EntanglingGate Entangler(double gamma_e);

TwoQubitState ApplyLocalUnitary(const TwoQubitState& s, const LocalUnitary& u,
                                Seat seat);
TwoQubitDensity ApplyLocalUnitary(const TwoQubitDensity& rho,
                                  const LocalUnitary& u, Seat seat);
TwoQubitDensity ApplyChannel(const TwoQubitDensity& rho,
                             const LocalChannel& ch, Seat seat);
TwoQubitState ApplyGate(const TwoQubitState& s, const EntanglingGate& j);

OutcomeDist OutcomeDistribution(const TwoQubitState& s);
OutcomeDist OutcomeDistribution(const TwoQubitDensity& rho);

/// |<a|b>|.
double Overlap(const TwoQubitState& a, const TwoQubitState& b);
bool EqualUpToPhase(const TwoQubitState& a, const TwoQubitState& b,
                    double tol = kPhaseTol);

/// Probability that `seat` reads 0 and 1.
std::array<double, 2> Marginal(const OutcomeDist& dist, Seat seat);
/// Half the L1 distance.
double TotalVariation(const OutcomeDist& a, const OutcomeDist& b);

}  // namespace qgame

#endif  // QGAME_QCORE_HPP_
