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

#include "qgame/qcore.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qgame {

// Unchecked constructors for values produced by operations whose outputs
// satisfy the invariants by construction.
class StateOps {
 public:
  static TwoQubitState State(const Amplitudes& a) { return TwoQubitState(a); }
  static TwoQubitDensity Density(const Mat4& m) { return TwoQubitDensity(m); }
};

namespace {

constexpr Cplx kI{0.0, 1.0};

bool Finite(Cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

template <typename Range>
void RequireFinite(const Range& values, const char* what) {
  for (const Cplx& z : values) {
    if (!Finite(z)) {
      throw std::invalid_argument(std::string(what) + ": non-finite entry");
    }
  }
}

// Index pairs (|.0>, |.1>) on which a seat's 2x2 operator acts.
constexpr std::array<std::array<int, 2>, 2> SeatPairs(Seat seat) {
  if (seat == Seat::kPlayer1) return {{{0, 2}, {1, 3}}};
  return {{{0, 1}, {2, 3}}};
}

// Returns (K⊗I) rho (K⊗I)† or (I⊗K) rho (I⊗K)†.
Mat4 Conjugated(const Mat4& rho, const Mat2& k, Seat seat) {
  const auto pairs = SeatPairs(seat);
  Mat4 left{};
  // left = (K on seat) * rho, acting on row indices.
  for (const auto& pr : pairs) {
    for (int col = 0; col < 4; ++col) {
      const Cplx r0 = rho[4 * pr[0] + col];
      const Cplx r1 = rho[4 * pr[1] + col];
      left[4 * pr[0] + col] = k[0] * r0 + k[1] * r1;
      left[4 * pr[1] + col] = k[2] * r0 + k[3] * r1;
    }
  }
  Mat4 out{};
  // out = left * (K on seat)†, acting on column indices.
  for (int row = 0; row < 4; ++row) {
    for (const auto& pc : pairs) {
      const Cplx l0 = left[4 * row + pc[0]];
      const Cplx l1 = left[4 * row + pc[1]];
      out[4 * row + pc[0]] = l0 * std::conj(k[0]) + l1 * std::conj(k[1]);
      out[4 * row + pc[1]] = l0 * std::conj(k[2]) + l1 * std::conj(k[3]);
    }
  }
  return out;
}

double IdentityError4(const Mat4& m) {
  double err = 0.0;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      err = std::max(err, std::abs(m[4 * r + c] - Cplx(r == c ? 1.0 : 0.0)));
    }
  }
  return err;
}

Mat4 Mul4(const Mat4& a, const Mat4& b) {
  Mat4 out{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      Cplx acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += a[4 * r + k] * b[4 * k + c];
      out[4 * r + c] = acc;
    }
  }
  return out;
}

Mat4 Adjoint4(const Mat4& m) {
  Mat4 out{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) out[4 * c + r] = std::conj(m[4 * r + c]);
  }
  return out;
}

}  // namespace

const char* SeatName(Seat seat) {
  return seat == Seat::kPlayer1 ? "player1" : "player2";
}

Mat2 Mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 Adjoint(const Mat2& m) {
  return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

double MaxAbsDiff(std::span<const Cplx> a, std::span<const Cplx> b) {
  if (a.size() != b.size()) throw std::invalid_argument("MaxAbsDiff: size mismatch");
  double err = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) err = std::max(err, std::abs(a[i] - b[i]));
  return err;
}

// ---------------------------------------------------------------------------
// LocalUnitary

LocalUnitary LocalUnitary::FromMatrix(const Mat2& u, double tol) {
  RequireFinite(u, "LocalUnitary");
  const Mat2 uu = Mul(Adjoint(u), u);
  const Mat2 id{1.0, 0.0, 0.0, 1.0};
  if (MaxAbsDiff(uu, id) > tol) {
    throw std::invalid_argument("LocalUnitary: matrix is not unitary");
  }
  return LocalUnitary(u);
}

LocalUnitary LocalUnitary::Identity() { return LocalUnitary({1.0, 0.0, 0.0, 1.0}); }

LocalUnitary LocalUnitary::PauliX() { return LocalUnitary({0.0, 1.0, 1.0, 0.0}); }

Cplx LocalUnitary::Determinant() const { return u_[0] * u_[3] - u_[1] * u_[2]; }

LocalUnitary Su2(double theta, double phi, double lam) {
  if (!std::isfinite(theta) || !std::isfinite(phi) || !std::isfinite(lam)) {
    throw std::invalid_argument("Su2: non-finite angle");
  }
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return LocalUnitary::FromMatrix({std::polar(c, phi), std::polar(s, lam),
                                   -std::polar(s, -lam), std::polar(c, -phi)});
}

LocalUnitary Conjugate(const LocalUnitary& u) {
  const Mat2& m = u.matrix();
  return LocalUnitary::FromMatrix(
      {std::conj(m[0]), std::conj(m[1]), std::conj(m[2]), std::conj(m[3])});
}

LocalUnitary RandomSu2(Rng& rng) {
  // Gram-Schmidt on the columns of a complex Ginibre matrix gives a Haar
  // element of U(2); dividing by a square root of the determinant lands in
  // SU(2) without biasing the measure.
  std::array<Cplx, 2> c0, c1;
  for (;;) {
    for (auto* col : {&c0, &c1}) {
      for (Cplx& z : *col) {
        const double re = rng.Normal();
        const double im = rng.Normal();
        z = Cplx(re, im) / std::numbers::sqrt2;
      }
    }
    const double n0 = std::sqrt(std::norm(c0[0]) + std::norm(c0[1]));
    if (n0 < 1e-12) continue;
    c0[0] /= n0;
    c0[1] /= n0;
    const Cplx proj = std::conj(c0[0]) * c1[0] + std::conj(c0[1]) * c1[1];
    c1[0] -= proj * c0[0];
    c1[1] -= proj * c0[1];
    const double n1 = std::sqrt(std::norm(c1[0]) + std::norm(c1[1]));
    if (n1 < 1e-12) continue;
    c1[0] /= n1;
    c1[1] /= n1;
    break;
  }
  const Cplx det = c0[0] * c1[1] - c1[0] * c0[1];
  const Cplx fix = 1.0 / std::sqrt(det);
  return LocalUnitary::FromMatrix(
      {c0[0] * fix, c1[0] * fix, c0[1] * fix, c1[1] * fix});
}

// ---------------------------------------------------------------------------
// LocalChannel

double CompletenessError(std::span<const Mat2> kraus) {
  Mat2 sum{};
  for (const Mat2& k : kraus) {
    const Mat2 kk = Mul(Adjoint(k), k);
    for (int i = 0; i < 4; ++i) sum[i] += kk[i];
  }
  const Mat2 id{1.0, 0.0, 0.0, 1.0};
  return MaxAbsDiff(sum, id);
}

LocalChannel LocalChannel::FromKraus(std::vector<Mat2> kraus, double tol) {
  if (kraus.empty() || kraus.size() > 4) {
    throw std::invalid_argument("LocalChannel: expected 1 to 4 Kraus operators");
  }
  for (const Mat2& k : kraus) RequireFinite(k, "LocalChannel");
  if (qgame::CompletenessError(kraus) > tol) {
    throw std::invalid_argument("LocalChannel: Kraus operators are not trace preserving");
  }
  return LocalChannel(std::move(kraus));
}

LocalChannel LocalChannel::Identity() { return LocalChannel({{1.0, 0.0, 0.0, 1.0}}); }

LocalChannel LocalChannel::FromUnitary(const LocalUnitary& u) {
  return LocalChannel({u.matrix()});
}

LocalChannel LocalChannel::MeasureAndSet(int target) {
  if (target == 0) return LocalChannel({{1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}});
  if (target == 1) return LocalChannel({{0.0, 0.0, 1.0, 0.0}, {0.0, 0.0, 0.0, 1.0}});
  throw std::invalid_argument("MeasureAndSet: target must be 0 or 1");
}

LocalChannel LocalChannel::Dephase() {
  return LocalChannel({{1.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}});
}

LocalChannel LocalChannel::MeasureAndFlip() {
  return LocalChannel({{0.0, 0.0, 1.0, 0.0}, {0.0, 1.0, 0.0, 0.0}});
}

double LocalChannel::CompletenessError() const {
  return qgame::CompletenessError(kraus_);
}

// ---------------------------------------------------------------------------
// States

TwoQubitState TwoQubitState::FromAmplitudes(const Amplitudes& amp, double tol) {
  RequireFinite(amp, "TwoQubitState");
  TwoQubitState s(amp);
  if (std::abs(s.NormSquared() - 1.0) > tol) {
    throw std::invalid_argument("TwoQubitState: amplitudes are not normalized");
  }
  return s;
}

TwoQubitState TwoQubitState::Basis(int index) {
  if (index < 0 || index > 3) throw std::invalid_argument("Basis: index out of range");
  Amplitudes a{};
  a[index] = 1.0;
  return TwoQubitState(a);
}

double TwoQubitState::NormSquared() const {
  double n = 0.0;
  for (const Cplx& z : amp_) n += std::norm(z);
  return n;
}

TwoQubitState PhiPlus() {
  const double h = 1.0 / std::numbers::sqrt2;
  return TwoQubitState::FromAmplitudes({h, 0.0, 0.0, h});
}

TwoQubitState PsiPlus() {
  const double h = 1.0 / std::numbers::sqrt2;
  return TwoQubitState::FromAmplitudes({0.0, h, h, 0.0});
}

TwoQubitDensity TwoQubitDensity::FromMatrix(const Mat4& rho, double tol) {
  RequireFinite(rho, "TwoQubitDensity");
  TwoQubitDensity d(rho);
  if (d.HermiticityError() > tol) {
    throw std::invalid_argument("TwoQubitDensity: matrix is not Hermitian");
  }
  if (std::abs(d.Trace() - Cplx(1.0)) > tol) {
    throw std::invalid_argument("TwoQubitDensity: trace is not 1");
  }
  if (d.MinEigenvalue() < kEigenFloor) {
    throw std::invalid_argument("TwoQubitDensity: matrix is not positive semidefinite");
  }
  return d;
}

TwoQubitDensity TwoQubitDensity::FromPure(const TwoQubitState& s) {
  Mat4 rho{};
  const Amplitudes& a = s.amplitudes();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) rho[4 * r + c] = a[r] * std::conj(a[c]);
  }
  return TwoQubitDensity(rho);
}

Cplx TwoQubitDensity::Trace() const {
  return rho_[0] + rho_[5] + rho_[10] + rho_[15];
}

double TwoQubitDensity::HermiticityError() const {
  double err = 0.0;
  for (int r = 0; r < 4; ++r) {
    for (int c = r; c < 4; ++c) {
      err = std::max(err, std::abs(rho_[4 * r + c] - std::conj(rho_[4 * c + r])));
    }
  }
  return err;
}

double TwoQubitDensity::MinEigenvalue() const {
  Eigen::Matrix4cd m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m(r, c) = rho_[4 * r + c];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double TwoQubitDensity::Coherence0011() const { return std::abs(rho_[3]); }

TwoQubitDensity Mix(std::span<const double> weights,
                    std::span<const TwoQubitDensity> parts) {
  if (weights.size() != parts.size() || parts.empty()) {
    throw std::invalid_argument("Mix: weights and parts must be non-empty and equal length");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("Mix: negative or NaN weight");
    total += w;
  }
  if (std::abs(total - 1.0) > kAlgebraTol) {
    throw std::invalid_argument("Mix: weights do not sum to 1");
  }
  Mat4 out{};
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Mat4& m = parts[k].matrix();
    for (int i = 0; i < 16; ++i) out[i] += weights[k] * m[i];
  }
  return StateOps::Density(out);
}

// ---------------------------------------------------------------------------
// Entangling gate

EntanglingGate EntanglingGate::FromMatrix(const Mat4& j, double tol) {
  RequireFinite(j, "EntanglingGate");
  if (IdentityError4(Mul4(Adjoint4(j), j)) > tol) {
    throw std::invalid_argument("EntanglingGate: matrix is not unitary");
  }
  return EntanglingGate(j);
}

EntanglingGate EntanglingGate::Adjoint() const { return EntanglingGate(Adjoint4(j_)); }

EntanglingGate Entangler(double gamma_e) {
  if (!(gamma_e >= 0.0 && gamma_e <= std::numbers::pi / 2.0)) {
    throw std::invalid_argument("Entangler: gamma_e must lie in [0, pi/2]");
  }
  const double c = std::cos(gamma_e / 2.0);
  const Cplx s = kI * std::sin(gamma_e / 2.0);
  // σx⊗σx maps |ab> to |(1-a)(1-b)>, i.e. index k to 3-k.
  Mat4 j{};
  for (int k = 0; k < 4; ++k) {
    j[4 * k + k] = c;
    j[4 * k + (3 - k)] = s;
  }
  return EntanglingGate::FromMatrix(j);
}

// ---------------------------------------------------------------------------
// Application

TwoQubitState ApplyLocalUnitary(const TwoQubitState& s, const LocalUnitary& u,
                                Seat seat) {
  const Mat2& m = u.matrix();
  Amplitudes out{};
  for (const auto& pr : SeatPairs(seat)) {
    const Cplx a0 = s[pr[0]];
    const Cplx a1 = s[pr[1]];
    out[pr[0]] = m[0] * a0 + m[1] * a1;
    out[pr[1]] = m[2] * a0 + m[3] * a1;
  }
  return StateOps::State(out);
}

TwoQubitDensity ApplyLocalUnitary(const TwoQubitDensity& rho,
                                  const LocalUnitary& u, Seat seat) {
  return StateOps::Density(Conjugated(rho.matrix(), u.matrix(), seat));
}

TwoQubitDensity ApplyChannel(const TwoQubitDensity& rho,
                             const LocalChannel& ch, Seat seat) {
  Mat4 out{};
  for (const Mat2& k : ch.kraus()) {
    const Mat4 term = Conjugated(rho.matrix(), k, seat);
    for (int i = 0; i < 16; ++i) out[i] += term[i];
  }
  return StateOps::Density(out);
}

TwoQubitState ApplyGate(const TwoQubitState& s, const EntanglingGate& j) {
  const Mat4& m = j.matrix();
  Amplitudes out{};
  for (int r = 0; r < 4; ++r) {
    Cplx acc = 0.0;
    for (int c = 0; c < 4; ++c) acc += m[4 * r + c] * s[c];
    out[r] = acc;
  }
  return StateOps::State(out);
}

// ---------------------------------------------------------------------------
// Measurement and comparison

OutcomeDist OutcomeDistribution(const TwoQubitState& s) {
  OutcomeDist d{};
  for (int i = 0; i < 4; ++i) d[i] = std::norm(s[i]);
  return d;
}

OutcomeDist OutcomeDistribution(const TwoQubitDensity& rho) {
  OutcomeDist d{};
  // Diagonal entries can carry -1e-17 style rounding; clamp at zero.
  for (int i = 0; i < 4; ++i) d[i] = std::max(0.0, rho(i, i).real());
  return d;
}

double Overlap(const TwoQubitState& a, const TwoQubitState& b) {
  Cplx acc = 0.0;
  for (int i = 0; i < 4; ++i) acc += std::conj(a[i]) * b[i];
  return std::abs(acc);
}

bool EqualUpToPhase(const TwoQubitState& a, const TwoQubitState& b, double tol) {
  return Overlap(a, b) >= 1.0 - tol;
}

std::array<double, 2> Marginal(const OutcomeDist& dist, Seat seat) {
  if (seat == Seat::kPlayer1) return {dist[0] + dist[1], dist[2] + dist[3]};
  return {dist[0] + dist[2], dist[1] + dist[3]};
}

double TotalVariation(const OutcomeDist& a, const OutcomeDist& b) {
  double l1 = 0.0;
  for (int i = 0; i < 4; ++i) l1 += std::abs(a[i] - b[i]);
  return 0.5 * l1;
}

}  // namespace qgame
