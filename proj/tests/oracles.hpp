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

#ifndef QGAME_TESTS_ORACLES_HPP_
#define QGAME_TESTS_ORACLES_HPP_

// Independent reference computations used only by tests. Nothing here calls
// the library's state-manipulation routines; operators are built as explicit
// Kronecker products and states are plain arrays.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace qgame::oracle {

using C = std::complex<double>;
using M2 = std::array<C, 4>;
using M4 = std::array<C, 16>;
using V4 = std::array<C, 4>;

inline M4 Kron(const M2& a, const M2& b) {
  M4 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out[4 * (2 * i + k) + (2 * j + l)] = a[2 * i + j] * b[2 * k + l];
  return out;
}

inline V4 MatVec(const M4& m, const V4& v) {
  V4 out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[r] += m[4 * r + c] * v[c];
  return out;
}

inline M4 MatMul(const M4& a, const M4& b) {
  M4 out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      for (int k = 0; k < 4; ++k) out[4 * r + c] += a[4 * r + k] * b[4 * k + c];
  return out;
}

inline M4 Dagger(const M4& m) {
  M4 out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[4 * c + r] = std::conj(m[4 * r + c]);
  return out;
}

inline M2 Su2Matrix(double theta, double phi, double lam) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return {std::polar(c, phi), std::polar(s, lam), -std::polar(s, -lam), std::polar(c, -phi)};
}

inline const M2 kId{1.0, 0.0, 0.0, 1.0};
inline const M2 kX{0.0, 1.0, 1.0, 0.0};

/// exp(iγ X⊗X/2) via the series-free identity (X⊗X)² = I.
inline M4 EntanglerMatrix(double gamma) {
  const M4 xx = Kron(kX, kX);
  M4 out{};
  for (int i = 0; i < 16; ++i) {
    out[i] = C(std::sin(gamma / 2)) * C(0, 1) * xx[i] + (i % 5 == 0 ? std::cos(gamma / 2) : 0.0);
  }
  return out;
}

inline std::array<double, 4> Born(const V4& v) {
  return {std::norm(v[0]), std::norm(v[1]), std::norm(v[2]), std::norm(v[3])};
}

/// Diagonal of sum_k (K_k) rho (K_k)† with full 4x4 operators.
inline M4 Conjugate4(const M4& rho, const M4& k) { return MatMul(MatMul(k, rho), Dagger(k)); }

/// Classical 2x2 mixed equilibrium from the indifference equations:
/// player 1 indifferent: D1(q) = a1 + b1 q = 0, player 2: D2(p) = a2 + b2 p = 0.
struct Interior {
  double p, q;
};
inline Interior ClassicalInterior(const std::array<std::array<double, 2>, 4>& u) {
  // u[o] = (u1, u2) for outcomes 00, 01, 10, 11; p, q are probabilities of '1'.
  // E1(1,q) − E1(0,q) = (u1(10) − u1(00)) + q (u1(11) − u1(10) − u1(01) + u1(00)).
  const double a1 = u[2][0] - u[0][0];
  const double b1 = u[3][0] - u[2][0] - u[1][0] + u[0][0];
  const double a2 = u[1][1] - u[0][1];
  const double b2 = u[3][1] - u[1][1] - u[2][1] + u[0][1];
  return {-a2 / b2, -a1 / b1};
}

/// Max over an n^6 angle grid (θ ∈ [0,π], φ, λ ∈ [−π,π] per player) of
/// player 1's payoff for (A⊗B)|S>, using (A⊗B) vec(M) = vec(A M Bᵀ) where
/// M is S's amplitudes arranged as a 2x2 matrix.
inline double UnitaryGridMax(const V4& s, const std::array<double, 4>& u1, int n) {
  std::vector<M2> mats;
  mats.reserve(static_cast<std::size_t>(n) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double th = std::numbers::pi * i / (n - 1);
        const double ph = -std::numbers::pi + 2 * std::numbers::pi * j / (n - 1);
        const double la = -std::numbers::pi + 2 * std::numbers::pi * k / (n - 1);
        mats.push_back(Su2Matrix(th, ph, la));
      }
  const long count = static_cast<long>(mats.size());
  // AM = A * M_S for each A.
  std::vector<M2> am(count);
  for (long a = 0; a < count; ++a) {
    const M2& A = mats[a];
    am[a] = {A[0] * s[0] + A[1] * s[2], A[0] * s[1] + A[1] * s[3],
             A[2] * s[0] + A[3] * s[2], A[2] * s[1] + A[3] * s[3]};
  }
  double best = -INFINITY;
#pragma omp parallel for reduction(max : best) schedule(static)
  for (long a = 0; a < count; ++a) {
    const M2& L = am[a];
    for (long b = 0; b < count; ++b) {
      const M2& B = mats[b];
      // (L Bᵀ)_{ij} = L_i0 B_j0 + L_i1 B_j1.
      const double p00 = std::norm(L[0] * B[0] + L[1] * B[1]);
      const double p01 = std::norm(L[0] * B[2] + L[1] * B[3]);
      const double p10 = std::norm(L[2] * B[0] + L[3] * B[1]);
      const double p11 = std::norm(L[2] * B[2] + L[3] * B[3]);
      best = std::max(best, p00 * u1[0] + p01 * u1[1] + p10 * u1[2] + p11 * u1[3]);
    }
  }
  return best;
}

/// Random CPTP channel with `rank` Kraus operators: the blocks of a random
/// (2·rank)x2 isometry.
inline std::vector<M2> RandomKraus(std::mt19937_64& eng, int rank) {
  std::normal_distribution<double> g;
  const int rows = 2 * rank;
  std::vector<C> c0(rows), c1(rows);
  for (int r = 0; r < rows; ++r) {
    c0[r] = C(g(eng), g(eng));
    c1[r] = C(g(eng), g(eng));
  }
  double n0 = 0;
  for (const C& z : c0) n0 += std::norm(z);
  for (C& z : c0) z /= std::sqrt(n0);
  C proj = 0;
  for (int r = 0; r < rows; ++r) proj += std::conj(c0[r]) * c1[r];
  for (int r = 0; r < rows; ++r) c1[r] -= proj * c0[r];
  double n1 = 0;
  for (const C& z : c1) n1 += std::norm(z);
  for (C& z : c1) z /= std::sqrt(n1);
  std::vector<M2> out;
  for (int k = 0; k < rank; ++k) {
    out.push_back({c0[2 * k], c1[2 * k], c0[2 * k + 1], c1[2 * k + 1]});
  }
  return out;
}

inline V4 RandomPure(std::mt19937_64& eng) {
  std::normal_distribution<double> g;
  V4 v;
  double n = 0;
  for (C& z : v) {
    z = C(g(eng), g(eng));
    n += std::norm(z);
  }
  for (C& z : v) z /= std::sqrt(n);
  return v;
}

}  // namespace qgame::oracle

#endif  // QGAME_TESTS_ORACLES_HPP_
