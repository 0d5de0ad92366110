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

#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "qgame/equilibrium.hpp"

using namespace qgame;

namespace {

const PayoffTable kDefault = BosTable(BosParams{});

void ExpectPayoffs(const Payoffs& got, double u1, double u2, double tol = 1e-12) {
  EXPECT_NEAR(got.player1, u1, tol);
  EXPECT_NEAR(got.player2, u2, tol);
}

// Exhaustive ε-equilibria over a (n x n) grid of mixed profiles, each
// checked against every grid deviation.
std::vector<std::pair<int, int>> BruteForceGridEquilibria(const PayoffTable& t, int n, double eps) {
  std::vector<std::pair<int, int>> out;
  auto e = [&](double p, double q) { return ClassicalExpected({p, q}, t); };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double p = double(i) / (n - 1), q = double(j) / (n - 1);
      const Payoffs base = e(p, q);
      bool ok = true;
      for (int k = 0; k < n && ok; ++k) {
        const double x = double(k) / (n - 1);
        ok = e(x, q).player1 <= base.player1 + eps && e(p, x).player2 <= base.player2 + eps;
      }
      if (ok) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace

TEST(BosTable, DefaultInstance) {
  ExpectPayoffs(kDefault.at(0), 5, 3, 0);
  ExpectPayoffs(kDefault.at(1), 1, 1, 0);
  ExpectPayoffs(kDefault.at(2), 1, 1, 0);
  ExpectPayoffs(kDefault.at(3), 3, 5, 0);
}

TEST(BosTable, StructuralMapping) {
  const PayoffTable t = BosTable({2, 1, 0});
  ExpectPayoffs(t.at(0), 2, 1, 0);
  ExpectPayoffs(t.at(1), 0, 0, 0);
  ExpectPayoffs(t.at(2), 0, 0, 0);
  ExpectPayoffs(t.at(3), 1, 2, 0);
}

TEST(BosTable, EqualAgreementPayoffsNeedFlag) {
  EXPECT_THROW(BosTable({3, 3, 1}), std::invalid_argument);
  const PayoffTable t = BosTable({3, 3, 1, /*allow_equal=*/true});
  ExpectPayoffs(t.at(0), 3, 3, 0);
  ExpectPayoffs(t.at(3), 3, 3, 0);
}

TEST(BosTable, RejectsOrderingViolations) {
  EXPECT_THROW(BosTable({3, 5, 1}), std::invalid_argument);
  EXPECT_THROW(BosTable({5, 3, 3}), std::invalid_argument);
  EXPECT_THROW(BosTable({5, 1, 3}), std::invalid_argument);
  EXPECT_THROW(BosTable({5, 3, NAN}), std::invalid_argument);
  EXPECT_THROW(BosTable({5, 5, 6, true}), std::invalid_argument);
}

TEST(PayoffTable, RejectsNonFinite) {
  EXPECT_THROW(PayoffTable::FromEntries({Payoffs{1, INFINITY}, {}, {}, {}}), std::invalid_argument);
}

TEST(ExpectedPayoffs, Examples) {
  ExpectPayoffs(ExpectedPayoffs({1, 0, 0, 0}, kDefault), 5, 3);
  ExpectPayoffs(ExpectedPayoffs({0.5, 0, 0, 0.5}, kDefault), 4, 4);
  ExpectPayoffs(ExpectedPayoffs({0.25, 0.25, 0.25, 0.25}, kDefault), 2.5, 2.5);
  EXPECT_THROW(ExpectedPayoffs({0.5, 0, 0, 0.4}, kDefault), std::invalid_argument);
}

TEST(ExpectedPayoffs, LinearInDistribution) {
  std::mt19937_64 eng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto random_dist = [&] {
    OutcomeDist d;
    double total = 0;
    for (double& x : d) total += (x = u(eng));
    for (double& x : d) x /= total;
    return d;
  };
  for (int t = 0; t < 1000; ++t) {
    const OutcomeDist d1 = random_dist(), d2 = random_dist();
    const double lam = u(eng);
    OutcomeDist mix;
    for (int o = 0; o < 4; ++o) mix[o] = lam * d1[o] + (1 - lam) * d2[o];
    const Payoffs e1 = ExpectedPayoffs(d1, kDefault), e2 = ExpectedPayoffs(d2, kDefault);
    const Payoffs em = ExpectedPayoffs(mix, kDefault);
    ASSERT_NEAR(em.player1, lam * e1.player1 + (1 - lam) * e2.player1, 1e-12);
    ASSERT_NEAR(em.player2, lam * e1.player2 + (1 - lam) * e2.player2, 1e-12);
  }
}

TEST(ClassicalExpected, PureProfiles) {
  ExpectPayoffs(ClassicalExpected({0, 0}, kDefault), 5, 3);
  ExpectPayoffs(ClassicalExpected({1, 0}, kDefault), 1, 1);
  ExpectPayoffs(ClassicalExpected({1, 1}, kDefault), 3, 5);
  EXPECT_THROW(ClassicalExpected({1.5, 0}, kDefault), std::invalid_argument);
}

TEST(ClassicalExpected, InteriorEquilibriumPayoff) {
  const oracle::Interior in = oracle::ClassicalInterior({{{5, 3}, {1, 1}, {1, 1}, {3, 5}}});
  EXPECT_NEAR(in.p, 1.0 / 3, 1e-15);
  EXPECT_NEAR(in.q, 2.0 / 3, 1e-15);
  ExpectPayoffs(ClassicalExpected({in.p, in.q}, kDefault), 7.0 / 3, 7.0 / 3);
}

// ---------- equilibrium search ----------

TEST(ClassicalEquilibria, DefaultBattleOfTheSexes) {
  const EquilibriumReport r = ClassicalEquilibria(kDefault);
  ASSERT_EQ(r.equilibria.size(), 3u);
  EXPECT_FALSE(r.degenerate);
  const Equilibrium& low = r.equilibria[0];
  const Equilibrium& mid = r.equilibria[1];
  const Equilibrium& high = r.equilibria[2];
  EXPECT_EQ(low.p, 0.0);
  EXPECT_EQ(low.q, 0.0);
  ExpectPayoffs(low.payoffs, 5, 3, 1e-9);
  EXPECT_EQ(high.p, 1.0);
  EXPECT_EQ(high.q, 1.0);
  ExpectPayoffs(high.payoffs, 3, 5, 1e-9);
  const oracle::Interior in = oracle::ClassicalInterior({{{5, 3}, {1, 1}, {1, 1}, {3, 5}}});
  EXPECT_NEAR(mid.p, in.p, 1e-6);
  EXPECT_NEAR(mid.q, in.q, 1e-6);
  ExpectPayoffs(mid.payoffs, 7.0 / 3, 7.0 / 3, 1e-6);
  // Both pure equilibria strictly payoff-dominate the mixed one.
  for (const Equilibrium* e : {&low, &high}) {
    EXPECT_GT(e->payoffs.player1, mid.payoffs.player1);
    EXPECT_GT(e->payoffs.player2, mid.payoffs.player2);
  }
}

TEST(ClassicalEquilibria, GridProfilesAgreeWithBruteForce) {
  const EquilibriumReport r = ClassicalEquilibria(kDefault);
  const auto brute = BruteForceGridEquilibria(kDefault, 101, 1e-6);
  ASSERT_EQ(brute.size(), 2u);  // the interior profile is off-grid
  for (const auto& [i, j] : brute) {
    const double p = i / 100.0, q = j / 100.0;
    EXPECT_TRUE(std::any_of(r.equilibria.begin(), r.equilibria.end(), [&](const Equilibrium& e) {
      return std::abs(e.p - p) < 1e-12 && std::abs(e.q - q) < 1e-12;
    }));
  }
}

TEST(ClassicalEquilibria, EveryReportedProfileReverifies) {
  for (const BosParams& params : {BosParams{}, BosParams{2, 1, 0}, BosParams{3, 3, 1, true},
                                  BosParams{10, 2, -4}}) {
    const PayoffTable t = BosTable(params);
    const EquilibriumReport r = ClassicalEquilibria(t);
    ASSERT_FALSE(r.equilibria.empty());
    for (const Equilibrium& e : r.equilibria) {
      const Payoffs base = ClassicalExpected({e.p, e.q}, t);
      for (int k = 0; k <= 1000; ++k) {
        const double x = k / 1000.0;
        ASSERT_LE(ClassicalExpected({x, e.q}, t).player1 - base.player1, r.eps);
        ASSERT_LE(ClassicalExpected({e.p, x}, t).player2 - base.player2, r.eps);
      }
    }
  }
}

TEST(ClassicalEquilibria, SymmetricTableWhenAlphaEqualsBeta) {
  const EquilibriumReport r = ClassicalEquilibria(BosTable({3, 3, 1, true}));
  ASSERT_EQ(r.equilibria.size(), 3u);
  ExpectPayoffs(r.equilibria[0].payoffs, 3, 3, 1e-9);
  ExpectPayoffs(r.equilibria[2].payoffs, 3, 3, 1e-9);
  // Interior at (1/2, 1/2) by symmetry.
  EXPECT_NEAR(r.equilibria[1].p, 0.5, 1e-9);
  EXPECT_NEAR(r.equilibria[1].q, 0.5, 1e-9);
}

TEST(ClassicalEquilibria, DegenerateTableFlagsEveryProfile) {
  const PayoffTable flat = PayoffTable::FromEntries({Payoffs{2, 2}, {2, 2}, {2, 2}, {2, 2}});
  const EquilibriumReport r = ClassicalEquilibria(flat);
  EXPECT_TRUE(r.degenerate);
  EXPECT_EQ(r.equilibria.size(), 101u * 101u);
}

TEST(ClassicalEquilibria, SingleEquilibriumGame) {
  // Prisoner's-dilemma shaped table: '1' strictly dominates for both.
  const PayoffTable pd = PayoffTable::FromEntries({Payoffs{3, 3}, {0, 5}, {5, 0}, {1, 1}});
  const EquilibriumReport r = ClassicalEquilibria(pd);
  ASSERT_EQ(r.equilibria.size(), 1u);
  EXPECT_EQ(r.equilibria[0].p, 1.0);
  EXPECT_EQ(r.equilibria[0].q, 1.0);
}

TEST(FindEquilibria, RejectsCoarseGridAndNegativeEps) {
  EXPECT_THROW(ClassicalEquilibria(kDefault, 100), std::invalid_argument);
  EXPECT_THROW(ClassicalEquilibria(kDefault, 101, -1.0), std::invalid_argument);
}

TEST(FindEquilibria, SerialAndParallelReportsIdentical) {
  const EquilibriumReport a = ClassicalEquilibria(kDefault, 201, 1e-6, Exec::kSerial);
  const EquilibriumReport b = ClassicalEquilibria(kDefault, 201, 1e-6, Exec::kParallel);
  ASSERT_EQ(a.equilibria.size(), b.equilibria.size());
  for (std::size_t i = 0; i < a.equilibria.size(); ++i) {
    EXPECT_EQ(a.equilibria[i].p, b.equilibria[i].p);
    EXPECT_EQ(a.equilibria[i].q, b.equilibria[i].q);
    EXPECT_EQ(a.equilibria[i].slack, b.equilibria[i].slack);
  }
}

TEST(PureEquilibria, FiltersInterior) {
  const EquilibriumReport pure = PureEquilibria(ClassicalEquilibria(kDefault));
  ASSERT_EQ(pure.equilibria.size(), 2u);
  for (const Equilibrium& e : pure.equilibria) EXPECT_TRUE(e.IsPure());
}
