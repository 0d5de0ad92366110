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

#include "qgame/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qgame/optimize.hpp"

namespace qgame {
namespace {

constexpr double kPi = std::numbers::pi;

bool SamePayoffs(const Payoffs& a, const Payoffs& b, double tol) {
  return std::abs(a.player1 - b.player1) <= tol && std::abs(a.player2 - b.player2) <= tol;
}

struct MultiStartOutcome {
  std::vector<double> best_x;
  double best_value = -INFINITY;
  double max_sampled = -INFINITY;
  int evaluations = 0;
  std::vector<std::pair<int, double>> trace;
};

// Runs one Nelder–Mead per start and merges by restart index: the first
// restart attaining the maximum wins, so the result does not depend on how
// restarts were scheduled.
MultiStartOutcome MultiStart(const ObjectiveFn& f, const std::vector<std::vector<double>>& starts,
                             const NelderMeadOptions& options, Exec exec) {
  const std::vector<NelderMeadResult> runs = MapIndex<NelderMeadResult>(
      static_cast<int>(starts.size()),
      [&](int k) { return MaximizeNelderMead(f, starts[k], options); }, exec);
  MultiStartOutcome out;
  int longest = 0;
  for (const NelderMeadResult& r : runs) {
    if (r.value > out.best_value) {
      out.best_value = r.value;
      out.best_x = r.x;
    }
    out.max_sampled = std::max(out.max_sampled, r.max_sampled);
    out.evaluations += r.evaluations;
    longest = std::max(longest, static_cast<int>(r.trace.size()));
  }
  for (int it = 0; it < longest; ++it) {
    double best = -INFINITY;
    for (const NelderMeadResult& r : runs) {
      if (r.trace.empty()) continue;
      const auto& entry = it < static_cast<int>(r.trace.size()) ? r.trace[it] : r.trace.back();
      best = std::max(best, entry.second);
    }
    out.trace.emplace_back(it + 1, best);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Restricted-game equilibria

EquilibriumReport RestrictedEquilibria(const TwoQubitState& s, const PayoffTable& table,
                                       int grid_n, double eps, Exec exec) {
  return FindEquilibria(
      [s, table](double p, double q) { return MwExpectedPayoffs(s, {p, q}, table); }, grid_n,
      eps, exec);
}

DilemmaReport MakeDilemmaReport(const EquilibriumReport& report, double tol) {
  if (report.equilibria.empty()) {
    throw std::invalid_argument("MakeDilemmaReport: equilibrium report is empty");
  }
  DilemmaReport d;
  d.equilibrium_count = static_cast<int>(report.equilibria.size());
  d.degenerate = report.degenerate;
  d.unique_solution = d.equilibrium_count == 1;

  std::vector<Payoffs> distinct;
  const Payoffs& first = report.equilibria.front().payoffs;
  d.all_payoffs_equal = true;
  const Payoffs* first_pure = nullptr;
  d.pure_payoffs_equal = true;
  for (const Equilibrium& e : report.equilibria) {
    d.payoffs.push_back(e.payoffs);
    if (!SamePayoffs(e.payoffs, first, tol)) d.all_payoffs_equal = false;
    if (std::none_of(distinct.begin(), distinct.end(),
                     [&](const Payoffs& x) { return SamePayoffs(x, e.payoffs, tol); })) {
      distinct.push_back(e.payoffs);
    }
    if (e.IsPure()) {
      ++d.pure_count;
      if (first_pure == nullptr) {
        first_pure = &e.payoffs;
      } else if (!SamePayoffs(e.payoffs, *first_pure, tol)) {
        d.pure_payoffs_equal = false;
      }
    }
  }
  if (d.pure_count == 0) d.pure_payoffs_equal = false;
  d.payoff_distinct_count = static_cast<int>(distinct.size());
  return d;
}

// ---------------------------------------------------------------------------
// Conjugate response

double ConjugateOverlap(const LocalUnitary& a) {
  const TwoQubitState phi = PhiPlus();
  const TwoQubitState out =
      ApplyLocalUnitary(ApplyLocalUnitary(phi, a, Seat::kPlayer1), Conjugate(a), Seat::kPlayer2);
  return Overlap(phi, out);
}

ConjugateCheckResult ConjugateResponseCheck(int samples, std::uint64_t seed, double tol) {
  if (samples < 1) throw std::invalid_argument("ConjugateResponseCheck: samples must be >= 1");
  ConjugateCheckResult res;
  res.samples = samples;
  res.seed = seed;
  res.tol = tol;
  Rng rng(seed);
  for (int k = 0; k < samples; ++k) {
    res.worst_overlap = std::min(res.worst_overlap, ConjugateOverlap(RandomSu2(rng)));
  }
  res.passed = res.worst_overlap >= 1.0 - tol;
  return res;
}

// ---------------------------------------------------------------------------
// Unitary supremum

UnitaryProfile UnitaryProfileFromParams(std::span<const double> params) {
  if (params.size() != 6) throw std::invalid_argument("UnitaryProfileFromParams: need 6 angles");
  return {Su2(params[0], params[1], params[2]), Su2(params[3], params[4], params[5])};
}

double UnitaryPayoff(const PayoffTable& table, const TwoQubitState& s,
                     std::span<const double> params) {
  return MwPlay(s, UnitaryProfileFromParams(params), table).payoffs.player1;
}

SupremumResult UnitaryPayoffSupremum(const PayoffTable& table, const TwoQubitState& s,
                                     int restarts, int iters, std::uint64_t seed, Exec exec) {
  if (restarts < kMinRestarts) {
    throw std::invalid_argument("UnitaryPayoffSupremum: restarts must be at least 8");
  }
  if (iters < 1) throw std::invalid_argument("UnitaryPayoffSupremum: iters must be >= 1");
  constexpr int kDim = 6;
  constexpr int kCoarse = 4;
  const ObjectiveFn objective = [&table, &s](std::span<const double> x) {
    return UnitaryPayoff(table, s, x);
  };

  // Coarse grid: θ over [0, π], φ and λ over [−π, π].
  std::array<std::array<double, kCoarse>, kDim> axes{};
  for (int d = 0; d < kDim; ++d) {
    const bool polar = d % 3 == 0;
    for (int k = 0; k < kCoarse; ++k) {
      const double t = static_cast<double>(k) / (kCoarse - 1);
      axes[d][k] = polar ? kPi * t : -kPi + 2.0 * kPi * t;
    }
  }
  int total = 1;
  for (int d = 0; d < kDim; ++d) total *= kCoarse;
  std::vector<double> points(static_cast<std::size_t>(total) * kDim);
  for (int idx = 0; idx < total; ++idx) {
    int rem = idx;
    for (int d = kDim - 1; d >= 0; --d) {
      points[idx * kDim + d] = axes[d][rem % kCoarse];
      rem /= kCoarse;
    }
  }
  const std::vector<double> coarse = EvaluateBatch(objective, points, kDim, exec);
  std::vector<int> ranked(total);
  std::iota(ranked.begin(), ranked.end(), 0);
  std::stable_sort(ranked.begin(), ranked.end(),
                   [&](int a, int b) { return coarse[a] > coarse[b]; });

  Rng rng(seed);
  std::vector<std::vector<double>> starts;
  const int from_grid = (restarts + 1) / 2;
  for (int k = 0; k < from_grid; ++k) {
    starts.emplace_back(points.begin() + ranked[k] * kDim,
                        points.begin() + (ranked[k] + 1) * kDim);
  }
  while (static_cast<int>(starts.size()) < restarts) {
    std::vector<double> x(kDim);
    for (int d = 0; d < kDim; ++d) x[d] = d % 3 == 0 ? rng.Uniform(0.0, kPi) : rng.Uniform(-kPi, kPi);
    starts.push_back(std::move(x));
  }

  NelderMeadOptions options;
  options.max_iters = iters;
  options.initial_step = 0.4;
  const MultiStartOutcome ms = MultiStart(objective, starts, options, exec);

  SupremumResult res;
  res.seed = seed;
  res.restarts = restarts;
  res.evaluations = total + ms.evaluations;
  const double coarse_best = coarse[ranked.front()];
  res.max_sampled = std::max(coarse_best, ms.max_sampled);
  res.trace.emplace_back(0, coarse_best);
  for (const auto& [it, v] : ms.trace) res.trace.emplace_back(it, std::max(v, coarse_best));
  if (ms.best_value >= coarse_best) {
    res.best_value = ms.best_value;
    res.best_params = ms.best_x;
  } else {
    res.best_value = coarse_best;
    res.best_params.assign(points.begin() + ranked.front() * kDim,
                           points.begin() + (ranked.front() + 1) * kDim);
  }
  res.best_profile = UnitaryProfileFromParams(res.best_params);
  return res;
}

// ---------------------------------------------------------------------------
// Channel supremum

LocalChannel ParametrizedChannel(std::span<const double> params) {
  if (params.size() != 6) throw std::invalid_argument("ParametrizedChannel: need 6 angles");
  const double a = params[0], b = params[1];
  const Mat2 u1 = Su2(params[2], params[3], 0.0).matrix();
  const Mat2 u2 = Su2(params[4], params[5], 0.0).matrix();
  const Mat2 d1{std::cos(a), 0.0, 0.0, std::cos(b)};
  const Mat2 d2{std::sin(a), 0.0, 0.0, std::sin(b)};
  return LocalChannel::FromKraus({Mul(u1, d1), Mul(u2, d2)});
}

double ChannelPayoff(const PayoffTable& table, const TwoQubitState& s,
                     std::span<const double> params) {
  if (params.size() != 12) throw std::invalid_argument("ChannelPayoff: need 12 angles");
  const ChannelProfile profile{ParametrizedChannel(params.subspan(0, 6)),
                               ParametrizedChannel(params.subspan(6, 6))};
  return MwPlay(s, profile, table).payoffs.player1;
}

std::vector<NamedChannel> DemoChannels() {
  return {{"identity", LocalChannel::Identity()},
          {"dephase", LocalChannel::Dephase()},
          {"measure-set-0", LocalChannel::MeasureAndSet(0)},
          {"measure-set-1", LocalChannel::MeasureAndSet(1)},
          {"measure-flip", LocalChannel::MeasureAndFlip()}};
}

ChannelSupremumResult ChannelPayoffSupremum(const PayoffTable& table, const TwoQubitState& s,
                                            ChannelMode mode, int restarts, int iters,
                                            std::uint64_t seed, Exec exec) {
  ChannelSupremumResult res;
  res.supremum.seed = seed;

  const TwoQubitDensity rho = TwoQubitDensity::FromPure(s);
  const LocalChannel set0 = LocalChannel::MeasureAndSet(0);
  res.witness.before = rho.Coherence0011();
  res.witness.after_seat1 = ApplyChannel(rho, set0, Seat::kPlayer1).Coherence0011();
  res.witness.after_seat2 = ApplyChannel(rho, set0, Seat::kPlayer2).Coherence0011();

  const std::vector<NamedChannel> menu = DemoChannels();
  std::size_t best = 0;
  for (const NamedChannel& c1 : menu) {
    for (const NamedChannel& c2 : menu) {
      res.demo.push_back({c1.name, c2.name, MwPlay(s, ChannelProfile{c1.channel, c2.channel}, table)});
      if (res.demo.back().result.payoffs.player1 > res.demo[best].result.payoffs.player1) {
        best = res.demo.size() - 1;
      }
    }
  }
  res.supremum.evaluations = static_cast<int>(res.demo.size());
  res.supremum.best_value = res.demo[best].result.payoffs.player1;
  res.supremum.max_sampled = res.supremum.best_value;
  res.supremum.trace.emplace_back(0, res.supremum.best_value);
  res.best_channel1 = res.demo[best].channel1;
  res.best_channel2 = res.demo[best].channel2;
  auto find = [&menu](const std::string& name) {
    return std::find_if(menu.begin(), menu.end(),
                        [&](const NamedChannel& c) { return c.name == name; })->channel;
  };
  res.supremum.best_profile = ChannelProfile{find(res.best_channel1), find(res.best_channel2)};

  if (mode == ChannelMode::kDemo) return res;

  if (restarts < 1 || iters < 1) {
    throw std::invalid_argument("ChannelPayoffSupremum: restarts and iters must be >= 1");
  }
  constexpr int kDim = 12;
  const ObjectiveFn objective = [&table, &s](std::span<const double> x) {
    return ChannelPayoff(table, s, x);
  };
  Rng rng(seed);
  std::vector<std::vector<double>> starts;
  for (int k = 0; k < restarts; ++k) {
    std::vector<double> x(kDim);
    for (int d = 0; d < kDim; ++d) {
      const int slot = d % 6;
      x[d] = slot < 2 ? rng.Uniform(0.0, kPi / 2.0)
                      : (slot % 2 == 0 ? rng.Uniform(0.0, kPi) : rng.Uniform(-kPi, kPi));
    }
    starts.push_back(std::move(x));
  }
  NelderMeadOptions options;
  options.max_iters = iters;
  options.initial_step = 0.4;
  const MultiStartOutcome ms = MultiStart(objective, starts, options, exec);

  res.search_value = ms.best_value;
  res.supremum.restarts = restarts;
  res.supremum.evaluations += ms.evaluations;
  res.supremum.max_sampled = std::max(res.supremum.max_sampled, ms.max_sampled);
  for (const auto& [it, v] : ms.trace) {
    res.supremum.trace.emplace_back(it, std::max(v, res.supremum.trace.front().second));
  }
  if (ms.best_value > res.supremum.best_value) {
    res.supremum.best_value = ms.best_value;
    res.supremum.best_params = ms.best_x;
    res.supremum.best_profile =
        ChannelProfile{ParametrizedChannel(std::span<const double>(ms.best_x).subspan(0, 6)),
                       ParametrizedChannel(std::span<const double>(ms.best_x).subspan(6, 6))};
    res.best_channel1 = "parametrized";
    res.best_channel2 = "parametrized";
  }
  return res;
}

}  // namespace qgame
