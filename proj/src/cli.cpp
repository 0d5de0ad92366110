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

#include "qgame/cli.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <random>

#include "CLI11.hpp"
#include "qgame/table_io.hpp"

namespace qgame {
namespace {

constexpr double kPayoffTol = 1e-9;
constexpr double kSupremumTol = 1e-3;

const std::map<std::string, OutputFormat> kFormats = {
    {"json", OutputFormat::kJson}, {"csv", OutputFormat::kCsv}, {"table", OutputFormat::kTable}};

std::string FormatName(OutputFormat f) {
  for (const auto& [name, value] : kFormats) {
    if (value == f) return name;
  }
  return "json";
}

GameTable ResolveTable(const RunConfig& cfg) {
  if (!cfg.table_path.empty()) return LoadGameTable(cfg.table_path);
  return {BosTable(cfg.bos), cfg.bos};
}

TwoQubitState ResolveInitial(const RunConfig& cfg) {
  if (cfg.initial == "phi-plus") return PhiPlus();
  if (cfg.initial == "zero") return TwoQubitState::Basis(0);
  if (cfg.initial == "entangler") return ApplyGate(TwoQubitState::Basis(0), Entangler(cfg.gamma_e));
  throw std::invalid_argument("unknown initial state \"" + cfg.initial + "\"");
}

LocalUnitary MoveFromAngles(const std::vector<double>& angles, const char* flag) {
  if (angles.size() != 3) {
    throw std::invalid_argument(std::string(flag) + " expects three angles: theta phi lambda");
  }
  return Su2(angles[0], angles[1], angles[2]);
}

Document ConfigDoc(const RunConfig& cfg, const GameTable& table) {
  Document table_doc = {{"source", cfg.table_path.empty() ? "bos-flags" : cfg.table_path},
                        {"entries", ToDoc(table.table)}};
  if (table.bos) {
    table_doc["bos"] = {{"alpha", Sig12(table.bos->alpha)},
                        {"beta", Sig12(table.bos->beta)},
                        {"gamma_mis", Sig12(table.bos->gamma_mis)},
                        {"allow_equal", table.bos->allow_equal}};
  }
  Document move_a = Document::array(), move_b = Document::array();
  for (double x : cfg.move_a) move_a.push_back(Sig12(x));
  for (double x : cfg.move_b) move_b.push_back(Sig12(x));
  return {{"version", kVersion},
          {"command", cfg.command},
          {"table", table_doc},
          {"p", Sig12(cfg.p)},
          {"q", Sig12(cfg.q)},
          {"gamma_e", Sig12(cfg.gamma_e)},
          {"initial", cfg.initial},
          {"move_a", move_a},
          {"move_b", move_b},
          {"grid_n", cfg.grid_n},
          {"eps", Sig12(cfg.eps)},
          {"restarts", cfg.restarts},
          {"iters", cfg.iters},
          {"seed", cfg.seed},
          {"samples", cfg.samples},
          {"pairs", cfg.pairs},
          {"shots", cfg.shots},
          {"mode", cfg.mode},
          {"format", FormatName(cfg.format)},
          {"tolerances",
           {{"algebra", Sig12(kAlgebraTol)},
            {"phase", Sig12(kPhaseTol)},
            {"payoff", Sig12(kPayoffTol)},
            {"supremum", Sig12(kSupremumTol)}}}};
}

Check MakeCheck(std::string name, bool passed, double value, double tolerance,
                std::string detail = {}) {
  return {std::move(name), passed, value, tolerance, std::move(detail)};
}

// Expected values for a table, written for any payoff table and reducing to
// the Battle of the Sexes constants on BoS tables.
struct TableTargets {
  // Per-player payoff when 00 and 11 are equally likely: (α+β)/2 on BoS.
  Payoffs agree_half;
  // Player 1's best payoff when P(00)=P(11) and P(01)=P(10).
  double unitary_bound = 0.0;
  // Player 1's best deterministic outcome: α on BoS.
  double best_outcome = 0.0;
};

TableTargets TargetsFor(const PayoffTable& t) {
  TableTargets out;
  out.agree_half = {(t.at(0).player1 + t.at(3).player1) / 2, (t.at(0).player2 + t.at(3).player2) / 2};
  const double mismatch_half = (t.at(1).player1 + t.at(2).player1) / 2;
  out.unitary_bound = std::max(out.agree_half.player1, mismatch_half);
  out.best_outcome = -INFINITY;
  for (int o = 0; o < 4; ++o) out.best_outcome = std::max(out.best_outcome, t.at(o).player1);
  return out;
}

const Equilibrium* FindProfile(const EquilibriumReport& r, double p, double q) {
  for (const Equilibrium& e : r.equilibria) {
    if (std::abs(e.p - p) <= 1e-9 && std::abs(e.q - q) <= 1e-9) return &e;
  }
  return nullptr;
}

double PayoffGap(const Payoffs& a, const Payoffs& b) {
  return std::max(std::abs(a.player1 - b.player1), std::abs(a.player2 - b.player2));
}

double Reevaluate(const TwoQubitState& s, const TacticProfile& t, const PayoffTable& table) {
  return MwPlay(s, t, table).payoffs.player1;
}

// ---------------------------------------------------------------------------
// Commands. Each fills `results` and `checks`.

void CmdClassicalEq(const RunConfig& cfg, const GameTable& gt, Document& results,
                    std::vector<Check>& checks) {
  const EquilibriumReport eq = ClassicalEquilibria(gt.table, cfg.grid_n, cfg.eps);
  results["equilibria"] = ToDoc(eq);
  double worst = 0.0;
  for (const Equilibrium& e : eq.equilibria) worst = std::max(worst, e.slack);
  checks.push_back(MakeCheck("equilibria_found", !eq.equilibria.empty(),
                             static_cast<double>(eq.equilibria.size()), 0.0));
  checks.push_back(MakeCheck("deviation_recheck", worst <= cfg.eps, worst, cfg.eps));
  if (!eq.equilibria.empty()) results["dilemma"] = ToDoc(MakeDilemmaReport(eq, kPayoffTol));
}

void CmdMwPayoff(const RunConfig& cfg, const GameTable& gt, Document& results,
                 std::vector<Check>& checks) {
  const TwoQubitState s = ResolveInitial(cfg);
  const RestrictedProfile r{cfg.p, cfg.q};
  const PlayResult sim = MwPlay(s, r, gt.table);
  results["distribution"] = ToDoc(sim.dist);
  results["payoffs"] = ToDoc(sim.payoffs);
  if (cfg.initial == "phi-plus") {
    const PlayResult closed = PhiPlusRestrictedClosedForm(r, gt.table);
    const double m = (1 - r.p) * (1 - r.q) + r.p * r.q;
    results["closed_form"] = {{"m", Sig12(m)}, {"payoffs", ToDoc(closed.payoffs)}};
    const double gap = PayoffGap(sim.payoffs, closed.payoffs);
    checks.push_back(MakeCheck("closed_form_agrees", gap <= kAlgebraTol, gap, kAlgebraTol));
  }
  if (cfg.shots > 0) {
    // Demonstration only: all scoring elsewhere is exact expectation.
    std::mt19937_64 engine(cfg.seed);
    std::discrete_distribution<int> outcome(sim.dist.begin(), sim.dist.end());
    std::array<int, 4> counts{};
    for (int k = 0; k < cfg.shots; ++k) ++counts[outcome(engine)];
    Document hist = Document::object();
    for (int o = 0; o < 4; ++o) hist[kOutcomeLabels[o]] = counts[o];
    results["monte_carlo_demo"] = {
        {"label", "sampled outcomes, demonstration only"}, {"shots", cfg.shots},
        {"seed", cfg.seed}, {"counts", hist}};
  }
}

void CmdMwEq(const RunConfig& cfg, const GameTable& gt, Document& results,
             std::vector<Check>& checks) {
  const EquilibriumReport eq = RestrictedEquilibria(ResolveInitial(cfg), gt.table, cfg.grid_n, cfg.eps);
  results["equilibria"] = ToDoc(eq);
  double worst = 0.0;
  for (const Equilibrium& e : eq.equilibria) worst = std::max(worst, e.slack);
  checks.push_back(MakeCheck("equilibria_found", !eq.equilibria.empty(),
                             static_cast<double>(eq.equilibria.size()), 0.0));
  checks.push_back(MakeCheck("deviation_recheck", worst <= cfg.eps, worst, cfg.eps));
  if (!eq.equilibria.empty()) results["dilemma"] = ToDoc(MakeDilemmaReport(eq, kPayoffTol));
}

void CmdEisert(const RunConfig& cfg, const GameTable& gt, Document& results,
               std::vector<Check>& checks) {
  const LocalUnitary a = MoveFromAngles(cfg.move_a, "--a");
  const LocalUnitary b = MoveFromAngles(cfg.move_b, "--b");
  const PlayResult play = EisertPlay(cfg.gamma_e, a, b, gt.table);
  results["distribution"] = ToDoc(play.dist);
  results["payoffs"] = ToDoc(play.payoffs);
  double total = 0.0;
  for (double x : play.dist) total += x;
  checks.push_back(MakeCheck("distribution_normalized", std::abs(total - 1.0) <= kAlgebraTol,
                             std::abs(total - 1.0), kAlgebraTol));
}

void CmdBridge(const RunConfig& cfg, const GameTable& gt, Document& results,
               std::vector<Check>& checks) {
  const BridgeRecord rec = SchemeBridge(cfg.gamma_e, MoveFromAngles(cfg.move_a, "--a"),
                                        MoveFromAngles(cfg.move_b, "--b"), gt.table);
  results["bridge"] = ToDoc(rec);
  checks.push_back(MakeCheck("mw_equals_eisert_without_inverse",
                             rec.tv_mw_without_inverse <= kAlgebraTol,
                             rec.tv_mw_without_inverse, kAlgebraTol));
}

void CmdConjugateCheck(const RunConfig& cfg, Document& results, std::vector<Check>& checks) {
  const ConjugateCheckResult res = ConjugateResponseCheck(cfg.samples, cfg.seed, kPhaseTol);
  results["conjugate"] = {{"samples", res.samples},
                          {"seed", res.seed},
                          {"worst_overlap", Sig12(res.worst_overlap)},
                          {"passed", res.passed}};
  checks.push_back(MakeCheck("conjugate_response", res.passed, 1.0 - res.worst_overlap, kPhaseTol));
}

void CmdUnitaryMax(const RunConfig& cfg, const GameTable& gt, Document& results,
                   std::vector<Check>& checks) {
  const TwoQubitState s = ResolveInitial(cfg);
  const SupremumResult sup = UnitaryPayoffSupremum(gt.table, s, cfg.restarts, cfg.iters, cfg.seed);
  results["supremum"] = ToDoc(sup);
  const double gap = std::abs(Reevaluate(s, sup.best_profile, gt.table) - sup.best_value);
  checks.push_back(MakeCheck("best_profile_reproduces", gap <= kPayoffTol, gap, kPayoffTol));
  if (cfg.initial == "phi-plus") {
    const TableTargets t = TargetsFor(gt.table);
    const double err = std::abs(sup.best_value - t.unitary_bound);
    checks.push_back(MakeCheck("reaches_entangled_bound", err <= kSupremumTol, err, kSupremumTol));
    const double excess = sup.max_sampled - t.unitary_bound;
    checks.push_back(MakeCheck("never_exceeds_entangled_bound", excess <= kPayoffTol, excess,
                               kPayoffTol));
  }
}

void CmdChannelMax(const RunConfig& cfg, const GameTable& gt, Document& results,
                   std::vector<Check>& checks) {
  if (cfg.mode != "demo" && cfg.mode != "search") {
    throw std::invalid_argument("--mode must be demo or search");
  }
  const TwoQubitState s = ResolveInitial(cfg);
  const ChannelMode mode = cfg.mode == "demo" ? ChannelMode::kDemo : ChannelMode::kSearch;
  const ChannelSupremumResult res =
      ChannelPayoffSupremum(gt.table, s, mode, cfg.restarts, cfg.iters, cfg.seed);
  Document sup = ToDoc(res.supremum);
  sup["best_channel1"] = res.best_channel1;
  sup["best_channel2"] = res.best_channel2;
  if (mode == ChannelMode::kSearch) sup["search_value"] = Sig12(res.search_value);
  results["supremum"] = sup;
  Document demo = Document::array();
  for (const DemoPlay& d : res.demo) {
    demo.push_back({{"channel1", d.channel1},
                    {"channel2", d.channel2},
                    {"distribution", ToDoc(d.result.dist)},
                    {"payoffs", ToDoc(d.result.payoffs)}});
  }
  results["demo"] = demo;
  results["witness"] = {{"before", Sig12(res.witness.before)},
                        {"after_seat1", Sig12(res.witness.after_seat1)},
                        {"after_seat2", Sig12(res.witness.after_seat2)}};
  const double gap = std::abs(Reevaluate(s, res.supremum.best_profile, gt.table) -
                              res.supremum.best_value);
  checks.push_back(MakeCheck("best_profile_reproduces", gap <= kPayoffTol, gap, kPayoffTol));
  const double target = TargetsFor(gt.table).best_outcome;
  const double tol = mode == ChannelMode::kDemo ? kPayoffTol : kSupremumTol;
  const double err = std::abs(res.supremum.best_value - target);
  checks.push_back(MakeCheck("reaches_best_outcome", err <= tol, err, tol));
  const double after = std::max(res.witness.after_seat1, res.witness.after_seat2);
  checks.push_back(MakeCheck("measurement_removes_coherence", after <= kAlgebraTol, after,
                             kAlgebraTol));
}

void CmdSuite(const RunConfig& cfg, const GameTable& gt, Document& results,
              std::vector<Check>& checks) {
  const TwoQubitState phi = PhiPlus();
  const TableTargets targets = TargetsFor(gt.table);

  // Restricted equilibria and the dilemma.
  const EquilibriumReport eq = RestrictedEquilibria(phi, gt.table, cfg.grid_n, cfg.eps);
  results["restricted_equilibria"] = ToDoc(eq);
  for (const auto& [p, q, name] : {std::tuple{0.0, 0.0, "restricted_eq_00"},
                                   std::tuple{1.0, 1.0, "restricted_eq_11"}}) {
    const Equilibrium* e = FindProfile(eq, p, q);
    const double gap = e ? PayoffGap(e->payoffs, targets.agree_half) : INFINITY;
    checks.push_back(MakeCheck(name, e != nullptr && gap <= kPayoffTol, gap, kPayoffTol));
  }
  if (!eq.equilibria.empty()) {
    const DilemmaReport d = MakeDilemmaReport(eq, kPayoffTol);
    results["dilemma"] = ToDoc(d);
    checks.push_back(MakeCheck("not_unique", !d.unique_solution, d.equilibrium_count, 0.0));
    checks.push_back(MakeCheck("pure_equilibria_pay_equal", d.pure_payoffs_equal, d.pure_count, 0.0));
  }

  // Conjugate response.
  CmdConjugateCheck(cfg, results, checks);

  // Unitary supremum.
  const SupremumResult sup = UnitaryPayoffSupremum(gt.table, phi, cfg.restarts, cfg.iters, cfg.seed);
  results["unitary_supremum"] = {{"best_value", Sig12(sup.best_value)},
                                 {"max_sampled", Sig12(sup.max_sampled)},
                                 {"evaluations", sup.evaluations}};
  const double u_err = std::abs(sup.best_value - targets.unitary_bound);
  checks.push_back(MakeCheck("unitary_supremum", u_err <= kSupremumTol, u_err, kSupremumTol));
  const double excess = sup.max_sampled - targets.unitary_bound;
  checks.push_back(MakeCheck("unitary_bound_respected", excess <= kPayoffTol, excess, kPayoffTol));

  // Channel demo.
  const ChannelSupremumResult ch = ChannelPayoffSupremum(gt.table, phi, ChannelMode::kDemo);
  results["channel_demo"] = {{"best_value", Sig12(ch.supremum.best_value)},
                             {"best_channel1", ch.best_channel1},
                             {"best_channel2", ch.best_channel2},
                             {"witness_before", Sig12(ch.witness.before)},
                             {"witness_after_seat1", Sig12(ch.witness.after_seat1)},
                             {"witness_after_seat2", Sig12(ch.witness.after_seat2)}};
  const double c_err = std::abs(ch.supremum.best_value - targets.best_outcome);
  checks.push_back(MakeCheck("channel_demo_best_outcome", c_err <= kPayoffTol, c_err, kPayoffTol));
  const double after = std::max(ch.witness.after_seat1, ch.witness.after_seat2);
  checks.push_back(MakeCheck("channel_destroys_coherence",
                             std::abs(ch.witness.before - 0.5) <= kAlgebraTol && after <= kAlgebraTol,
                             after, kAlgebraTol));

  // Scheme bridge over random unitary pairs.
  Rng rng(cfg.seed);
  double worst_same = 0.0, largest_gap = 0.0;
  for (int k = 0; k < cfg.pairs; ++k) {
    const LocalUnitary a = RandomSu2(rng);
    const LocalUnitary b = RandomSu2(rng);
    const BridgeRecord rec = SchemeBridge(cfg.gamma_e, a, b, gt.table);
    worst_same = std::max(worst_same, rec.tv_mw_without_inverse);
    largest_gap = std::max(largest_gap, rec.tv_mw_eisert);
  }
  results["bridge"] = {{"pairs", cfg.pairs},
                       {"max_tv_mw_vs_without_inverse", Sig12(worst_same)},
                       {"max_tv_mw_vs_eisert", Sig12(largest_gap)}};
  checks.push_back(MakeCheck("bridge_same_circuit", worst_same <= kAlgebraTol, worst_same, kAlgebraTol));
  checks.push_back(MakeCheck("bridge_inverse_gate_matters", largest_gap > 0.1, largest_gap, 0.1));
}

}  // namespace

Document RunCommand(const RunConfig& cfg) {
  const GameTable gt = ResolveTable(cfg);
  Document results = Document::object();
  std::vector<Check> checks;
  const std::string& c = cfg.command;
  if (c == "classical-eq") {
    CmdClassicalEq(cfg, gt, results, checks);
  } else if (c == "mw-payoff") {
    CmdMwPayoff(cfg, gt, results, checks);
  } else if (c == "mw-eq") {
    CmdMwEq(cfg, gt, results, checks);
  } else if (c == "eisert") {
    CmdEisert(cfg, gt, results, checks);
  } else if (c == "bridge") {
    CmdBridge(cfg, gt, results, checks);
  } else if (c == "conjugate-check") {
    CmdConjugateCheck(cfg, results, checks);
  } else if (c == "unitary-max") {
    CmdUnitaryMax(cfg, gt, results, checks);
  } else if (c == "channel-max") {
    CmdChannelMax(cfg, gt, results, checks);
  } else if (c == "suite") {
    CmdSuite(cfg, gt, results, checks);
  } else {
    throw std::invalid_argument("unknown command \"" + c + "\"");
  }
  Document check_docs = Document::array();
  bool all = true;
  for (const Check& ch : checks) {
    check_docs.push_back(ToDoc(ch));
    all = all && ch.passed;
  }
  return {{"config", ConfigDoc(cfg, gt)},
          {"results", results},
          {"checks", check_docs},
          {"all_passed", all}};
}

int ExitStatusFor(const Document& doc) {
  return doc.value("all_passed", false) ? kExitOk : kExitCheckFailed;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantized 2x2 game simulator and equilibrium analyzer", "qgame"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  RunConfig cfg;
  std::string format = "json";
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"classical-eq", "Equilibria of the classical mixed game"},
      {"mw-payoff", "Restricted-tactic payoffs in the entangled scheme for given --p, --q"},
      {"mw-eq", "Equilibria of the restricted-tactic entangled game"},
      {"eisert", "Play the J / J-dagger scheme with moves --a, --b"},
      {"bridge", "Compare both schemes on the same moves"},
      {"conjugate-check", "Check that B = conj(A) restores the entangled state"},
      {"unitary-max", "Maximize player 1's payoff over local SU(2) tactics"},
      {"channel-max", "Maximize player 1's payoff over local channels"},
      {"suite", "Run every claim check and report pass/fail"}};

  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&cfg, n = name] { cfg.command = n; });
    auto* table = sub->add_option("--table", cfg.table_path, "Game-table JSON file");
    auto* alpha = sub->add_option("--alpha", cfg.bos.alpha, "Payoff of the preferred agreement");
    auto* beta = sub->add_option("--beta", cfg.bos.beta, "Payoff of the other agreement");
    auto* mis = sub->add_option("--gamma-mis", cfg.bos.gamma_mis, "Mismatch payoff");
    auto* equal = sub->add_flag("--allow-equal", cfg.bos.allow_equal, "Permit alpha == beta");
    for (CLI::Option* o : {alpha, beta, mis, equal}) table->excludes(o);
    sub->add_option("--p", cfg.p, "Player 1 spin-flip probability")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--q", cfg.q, "Player 2 spin-flip probability")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--gamma-e", cfg.gamma_e, "Entangler angle in radians")
        ->check(CLI::Range(0.0, std::numbers::pi / 2.0));
    sub->add_option("--initial", cfg.initial, "Initial state")
        ->check(CLI::IsMember({"phi-plus", "zero", "entangler"}));
    sub->add_option("--a", cfg.move_a, "Player 1 move: theta phi lambda")->expected(3);
    sub->add_option("--b", cfg.move_b, "Player 2 move: theta phi lambda")->expected(3);
    sub->add_option("--grid", cfg.grid_n, "Grid points per axis")->check(CLI::Range(101, 100001));
    sub->add_option("--eps", cfg.eps, "Equilibrium slack")->check(CLI::NonNegativeNumber);
    sub->add_option("--restarts", cfg.restarts, "Optimizer restarts")->check(CLI::Range(1, 100000));
    sub->add_option("--iters", cfg.iters, "Optimizer iterations per restart")
        ->check(CLI::Range(1, 10000000));
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_option("--samples", cfg.samples, "Random unitaries for conjugate-check")
        ->check(CLI::Range(1, 100000000));
    sub->add_option("--pairs", cfg.pairs, "Random move pairs for the suite bridge check")
        ->check(CLI::Range(1, 100000000));
    sub->add_option("--shots", cfg.shots, "Monte-Carlo demonstration shots for mw-payoff")
        ->check(CLI::Range(0, 100000000));
    sub->add_option("--mode", cfg.mode, "channel-max mode")->check(CLI::IsMember({"demo", "search"}));
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  cfg.format = kFormats.at(format);

  Document doc;
  try {
    doc = RunCommand(cfg);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  out << Render(doc, cfg.format);
  return ExitStatusFor(doc);
}

}  // namespace qgame
