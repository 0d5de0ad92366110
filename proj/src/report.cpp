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

#include "qgame/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <type_traits>

namespace qgame {

double Sig12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

Document ToDoc(const Payoffs& p) {
  return {{"player1", Sig12(p.player1)}, {"player2", Sig12(p.player2)}};
}

Document ToDoc(const OutcomeDist& d) {
  Document out = Document::object();
  for (int o = 0; o < 4; ++o) out[kOutcomeLabels[o]] = Sig12(d[o]);
  return out;
}

Document ToDoc(const Mat2& m) {
  Document out = Document::array();
  for (const Cplx& z : m) out.push_back({Sig12(z.real()), Sig12(z.imag())});
  return out;
}

Document ToDoc(const TacticProfile& t) {
  return std::visit(
      [](const auto& profile) -> Document {
        using T = std::decay_t<decltype(profile)>;
        if constexpr (std::is_same_v<T, RestrictedProfile>) {
          return {{"kind", "restricted"}, {"p", Sig12(profile.p)}, {"q", Sig12(profile.q)}};
        } else if constexpr (std::is_same_v<T, UnitaryProfile>) {
          return {{"kind", "unitary"},
                  {"a", ToDoc(profile.a.matrix())},
                  {"b", ToDoc(profile.b.matrix())}};
        } else {
          Document k1 = Document::array(), k2 = Document::array();
          for (const Mat2& k : profile.k1.kraus()) k1.push_back(ToDoc(k));
          for (const Mat2& k : profile.k2.kraus()) k2.push_back(ToDoc(k));
          return {{"kind", "channel"}, {"k1", k1}, {"k2", k2}};
        }
      },
      t);
}

Document ToDoc(const PayoffTable& t) {
  Document out = Document::object();
  for (int o = 0; o < 4; ++o) {
    out[kOutcomeLabels[o]] = {Sig12(t.at(o).player1), Sig12(t.at(o).player2)};
  }
  return out;
}

Document ToDoc(const EquilibriumReport& r) {
  Document list = Document::array();
  for (const Equilibrium& e : r.equilibria) {
    list.push_back({{"p", Sig12(e.p)},
                    {"q", Sig12(e.q)},
                    {"payoffs", ToDoc(e.payoffs)},
                    {"slack", Sig12(e.slack)},
                    {"pure", e.IsPure()}});
  }
  return {{"grid_n", r.grid_n},
          {"eps", Sig12(r.eps)},
          {"verify_points", r.verify_points},
          {"degenerate", r.degenerate},
          {"count", r.equilibria.size()},
          {"equilibria", list}};
}

Document ToDoc(const DilemmaReport& d) {
  Document pays = Document::array();
  for (const Payoffs& p : d.payoffs) pays.push_back(ToDoc(p));
  return {{"equilibrium_count", d.equilibrium_count},
          {"payoff_distinct_count", d.payoff_distinct_count},
          {"all_payoffs_equal", d.all_payoffs_equal},
          {"pure_count", d.pure_count},
          {"pure_payoffs_equal", d.pure_payoffs_equal},
          {"unique_solution", d.unique_solution},
          {"degenerate", d.degenerate},
          {"payoffs", pays}};
}

Document ToDoc(const SupremumResult& s) {
  Document params = Document::array();
  for (double x : s.best_params) params.push_back(Sig12(x));
  Document trace = Document::array();
  // The full per-iteration trace is long; keep the first entry, every 50th
  // and the last.
  for (std::size_t i = 0; i < s.trace.size(); ++i) {
    if (i == 0 || i % 50 == 0 || i + 1 == s.trace.size()) {
      trace.push_back({s.trace[i].first, Sig12(s.trace[i].second)});
    }
  }
  return {{"best_value", Sig12(s.best_value)},
          {"max_sampled", Sig12(s.max_sampled)},
          {"best_params", params},
          {"best_profile", ToDoc(s.best_profile)},
          {"restarts", s.restarts},
          {"evaluations", s.evaluations},
          {"seed", s.seed},
          {"trace", trace}};
}

Document ToDoc(const BridgeRecord& b) {
  return {{"mw", ToDoc(b.mw)},
          {"eisert", ToDoc(b.eisert)},
          {"eisert_without_inverse", ToDoc(b.eisert_without_inverse)},
          {"tv_mw_eisert", Sig12(b.tv_mw_eisert)},
          {"tv_mw_without_inverse", Sig12(b.tv_mw_without_inverse)},
          {"tv_eisert_without_inverse", Sig12(b.tv_eisert_without_inverse)},
          {"mw_payoffs", ToDoc(b.mw_payoffs)},
          {"eisert_payoffs", ToDoc(b.eisert_payoffs)}};
}

Document ToDoc(const Check& c) {
  Document out = {{"name", c.name},
                  {"passed", c.passed},
                  {"value", Sig12(c.value)},
                  {"tolerance", Sig12(c.tolerance)}};
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

namespace {

void FlattenInto(const Document& node, const std::string& path,
                 std::vector<std::pair<std::string, std::string>>& out) {
  if (node.is_object()) {
    for (const auto& [key, child] : node.items()) {
      FlattenInto(child, path.empty() ? key : path + "." + key, out);
    }
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      FlattenInto(node[i], path + "[" + std::to_string(i) + "]", out);
    }
  } else if (node.is_string()) {
    out.emplace_back(path, node.get<std::string>());
  } else {
    out.emplace_back(path, node.dump());
  }
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::vector<std::pair<std::string, std::string>> Flatten(const Document& doc) {
  std::vector<std::pair<std::string, std::string>> out;
  FlattenInto(doc, "", out);
  return out;
}

std::string Render(const Document& doc, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::kJson:
      os << doc.dump(2) << "\n";
      break;
    case OutputFormat::kCsv:
      os << "path,value\n";
      for (const auto& [path, value] : Flatten(doc)) {
        os << CsvField(path) << "," << CsvField(value) << "\n";
      }
      break;
    case OutputFormat::kTable: {
      const auto rows = Flatten(doc);
      std::size_t width = 0;
      for (const auto& row : rows) width = std::max(width, row.first.size());
      for (const auto& [path, value] : rows) {
        os << path << std::string(width - path.size() + 2, ' ') << value << "\n";
      }
      break;
    }
  }
  return os.str();
}

}  // namespace qgame
