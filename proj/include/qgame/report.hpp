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

#ifndef QGAME_REPORT_HPP_
#define QGAME_REPORT_HPP_

// Report documents: {"config": ..., "results": ..., "checks": [...]}.
// Every number passes through Sig12 so json, csv and table renderings carry
// identical digits.

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qgame/analysis.hpp"

namespace qgame {

using Document = nlohmann::ordered_json;

enum class OutputFormat { kJson, kCsv, kTable };

/// Rounds to 12 significant digits; maps −0 to 0.
double Sig12(double x);

Document ToDoc(const Payoffs& p);
Document ToDoc(const OutcomeDist& d);
Document ToDoc(const Mat2& m);
Document ToDoc(const TacticProfile& t);
Document ToDoc(const PayoffTable& t);
Document ToDoc(const EquilibriumReport& r);
Document ToDoc(const DilemmaReport& d);
Document ToDoc(const SupremumResult& s);
Document ToDoc(const BridgeRecord& b);

struct Check {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

Document ToDoc(const Check& c);

/// (path, rendered scalar) pairs in document order, e.g.
/// ("results.payoffs.player1", "4").
std::vector<std::pair<std::string, std::string>> Flatten(const Document& doc);

std::string Render(const Document& doc, OutputFormat format);

}  // namespace qgame

#endif  // QGAME_REPORT_HPP_
