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

#include "qgame/table_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qgame {
namespace {

using nlohmann::json;

double RequireNumber(const json& node, const std::string& key) {
  if (!node.is_number()) throw TableError("key \"" + key + "\" must be a number");
  return node.get<double>();
}

PayoffTable ParseOutcomes(const json& node) {
  if (!node.is_object()) throw TableError("key \"outcomes\" must be an object");
  for (const auto& [key, _] : node.items()) {
    bool known = false;
    for (const char* label : kOutcomeLabels) known = known || key == label;
    if (!known) throw TableError("unknown outcome key \"" + key + "\"");
  }
  std::array<Payoffs, 4> entries{};
  for (int o = 0; o < 4; ++o) {
    const std::string label = kOutcomeLabels[o];
    if (!node.contains(label)) throw TableError("missing outcome key \"" + label + "\"");
    const json& pair = node.at(label);
    if (!pair.is_array() || pair.size() != 2) {
      throw TableError("outcome key \"" + label + "\" must be a two-element array");
    }
    entries[o] = {RequireNumber(pair[0], label), RequireNumber(pair[1], label)};
  }
  try {
    return PayoffTable::FromEntries(entries);
  } catch (const std::invalid_argument& e) {
    throw TableError(e.what());
  }
}

BosParams ParseBos(const json& node) {
  if (!node.is_object()) throw TableError("key \"bos\" must be an object");
  for (const auto& [key, _] : node.items()) {
    if (key != "alpha" && key != "beta" && key != "gamma_mis" && key != "allow_equal") {
      throw TableError("unknown bos key \"" + key + "\"");
    }
  }
  BosParams params;
  for (const char* key : {"alpha", "beta", "gamma_mis"}) {
    if (!node.contains(key)) throw TableError(std::string("missing bos key \"") + key + "\"");
  }
  params.alpha = RequireNumber(node.at("alpha"), "alpha");
  params.beta = RequireNumber(node.at("beta"), "beta");
  params.gamma_mis = RequireNumber(node.at("gamma_mis"), "gamma_mis");
  if (node.contains("allow_equal")) {
    if (!node.at("allow_equal").is_boolean()) {
      throw TableError("key \"allow_equal\" must be a boolean");
    }
    params.allow_equal = node.at("allow_equal").get<bool>();
  }
  if (std::string v = params.Violation(); !v.empty()) throw TableError("bos: " + v);
  return params;
}

}  // namespace

GameTable ParseGameTable(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw TableError(std::string("game table is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw TableError("game table must be a JSON object");
  const bool has_outcomes = doc.contains("outcomes");
  const bool has_bos = doc.contains("bos");
  if (has_outcomes == has_bos) {
    throw TableError("game table needs exactly one of \"outcomes\" or \"bos\"");
  }
  for (const auto& [key, _] : doc.items()) {
    if (key != "outcomes" && key != "bos") throw TableError("unknown top-level key \"" + key + "\"");
  }
  if (has_outcomes) return {ParseOutcomes(doc.at("outcomes")), std::nullopt};
  const BosParams params = ParseBos(doc.at("bos"));
  return {BosTable(params), params};
}

GameTable LoadGameTable(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TableError("cannot open game table \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseGameTable(buf.str());
}

}  // namespace qgame
