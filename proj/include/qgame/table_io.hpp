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

#ifndef QGAME_TABLE_IO_HPP_
#define QGAME_TABLE_IO_HPP_

// Game-table files are JSON documents with exactly one of two top-level keys:
//
//   {"outcomes": {"00": [5, 3], "01": [1, 1], "10": [1, 1], "11": [3, 5]}}
//   {"bos": {"alpha": 5, "beta": 3, "gamma_mis": 1, "allow_equal": false}}
//
// "allow_equal" is optional and permits alpha == beta.

#include <optional>
#include <stdexcept>
#include <string>

#include "qgame/game.hpp"

namespace qgame {

/// Malformed game-table document. The message names the offending key.
class TableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GameTable {
  PayoffTable table;
  /// Present when the document used the "bos" form.
  std::optional<BosParams> bos;
};

GameTable ParseGameTable(const std::string& text);
/// Throws TableError when the file cannot be read or parsed.
GameTable LoadGameTable(const std::string& path);

}  // namespace qgame

#endif  // QGAME_TABLE_IO_HPP_
