// Copyright 2026 The reqlint Authors.
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


// Configuration file: tailoring, analyzer thresholds, scoring weights and
// dictionaries in one key-value document.
//
//   [disable]            SC1.3b
//   [tool.iq]            IQ3 = no
//   [add.SC3]            TEAM1 = yes/no | Title | Description
//   [analyzer]           summary_overlap = 60%
//   [scoring]            weights = 1, 1, 3
//   [dictionary]         wordlists = words.txt, more.txt

#ifndef REQLINT_CONFIG_H_
#define REQLINT_CONFIG_H_

#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "reqlint/analyzers.h"
#include "reqlint/checklist.h"
#include "reqlint/scoring.h"
#include "reqlint/text.h"

namespace reqlint {

inline constexpr std::string_view kDefaultConfigName = "reqlint.conf";

struct Config {
  TailoringConfig tailoring;
  ToolProfile profile;
  AnalyzerConfig analyzer;
  ScoringWeights weights;
  // Empty means the bundled dictionaries.
  std::vector<std::filesystem::path> wordlists;
};

// Relative wordlist paths are resolved against `base_dir`. Throws
// kParseError for unknown sections.
Config ParseConfig(std::string_view text, std::string_view source_name,
                   const std::filesystem::path& base_dir = {});

// `explicit_path` (from --tailoring) replaces ./reqlint.conf in `cwd`; with
// neither, defaults apply.
Config LoadConfig(const std::optional<std::filesystem::path>& explicit_path,
                  const std::filesystem::path& cwd = std::filesystem::current_path());

// $REQLINT_DATA_DIR, else the data directory of the source tree.
std::filesystem::path DataDir();

// Bundled or configured dictionaries. Missing bundled files give an empty
// list, which disables spell checking.
text::Wordlist LoadWordlist(const Config& config);

}  // namespace reqlint

#endif  // REQLINT_CONFIG_H_
