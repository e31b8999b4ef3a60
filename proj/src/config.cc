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


#include "reqlint/config.h"

#include <cstdlib>

#include "reqlint/error.h"
#include "reqlint/ingestion.h"
#include "reqlint/keyvalue.h"

#ifndef REQLINT_DATA_DIR
#define REQLINT_DATA_DIR "data"
#endif

namespace reqlint {

Config ParseConfig(std::string_view text, std::string_view source_name,
                   const std::filesystem::path& base_dir) {
  const KeyValueDocument doc = ParseKeyValue(text, source_name);
  for (const auto& kv : doc.entries) {
    const std::string& s = kv.section;
    const bool known = s == "disable" || s == "tool.iq" || s.starts_with("add.") ||
                       s == "analyzer" || s == "scoring" || s == "dictionary";
    if (!known) {
      throw Error(ErrorKind::kParseError,
                  std::string(source_name) + ":" + std::to_string(kv.line) + ": " +
                      (s.empty() ? std::string("setting outside a section")
                                 : "unknown section [" + s + "]"));
    }
  }
  Config config;
  ReadTailoring(doc, source_name, &config.tailoring, &config.profile);
  ReadAnalyzerConfig(doc, source_name, &config.analyzer);
  ReadScoringConfig(doc, source_name, &config.weights);
  for (const auto& kv : doc.entries) {
    if (kv.section != "dictionary") continue;
    if (kv.key != "wordlists") {
      throw Error(ErrorKind::kParseError, std::string(source_name) + ":" +
                                              std::to_string(kv.line) +
                                              ": unknown dictionary setting " + kv.key);
    }
    const std::string value_text = kv.value.value_or("");
    std::string_view rest = value_text;
    while (true) {
      const auto comma = rest.find(',');
      const std::string item = TrimCopy(rest.substr(0, comma));
      if (!item.empty()) {
        std::filesystem::path p(item);
        config.wordlists.push_back(p.is_absolute() || base_dir.empty() ? p : base_dir / p);
      }
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  return config;
}

Config LoadConfig(const std::optional<std::filesystem::path>& explicit_path,
                  const std::filesystem::path& cwd) {
  std::filesystem::path path;
  if (explicit_path) {
    path = *explicit_path;
  } else {
    path = cwd / kDefaultConfigName;
    if (!std::filesystem::exists(path)) return Config{};
  }
  return ParseConfig(ReadFile(path), path.string(), path.parent_path());
}

std::filesystem::path DataDir() {
  if (const char* env = std::getenv("REQLINT_DATA_DIR"); env && *env) return env;
  return REQLINT_DATA_DIR;
}

text::Wordlist LoadWordlist(const Config& config) {
  text::Wordlist words;
  if (!config.wordlists.empty()) {
    for (const auto& path : config.wordlists) words.LoadFile(path);
    return words;
  }
  for (const char* name : {"wordlist-en.txt", "wordlist-software.txt"}) {
    const auto path = DataDir() / name;
    if (std::filesystem::exists(path)) words.LoadFile(path);
  }
  return words;
}

}  // namespace reqlint
