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

// The flat "key = value" text format shared by answer files, tailoring
// files and analyzer threshold files:
//
//   # full-line comment
//   [section name]
//   SC3.5 = very much
//   SC1.2b              <- bare key, no value
//
// Only whole lines starting with '#' are comments, so values may contain
// '#' (issue short-codes in evidence text, for instance).

#ifndef REQLINT_KEYVALUE_H_
#define REQLINT_KEYVALUE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reqlint {

struct KeyValueEntry {
  std::string section;  // empty before the first [section]
  std::string key;
  std::optional<std::string> value;
  int line = 0;
};

struct KeyValueDocument {
  std::vector<std::string> sections;  // in order of appearance
  std::vector<KeyValueEntry> entries;
};

// Throws Error(kParseError) naming source_name and the line on malformed
// section headers or empty keys.
KeyValueDocument ParseKeyValue(std::string_view text,
                               std::string_view source_name = "<input>");

std::string TrimCopy(std::string_view text);
std::string ToLowerCopy(std::string_view text);

}  // namespace reqlint

#endif  // REQLINT_KEYVALUE_H_
