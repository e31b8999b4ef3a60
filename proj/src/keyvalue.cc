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

#include "reqlint/keyvalue.h"

#include <algorithm>
#include <cctype>

#include "reqlint/error.h"

namespace reqlint {

std::string TrimCopy(std::string_view text) {
  std::size_t begin = 0;
  while (begin < text.size() &&
         std::isspace(static_cast<unsigned char>(text[begin]))) {
    ++begin;
  }
  std::size_t end = text.size();
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
    --end;
  }
  return std::string(text.substr(begin, end - begin));
}

std::string ToLowerCopy(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

KeyValueDocument ParseKeyValue(std::string_view text,
                               std::string_view source_name) {
  KeyValueDocument doc;
  std::string section;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    const std::string line = TrimCopy(raw);
    if (line.empty() || line.front() == '#') {
      if (eol == text.size()) break;
      continue;
    }
    auto fail = [&](const std::string& what) {
      throw Error(ErrorKind::kParseError, std::string(source_name) + ":" +
                                              std::to_string(line_no) + ": " +
                                              what);
    };
    if (line.front() == '[') {
      if (line.back() != ']') fail("unterminated section header");
      section = TrimCopy(std::string_view(line).substr(1, line.size() - 2));
      if (section.empty()) fail("empty section name");
      doc.sections.push_back(section);
    } else {
      KeyValueEntry entry;
      entry.section = section;
      entry.line = line_no;
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        entry.key = line;
      } else {
        entry.key = TrimCopy(std::string_view(line).substr(0, eq));
        entry.value = TrimCopy(std::string_view(line).substr(eq + 1));
      }
      if (entry.key.empty()) fail("missing key");
      doc.entries.push_back(std::move(entry));
    }
    if (eol == text.size()) break;
  }
  return doc;
}

}  // namespace reqlint
