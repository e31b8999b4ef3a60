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

// Small English text heuristics: tokenizing, stopwords, suffix stemming,
// sentence splitting and a wordlist spell check. All of it is ASCII-oriented;
// non-ASCII bytes are treated as word characters and never flagged.

#ifndef REQLINT_TEXT_H_
#define REQLINT_TEXT_H_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace reqlint::text {

struct Token {
  std::string original;  // as written, apostrophes kept
  std::string lower;
};

// Word tokens in order of appearance. URLs and e-mail addresses are skipped.
std::vector<Token> Tokenize(std::string_view text);

// Lowercased words without URLs, convenient for lexicon matching.
std::vector<std::string> Words(std::string_view text);

bool IsStopword(std::string_view lower);

// Light suffix stripping ("searching" -> "search", "shortcuts" -> "shortcut",
// "libraries" -> "library"). Only consistency matters: the same stem for
// inflections of one word.
std::string Stem(std::string_view lower);

// Stemmed, case-folded words with stopwords and one-letter tokens removed.
std::vector<std::string> ContentStems(std::string_view text);

// Sorted, de-duplicated ContentStems.
std::vector<std::string> ContentStemSet(std::string_view text);

std::vector<std::string> SplitSentences(std::string_view text);

// Capitalized start, terminal punctuation and at least three words.
bool IsWellFormedSentence(std::string_view sentence);

class Wordlist {
 public:
  Wordlist() = default;

  // One lowercase token per line; blank lines and '#' lines are ignored.
  // Throws Error(kIoError) when the file cannot be read.
  void LoadFile(const std::filesystem::path& path);
  void Add(std::string_view word);
  bool empty() const { return words_.empty(); }
  std::size_t size() const { return words_.size(); }

  // Case-insensitive, also accepting plain inflections of listed words.
  bool Knows(std::string_view lower) const;

 private:
  std::unordered_set<std::string> words_;
};

struct SpellReport {
  int checked = 0;
  std::vector<std::string> misspelled;
};

// Tokens that are neither known words nor glossary terms. Tokens with digits
// or inner capitals (acronyms, CamelCase identifiers) are not checked.
SpellReport CheckSpelling(std::string_view text, const Wordlist& wordlist,
                          const std::set<std::string>& glossary_lower);

}  // namespace reqlint::text

#endif  // REQLINT_TEXT_H_
