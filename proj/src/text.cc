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

#include "reqlint/text.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>

#include "reqlint/error.h"
#include "reqlint/keyvalue.h"

namespace reqlint::text {
namespace {

bool IsWordByte(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || u >= 0x80;
}

bool StartsWithCaseless(std::string_view text, std::size_t pos,
                        std::string_view prefix) {
  if (pos + prefix.size() > text.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(text[pos + i])) != prefix[i]) {
      return false;
    }
  }
  return true;
}

// Length of the URL, e-mail address or path starting at pos, or 0.
std::size_t SkippableSpan(std::string_view text, std::size_t pos) {
  if (StartsWithCaseless(text, pos, "http://") ||
      StartsWithCaseless(text, pos, "https://") ||
      StartsWithCaseless(text, pos, "www.") ||
      StartsWithCaseless(text, pos, "ftp://")) {
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    return end - pos;
  }
  // word@word.tld and /path/like/this or C:\style
  std::size_t end = pos;
  bool has_at = false, has_slash = false;
  while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
    has_at = has_at || text[end] == '@';
    has_slash = has_slash || text[end] == '/' || text[end] == '\\';
    ++end;
  }
  if (has_at && end - pos > 3) return end - pos;
  if (has_slash && (text[pos] == '/' || text[pos] == '~' || text[pos] == '.')) {
    return end - pos;
  }
  return 0;
}

constexpr std::string_view kStopwords[] = {
    "a", "about", "above", "after", "again", "against", "all", "am", "an",
    "and", "any", "are", "aren't", "as", "at", "be", "because", "been",
    "before", "being", "below", "between", "both", "but", "by", "can",
    "can't", "cannot", "could", "couldn't", "did", "didn't", "do", "does",
    "doesn't", "doing", "don't", "down", "during", "each", "few", "for",
    "from", "further", "had", "hadn't", "has", "hasn't", "have", "haven't",
    "having", "he", "he'd", "he'll", "he's", "her", "here", "here's", "hers",
    "herself", "him", "himself", "his", "how", "how's", "i", "i'd", "i'll",
    "i'm", "i've", "if", "in", "into", "is", "isn't", "it", "it's", "its",
    "itself", "let's", "me", "more", "most", "mustn't", "my", "myself", "no",
    "nor", "not", "of", "off", "on", "once", "only", "or", "other", "ought",
    "our", "ours", "ourselves", "out", "over", "own", "same", "shan't", "she",
    "she'd", "she'll", "she's", "should", "shouldn't", "so", "some", "such",
    "than", "that", "that's", "the", "their", "theirs", "them", "themselves",
    "then", "there", "there's", "these", "they", "they'd", "they'll",
    "they're", "they've", "this", "those", "through", "to", "too", "under",
    "until", "up", "very", "was", "wasn't", "we", "we'd", "we'll", "we're",
    "we've", "were", "weren't", "what", "what's", "when", "when's", "where",
    "where's", "which", "while", "who", "who's", "whom", "why", "why's",
    "will", "with", "won't", "would", "wouldn't", "you", "you'd", "you'll",
    "you're", "you've", "your", "yours", "yourself", "yourselves", "also",
    "just"};

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

}  // namespace

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const bool at_boundary =
        pos == 0 || std::isspace(static_cast<unsigned char>(text[pos - 1])) ||
        text[pos - 1] == '(' || text[pos - 1] == '<' || text[pos - 1] == '"';
    if (at_boundary) {
      if (std::size_t skip = SkippableSpan(text, pos)) {
        pos += skip;
        continue;
      }
    }
    if (!IsWordByte(text[pos])) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() &&
           (IsWordByte(text[end]) || (text[end] == '\'' && end + 1 < text.size() &&
                                      IsWordByte(text[end + 1])))) {
      ++end;
    }
    Token token;
    token.original = std::string(text.substr(pos, end - pos));
    token.lower = ToLowerCopy(token.original);
    out.push_back(std::move(token));
    pos = end;
  }
  return out;
}

std::vector<std::string> Words(std::string_view text) {
  std::vector<std::string> out;
  for (auto& token : Tokenize(text)) out.push_back(std::move(token.lower));
  return out;
}

bool IsStopword(std::string_view lower) {
  static const std::unordered_set<std::string_view> set(std::begin(kStopwords),
                                                        std::end(kStopwords));
  return set.contains(lower);
}

std::string Stem(std::string_view lower) {
  std::string w(lower);
  if (w.ends_with("'s")) w.resize(w.size() - 2);
  auto strip = [&](std::string_view suffix, std::size_t min_rest) {
    if (w.size() >= suffix.size() + min_rest && w.ends_with(suffix)) {
      w.resize(w.size() - suffix.size());
      return true;
    }
    return false;
  };
  auto undouble = [&] {
    const std::size_t n = w.size();
    if (n >= 3 && w[n - 1] == w[n - 2] && !IsVowel(w[n - 1]) && w[n - 1] != 'l' &&
        w[n - 1] != 's' && w[n - 1] != 'z') {
      w.pop_back();
    }
  };
  if (w.size() > 4 && w.ends_with("ies")) {
    w.resize(w.size() - 3);
    w += 'y';
  } else if (w.ends_with("sses")) {
    w.resize(w.size() - 2);
  } else if (strip("ing", 3)) {
    undouble();
  } else if (strip("ed", 3)) {
    undouble();
  } else if (w.size() > 3 && w.ends_with('s') && !w.ends_with("ss") &&
             !w.ends_with("us") && !w.ends_with("is")) {
    w.pop_back();
  }
  if (w.size() > 3 && w.ends_with('e')) w.pop_back();
  return w;
}

std::vector<std::string> ContentStems(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& token : Tokenize(text)) {
    if (token.lower.size() < 2 || IsStopword(token.lower)) continue;
    out.push_back(Stem(token.lower));
  }
  return out;
}

std::vector<std::string> ContentStemSet(std::string_view text) {
  auto stems = ContentStems(text);
  std::sort(stems.begin(), stems.end());
  stems.erase(std::unique(stems.begin(), stems.end()), stems.end());
  return stems;
}

namespace {

bool IsListItemStart(std::string_view line) {
  const std::string t = TrimCopy(line);
  if (t.empty()) return false;
  if (t[0] == '-' || t[0] == '*' || t[0] == '+') return t.size() > 1 && t[1] == ' ';
  std::size_t i = 0;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
  return i > 0 && i < t.size() && (t[i] == '.' || t[i] == ')');
}

bool EndsWithAbbreviation(std::string_view text) {
  // text ends right before a '.' that we are deciding whether to split on.
  static constexpr std::array<std::string_view, 9> kAbbrev = {
      "e.g", "i.e", "etc", "vs", "mr", "mrs", "dr", "cf", "approx"};
  std::size_t start = text.size();
  while (start > 0 && !std::isspace(static_cast<unsigned char>(text[start - 1])) &&
         text[start - 1] != '(') {
    --start;
  }
  const std::string word = ToLowerCopy(text.substr(start));
  for (auto abbrev : kAbbrev) {
    if (word == abbrev) return true;
  }
  return word.size() == 1 && std::isalpha(static_cast<unsigned char>(word[0]));
}

}  // namespace

std::vector<std::string> SplitSentences(std::string_view text) {
  // Paragraphs end at blank lines and before list items; wrapped lines inside
  // a paragraph are joined.
  std::vector<std::string> paragraphs;
  std::string current;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    const std::string trimmed = TrimCopy(line);
    if (trimmed.empty() || IsListItemStart(line)) {
      if (!TrimCopy(current).empty()) paragraphs.push_back(current);
      current.clear();
    }
    if (!trimmed.empty()) {
      if (!current.empty()) current += ' ';
      current += trimmed;
    }
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  if (!TrimCopy(current).empty()) paragraphs.push_back(current);

  std::vector<std::string> sentences;
  for (const auto& para : paragraphs) {
    std::size_t start = 0;
    for (std::size_t i = 0; i < para.size(); ++i) {
      const char c = para[i];
      if (c != '.' && c != '!' && c != '?') continue;
      std::size_t end = i + 1;
      while (end < para.size() &&
             (para[end] == '.' || para[end] == '!' || para[end] == '?' ||
              para[end] == '"' || para[end] == '\'' || para[end] == ')')) {
        ++end;
      }
      const bool boundary =
          end == para.size() || std::isspace(static_cast<unsigned char>(para[end]));
      if (!boundary) continue;
      // "1." opening a numbered list item stays with its item.
      if (start == 0 && i > 0 && c == '.' &&
          std::all_of(para.begin(), para.begin() + static_cast<std::ptrdiff_t>(i),
                      [](unsigned char ch) { return std::isdigit(ch); })) {
        continue;
      }
      if (c == '.' && end == i + 1 &&
          EndsWithAbbreviation(std::string_view(para).substr(start, i - start))) {
        continue;
      }
      std::string sentence = TrimCopy(std::string_view(para).substr(start, end - start));
      if (!sentence.empty()) sentences.push_back(std::move(sentence));
      start = end;
      i = end - 1;
    }
    std::string tail = TrimCopy(std::string_view(para).substr(start));
    if (!tail.empty()) sentences.push_back(std::move(tail));
  }
  return sentences;
}

bool IsWellFormedSentence(std::string_view sentence) {
  std::string s = TrimCopy(sentence);
  // Leading list markers and quotes do not count against the sentence.
  std::size_t i = 0;
  const bool list_item = IsListItemStart(s);
  if (list_item) {
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.' ||
                            s[i] == ')' || s[i] == '-' || s[i] == '*' || s[i] == '+')) {
      ++i;
    }
  }
  while (i < s.size() && (s[i] == '"' || s[i] == '(' ||
                          std::isspace(static_cast<unsigned char>(s[i])))) {
    ++i;
  }
  if (i >= s.size()) return false;
  const char first = s[i];
  if (!std::isupper(static_cast<unsigned char>(first)) &&
      !std::isdigit(static_cast<unsigned char>(first))) {
    return false;
  }
  std::size_t j = s.size();
  while (j > 0 && (s[j - 1] == '"' || s[j - 1] == '\'' || s[j - 1] == ')')) --j;
  if (j == 0) return false;
  const char last = s[j - 1];
  // List items are often fragments without closing punctuation.
  if (!list_item && last != '.' && last != '!' && last != '?') return false;
  return Tokenize(s).size() >= 3;
}

void Wordlist::LoadFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kIoError, "cannot read wordlist " + path.string());
  }
  std::string line;
  while (std::getline(in, line)) {
    const std::string word = TrimCopy(line);
    if (word.empty() || word.front() == '#') continue;
    Add(word);
  }
}

void Wordlist::Add(std::string_view word) { words_.insert(ToLowerCopy(word)); }

bool Wordlist::Knows(std::string_view lower) const {
  std::string w(lower);
  if (words_.contains(w)) return true;
  if (w.ends_with("'s")) w.resize(w.size() - 2);
  // Contractions: accept when the head is a word ("doesn't" -> "doesn").
  if (const auto apos = w.find('\''); apos != std::string::npos) {
    const std::string tail = w.substr(apos + 1);
    static const std::array<std::string_view, 7> kTails = {"t", "s", "re", "ve",
                                                           "ll", "d", "m"};
    if (std::find(kTails.begin(), kTails.end(), tail) == kTails.end()) {
      return false;
    }
    w.resize(apos);
    if (w.ends_with('n') && tail == "t") {
      return words_.contains(w) || words_.contains(w.substr(0, w.size() - 1)) ||
             w == "can" || w == "won" || w == "don";
    }
  }
  if (words_.contains(w)) return true;
  auto known_without = [&](std::string_view suffix, std::string_view repl) {
    if (w.size() <= suffix.size() + 2 || !w.ends_with(suffix)) return false;
    return words_.contains(w.substr(0, w.size() - suffix.size()) + std::string(repl));
  };
  return known_without("s", "") || known_without("es", "") ||
         known_without("ies", "y") || known_without("ed", "") ||
         known_without("ed", "e") || known_without("ing", "") ||
         known_without("ing", "e") || known_without("ly", "") ||
         known_without("er", "") || known_without("ers", "");
}

SpellReport CheckSpelling(std::string_view text, const Wordlist& wordlist,
                          const std::set<std::string>& glossary_lower) {
  SpellReport report;
  if (wordlist.empty()) return report;
  for (const auto& token : Tokenize(text)) {
    const std::string& o = token.original;
    bool skip = false;
    for (std::size_t i = 0; i < o.size(); ++i) {
      const auto u = static_cast<unsigned char>(o[i]);
      if (std::isdigit(u) || u >= 0x80 || (i > 0 && std::isupper(u))) skip = true;
    }
    if (skip) continue;
    ++report.checked;
    if (glossary_lower.contains(token.lower)) continue;
    if (!wordlist.Knows(token.lower)) report.misspelled.push_back(o);
  }
  return report;
}

}  // namespace reqlint::text
