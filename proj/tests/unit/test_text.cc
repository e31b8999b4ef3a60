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


#include <set>

#include "doctest.h"
#include "reqlint/config.h"
#include "reqlint/text.h"

using namespace reqlint;
using namespace reqlint::text;

TEST_CASE("tokenizer skips URLs and addresses") {
  const auto words = Words("Don't break https://example.org/x?y=1 or me@example.org, OK?");
  CHECK(words == std::vector<std::string>{"don't", "break", "or", "ok"});
  const auto tokens = Tokenize("Hello World");
  REQUIRE(tokens.size() == 2);
  CHECK(tokens[0].original == "Hello");
  CHECK(tokens[0].lower == "hello");
}

TEST_CASE("stemming is consistent across inflections") {
  CHECK(Stem("searching") == Stem("search"));
  CHECK(Stem("shortcuts") == Stem("shortcut"));
  CHECK(Stem("libraries") == Stem("library"));
  CHECK(Stem("mutes") == Stem("muting"));
  CHECK(Stem("tabs") == Stem("tab"));
}

TEST_CASE("content stems drop stopwords and duplicates") {
  CHECK(ContentStemSet("The tabs and the TAB") == std::vector<std::string>{Stem("tab")});
  CHECK(IsStopword("the"));
  CHECK_FALSE(IsStopword("bookmark"));
}

TEST_CASE("sentence splitting keeps list numbers with their item") {
  const auto s = SplitSentences("First sentence here. Second one follows!\n1. open the menu\n2. click it");
  REQUIRE(s.size() == 4);
  CHECK(s[0] == "First sentence here.");
  CHECK(s[2].starts_with("1."));
}

TEST_CASE("well-formed sentences") {
  CHECK(IsWellFormedSentence("Please add a dark theme."));
  CHECK_FALSE(IsWellFormedSentence("please add a dark theme."));
  CHECK_FALSE(IsWellFormedSentence("Dark theme."));
  CHECK_FALSE(IsWellFormedSentence("Please add a dark theme"));
}

TEST_CASE("spell check honours wordlist, inflections and glossary") {
  Wordlist list;
  for (const char* w : {"please", "add", "a", "dark", "theme", "search"}) list.Add(w);
  const std::set<std::string> glossary = {"awesomebar"};
  const auto report = CheckSpelling("Please add a drak theme to the Awesomebar searches, v2 and HTTP.", list, glossary);
  // In order of appearance; "v2" and "HTTP" are not checked.
  CHECK(report.misspelled == std::vector<std::string>{"drak", "to", "the", "and"});
  CHECK(report.checked == 10);
  CHECK(list.Knows("searches"));
  CHECK(list.Knows("theme"));
}

TEST_CASE("bundled wordlists load") {
  const Wordlist list = LoadWordlist(Config{});
  CHECK(list.size() > 10000);
  CHECK(list.Knows("bookmark"));
  CHECK(list.Knows("browser"));
  CHECK_FALSE(list.Knows("qwzxv"));
}
