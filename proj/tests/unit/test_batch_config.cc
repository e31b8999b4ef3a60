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


#include <algorithm>
#include <fstream>

#include "doctest.h"
#include "generators.h"
#include "reqlint/batch.h"
#include "reqlint/config.h"
#include "reqlint/duplicates.h"
#include "reqlint/error.h"

using namespace reqlint;

namespace {

std::vector<std::vector<std::string>> RandomSets(testgen::Rng& rng, int n, int vocab) {
  std::vector<std::vector<std::string>> sets(static_cast<std::size_t>(n));
  std::uniform_int_distribution<int> size(0, 6), word(0, vocab - 1);
  for (auto& s : sets) {
    const int k = size(rng);
    for (int i = 0; i < k; ++i) s.push_back("w" + std::to_string(word(rng)));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return sets;
}

}  // namespace

TEST_CASE("Jaccard threshold is exact") {
  const std::vector<std::string> a = {"a", "b", "c", "d"};
  const std::vector<std::string> b = {"a", "b", "c", "d", "e"};
  CHECK(JaccardAtLeast(a, b, Rational(4, 5)));
  CHECK_FALSE(JaccardAtLeast(a, b, Rational(81, 100)));
  CHECK_FALSE(JaccardAtLeast({}, {}, Rational(0)));
}

TEST_CASE("property: indexed duplicate kernel equals all pairs") {
  testgen::Rng rng(12);
  for (int round = 0; round < 40; ++round) {
    const auto sets = RandomSets(rng, 150, 12 + round);
    for (const Rational& t : {Rational(1, 2), Rational(4, 5), Rational(1)}) {
      REQUIRE(NearDuplicatePairs(sets, t) == NearDuplicatePairsReference(sets, t));
    }
  }
}

TEST_CASE("property: serial and parallel corpus runs agree") {
  const Corpus corpus = testgen::SyntheticCorpus(1500, 4);
  const Config config;
  const text::Wordlist wordlist = LoadWordlist(config);
  const ChecklistSet checklists = BuildChecklists();
  const auto serial = AnalyzeCorpus(corpus, checklists, config.analyzer, &wordlist, Execution::kSerial);
  const auto parallel =
      AnalyzeCorpus(corpus, checklists, config.analyzer, &wordlist, Execution::kParallel);
  REQUIRE(serial == parallel);

  testgen::Rng rng(4);
  std::vector<AnswerSheet> manual;
  for (const auto& r : corpus.requirements) {
    AnswerSheet s = testgen::RandomSheet(checklists.For(r.kind), r.id, rng, 0.1);
    for (auto& [id, e] : s.entries) {
      if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) e.value.reset();
    }
    manual.push_back(std::move(s));
  }
  std::vector<AnswerSheet> automatic;
  for (const auto& f : serial) automatic.push_back(f.sheet);
  const auto merged_s = MergeCorpus(corpus, automatic, manual, checklists, {}, Execution::kSerial);
  const auto merged_p = MergeCorpus(corpus, automatic, manual, checklists, {}, Execution::kParallel);
  REQUIRE(merged_s == merged_p);

  // Fill what neither side answered so that every sheet scores.
  auto complete = merged_s;
  for (std::size_t i = 0; i < complete.size(); ++i) {
    for (auto& [id, e] : complete[i].entries) {
      if (!e.value) e.value = Answer::NotApplicable();
    }
  }
  REQUIRE(ScoreCorpus(corpus, complete, checklists, {}, Execution::kSerial) ==
          ScoreCorpus(corpus, complete, checklists, {}, Execution::kParallel));
}

TEST_CASE("parallel scoring reports the first failure by position") {
  const Corpus corpus = testgen::SyntheticCorpus(50, 9);
  const ChecklistSet checklists = BuildChecklists();
  std::vector<AnswerSheet> sheets;
  for (const auto& r : corpus.requirements) {
    sheets.push_back(BlankAnswerSheet(checklists.For(r.kind), r.id));
  }
  for (auto exec : {Execution::kSerial, Execution::kParallel}) {
    try {
      ScoreCorpus(corpus, sheets, checklists, {}, exec);
      FAIL("expected IncompleteSheet");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kIncompleteSheet);
      CHECK(std::string(e.what()).find(corpus.requirements[0].id) != std::string::npos);
    }
  }
}

TEST_CASE("sheet alignment") {
  const Corpus corpus = testgen::SyntheticCorpus(3, 1);
  const auto aligned = AlignSheets(corpus, {AnswerSheet{corpus.requirements[2].id, {}}});
  REQUIRE(aligned.size() == 3);
  CHECK(aligned[0].requirement_id == corpus.requirements[0].id);
  CHECK(aligned[2].requirement_id == corpus.requirements[2].id);
  CHECK_THROWS_AS(AlignSheets(corpus, {AnswerSheet{"nope", {}}}), Error);
  CHECK_THROWS_AS(AlignSheets(corpus, {AnswerSheet{corpus.requirements[0].id, {}},
                                       AnswerSheet{corpus.requirements[0].id, {}}}),
                  Error);
}

TEST_CASE("configuration file") {
  const Config c = ParseConfig(
      "[disable]\nSC3.8\n[tool.iq]\nIQ4 = no\n[analyzer]\nsummary_overlap = 3/5\n"
      "[scoring]\nweights = 1, 1, 2\n[dictionary]\nwordlists = extra.txt, /abs/more.txt\n",
      "reqlint.conf", "/base");
  CHECK(c.tailoring.disabled.contains("SC3.8"));
  CHECK_FALSE(c.profile.iq_supported[3]);
  CHECK(c.analyzer.summary_overlap == Rational(3, 5));
  CHECK(c.weights.sc3 == Rational(2));
  CHECK(c.wordlists == std::vector<std::filesystem::path>{"/base/extra.txt", "/abs/more.txt"});
  CHECK_THROWS_AS(ParseConfig("[colors]\nx = 1\n", "bad.conf"), Error);
}

TEST_CASE("configuration discovery") {
  const auto dir = std::filesystem::temp_directory_path() / "reqlint_config_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  CHECK(LoadConfig(std::nullopt, dir).tailoring.disabled.empty());
  {
    std::ofstream(dir / "reqlint.conf") << "[disable]\nSC3.1\n";
    std::ofstream(dir / "other.conf") << "[disable]\nSC3.2\n";
  }
  CHECK(LoadConfig(std::nullopt, dir).tailoring.disabled == std::set<std::string>{"SC3.1"});
  CHECK(LoadConfig(dir / "other.conf", dir).tailoring.disabled ==
        std::set<std::string>{"SC3.2"});
  CHECK_THROWS_AS(LoadConfig(dir / "missing.conf", dir), Error);
  {
    std::ofstream(dir / "words.txt") << "# team words\nfrobnicate\n";
  }
  Config custom;
  custom.wordlists = {dir / "words.txt"};
  const text::Wordlist list = LoadWordlist(custom);
  CHECK(list.Knows("frobnicate"));
  CHECK(list.size() == 1);
  std::filesystem::remove_all(dir);
}
