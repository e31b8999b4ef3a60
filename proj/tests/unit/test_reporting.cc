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


#include "doctest.h"
#include "generators.h"
#include "reqlint/batch.h"
#include "reqlint/error.h"
#include "reqlint/reporting.h"

using namespace reqlint;

namespace {

const Checklist& FR() {
  static const Checklist c = BuildChecklist(RequirementKind::kFeatureRequest, {}, {});
  return c;
}

ScoreCard Card(std::string id, std::optional<Rational> final_pct) {
  ScoreCard c;
  c.requirement_id = std::move(id);
  c.sc11_pct = c.sc12_pct = Rational(1);
  c.sc13_pct = Rational(1, 3);
  c.sc2_pct = Rational(1);
  c.sc3_pct = Rational(1, 2);
  c.sc1_label = CompletenessLabel::kBetter;
  c.final_pct = final_pct;
  if (final_pct) {
    c.final_label = FinalLabel(*final_pct);
  } else {
    c.sc11_pct = Rational(2, 3);
    c.sc1_label = CompletenessLabel::kIncomplete;
    c.final_label = QualityLabel::kLow;
    c.gate_failures = {"SC1.1b"};
  }
  return c;
}

AnswerSheet Answered(std::initializer_list<std::pair<const char*, const char*>> given) {
  AnswerSheet s{"42", {}};
  for (const auto& def : FR().checks) {
    s.entries[def.id].value =
        def.metric == MetricKind::kThreeOption ? Answer::Level(2)
        : def.metric == MetricKind::kPercentage ? Answer::Percent(Rational(1))
                                                : Answer::Yes();
  }
  for (const auto& [id, text] : given) s.entries[id].value = ParseAnswer(*FR().Find(id), text);
  return s;
}

Requirement Req() {
  Requirement r;
  r.id = "42";
  r.summary = "Option to load images only on click";
  return r;
}

}  // namespace

TEST_CASE("markdown card for a scored request") {
  AnswerSheet s = Answered({{"SC1.3a", "yes"}, {"SC1.3b", "no"}, {"SC1.3c", "no"},
                            {"SC2.2", "80%"}, {"SC3.1", "yes"}, {"SC3.2", "a few"},
                            {"SC3.3", "a little bit"}, {"SC3.4", "no"}, {"SC3.5", "very much"},
                            {"SC3.6", "yes"}, {"SC3.7", "yes"}, {"SC3.8", "not at all"},
                            {"SC3.9", "yes"}, {"SC3.10", "no"}});
  s.entries["SC3.10"].evidence = std::string(300, 'x');
  s.entries["SC3.10"].provenance = Provenance::kAutomatic;
  const ScoreCard card = FinalScore(s, FR());
  const Requirement r = Req();
  const std::string md = RenderScorecard({&r, &s, &FR(), &card}, ReportFormat::kMarkdown);
  CHECK(md.find("58.7% (44/75) \xE2\x80\x94 MEDIUM") != std::string::npos);
  CHECK(md.find("SC1: BETTER") != std::string::npos);
  for (const auto& def : FR().checks) CHECK(md.find("| " + def.id + " ") != std::string::npos);
  CHECK(md.find(std::string(201, 'x')) == std::string::npos);
  CHECK(md.find(std::string(150, 'x')) != std::string::npos);
  CHECK(md.find("automatic") != std::string::npos);
}

TEST_CASE("markdown card for a gated request") {
  const AnswerSheet s = Answered({{"SC1.1b", "no"}});
  const ScoreCard card = FinalScore(s, FR());
  const Requirement r = Req();
  const std::string md = RenderScorecard({&r, &s, &FR(), &card}, ReportFormat::kMarkdown);
  CHECK(md.find("SC1: INCOMPLETE \xE2\x86\x92 final: LOW") != std::string::npos);
  CHECK(md.find("SC1.1b") != std::string::npos);
  CHECK(md.find("Product and Version") != std::string::npos);
}

TEST_CASE("structured reports round-trip") {
  testgen::Rng rng(8);
  std::vector<Requirement> reqs;
  std::vector<AnswerSheet> sheets;
  for (int i = 0; i < 30; ++i) {
    reqs.push_back(Req());
    reqs.back().id = "r" + std::to_string(i);
    sheets.push_back(testgen::RandomSheet(FR(), reqs.back().id, rng, 0.2));
    sheets.back().entries["SC3.4"].evidence = std::string(400, 'e') + " \xE2\x9C\x93";
    sheets.back().entries["SC3.3"].provenance = Provenance::kAssisted;
  }
  std::vector<ScoreCard> cards;
  for (const auto& s : sheets) cards.push_back(FinalScore(s, FR()));
  std::vector<ScoredRequirement> items;
  for (std::size_t i = 0; i < reqs.size(); ++i) items.push_back({&reqs[i], &sheets[i], &FR(), &cards[i]});

  const std::string doc = RenderReport(items, ReportFormat::kStructured);
  const auto parsed = ParseStructuredReport(doc);
  REQUIRE(parsed.size() == reqs.size());
  for (std::size_t i = 0; i < reqs.size(); ++i) {
    CHECK(parsed[i].sheet == sheets[i]);
    CHECK(parsed[i].card == cards[i]);
  }
  CHECK(doc.find("\"schema_version\"") != std::string::npos);
  const auto single = ParseStructuredReport(RenderScorecard(items[0], ReportFormat::kStructured));
  REQUIRE(single.size() == 1);
  CHECK(single[0].card == cards[0]);
  CHECK_THROWS_AS(ParseStructuredReport("{\"schema_version\": 99, \"reports\": []}"), Error);
  CHECK_THROWS_AS(ParseStructuredReport("[1,"), Error);
}

TEST_CASE("summary distribution") {
  std::vector<ScoreCard> cards;
  for (int i = 0; i < 3; ++i) cards.push_back(Card("low" + std::to_string(i), Rational(1, 2)));
  for (int i = 0; i < 5; ++i) cards.push_back(Card("mid" + std::to_string(i), Rational(3, 5)));
  for (int i = 0; i < 2; ++i) cards.push_back(Card("high" + std::to_string(i), Rational(4, 5)));
  const std::string text = RenderCorpusSummary(cards);
  CHECK(text.find("LOW 3 (30.0%)") != std::string::npos);
  CHECK(text.find("MEDIUM 5 (50.0%)") != std::string::npos);
  CHECK(text.find("HIGH 2 (20.0%)") != std::string::npos);
  CHECK_THROWS_AS(RenderCorpusSummary({}), Error);
}

TEST_CASE("summary of gated cards lists gate reasons") {
  const std::vector<ScoreCard> cards = {Card("b", std::nullopt), Card("a", std::nullopt)};
  const std::string text = RenderCorpusSummary(cards);
  CHECK(text.find("LOW 2 (100.0%)") != std::string::npos);
  CHECK(text.find("SC1.1b") != std::string::npos);
  CHECK(text.find("a") < text.find("b:"));
}

TEST_CASE("summary of one card shows its figures") {
  const std::string text = RenderCorpusSummary({Card("only", Rational(44, 75))});
  CHECK(text.find("MEDIUM 1 (100.0%)") != std::string::npos);
  CHECK(text.find("58.7%") != std::string::npos);
  CHECK(text.find("33.3%") != std::string::npos);
}

TEST_CASE("worst ranking is stable") {
  const std::vector<ScoreCard> cards = {Card("c", Rational(1, 2)), Card("z", std::nullopt),
                                        Card("a", Rational(1, 2)), Card("b", Rational(1, 4)),
                                        Card("y", std::nullopt)};
  std::vector<std::string> order;
  for (const ScoreCard* c : RankWorst(cards)) order.push_back(c->requirement_id);
  CHECK(order == std::vector<std::string>{"y", "z", "b", "a", "c"});
  SummaryOptions two;
  two.worst = 2;
  const std::string text = RenderCorpusSummary(cards, two);
  CHECK(text.find("b:") == std::string::npos);
}

TEST_CASE("formatting helpers") {
  CHECK(FormatScore(Rational(44, 75)) == "58.7% (44/75)");
  CHECK(ParseReportFormat("markdown") == ReportFormat::kMarkdown);
  CHECK(ParseReportFormat("structured") == ReportFormat::kStructured);
  CHECK_FALSE(ParseReportFormat("html"));
}
