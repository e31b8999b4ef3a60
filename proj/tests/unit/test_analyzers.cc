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

#include "doctest.h"
#include "generators.h"
#include "labels.h"
#include "reqlint/analyzers.h"
#include "reqlint/error.h"

using namespace reqlint;

namespace {

const Checklist& FR() {
  static const Checklist c = BuildChecklist(RequirementKind::kFeatureRequest, {}, {});
  return c;
}

const Checklist& US() {
  static const Checklist c = BuildChecklist(RequirementKind::kUserStory, {}, {});
  return c;
}

std::optional<Answer> ValueOf(const AutoFindings& f, const std::string& id) {
  const AnswerEntry* e = f.sheet.Find(id);
  return e ? e->value : std::nullopt;
}

std::string NoteFor(const AutoFindings& f, const std::string& id) {
  for (const auto& n : f.notes) {
    if (n.check_id == id) return n.evidence;
  }
  return "";
}

Requirement Request() {
  Requirement r;
  r.id = "1";
  r.summary = "Add keyboard shortcut for search";
  r.description = "Please add a keyboard shortcut that focuses the search field.";
  r.product = "Bugzilla";
  r.version = "4.4";
  r.importance = Importance{"P3", std::nullopt, std::nullopt};
  return r;
}

Comment Says(std::string body) { return Comment{"someone", std::move(body), std::nullopt, {}, {}}; }

}  // namespace

TEST_CASE("field presence checks") {
  const AutoFindings f = AnalyzeCompleteness(Request(), FR());
  CHECK(ValueOf(f, "SC1.1a") == Answer::Yes());
  CHECK(ValueOf(f, "SC1.1b") == Answer::Yes());
  CHECK(ValueOf(f, "SC1.1c") == Answer::Yes());
  CHECK(ValueOf(f, "SC1.2a") == Answer::No());
  CHECK(ValueOf(f, "SC1.3b") == Answer::No());

  Requirement bare = Request();
  bare.version.reset();
  bare.importance.reset();
  const AutoFindings g = AnalyzeCompleteness(bare, FR());
  CHECK(ValueOf(g, "SC1.1b") == Answer::No());
  CHECK(ValueOf(g, "SC1.1c") == Answer::No());
}

TEST_CASE("importance is a disjunction") {
  Requirement r = Request();
  r.importance = Importance{"P2", std::nullopt, 4};
  CHECK(ValueOf(AnalyzeCompleteness(r, FR()), "SC1.1c") == Answer::Yes());
  r.importance->priority.reset();
  CHECK(ValueOf(AnalyzeCompleteness(r, FR()), "SC1.1c") == Answer::Yes());
  r.importance = Importance{std::nullopt, "normal", std::nullopt};
  CHECK(ValueOf(AnalyzeCompleteness(r, FR()), "SC1.1c") == Answer::Yes());
}

TEST_CASE("source links only count for implemented requests") {
  Requirement r = Request();
  const AutoFindings open = AnalyzeCompleteness(r, FR());
  CHECK(ValueOf(open, "SC1.2c") == Answer::NotApplicable());
  CHECK(NoteFor(open, "SC1.2c").find("not yet implemented") != std::string::npos);
  r.resolution = "FIXED";
  CHECK(ValueOf(AnalyzeCompleteness(r, FR()), "SC1.2c") == Answer::No());
  r.code_links = {"https://hg.example.org/rev/abc"};
  CHECK(ValueOf(AnalyzeCompleteness(r, FR()), "SC1.2c") == Answer::Yes());
  r.resolution = "WONTFIX";
  CHECK(ValueOf(AnalyzeCompleteness(r, FR()), "SC1.2c") == Answer::NotApplicable());
}

TEST_CASE("optional elements") {
  Requirement r = Request();
  r.attachments = {{"mockup.png", MediaKind::kMockup}};
  r.description += " Steps:\n1. open the page\n2. press the key";
  const AutoFindings f = AnalyzeCompleteness(r, FR());
  CHECK(ValueOf(f, "SC1.3a") == Answer::Yes());
  CHECK(ValueOf(f, "SC1.3b") == Answer::Yes());
  CHECK(ValueOf(f, "SC1.3c") == Answer::No());
  r.attachments.push_back({"fix.diff", MediaKind::kPatch});
  CHECK(ValueOf(AnalyzeCompleteness(r, FR()), "SC1.3c") == Answer::Yes());
  r.attachments.pop_back();
  r.comments = {Says("We could bind it to Ctrl+K in the toolbar code.")};
  CHECK(ValueOf(AnalyzeCompleteness(r, FR()), "SC1.3c") == Answer::Yes());
}

TEST_CASE("rationale detection") {
  Requirement r = Request();
  CHECK(ValueOf(AnalyzeCompleteness(r, FR()), "SC1.2b") == Answer::No());
  r.description += " It would save time because I search all day.";
  CHECK(ValueOf(AnalyzeCompleteness(r, FR()), "SC1.2b") == Answer::Yes());
  Requirement with_field = Request();
  with_field.rationale = "Power users live on the keyboard.";
  CHECK(ValueOf(AnalyzeCompleteness(with_field, FR()), "SC1.2b") == Answer::Yes());
}

TEST_CASE("user-story fields") {
  Requirement s;
  s.id = "US";
  s.kind = RequirementKind::kUserStory;
  s.summary = "As a registered user, I can reset my password so that I can regain access";
  s.description = "Password reset by mail.";
  s.story = StoryRecord{"registered user", "reset my password", "regain access", {}};
  const AutoFindings f = AnalyzeCompleteness(s, US());
  CHECK(ValueOf(f, "SC1.1'") == Answer::Yes());
  CHECK(ValueOf(f, "SC1.2'") == Answer::No());
  CHECK_FALSE(f.sheet.Find("SC1.1a"));
  s.story->acceptance_criteria = {"a reset mail arrives within a minute"};
  CHECK(ValueOf(AnalyzeCompleteness(s, US()), "SC1.2'") == Answer::Yes());
}

TEST_CASE("checklist kind must match the requirement") {
  try {
    AnalyzeCompleteness(Request(), US());
    FAIL("expected ChecklistKindMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kChecklistKindMismatch);
  }
}

TEST_CASE("social and administrative comments are irrelevant") {
  const AnalyzerConfig config;
  CHECK(IsIrrelevantComment("I am sorry for losing the votes.", config));
  CHECK(IsIrrelevantComment("Wooo! Party :) thanks!", config));
  CHECK(IsIrrelevantComment("+1", config));
  CHECK(IsIrrelevantComment("Any update on this?", config));
  CHECK(IsIrrelevantComment("> the dialog should close\n\nthanks!", config));
  CHECK_FALSE(IsIrrelevantComment("Thanks, but the dialog must also close on Escape.", config));
  CHECK_FALSE(IsIrrelevantComment("The patch breaks the sidebar layout on small screens.", config));
  std::string reason;
  CHECK(IsIrrelevantComment("Thanks!", config, &reason));
  CHECK_FALSE(reason.empty());
}

TEST_CASE("comment share: 8 comments, 2 social") {
  Requirement r = Request();
  r.comments = {Says("Confirmed on the current release."),
                Says("Thanks!"),
                Says("The shortcut collides with the bookmark dialog."),
                Says("Could we make it configurable in the preferences?"),
                Says("+1"),
                Says("A patch is attached for review."),
                Says("Review: the key handler needs a test."),
                Says("Landed, verified on the nightly build.")};
  const auto c = ClassifyComments(r);
  CHECK(c.relevant_share == Rational(3, 4));
  CHECK(std::count(c.relevant.begin(), c.relevant.end(), false) == 2);
  CHECK_FALSE(c.relevant[1]);
  CHECK_FALSE(c.relevant[4]);
  r.comments.clear();
  CHECK(ClassifyComments(r).relevant_share == Rational(1));
}

TEST_CASE("summary consistency") {
  Corpus corpus;
  Requirement r = Request();
  r.description = "A keyboard shortcut would make search faster; shortcuts for searching "
                  "are common in other tools.";
  corpus.requirements = {r};
  CHECK(ValueOf(AnalyzeCorrectness(r, corpus, FR()), "SC3.6") == Answer::Yes());
  r.description = "The toolbar colours are hard to read in the dark theme.";
  corpus.requirements = {r};
  CHECK(ValueOf(AnalyzeCorrectness(r, corpus, FR()), "SC3.6") == Answer::No());
}

TEST_CASE("atomicity") {
  Corpus corpus;
  Requirement r = Request();
  corpus.requirements = {r};
  CHECK(ValueOf(AnalyzeCorrectness(r, corpus, FR()), "SC3.7") == Answer::Yes());
  r.summary = "Add keyboard shortcut for search and remove the print button";
  corpus.requirements = {r};
  CHECK(ValueOf(AnalyzeCorrectness(r, corpus, FR()), "SC3.7") == Answer::No());
}

TEST_CASE("navigable references") {
  Corpus corpus;
  Requirement a = Request();
  Requirement b = Request();
  b.id = "2";
  b.summary = "Remember window size";
  b.description = "The window should reopen at its last size.";
  a.comments = {Says("See #2 for the related request.")};
  corpus.requirements = {a, b};
  CHECK(ValueOf(AnalyzeCorrectness(a, corpus, FR()), "SC3.10") == Answer::Yes());

  a.comments = {Says("Blocked by #9999.")};
  corpus.requirements = {a, b};
  const AutoFindings dangling = AnalyzeCorrectness(a, corpus, FR());
  CHECK(ValueOf(dangling, "SC3.10") == Answer::No());
  CHECK(NoteFor(dangling, "SC3.10").find("dangling reference #9999") != std::string::npos);

  a.comments = {Says("This is like bug 2 in a way.")};
  corpus.requirements = {a, b};
  CHECK(ValueOf(AnalyzeCorrectness(a, corpus, FR()), "SC3.10") == Answer::No());
  const ReferenceScan scan = ScanReferences(a);
  CHECK(scan.bare.size() == 1);
}

TEST_CASE("duplicates must be linked") {
  Corpus corpus;
  Requirement a = Request();
  Requirement b = Request();
  b.id = "2";
  b.summary = "Add a keyboard shortcut for search";
  corpus.requirements = {a, b};
  CHECK(ValueOf(AnalyzeCorrectness(a, corpus, FR()), "SC3.9") == Answer::No());
  corpus.requirements[1].duplicate_of = "1";
  CHECK(ValueOf(AnalyzeCorrectness(corpus.requirements[0], corpus, FR()), "SC3.9") == Answer::Yes());
  CHECK(ValueOf(AnalyzeCorrectness(corpus.requirements[1], corpus, FR()), "SC3.9") == Answer::Yes());
}

TEST_CASE("user voice") {
  CHECK(MatchesUserVoice("As a registered user, I can reset my password so that I can regain access"));
  CHECK(MatchesUserVoice("  As an admin, I want to export logs so that audits are easy.  "));
  CHECK_FALSE(MatchesUserVoice("Reset password via mail"));
  CHECK_FALSE(MatchesUserVoice("As a user, I can reset my password"));
}

TEST_CASE("language quality") {
  Corpus corpus;
  Requirement r = Request();
  r.description = "Please add a keyboard shortcut for the search field. It should work in "
                  "every window. The default key could be changed in the settings.";
  corpus.requirements = {r};
  text::Wordlist list;
  for (const auto& w : text::Words(r.summary + " " + r.description)) list.Add(w);
  CHECK(ValueOf(AnalyzeCorrectness(r, corpus, FR(), {}, &list), "SC3.3") == Answer::Level(2));
  r.description = "pls add shortcut  serch fild, window all , key chnge settngs";
  corpus.requirements = {r};
  CHECK(ValueOf(AnalyzeCorrectness(r, corpus, FR(), {}, &list), "SC3.3") == Answer::Level(0));
}

TEST_CASE("analyzer thresholds come from the [analyzer] section") {
  AnalyzerConfig config;
  ReadAnalyzerConfig(ParseKeyValue("[analyzer]\nsummary_overlap = 60%\n"
                                   "duplicate_similarity = 9/10\n"
                                   "comment_max_content_words = 4\n"
                                   "rationale_markers = why, since\n"),
                     "a.conf", &config);
  CHECK(config.summary_overlap == Rational(3, 5));
  CHECK(config.duplicate_similarity == Rational(9, 10));
  CHECK(config.comment_max_content_words == 4);
  CHECK(config.rationale_markers == std::vector<std::string>{"why", "since"});
  CHECK_THROWS_AS(ReadAnalyzerConfig(ParseKeyValue("[analyzer]\nbogus = 1\n"), "a", &config),
                  Error);
}

// ---------------------------------------------------------------------------

TEST_CASE("property: findings are sound and deterministic") {
  const Corpus corpus = testgen::SyntheticCorpus(400, 17);
  const AnalyzerConfig config;
  const CorpusContext context = BuildCorpusContext(corpus, config, nullptr);
  for (const auto& req : corpus.requirements) {
    const Checklist& checklist = req.kind == RequirementKind::kUserStory ? US() : FR();
    const AutoFindings f = AnalyzeRequirement(req, context, checklist, config);
    REQUIRE(f == AnalyzeRequirement(req, context, checklist, config));
    for (const auto& [id, entry] : f.sheet.entries) {
      const CheckDefinition* def = checklist.Find(id);
      REQUIRE(def != nullptr);
      REQUIRE(entry.provenance != Provenance::kManual);
      // Manual checks only ever get valueless hints (SC3.1 candidate links).
      if (def->automation == Automation::kManual) REQUIRE_FALSE(entry.value);
      if (entry.value) REQUIRE(AnswerMatchesMetric(*def, *entry.value));
    }
    for (const auto& note : f.notes) {
      const CheckDefinition* def = checklist.Find(note.check_id);
      REQUIRE(def != nullptr);
      if (def->automation == Automation::kAutomatic) {
        REQUIRE(note.confidence == Confidence::kCertain);
      } else {
        REQUIRE(note.confidence == Confidence::kHeuristic);
      }
    }
    // SC3.10 is yes exactly when nothing dangles and nothing is bare.
    const ReferenceScan scan = ScanReferences(req);
    bool clean = scan.bare.empty();
    for (const auto& t : scan.targets) clean = clean && context.ids.contains(t);
    REQUIRE((ValueOf(f, "SC3.10") == Answer::Yes()) == clean);
    // The comment share is the ratio of the per-comment labels.
    const auto c = ClassifyComments(req, config);
    REQUIRE(c.relevant.size() == req.comments.size());
    if (!req.comments.empty()) {
      const auto relevant = std::count(c.relevant.begin(), c.relevant.end(), true);
      REQUIRE(c.relevant_share ==
              Rational(relevant, static_cast<std::int64_t>(req.comments.size())));
    }
  }
}

TEST_CASE("property: removing priority keeps importance when votes remain") {
  testgen::Rng rng(1);
  for (int i = 0; i < 300; ++i) {
    Requirement r = testgen::RandomRequirement(rng, "p");
    r.kind = RequirementKind::kFeatureRequest;
    r.story.reset();
    if (!r.importance || !r.importance->votes) continue;
    const auto before = ValueOf(AnalyzeCompleteness(r, FR()), "SC1.1c");
    r.importance->priority.reset();
    REQUIRE(ValueOf(AnalyzeCompleteness(r, FR()), "SC1.1c") == before);
  }
}

TEST_CASE("hand-labeled feature requests") {
  const auto dir = testlabels::FixtureDir() / "analyzer";
  const auto tallies = testlabels::CompareWithLabels(dir / "feature_requests.json",
                                                     dir / "feature_requests.labels");
  for (const char* id : {"SC1.1a", "SC1.1b", "SC1.1c", "SC1.2a", "SC1.2c", "SC1.3b", "SC3.9",
                         "SC3.10"}) {
    const auto& t = tallies.at(id);
    INFO(id);
    CHECK(t.total == 15);
    CHECK(t.matched == 15);
  }
  for (const char* id : {"SC1.2b", "SC1.3a", "SC1.3c", "SC2.2", "SC3.3", "SC3.6", "SC3.7"}) {
    const auto& t = tallies.at(id);
    INFO(id);
    CHECK(t.total == 15);
    CHECK(t.matched >= 12);
  }
}

TEST_CASE("hand-labeled user stories") {
  const auto dir = testlabels::FixtureDir() / "analyzer";
  const auto tallies =
      testlabels::CompareWithLabels(dir / "user_stories.json", dir / "user_stories.labels");
  for (const char* id : {"SC1.1'", "SC1.2'", "SC2.3"}) {
    const auto& t = tallies.at(id);
    INFO(id);
    CHECK(t.total > 0);
    CHECK(t.matched == t.total);
  }
}
