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


#include "generators.h"

#include <algorithm>
#include <array>
#include <string_view>

namespace testgen {

using reqlint::Answer;
using reqlint::AnswerEntry;
using reqlint::AnswerSheet;
using reqlint::CheckDefinition;
using reqlint::CheckGroup;
using reqlint::Checklist;
using reqlint::MetricKind;
using reqlint::Rational;

namespace {

int Uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool Chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <typename T, std::size_t N>
const T& Pick(Rng& rng, const std::array<T, N>& items) {
  return items[static_cast<std::size_t>(Uniform(rng, 0, static_cast<int>(N) - 1))];
}

bool IsGateGroup(CheckGroup group) {
  return group == CheckGroup::kSC11 || group == CheckGroup::kSC12;
}

AnswerSheet Fill(const Checklist& checklist, const std::string& id, Rng& rng,
                 double na_chance, bool ungated) {
  AnswerSheet sheet;
  sheet.requirement_id = id;
  for (const auto& check : checklist.checks) {
    Answer answer = RandomAnswer(check, rng, na_chance);
    if (ungated && IsGateGroup(check.group) && answer.type != Answer::Type::kNotApplicable) {
      answer = Answer::Yes();
    }
    sheet.entries[check.id] = AnswerEntry{answer, reqlint::Provenance::kManual, std::nullopt};
  }
  return sheet;
}

}  // namespace

Answer RandomAnswer(const CheckDefinition& check, Rng& rng, double na_chance) {
  if (Chance(rng, na_chance)) return Answer::NotApplicable();
  switch (check.metric) {
    case MetricKind::kBinary:
      return Chance(rng, 0.5) ? Answer::Yes() : Answer::No();
    case MetricKind::kThreeOption:
      return Answer::Level(Uniform(rng, 0, 2));
    case MetricKind::kPercentage: {
      const int den = Uniform(rng, 1, 12);
      return Answer::Percent(Rational(Uniform(rng, 0, den), den));
    }
  }
  return Answer::NotApplicable();
}

AnswerSheet RandomSheet(const Checklist& checklist, const std::string& id, Rng& rng,
                        double na_chance) {
  return Fill(checklist, id, rng, na_chance, false);
}

AnswerSheet UngatedSheet(const Checklist& checklist, const std::string& id, Rng& rng,
                         double na_chance) {
  return Fill(checklist, id, rng, na_chance, true);
}

AnswerSheet GatedSheet(const Checklist& checklist, const std::string& id, Rng& rng) {
  AnswerSheet sheet = Fill(checklist, id, rng, 0.1, false);
  std::vector<const CheckDefinition*> gate;
  for (const auto& check : checklist.checks) {
    if (IsGateGroup(check.group)) gate.push_back(&check);
  }
  const CheckDefinition& victim = *gate[static_cast<std::size_t>(
      Uniform(rng, 0, static_cast<int>(gate.size()) - 1))];
  Answer failing = Answer::No();
  if (victim.metric == MetricKind::kThreeOption) failing = Answer::Level(Uniform(rng, 0, 1));
  if (victim.metric == MetricKind::kPercentage) {
    const int den = Uniform(rng, 2, 10);
    failing = Answer::Percent(Rational(Uniform(rng, 0, den - 1), den));
  }
  sheet.entries[victim.id].value = failing;
  return sheet;
}

std::optional<Answer> ImproveOneStep(const CheckDefinition& check, const Answer& answer,
                                     Rng& rng) {
  switch (answer.type) {
    case Answer::Type::kNo:
      return Answer::Yes();
    case Answer::Type::kLevel:
      if (answer.level >= 2) return std::nullopt;
      return Answer::Level(answer.level + 1);
    case Answer::Type::kPercent: {
      if (answer.percent >= Rational(1)) return std::nullopt;
      const Rational gap = Rational(1) - answer.percent;
      const int den = Uniform(rng, 1, 8);
      return Answer::Percent(answer.percent + gap * Rational(Uniform(rng, 1, den), den));
    }
    default:
      (void)check;
      return std::nullopt;
  }
}

std::vector<oracle::Item> ToOracleItems(const AnswerSheet& sheet, const Checklist& checklist) {
  std::vector<oracle::Item> items;
  for (const auto& check : checklist.checks) {
    const AnswerEntry* entry = sheet.Find(check.id);
    const Answer& a = *entry->value;
    std::string text;
    switch (a.type) {
      case Answer::Type::kYes: text = "yes"; break;
      case Answer::Type::kNo: text = "no"; break;
      case Answer::Type::kNotApplicable: text = "n/a"; break;
      case Answer::Type::kLevel: text = check.levels[static_cast<std::size_t>(a.level)]; break;
      case Answer::Type::kPercent:
        text = std::to_string(a.percent.numerator()) + "/" +
               std::to_string(a.percent.denominator());
        break;
    }
    items.push_back({std::string(reqlint::ToString(check.group)), check.id, text});
  }
  return items;
}

bool SameAsOracle(const reqlint::ScoreCard& card, const oracle::Card& expected,
                  std::string* why) {
  auto eq = [](const Rational& r, oracle::Frac f) {
    return r.numerator() == f.num && r.denominator() == f.den;
  };
  auto fail = [&](std::string what) {
    if (why) *why = card.requirement_id + ": " + what;
    return false;
  };
  if (!eq(card.sc11_pct, expected.sc11)) return fail("sc11");
  if (!eq(card.sc12_pct, expected.sc12)) return fail("sc12");
  if (!eq(card.sc13_pct, expected.sc13)) return fail("sc13");
  if (!eq(card.sc2_pct, expected.sc2)) return fail("sc2");
  if (!eq(card.sc3_pct, expected.sc3)) return fail("sc3");
  if (reqlint::ToString(card.sc1_label) != expected.sc1_label) return fail("sc1 label");
  if (card.final_pct.has_value() != expected.final_pct.has_value()) return fail("final presence");
  if (card.final_pct && !eq(*card.final_pct, *expected.final_pct)) return fail("final pct");
  if (reqlint::ToString(card.final_label) != expected.final_label) return fail("final label");
  return true;
}

// ---------------------------------------------------------------------------
// Corpora

namespace {

constexpr std::array<std::string_view, 16> kAnyText = {
    "",        "plain",        "Ünïcödé ✓",    "tab\tand\nnewline", "quote \" and \\",
    "#12",     "日本語テキスト", "emoji 🚀",     "  padded  ",        "{\"json\": 1}",
    "<b>x</b>", "line1\r\nline2", "a = b",     "[section]",        "n/a",
    "100%"};

std::string AnyText(Rng& rng) {
  std::string out(Pick(rng, kAnyText));
  if (Chance(rng, 0.5)) out += " " + std::to_string(Uniform(rng, 0, 99999));
  return out;
}

std::string NonBlank(Rng& rng) {
  std::string out = AnyText(rng);
  return out.find_first_not_of(" \t\r\n") == std::string::npos ? "x" + out : out;
}

std::vector<std::string> Strings(Rng& rng, int max) {
  std::vector<std::string> out(static_cast<std::size_t>(Uniform(rng, 0, max)));
  for (auto& s : out) s = AnyText(rng);
  return out;
}

template <typename T>
std::optional<T> Maybe(Rng& rng, T value) {
  return Chance(rng, 0.5) ? std::optional<T>(std::move(value)) : std::nullopt;
}

}  // namespace

reqlint::Requirement RandomRequirement(Rng& rng, const std::string& id) {
  using namespace reqlint;
  Requirement r;
  r.id = id;
  r.kind = Chance(rng, 0.7) ? RequirementKind::kFeatureRequest : RequirementKind::kUserStory;
  r.summary = AnyText(rng);
  r.description = AnyText(rng);
  r.product = Maybe(rng, AnyText(rng));
  r.version = Maybe(rng, AnyText(rng));
  if (Chance(rng, 0.6)) {
    Importance imp;
    imp.priority = Maybe(rng, AnyText(rng));
    imp.severity = Maybe(rng, AnyText(rng));
    if (Chance(rng, 0.5)) {
      imp.votes = Chance(rng, 0.1) ? std::uint64_t{1} << 40
                                    : static_cast<std::uint64_t>(Uniform(rng, 0, 500));
    }
    r.importance = imp;
  }
  r.keywords = Strings(rng, 3);
  r.rationale = Maybe(rng, AnyText(rng));
  r.status = Maybe(rng, AnyText(rng));
  r.resolution = Maybe(rng, AnyText(rng));
  if (Chance(rng, 0.2)) r.duplicate_of = "other-" + std::to_string(Uniform(rng, 0, 9));
  r.code_links = Strings(rng, 2);
  const int attachments = Uniform(rng, 0, 3);
  for (int i = 0; i < attachments; ++i) {
    r.attachments.push_back(
        {AnyText(rng), static_cast<MediaKind>(Uniform(rng, 0, 3))});
  }
  std::int64_t clock = 1'200'000'000 + Uniform(rng, 0, 100'000'000);
  const int comments = Uniform(rng, 0, 5);
  for (int i = 0; i < comments; ++i) {
    Comment c;
    c.author = AnyText(rng);
    c.body = NonBlank(rng);
    if (Chance(rng, 0.8)) {
      clock += Uniform(rng, 0, 86'400);
      c.timestamp = Instant{clock};
    }
    c.referenced_ids = Strings(rng, 2);
    c.urls = Strings(rng, 2);
    r.comments.push_back(std::move(c));
  }
  if (r.kind == RequirementKind::kUserStory && Chance(rng, 0.8)) {
    r.story = StoryRecord{AnyText(rng), AnyText(rng), AnyText(rng), Strings(rng, 3)};
  }
  r.source.tracker = static_cast<TrackerKind>(Uniform(rng, 0, 2));
  r.source.url = Maybe(rng, "https://tracker.example/" + id);
  return r;
}

reqlint::Corpus RandomCorpus(Rng& rng, std::size_t size) {
  reqlint::Corpus corpus;
  for (std::size_t i = 0; i < size; ++i) {
    corpus.requirements.push_back(RandomRequirement(rng, "req-" + std::to_string(i)));
  }
  if (Chance(rng, 0.5)) {
    std::set<std::string> terms;
    for (const auto& s : Strings(rng, 4)) terms.insert(s);
    corpus.glossary_terms = terms;
  }
  return corpus;
}

namespace {

constexpr std::array<std::string_view, 12> kSubjects = {
    "bookmarks", "tabs", "downloads", "history", "passwords", "search bar",
    "reader view", "sidebar", "extensions", "notifications", "cookies", "printing"};
constexpr std::array<std::string_view, 8> kActions = {
    "sort", "export", "hide", "group", "synchronize", "preview", "filter", "restore"};
constexpr std::array<std::string_view, 6> kReasons = {
    "because I lose track of them after a restart",
    "so that I can work faster on a small screen",
    "in order to share them with my team",
    "which would save a lot of clicks every day",
    "since the current menu is hard to find",
    "to keep my work and private browsing apart"};
constexpr std::array<std::string_view, 10> kComments = {
    "+1",
    "Confirming on the latest nightly build with a clean profile.",
    "The patch needs a test before it can land.",
    "Wooo! Party :) thanks!",
    "We could reuse the existing context menu code for this.",
    "I am sorry for losing the votes.",
    "Marking as a duplicate would lose the discussion here.",
    "Any update on this?",
    "Steps: open the menu, pick the entry, confirm the dialog.",
    "This landed in the tree last week, see the changeset."};

}  // namespace

reqlint::Corpus SyntheticCorpus(std::size_t size, std::uint64_t seed) {
  using namespace reqlint;
  Rng rng(seed);
  Corpus corpus;
  corpus.glossary_terms = std::set<std::string>{"nightly", "changeset"};
  corpus.requirements.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    Requirement r;
    r.id = std::to_string(100000 + i);
    const std::string subject(Pick(rng, kSubjects));
    const std::string action(Pick(rng, kActions));
    r.summary = "Allow users to " + action + " " + subject;
    if (Chance(rng, 0.3)) r.summary += " by " + std::string(Pick(rng, kSubjects));
    r.description = "It should be possible to " + action + " the " + subject + " " +
                    std::string(Pick(rng, kReasons)) + ".";
    if (Chance(rng, 0.3)) {
      r.description += " For example, open the " + std::string(Pick(rng, kSubjects)) +
                       " and press the button.";
    }
    if (i > 0 && Chance(rng, 0.2)) {
      r.description += " Related to #" + std::to_string(100000 + Uniform(rng, 0, static_cast<int>(i) - 1)) + ".";
    }
    if (Chance(rng, 0.9)) r.product = "Firefox";
    if (Chance(rng, 0.8)) r.version = std::to_string(Uniform(rng, 10, 120));
    if (Chance(rng, 0.8)) {
      r.importance = Importance{"P" + std::to_string(Uniform(rng, 1, 5)), std::nullopt,
                                static_cast<std::uint64_t>(Uniform(rng, 0, 40))};
    }
    if (Chance(rng, 0.6)) r.keywords = {subject};
    if (Chance(rng, 0.7)) {
      r.status = "RESOLVED";
      r.resolution = "FIXED";
      if (Chance(rng, 0.8)) r.code_links = {"https://hg.example.org/rev/" + std::to_string(i)};
    }
    if (Chance(rng, 0.2)) r.attachments.push_back({"screenshot.png", MediaKind::kScreenshot});
    if (Chance(rng, 0.1)) r.attachments.push_back({"fix.diff", MediaKind::kPatch});
    if (i > 0 && Chance(rng, 0.05)) r.duplicate_of = std::to_string(100000 + i - 1);
    if (Chance(rng, 0.15)) {
      r.kind = RequirementKind::kUserStory;
      r.story = StoryRecord{"user", action + " " + subject, "work faster",
                            {"Given a list of " + subject + " when I " + action +
                             " them then the order is kept"}};
      r.summary = "As a user, I want to " + action + " " + subject +
                  " so that I can work faster";
    }
    std::int64_t clock = 1'300'000'000 + static_cast<std::int64_t>(i) * 1000;
    const int comments = Uniform(rng, 0, 10);
    for (int c = 0; c < comments; ++c) {
      clock += Uniform(rng, 60, 86'400);
      r.comments.push_back({"user" + std::to_string(Uniform(rng, 1, 50)),
                            std::string(Pick(rng, kComments)), Instant{clock}, {}, {}});
    }
    r.source.tracker = TrackerKind::kBugzilla;
    corpus.requirements.push_back(std::move(r));
  }
  return corpus;
}

}  // namespace testgen
