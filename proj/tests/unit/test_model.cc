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
#include "reqlint/model.h"

using namespace reqlint;

namespace {

Requirement Basic(std::string id) {
  Requirement r;
  r.id = std::move(id);
  r.summary = "Add a dark theme";
  r.description = "Please add a dark theme.";
  return r;
}

}  // namespace

TEST_CASE("enum names round-trip") {
  for (auto k : {RequirementKind::kFeatureRequest, RequirementKind::kUserStory}) {
    CHECK(ParseRequirementKind(ToString(k)) == k);
  }
  for (auto t : {TrackerKind::kBugzilla, TrackerKind::kGithub, TrackerKind::kNative}) {
    CHECK(ParseTrackerKind(ToString(t)) == t);
  }
  for (auto m : {MediaKind::kScreenshot, MediaKind::kMockup, MediaKind::kPatch, MediaKind::kOther}) {
    CHECK(ParseMediaKind(ToString(m)) == m);
  }
  CHECK_FALSE(ParseTrackerKind("jira"));
}

TEST_CASE("instants normalize to UTC seconds") {
  auto a = Instant::Parse("2013-01-05T10:00:00Z");
  auto b = Instant::Parse("2013-01-05T12:00:00.250+02:00");
  REQUIRE(a);
  REQUIRE(b);
  CHECK(*a == *b);
  CHECK(a->ToString() == "2013-01-05T10:00:00Z");
  CHECK(Instant::Parse("1970-01-01T00:00:00Z")->unix_seconds == 0);
  CHECK_FALSE(Instant::Parse("yesterday"));
  CHECK_FALSE(Instant::Parse("2013-13-01T00:00:00Z"));
}

TEST_CASE("a clean corpus has no violations") {
  Corpus corpus;
  corpus.requirements = {Basic("1"), Basic("2")};
  CHECK(ValidateCorpus(corpus).empty());
  CHECK(corpus.Find("2") == &corpus.requirements[1]);
  CHECK(corpus.Find("3") == nullptr);
}

TEST_CASE("structural violations are reported, not thrown") {
  Corpus corpus;
  corpus.requirements = {Basic(""), Basic("1"), Basic("1"), Basic("2"), Basic("3"), Basic("4")};
  corpus.requirements[3].duplicate_of = "2";
  corpus.requirements[4].story = StoryRecord{"user", "do", "value", {}};
  corpus.requirements[5].comments = {
      {"a", "first", Instant{200}, {}, {}},
      {"b", "   ", Instant{100}, {}, {}},
  };
  const Corpus before = corpus;
  const auto violations = ValidateCorpus(corpus);
  CHECK(corpus == before);
  std::vector<ViolationKind> kinds;
  for (const auto& v : violations) kinds.push_back(v.kind);
  CHECK(kinds == std::vector<ViolationKind>{
                     ViolationKind::kEmptyId, ViolationKind::kDuplicateId,
                     ViolationKind::kSelfDuplicate, ViolationKind::kStoryOnFeatureRequest,
                     ViolationKind::kEmptyCommentBody, ViolationKind::kCommentOrder});
}

TEST_CASE("dangling references are warnings") {
  Corpus corpus;
  corpus.requirements = {Basic("1"), Basic("2")};
  corpus.requirements[0].duplicate_of = "99";
  corpus.requirements[1].comments = {{"a", "see #1 and #77", std::nullopt, {"1", "77"}, {}}};
  const auto dangling = FindDanglingReferences(corpus);
  REQUIRE(dangling.size() == 2);
  CHECK(dangling[0] == DanglingReference{"1", "99", true});
  CHECK(dangling[1] == DanglingReference{"2", "77", false});
}
