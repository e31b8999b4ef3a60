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

// Tracker-independent representation of feature requests and user stories.
//
// A Requirement carries everything the checks look at: the basic fields
// (summary, description, product, version, importance), the management
// fields (keywords, rationale, resolution, code links), optional elements
// (attachments), the comment thread and, for user stories, the structured
// role/activity/value record. Values are plain aggregates; once a corpus is
// built it is treated as immutable and shared read-only between workers.

#ifndef REQLINT_MODEL_H_
#define REQLINT_MODEL_H_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace reqlint {

enum class RequirementKind { kFeatureRequest, kUserStory };
enum class TrackerKind { kBugzilla, kGithub, kNative };
enum class MediaKind { kScreenshot, kMockup, kPatch, kOther };

std::string_view ToString(RequirementKind kind);
std::string_view ToString(TrackerKind kind);
std::string_view ToString(MediaKind kind);
std::optional<RequirementKind> ParseRequirementKind(std::string_view text);
std::optional<TrackerKind> ParseTrackerKind(std::string_view text);
std::optional<MediaKind> ParseMediaKind(std::string_view text);

// A UTC instant with one-second resolution. Textual form is always
// "YYYY-MM-DDTHH:MM:SSZ"; offsets and fractional seconds are accepted on
// input and normalized away.
struct Instant {
  std::int64_t unix_seconds = 0;

  static std::optional<Instant> Parse(std::string_view text);
  std::string ToString() const;

  friend auto operator<=>(const Instant&, const Instant&) = default;
};

struct Importance {
  std::optional<std::string> priority;
  std::optional<std::string> severity;
  std::optional<std::uint64_t> votes;

  bool operator==(const Importance&) const = default;
};

struct Attachment {
  std::string name;
  MediaKind kind = MediaKind::kOther;

  bool operator==(const Attachment&) const = default;
};

struct Comment {
  std::string author;
  std::string body;
  std::optional<Instant> timestamp;
  std::vector<std::string> referenced_ids;
  std::vector<std::string> urls;

  bool operator==(const Comment&) const = default;
};

struct StoryRecord {
  std::string role;
  std::string activity;
  std::string business_value;
  std::vector<std::string> acceptance_criteria;

  bool operator==(const StoryRecord&) const = default;
};

struct SourceInfo {
  TrackerKind tracker = TrackerKind::kNative;
  std::optional<std::string> url;

  bool operator==(const SourceInfo&) const = default;
};

struct Requirement {
  std::string id;
  RequirementKind kind = RequirementKind::kFeatureRequest;
  std::string summary;
  std::string description;
  std::optional<std::string> product;
  std::optional<std::string> version;
  std::optional<Importance> importance;
  std::vector<std::string> keywords;
  std::optional<std::string> rationale;
  std::optional<std::string> status;
  std::optional<std::string> resolution;
  std::optional<std::string> duplicate_of;
  std::vector<std::string> code_links;
  std::vector<Attachment> attachments;
  std::vector<Comment> comments;
  std::optional<StoryRecord> story;
  SourceInfo source;

  bool operator==(const Requirement&) const = default;
};

struct Corpus {
  std::vector<Requirement> requirements;
  std::optional<std::set<std::string>> glossary_terms;

  bool operator==(const Corpus&) const = default;

  // Linear scan; callers that look up repeatedly build their own index.
  const Requirement* Find(std::string_view id) const;
};

enum class ViolationKind {
  kEmptyId,
  kDuplicateId,
  kSelfDuplicate,
  kStoryOnFeatureRequest,
  kEmptyCommentBody,
  kCommentOrder,
};

std::string_view ToString(ViolationKind kind);

struct StructuralViolation {
  ViolationKind kind;
  std::string requirement_id;
  std::string detail;

  bool operator==(const StructuralViolation&) const = default;
};

// One entry per broken invariant, in corpus order. Never throws and never
// modifies the corpus.
std::vector<StructuralViolation> ValidateCorpus(const Corpus& corpus);

// Cross-references that do not resolve inside the corpus. These are
// warnings: an exported slice of a tracker routinely points outside itself.
struct DanglingReference {
  std::string requirement_id;
  std::string target_id;
  bool from_duplicate_of = false;

  bool operator==(const DanglingReference&) const = default;
};

std::vector<DanglingReference> FindDanglingReferences(const Corpus& corpus);

}  // namespace reqlint

#endif  // REQLINT_MODEL_H_
