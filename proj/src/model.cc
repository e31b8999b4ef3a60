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

#include "reqlint/model.h"

#include <cctype>
#include <chrono>
#include <cstdio>
#include <unordered_map>
#include <unordered_set>

namespace reqlint {

std::string_view ToString(RequirementKind kind) {
  switch (kind) {
    case RequirementKind::kFeatureRequest: return "feature-request";
    case RequirementKind::kUserStory: return "user-story";
  }
  return "feature-request";
}

std::string_view ToString(TrackerKind kind) {
  switch (kind) {
    case TrackerKind::kBugzilla: return "bugzilla";
    case TrackerKind::kGithub: return "github";
    case TrackerKind::kNative: return "native";
  }
  return "native";
}

std::string_view ToString(MediaKind kind) {
  switch (kind) {
    case MediaKind::kScreenshot: return "screenshot";
    case MediaKind::kMockup: return "mockup";
    case MediaKind::kPatch: return "patch";
    case MediaKind::kOther: return "other";
  }
  return "other";
}

std::optional<RequirementKind> ParseRequirementKind(std::string_view text) {
  if (text == "feature-request") return RequirementKind::kFeatureRequest;
  if (text == "user-story") return RequirementKind::kUserStory;
  return std::nullopt;
}

std::optional<TrackerKind> ParseTrackerKind(std::string_view text) {
  if (text == "bugzilla") return TrackerKind::kBugzilla;
  if (text == "github") return TrackerKind::kGithub;
  if (text == "native") return TrackerKind::kNative;
  return std::nullopt;
}

std::optional<MediaKind> ParseMediaKind(std::string_view text) {
  if (text == "screenshot") return MediaKind::kScreenshot;
  if (text == "mockup") return MediaKind::kMockup;
  if (text == "patch") return MediaKind::kPatch;
  if (text == "other") return MediaKind::kOther;
  return std::nullopt;
}

namespace {

bool ReadDigits(std::string_view text, std::size_t pos, std::size_t count,
                int* out) {
  if (pos + count > text.size()) return false;
  int value = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const char c = text[pos + i];
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    value = value * 10 + (c - '0');
  }
  *out = value;
  return true;
}

}  // namespace

std::optional<Instant> Instant::Parse(std::string_view text) {
  // YYYY-MM-DD[T ]HH:MM:SS[.fff][Z|+HH:MM|-HH:MM]
  int year, month, day, hour, minute, second;
  if (!ReadDigits(text, 0, 4, &year) || text.size() < 19 || text[4] != '-' ||
      !ReadDigits(text, 5, 2, &month) || text[7] != '-' ||
      !ReadDigits(text, 8, 2, &day) || (text[10] != 'T' && text[10] != ' ') ||
      !ReadDigits(text, 11, 2, &hour) || text[13] != ':' ||
      !ReadDigits(text, 14, 2, &minute) || text[16] != ':' ||
      !ReadDigits(text, 17, 2, &second)) {
    return std::nullopt;
  }
  std::size_t pos = 19;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }
  std::int64_t offset_seconds = 0;
  if (pos < text.size()) {
    if (text[pos] == 'Z') {
      ++pos;
    } else if (text[pos] == '+' || text[pos] == '-') {
      int off_h, off_m;
      if (!ReadDigits(text, pos + 1, 2, &off_h) || pos + 3 >= text.size() ||
          text[pos + 3] != ':' || !ReadDigits(text, pos + 4, 2, &off_m)) {
        return std::nullopt;
      }
      offset_seconds = (off_h * 3600 + off_m * 60) * (text[pos] == '+' ? 1 : -1);
      pos += 6;
    } else {
      return std::nullopt;
    }
  }
  if (pos != text.size()) return std::nullopt;
  if (month < 1 || month > 12 || hour > 23 || minute > 59 || second > 60) {
    return std::nullopt;
  }
  const std::chrono::year_month_day ymd{
      std::chrono::year{year}, std::chrono::month{static_cast<unsigned>(month)},
      std::chrono::day{static_cast<unsigned>(day)}};
  if (!ymd.ok()) return std::nullopt;
  const auto days = std::chrono::sys_days{ymd}.time_since_epoch().count();
  return Instant{static_cast<std::int64_t>(days) * 86400 + hour * 3600 +
                 minute * 60 + second - offset_seconds};
}

std::string Instant::ToString() const {
  std::int64_t days = unix_seconds / 86400;
  std::int64_t rem = unix_seconds % 86400;
  if (rem < 0) {
    rem += 86400;
    --days;
  }
  const std::chrono::year_month_day ymd{
      std::chrono::sys_days{std::chrono::days{days}}};
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02dZ",
                static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()), static_cast<int>(rem / 3600),
                static_cast<int>((rem % 3600) / 60), static_cast<int>(rem % 60));
  return buf;
}

const Requirement* Corpus::Find(std::string_view id) const {
  for (const auto& req : requirements) {
    if (req.id == id) return &req;
  }
  return nullptr;
}

std::string_view ToString(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kEmptyId: return "EmptyId";
    case ViolationKind::kDuplicateId: return "DuplicateId";
    case ViolationKind::kSelfDuplicate: return "SelfDuplicate";
    case ViolationKind::kStoryOnFeatureRequest: return "StoryOnFeatureRequest";
    case ViolationKind::kEmptyCommentBody: return "EmptyCommentBody";
    case ViolationKind::kCommentOrder: return "CommentOrder";
  }
  return "Unknown";
}

namespace {

bool IsBlank(std::string_view text) {
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::vector<StructuralViolation> ValidateCorpus(const Corpus& corpus) {
  std::vector<StructuralViolation> out;
  std::unordered_map<std::string, int> seen;
  for (const auto& req : corpus.requirements) {
    if (req.id.empty()) {
      out.push_back({ViolationKind::kEmptyId, req.id, "requirement without id"});
    } else if (++seen[req.id] == 2) {
      out.push_back({ViolationKind::kDuplicateId, req.id,
                     "id \"" + req.id + "\" used more than once"});
    }
    if (req.duplicate_of && *req.duplicate_of == req.id) {
      out.push_back({ViolationKind::kSelfDuplicate, req.id,
                     "duplicate_of points at the requirement itself"});
    }
    if (req.kind == RequirementKind::kFeatureRequest && req.story) {
      out.push_back({ViolationKind::kStoryOnFeatureRequest, req.id,
                     "story record on a feature request"});
    }
    const Instant* previous = nullptr;
    for (std::size_t i = 0; i < req.comments.size(); ++i) {
      const auto& comment = req.comments[i];
      if (IsBlank(comment.body)) {
        out.push_back({ViolationKind::kEmptyCommentBody, req.id,
                       "comment " + std::to_string(i + 1) + " has an empty body"});
      }
      if (comment.timestamp) {
        if (previous && *comment.timestamp < *previous) {
          out.push_back({ViolationKind::kCommentOrder, req.id,
                         "comment " + std::to_string(i + 1) +
                             " is older than its predecessor"});
        }
        previous = &*comment.timestamp;
      }
    }
  }
  return out;
}

std::vector<DanglingReference> FindDanglingReferences(const Corpus& corpus) {
  std::unordered_set<std::string> ids;
  for (const auto& req : corpus.requirements) ids.insert(req.id);

  std::vector<DanglingReference> out;
  for (const auto& req : corpus.requirements) {
    if (req.duplicate_of && !ids.contains(*req.duplicate_of)) {
      out.push_back({req.id, *req.duplicate_of, true});
    }
    for (const auto& comment : req.comments) {
      for (const auto& target : comment.referenced_ids) {
        if (!ids.contains(target)) out.push_back({req.id, target, false});
      }
    }
  }
  return out;
}

}  // namespace reqlint
