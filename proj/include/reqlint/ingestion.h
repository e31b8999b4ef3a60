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


// Tracker payload parsing, fetching with a disk cache, and the native
// corpus file format.

#ifndef REQLINT_INGESTION_H_
#define REQLINT_INGESTION_H_

#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reqlint/model.h"

namespace reqlint {

struct ParsedRequirement {
  Requirement requirement;
  std::vector<std::string> warnings;
};

// `bug_json` is GET /rest/bug/{id} (a {"bugs":[...]} wrapper or the bare bug
// object), `comments_json` is GET /rest/bug/{id}/comment and the optional
// `attachments_json` is GET /rest/bug/{id}/attachment. The comment numbered
// 0 becomes the description. Throws kMalformedDocument or kFieldTypeError.
ParsedRequirement ParseBugzilla(std::string_view bug_json, std::string_view comments_json,
                                std::optional<std::string_view> attachments_json = {});

// `issue_json` is GET /repos/{owner}/{repo}/issues/{n}; `comments_json` the
// matching comment array.
ParsedRequirement ParseGithubIssue(std::string_view issue_json,
                                   std::string_view comments_json);

// Text scanners shared by both parsers.
std::vector<std::string> ExtractShortCodes(std::string_view text);  // "#12" -> "12"
std::vector<std::string> ExtractUrls(std::string_view text);
std::vector<std::string> ExtractCodeLinks(std::string_view text);
std::optional<std::string> ExtractDuplicateMarker(std::string_view text);

struct TrackerConfig {
  TrackerKind tracker = TrackerKind::kBugzilla;
  // Bugzilla: site root, e.g. https://bugzilla.mozilla.org
  // GitHub: repository API root, e.g. https://api.github.com/repos/o/r
  std::string base_url;
  std::optional<std::string> auth_token;
  int rate_limit = 60;  // requests per minute
};

// Throws kParseError for a base URL that is not absolute http(s) or a
// non-positive rate limit.
void ValidateTrackerConfig(const TrackerConfig& config);

// REQLINT_GITHUB_TOKEN or REQLINT_BUGZILLA_TOKEN, when set and non-empty.
std::optional<std::string> TokenFromEnvironment(TrackerKind tracker);

struct RawDocuments {
  std::string id;
  std::string main;         // bug or issue
  std::string comments;
  std::optional<std::string> attachments;  // Bugzilla only

  bool operator==(const RawDocuments&) const = default;
};

struct FetchFailure {
  std::string id;
  int status = 0;
  std::string message;
};

struct FetchResult {
  std::vector<RawDocuments> documents;  // in request order
  std::vector<FetchFailure> failures;
};

struct FetchOptions {
  std::optional<std::filesystem::path> cache_dir;
  bool offline = false;  // serve from cache only
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{1000};
  std::chrono::milliseconds timeout{30000};
  // Replaceable for tests.
  std::function<void(std::chrono::milliseconds)> sleep;
};

// Sequential, rate-limited GETs with retry on 5xx, 429 and connection
// errors. 404 and other client errors become per-id failures. Throws
// kAuthError on 401/403, kRateLimited when 429 persists and kHttpError when
// the server stays unreachable or keeps failing.
FetchResult FetchRequirements(const TrackerConfig& config,
                              const std::vector<std::string>& ids,
                              const FetchOptions& options = {});

ParsedRequirement ParseRawDocuments(TrackerKind tracker, const RawDocuments& docs);

// Native corpus file. SaveCorpus output reloads to an equal corpus and
// re-saves byte for byte.
inline constexpr int kCorpusSchemaVersion = 1;

std::string CorpusToJson(const Corpus& corpus);
// Throws kParseError (with line and column), kSchemaVersionError,
// kMalformedDocument or kFieldTypeError.
Corpus CorpusFromJson(std::string_view text, std::string_view source_name = "<corpus>");

Corpus LoadCorpus(const std::filesystem::path& path);
void SaveCorpus(const Corpus& corpus, const std::filesystem::path& path);

// Helpers for reading whole files; throw kIoError.
std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view contents);

}  // namespace reqlint

#endif  // REQLINT_INGESTION_H_
