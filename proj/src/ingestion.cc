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


// Bugzilla and GitHub payload parsing.

#include <algorithm>
#include <cctype>
#include <regex>

#include "json.hpp"

#include "reqlint/error.h"
#include "reqlint/ingestion.h"
#include "reqlint/keyvalue.h"

namespace reqlint {
namespace {

using nlohmann::json;

json ParsePayload(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kMalformedDocument,
                std::string(what) + " is not valid JSON: " + e.what());
  }
}

const json* Field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return nullptr;
  return &*it;
}

std::optional<std::string> OptString(const json& obj, const char* key,
                                     std::string_view context) {
  const json* v = Field(obj, key);
  if (!v) return std::nullopt;
  if (!v->is_string()) {
    throw Error(ErrorKind::kFieldTypeError,
                std::string(context) + ": field '" + key + "' must be a string");
  }
  return v->get<std::string>();
}

// Numeric or string identifiers, as trackers use both.
std::optional<std::string> OptId(const json& obj, const char* key, std::string_view context) {
  const json* v = Field(obj, key);
  if (!v) return std::nullopt;
  if (v->is_number_integer()) return std::to_string(v->get<std::int64_t>());
  if (v->is_string()) return v->get<std::string>();
  throw Error(ErrorKind::kFieldTypeError,
              std::string(context) + ": field '" + key + "' must be an integer or string");
}

std::optional<std::int64_t> OptInt(const json& obj, const char* key, std::string_view context) {
  const json* v = Field(obj, key);
  if (!v) return std::nullopt;
  if (!v->is_number_integer()) {
    throw Error(ErrorKind::kFieldTypeError,
                std::string(context) + ": field '" + key + "' must be an integer");
  }
  return v->get<std::int64_t>();
}

bool OptBool(const json& obj, const char* key, std::string_view context) {
  const json* v = Field(obj, key);
  if (!v) return false;
  if (v->is_boolean()) return v->get<bool>();
  if (v->is_number_integer()) return v->get<std::int64_t>() != 0;
  throw Error(ErrorKind::kFieldTypeError,
              std::string(context) + ": field '" + key + "' must be a boolean");
}

const json& RequireArray(const json& v, std::string_view context) {
  if (!v.is_array()) {
    throw Error(ErrorKind::kFieldTypeError, std::string(context) + " must be an array");
  }
  return v;
}

// Bugzilla fills unset fields with placeholders; treat them as absent.
std::optional<std::string> Meaningful(std::optional<std::string> value) {
  if (!value) return value;
  const std::string t = TrimCopy(*value);
  const std::string lower = ToLowerCopy(t);
  if (t.empty() || lower == "unspecified" || lower == "---" || lower == "--") {
    return std::nullopt;
  }
  return t;
}

bool IsWordChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

std::string PreviousWordLower(std::string_view text, std::size_t pos) {
  std::size_t end = pos;
  while (end > 0 && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::size_t start = end;
  while (start > 0 && std::isalpha(static_cast<unsigned char>(text[start - 1]))) --start;
  return ToLowerCopy(text.substr(start, end - start));
}

void AppendUnique(std::vector<std::string>& into, std::string value) {
  if (std::find(into.begin(), into.end(), value) == into.end()) {
    into.push_back(std::move(value));
  }
}

MediaKind ImageKind(std::string_view name) {
  return ToLowerCopy(name).find("mock") != std::string::npos ? MediaKind::kMockup
                                                              : MediaKind::kScreenshot;
}

struct TimedComment {
  Comment comment;
  std::int64_t id = 0;
  std::optional<std::int64_t> count;
};

void SortComments(std::vector<TimedComment>& comments) {
  std::stable_sort(comments.begin(), comments.end(),
                   [](const TimedComment& a, const TimedComment& b) {
                     const auto ta = a.comment.timestamp.value_or(Instant{});
                     const auto tb = b.comment.timestamp.value_or(Instant{});
                     if (ta != tb) return ta < tb;
                     return a.id < b.id;
                   });
}

std::optional<Instant> OptInstant(const json& obj, const char* key, std::string_view context) {
  const auto text = OptString(obj, key, context);
  if (!text) return std::nullopt;
  auto instant = Instant::Parse(*text);
  if (!instant) {
    throw Error(ErrorKind::kFieldTypeError, std::string(context) + ": field '" + key +
                                                "' is not a timestamp: " + *text);
  }
  return instant;
}

void FillCommentReferences(Comment& comment) {
  comment.referenced_ids = ExtractShortCodes(comment.body);
  comment.urls = ExtractUrls(comment.body);
}

}  // namespace

// ---------------------------------------------------------------------------
// Scanners

std::vector<std::string> ExtractShortCodes(std::string_view text) {
  std::vector<std::string> out;
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    if (text[pos] != '#') continue;
    if (pos > 0 && (IsWordChar(text[pos - 1]) || text[pos - 1] == '&' ||
                    text[pos - 1] == '/')) {
      continue;
    }
    std::size_t end = pos + 1;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos + 1 || (end < text.size() && IsWordChar(text[end]))) continue;
    const std::string prev = PreviousWordLower(text, pos);
    if (prev == "comment" || prev == "comments" || prev == "attachment" ||
        prev == "step" || prev == "item") {
      continue;
    }
    AppendUnique(out, std::string(text.substr(pos + 1, end - pos - 1)));
    pos = end - 1;
  }
  return out;
}

std::vector<std::string> ExtractUrls(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t http = text.find("http", pos);
    if (http == std::string_view::npos) break;
    const bool boundary = http == 0 || !IsWordChar(text[http - 1]);
    const std::string_view rest = text.substr(http);
    if (!boundary || !(rest.starts_with("http://") || rest.starts_with("https://"))) {
      pos = http + 4;
      continue;
    }
    std::size_t end = http;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) &&
           std::string_view(")>]\"'").find(text[end]) == std::string_view::npos) {
      ++end;
    }
    while (end > http && std::string_view(".,;:!?").find(text[end - 1]) != std::string_view::npos) {
      --end;
    }
    AppendUnique(out, std::string(text.substr(http, end - http)));
    pos = end;
  }
  return out;
}

std::vector<std::string> ExtractCodeLinks(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& url : ExtractUrls(text)) {
    for (std::string_view marker : {"/rev/", "/commit/", "/commits/", "/changeset/",
                                    "/pull/", "/merge_requests/", "?rev=", "&rev="}) {
      if (url.find(marker) != std::string::npos) {
        AppendUnique(out, url);
        break;
      }
    }
  }
  static const std::regex kRevision(R"(\bcommitted\s+(?:revision\s+|as\s+|in\s+)?r?(\d{2,})\b)",
                                    std::regex::icase);
  static const std::regex kHash(
      R"(\b(?:fixed|landed|implemented|resolved|closed|committed)\s+(?:in|by|as)\s+(?:commit\s+)?([0-9a-f]{7,40})\b)",
      std::regex::icase);
  const std::string s(text);
  for (auto it = std::sregex_iterator(s.begin(), s.end(), kRevision); it != std::sregex_iterator();
       ++it) {
    AppendUnique(out, "r" + (*it)[1].str());
  }
  for (auto it = std::sregex_iterator(s.begin(), s.end(), kHash); it != std::sregex_iterator();
       ++it) {
    const std::string hash = ToLowerCopy((*it)[1].str());
    // Pure digits are more likely a bug number than a commit.
    if (std::any_of(hash.begin(), hash.end(), [](char c) { return c >= 'a'; })) {
      AppendUnique(out, hash);
    }
  }
  return out;
}

std::optional<std::string> ExtractDuplicateMarker(std::string_view text) {
  static const std::regex kMarker(R"(\bduplicate\s+of\s+#(\d+))", std::regex::icase);
  std::smatch m;
  const std::string s(text);
  if (std::regex_search(s, m, kMarker)) return m[1].str();
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Bugzilla

ParsedRequirement ParseBugzilla(std::string_view bug_json, std::string_view comments_json,
                                std::optional<std::string_view> attachments_json) {
  const json bug_doc = ParsePayload(bug_json, "bug document");
  const json* bug = &bug_doc;
  if (bug_doc.is_object() && bug_doc.contains("bugs")) {
    const json& bugs = bug_doc["bugs"];
    if (!bugs.is_array() || bugs.empty()) {
      throw Error(ErrorKind::kMalformedDocument, "bug document has no bugs");
    }
    bug = &bugs[0];
  }
  if (!bug->is_object()) {
    throw Error(ErrorKind::kMalformedDocument, "bug document is not an object");
  }
  const auto id = OptId(*bug, "id", "bug");
  if (!id) throw Error(ErrorKind::kMalformedDocument, "bug document has no id");
  const std::string ctx = "bug " + *id;
  const auto summary = OptString(*bug, "summary", ctx);
  if (!summary) throw Error(ErrorKind::kMalformedDocument, ctx + " has no summary");

  ParsedRequirement out;
  Requirement& req = out.requirement;
  req.id = *id;
  req.kind = RequirementKind::kFeatureRequest;
  req.summary = *summary;
  req.product = Meaningful(OptString(*bug, "product", ctx));
  req.version = Meaningful(OptString(*bug, "version", ctx));
  req.status = Meaningful(OptString(*bug, "status", ctx));
  req.resolution = Meaningful(OptString(*bug, "resolution", ctx));
  req.duplicate_of = OptId(*bug, "dupe_of", ctx);
  req.source.tracker = TrackerKind::kBugzilla;

  Importance importance;
  importance.priority = Meaningful(OptString(*bug, "priority", ctx));
  const auto severity_raw = OptString(*bug, "severity", ctx);
  importance.severity = Meaningful(severity_raw);
  if (const auto votes = OptInt(*bug, "votes", ctx)) {
    importance.votes = static_cast<std::uint64_t>(std::max<std::int64_t>(0, *votes));
  }
  if (importance.priority || importance.severity || importance.votes) req.importance = importance;
  if (!severity_raw || ToLowerCopy(*severity_raw) != "enhancement") {
    out.warnings.push_back(ctx + ": severity is '" + severity_raw.value_or("") +
                           "', not 'enhancement'; ingested as a feature request anyway");
  }

  if (const json* kw = Field(*bug, "keywords")) {
    for (const auto& k : RequireArray(*kw, ctx + ": keywords")) {
      if (!k.is_string()) {
        throw Error(ErrorKind::kFieldTypeError, ctx + ": keywords must be strings");
      }
      const std::string t = TrimCopy(k.get<std::string>());
      if (!t.empty()) req.keywords.push_back(t);
    }
  }

  // Comments: {"bugs":{"<id>":{"comments":[...]}}}, {"comments":[...]} or [...].
  const json comments_doc = ParsePayload(comments_json, "comment document");
  const json* list = &comments_doc;
  if (comments_doc.is_object()) {
    if (const json* bugs = Field(comments_doc, "bugs")) {
      if (!bugs->is_object() || bugs->empty()) {
        throw Error(ErrorKind::kMalformedDocument, ctx + ": comment document has no bugs");
      }
      const json& entry = bugs->contains(*id) ? (*bugs)[*id] : bugs->begin().value();
      list = Field(entry, "comments");
    } else {
      list = Field(comments_doc, "comments");
    }
    if (!list) throw Error(ErrorKind::kMalformedDocument, ctx + ": no comment list");
  }
  std::vector<TimedComment> comments;
  for (const auto& c : RequireArray(*list, ctx + ": comments")) {
    if (!c.is_object()) throw Error(ErrorKind::kFieldTypeError, ctx + ": comment is not an object");
    TimedComment tc;
    tc.id = OptInt(c, "id", ctx).value_or(0);
    tc.count = OptInt(c, "count", ctx);
    tc.comment.body = OptString(c, "text", ctx).value_or("");
    tc.comment.author = OptString(c, "creator", ctx).value_or(OptString(c, "author", ctx).value_or(""));
    tc.comment.timestamp = OptInstant(c, "creation_time", ctx);
    comments.push_back(std::move(tc));
  }
  SortComments(comments);
  auto first = std::find_if(comments.begin(), comments.end(),
                            [](const TimedComment& c) { return c.count && *c.count == 0; });
  if (first == comments.end() && !comments.empty() &&
      std::none_of(comments.begin(), comments.end(), [](const TimedComment& c) { return c.count; })) {
    first = comments.begin();
  }
  if (first != comments.end()) {
    req.description = first->comment.body;
    comments.erase(first);
  }
  for (auto& tc : comments) {
    if (TrimCopy(tc.comment.body).empty()) {
      out.warnings.push_back(ctx + ": skipped an empty comment");
      continue;
    }
    FillCommentReferences(tc.comment);
    for (auto& link : ExtractCodeLinks(tc.comment.body)) AppendUnique(req.code_links, link);
    req.comments.push_back(std::move(tc.comment));
  }
  for (auto& link : ExtractCodeLinks(req.description)) {
    AppendUnique(req.code_links, link);
  }

  if (attachments_json) {
    const json doc = ParsePayload(*attachments_json, "attachment document");
    const json* items = &doc;
    if (doc.is_object()) {
      const json* bugs = Field(doc, "bugs");
      if (!bugs || !bugs->is_object()) {
        throw Error(ErrorKind::kMalformedDocument, ctx + ": attachment document has no bugs");
      }
      items = bugs->contains(*id) ? &(*bugs)[*id] : nullptr;
    }
    if (items) {
      for (const auto& a : RequireArray(*items, ctx + ": attachments")) {
        if (!a.is_object()) {
          throw Error(ErrorKind::kFieldTypeError, ctx + ": attachment is not an object");
        }
        Attachment att;
        att.name = OptString(a, "file_name", ctx).value_or(OptString(a, "summary", ctx).value_or(""));
        const std::string type = ToLowerCopy(OptString(a, "content_type", ctx).value_or(""));
        if (OptBool(a, "is_patch", ctx)) {
          att.kind = MediaKind::kPatch;
        } else if (type.starts_with("image/")) {
          att.kind = ImageKind(att.name + " " + OptString(a, "summary", ctx).value_or(""));
        } else {
          att.kind = MediaKind::kOther;
        }
        req.attachments.push_back(std::move(att));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// GitHub

namespace {

void AddMarkdownImages(std::string_view text, std::vector<Attachment>& out) {
  static const std::regex kImage(R"(!\[([^\]]*)\]\(([^)\s]+)[^)]*\))");
  const std::string s(text);
  for (auto it = std::sregex_iterator(s.begin(), s.end(), kImage); it != std::sregex_iterator();
       ++it) {
    std::string name = TrimCopy((*it)[1].str());
    const std::string url = (*it)[2].str();
    if (name.empty()) {
      const auto slash = url.find_last_of('/');
      name = slash == std::string::npos ? url : url.substr(slash + 1);
    }
    Attachment att{name, ImageKind(name + " " + url)};
    if (std::find(out.begin(), out.end(), att) == out.end()) out.push_back(std::move(att));
  }
}

// "priority: high", "priority/high", "priority-high" -> "high".
std::optional<std::string> LabelValue(std::string_view label, std::string_view prefix) {
  const std::string lower = ToLowerCopy(label);
  if (!lower.starts_with(prefix) || lower.size() <= prefix.size()) return std::nullopt;
  const char sep = lower[prefix.size()];
  if (sep != ':' && sep != '/' && sep != '-' && sep != '=') return std::nullopt;
  std::string value = TrimCopy(label.substr(prefix.size() + 1));
  if (value.empty()) return std::nullopt;
  return value;
}

}  // namespace

ParsedRequirement ParseGithubIssue(std::string_view issue_json, std::string_view comments_json) {
  const json issue = ParsePayload(issue_json, "issue document");
  if (!issue.is_object()) {
    throw Error(ErrorKind::kMalformedDocument, "issue document is not an object");
  }
  const auto number = OptId(issue, "number", "issue");
  if (!number) throw Error(ErrorKind::kMalformedDocument, "issue document has no number");
  const std::string ctx = "issue " + *number;
  const auto title = OptString(issue, "title", ctx);
  if (!title) throw Error(ErrorKind::kMalformedDocument, ctx + " has no title");

  ParsedRequirement out;
  Requirement& req = out.requirement;
  req.id = *number;
  req.kind = RequirementKind::kFeatureRequest;
  req.summary = *title;
  req.description = OptString(issue, "body", ctx).value_or("");
  req.source.tracker = TrackerKind::kGithub;
  req.source.url = OptString(issue, "html_url", ctx);
  req.status = OptString(issue, "state", ctx);
  if (const auto reason = OptString(issue, "state_reason", ctx)) {
    if (*reason != "reopened") req.resolution = *reason;
  }
  if (Field(issue, "pull_request")) out.warnings.push_back(ctx + " is a pull request");

  if (const json* milestone = Field(issue, "milestone")) {
    if (!milestone->is_object()) {
      throw Error(ErrorKind::kFieldTypeError, ctx + ": milestone must be an object");
    }
    req.version = Meaningful(OptString(*milestone, "title", ctx));
  }
  if (const json* repo = Field(issue, "repository")) {
    if (repo->is_object()) req.product = OptString(*repo, "name", ctx);
  }
  if (!req.product) {
    if (const auto repo_url = OptString(issue, "repository_url", ctx)) {
      const auto slash = repo_url->find_last_of('/');
      if (slash != std::string::npos && slash + 1 < repo_url->size()) {
        req.product = repo_url->substr(slash + 1);
      }
    }
  }

  Importance importance;
  bool feature_label = false;
  if (const json* labels = Field(issue, "labels")) {
    for (const auto& l : RequireArray(*labels, ctx + ": labels")) {
      std::string name;
      if (l.is_string()) {
        name = l.get<std::string>();
      } else if (l.is_object()) {
        name = OptString(l, "name", ctx).value_or("");
      } else {
        throw Error(ErrorKind::kFieldTypeError, ctx + ": label must be a string or object");
      }
      name = TrimCopy(name);
      if (name.empty()) continue;
      req.keywords.push_back(name);
      const std::string lower = ToLowerCopy(name);
      if (lower.size() == 2 && lower[0] == 'p' && lower[1] >= '0' && lower[1] <= '4') {
        importance.priority = std::string(1, 'P') + lower[1];
      } else if (auto p = LabelValue(name, "priority")) {
        importance.priority = *p;
      } else if (auto s = LabelValue(name, "severity")) {
        importance.severity = *s;
      }
      if (lower == "enhancement" || lower == "feature" || lower == "feature request" ||
          lower == "feature-request" || lower == "type: feature") {
        feature_label = true;
      }
    }
  }
  if (const json* reactions = Field(issue, "reactions")) {
    if (!reactions->is_object()) {
      throw Error(ErrorKind::kFieldTypeError, ctx + ": reactions must be an object");
    }
    if (const auto total = OptInt(*reactions, "total_count", ctx)) {
      importance.votes = static_cast<std::uint64_t>(std::max<std::int64_t>(0, *total));
    }
  }
  if (importance.priority || importance.severity || importance.votes) req.importance = importance;
  if (!feature_label) {
    out.warnings.push_back(ctx + ": no enhancement or feature label; ingested as a feature request anyway");
  }

  const json comments_doc = ParsePayload(comments_json, "comment document");
  const json* list = &comments_doc;
  if (comments_doc.is_object()) list = Field(comments_doc, "comments");
  if (!list) throw Error(ErrorKind::kMalformedDocument, ctx + ": no comment list");
  std::vector<TimedComment> comments;
  for (const auto& c : RequireArray(*list, ctx + ": comments")) {
    if (!c.is_object()) throw Error(ErrorKind::kFieldTypeError, ctx + ": comment is not an object");
    TimedComment tc;
    tc.id = OptInt(c, "id", ctx).value_or(0);
    tc.comment.body = OptString(c, "body", ctx).value_or("");
    if (const json* user = Field(c, "user"); user && user->is_object()) {
      tc.comment.author = OptString(*user, "login", ctx).value_or("");
    }
    tc.comment.timestamp = OptInstant(c, "created_at", ctx);
    comments.push_back(std::move(tc));
  }
  SortComments(comments);

  req.duplicate_of = ExtractDuplicateMarker(req.description);
  AddMarkdownImages(req.description, req.attachments);
  for (auto& link : ExtractCodeLinks(req.description)) AppendUnique(req.code_links, link);
  for (auto& tc : comments) {
    if (TrimCopy(tc.comment.body).empty()) {
      out.warnings.push_back(ctx + ": skipped an empty comment");
      continue;
    }
    if (!req.duplicate_of) req.duplicate_of = ExtractDuplicateMarker(tc.comment.body);
    AddMarkdownImages(tc.comment.body, req.attachments);
    for (auto& link : ExtractCodeLinks(tc.comment.body)) AppendUnique(req.code_links, link);
    FillCommentReferences(tc.comment);
    req.comments.push_back(std::move(tc.comment));
  }
  if (req.duplicate_of && *req.duplicate_of == req.id) req.duplicate_of.reset();
  return out;
}

ParsedRequirement ParseRawDocuments(TrackerKind tracker, const RawDocuments& docs) {
  switch (tracker) {
    case TrackerKind::kBugzilla:
      return docs.attachments ? ParseBugzilla(docs.main, docs.comments, *docs.attachments)
                              : ParseBugzilla(docs.main, docs.comments);
    case TrackerKind::kGithub:
      return ParseGithubIssue(docs.main, docs.comments);
    case TrackerKind::kNative:
      break;
  }
  throw Error(ErrorKind::kMalformedDocument, "native corpora are loaded, not fetched");
}

}  // namespace reqlint
