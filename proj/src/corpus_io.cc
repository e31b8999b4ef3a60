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


// Native corpus file format.

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "reqlint/error.h"
#include "reqlint/ingestion.h"

namespace reqlint {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json StringArray(const std::vector<std::string>& items) {
  ordered_json out = ordered_json::array();
  for (const auto& item : items) out.push_back(item);
  return out;
}

ordered_json RequirementToJson(const Requirement& r) {
  ordered_json j;
  j["id"] = r.id;
  j["kind"] = std::string(ToString(r.kind));
  j["summary"] = r.summary;
  j["description"] = r.description;
  if (r.product) j["product"] = *r.product;
  if (r.version) j["version"] = *r.version;
  if (r.importance) {
    ordered_json imp = ordered_json::object();
    if (r.importance->priority) imp["priority"] = *r.importance->priority;
    if (r.importance->severity) imp["severity"] = *r.importance->severity;
    if (r.importance->votes) imp["votes"] = *r.importance->votes;
    j["importance"] = std::move(imp);
  }
  j["keywords"] = StringArray(r.keywords);
  if (r.rationale) j["rationale"] = *r.rationale;
  if (r.status) j["status"] = *r.status;
  if (r.resolution) j["resolution"] = *r.resolution;
  if (r.duplicate_of) j["duplicate_of"] = *r.duplicate_of;
  j["code_links"] = StringArray(r.code_links);
  ordered_json attachments = ordered_json::array();
  for (const auto& a : r.attachments) {
    ordered_json aj;
    aj["name"] = a.name;
    aj["kind"] = std::string(ToString(a.kind));
    attachments.push_back(std::move(aj));
  }
  j["attachments"] = std::move(attachments);
  ordered_json comments = ordered_json::array();
  for (const auto& c : r.comments) {
    ordered_json cj;
    cj["author"] = c.author;
    cj["body"] = c.body;
    if (c.timestamp) cj["timestamp"] = c.timestamp->ToString();
    cj["referenced_ids"] = StringArray(c.referenced_ids);
    cj["urls"] = StringArray(c.urls);
    comments.push_back(std::move(cj));
  }
  j["comments"] = std::move(comments);
  if (r.story) {
    ordered_json sj;
    sj["role"] = r.story->role;
    sj["activity"] = r.story->activity;
    sj["business_value"] = r.story->business_value;
    sj["acceptance_criteria"] = StringArray(r.story->acceptance_criteria);
    j["story"] = std::move(sj);
  }
  ordered_json source;
  source["tracker"] = std::string(ToString(r.source.tracker));
  if (r.source.url) source["url"] = *r.source.url;
  j["source"] = std::move(source);
  return j;
}

class Reader {
 public:
  Reader(const json& obj, std::string context) : obj_(obj), context_(std::move(context)) {
    if (!obj.is_object()) Fail(ErrorKind::kFieldTypeError, "must be an object");
  }

  // Fails on keys outside `allowed`.
  void Only(std::initializer_list<std::string_view> allowed) const {
    for (const auto& [key, value] : obj_.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        Fail(ErrorKind::kMalformedDocument, "unknown field '" + key + "'");
      }
    }
  }

  const json* Get(const char* key) const {
    auto it = obj_.find(key);
    return it == obj_.end() ? nullptr : &*it;
  }

  std::string String(const char* key) const {
    auto v = OptString(key);
    if (!v) Fail(ErrorKind::kMalformedDocument, std::string("missing field '") + key + "'");
    return *v;
  }

  std::optional<std::string> OptString(const char* key) const {
    const json* v = Get(key);
    if (!v) return std::nullopt;
    if (!v->is_string()) Fail(ErrorKind::kFieldTypeError, std::string("'") + key + "' must be a string");
    return v->get<std::string>();
  }

  std::vector<std::string> Strings(const char* key) const {
    std::vector<std::string> out;
    const json* v = Get(key);
    if (!v) return out;
    if (!v->is_array()) Fail(ErrorKind::kFieldTypeError, std::string("'") + key + "' must be an array");
    for (const auto& item : *v) {
      if (!item.is_string()) {
        Fail(ErrorKind::kFieldTypeError, std::string("'") + key + "' must hold strings");
      }
      out.push_back(item.get<std::string>());
    }
    return out;
  }

  std::vector<const json*> Objects(const char* key) const {
    std::vector<const json*> out;
    const json* v = Get(key);
    if (!v) return out;
    if (!v->is_array()) Fail(ErrorKind::kFieldTypeError, std::string("'") + key + "' must be an array");
    for (const auto& item : *v) out.push_back(&item);
    return out;
  }

  [[noreturn]] void Fail(ErrorKind kind, const std::string& message) const {
    throw Error(kind, context_ + ": " + message);
  }

  const std::string& context() const { return context_; }

 private:
  const json& obj_;
  std::string context_;
};

Requirement RequirementFromJson(const json& j, std::size_t index) {
  std::string context = "requirements[" + std::to_string(index) + "]";
  if (j.is_object() && j.contains("id") && j["id"].is_string()) {
    context = "requirement " + j["id"].get<std::string>();
  }
  Reader r(j, context);
  r.Only({"id", "kind", "summary", "description", "product", "version", "importance",
          "keywords", "rationale", "status", "resolution", "duplicate_of", "code_links",
          "attachments", "comments", "story", "source"});
  Requirement req;
  req.id = r.String("id");
  const auto kind = ParseRequirementKind(r.String("kind"));
  if (!kind) r.Fail(ErrorKind::kFieldTypeError, "unknown kind");
  req.kind = *kind;
  req.summary = r.String("summary");
  req.description = r.OptString("description").value_or("");
  req.product = r.OptString("product");
  req.version = r.OptString("version");
  if (const json* imp = r.Get("importance")) {
    Reader ir(*imp, context + ": importance");
    ir.Only({"priority", "severity", "votes"});
    Importance importance;
    importance.priority = ir.OptString("priority");
    importance.severity = ir.OptString("severity");
    if (const json* votes = ir.Get("votes")) {
      if (!votes->is_number_unsigned()) {
        ir.Fail(ErrorKind::kFieldTypeError, "'votes' must be a non-negative integer");
      }
      importance.votes = votes->get<std::uint64_t>();
    }
    req.importance = importance;
  }
  req.keywords = r.Strings("keywords");
  req.rationale = r.OptString("rationale");
  req.status = r.OptString("status");
  req.resolution = r.OptString("resolution");
  req.duplicate_of = r.OptString("duplicate_of");
  req.code_links = r.Strings("code_links");
  for (const json* a : r.Objects("attachments")) {
    Reader ar(*a, context + ": attachment");
    ar.Only({"name", "kind"});
    const auto media = ParseMediaKind(ar.String("kind"));
    if (!media) ar.Fail(ErrorKind::kFieldTypeError, "unknown attachment kind");
    req.attachments.push_back({ar.String("name"), *media});
  }
  for (const json* c : r.Objects("comments")) {
    Reader cr(*c, context + ": comment " + std::to_string(req.comments.size() + 1));
    cr.Only({"author", "body", "timestamp", "referenced_ids", "urls"});
    Comment comment;
    comment.author = cr.OptString("author").value_or("");
    comment.body = cr.String("body");
    if (auto ts = cr.OptString("timestamp")) {
      comment.timestamp = Instant::Parse(*ts);
      if (!comment.timestamp) cr.Fail(ErrorKind::kFieldTypeError, "bad timestamp '" + *ts + "'");
    }
    comment.referenced_ids = cr.Strings("referenced_ids");
    comment.urls = cr.Strings("urls");
    req.comments.push_back(std::move(comment));
  }
  if (const json* s = r.Get("story")) {
    Reader sr(*s, context + ": story");
    sr.Only({"role", "activity", "business_value", "acceptance_criteria"});
    StoryRecord story;
    story.role = sr.OptString("role").value_or("");
    story.activity = sr.OptString("activity").value_or("");
    story.business_value = sr.OptString("business_value").value_or("");
    story.acceptance_criteria = sr.Strings("acceptance_criteria");
    req.story = std::move(story);
  }
  if (const json* s = r.Get("source")) {
    Reader sr(*s, context + ": source");
    sr.Only({"tracker", "url"});
    const auto tracker = ParseTrackerKind(sr.String("tracker"));
    if (!tracker) sr.Fail(ErrorKind::kFieldTypeError, "unknown tracker");
    req.source.tracker = *tracker;
    req.source.url = sr.OptString("url");
  }
  return req;
}

}  // namespace

std::string CorpusToJson(const Corpus& corpus) {
  ordered_json root;
  root["schema_version"] = kCorpusSchemaVersion;
  if (corpus.glossary_terms) {
    ordered_json terms = ordered_json::array();
    for (const auto& t : *corpus.glossary_terms) terms.push_back(t);
    root["glossary_terms"] = std::move(terms);
  }
  ordered_json reqs = ordered_json::array();
  for (const auto& r : corpus.requirements) reqs.push_back(RequirementToJson(r));
  root["requirements"] = std::move(reqs);
  return root.dump(2) + "\n";
}

Corpus CorpusFromJson(std::string_view text, std::string_view source_name) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (const auto colon = what.rfind(": "); colon != std::string::npos) what = what.substr(colon + 2);
    throw Error(ErrorKind::kParseError, std::string(source_name) + ":" + std::to_string(line) + ":" +
                                            std::to_string(column) + ": " + what);
  }
  Reader r(root, std::string(source_name));
  const json* version = r.Get("schema_version");
  if (!version) r.Fail(ErrorKind::kSchemaVersionError, "missing schema_version");
  if (!version->is_number_integer() || version->get<std::int64_t>() != kCorpusSchemaVersion) {
    r.Fail(ErrorKind::kSchemaVersionError,
           "unsupported schema_version " + version->dump() + " (expected " +
               std::to_string(kCorpusSchemaVersion) + ")");
  }
  r.Only({"schema_version", "glossary_terms", "requirements"});
  Corpus corpus;
  if (r.Get("glossary_terms")) {
    const auto terms = r.Strings("glossary_terms");
    corpus.glossary_terms.emplace(terms.begin(), terms.end());
  }
  const json* reqs = r.Get("requirements");
  if (!reqs) r.Fail(ErrorKind::kMalformedDocument, "missing requirements");
  if (!reqs->is_array()) r.Fail(ErrorKind::kFieldTypeError, "'requirements' must be an array");
  for (std::size_t i = 0; i < reqs->size(); ++i) {
    Requirement req = RequirementFromJson((*reqs)[i], i);
    corpus.requirements.push_back(std::move(req));
  }
  return corpus;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIoError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIoError, "cannot write " + path.string());
  out << contents;
  if (!out) throw Error(ErrorKind::kIoError, "failed writing " + path.string());
}

Corpus LoadCorpus(const std::filesystem::path& path) {
  return CorpusFromJson(ReadFile(path), path.string());
}

void SaveCorpus(const Corpus& corpus, const std::filesystem::path& path) {
  WriteFile(path, CorpusToJson(corpus));
}

}  // namespace reqlint
