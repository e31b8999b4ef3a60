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


// Tracker fetching with retries, rate limiting and a disk cache.

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

#include <cstdlib>
#include <thread>

#include "json.hpp"
#include "reqlint/error.h"
#include "reqlint/ingestion.h"
#include "reqlint/keyvalue.h"

namespace reqlint {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct SplitUrl {
  std::string origin;  // scheme://host[:port]
  std::string path;    // without trailing slash
};

std::optional<SplitUrl> Split(std::string_view url) {
  std::size_t scheme_end;
  if (url.starts_with("http://")) scheme_end = 7;
  else if (url.starts_with("https://")) scheme_end = 8;
  else return std::nullopt;
  const std::size_t slash = url.find('/', scheme_end);
  SplitUrl out;
  out.origin = std::string(url.substr(0, slash));
  if (out.origin.size() == scheme_end) return std::nullopt;
  if (slash != std::string_view::npos) out.path = std::string(url.substr(slash));
  while (!out.path.empty() && out.path.back() == '/') out.path.pop_back();
  return out;
}

std::string CacheScope(std::string_view base_url) {
  std::string_view rest = base_url.substr(base_url.find("://") + 3);
  std::string out;
  for (char c : rest) {
    out.push_back(std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' ? c : '_');
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

std::string SafeId(std::string_view id) {
  std::string out;
  for (char c : id) out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  return out;
}

class Session {
 public:
  Session(const TrackerConfig& config, const FetchOptions& options)
      : config_(config), options_(options), split_(*Split(config.base_url)),
        client_(split_.origin) {
    client_.set_connection_timeout(std::chrono::duration_cast<std::chrono::seconds>(options.timeout));
    client_.set_read_timeout(std::chrono::duration_cast<std::chrono::seconds>(options.timeout));
    client_.set_follow_location(true);
    headers_.emplace("User-Agent", "reqlint");
    if (config.tracker == TrackerKind::kGithub) {
      headers_.emplace("Accept", "application/vnd.github+json");
      if (config.auth_token) headers_.emplace("Authorization", "Bearer " + *config.auth_token);
    } else if (config.auth_token) {
      headers_.emplace("X-BUGZILLA-API-KEY", *config.auth_token);
    }
    interval_ = std::chrono::milliseconds(60000 / std::max(1, config.rate_limit));
  }

  // Returns status and body. 2xx and non-retryable 4xx return normally.
  std::pair<int, std::string> Get(const std::string& relative) {
    const std::string path = split_.path + relative;
    std::chrono::milliseconds backoff = options_.initial_backoff;
    std::string last_problem;
    int last_status = 0;
    for (int attempt = 1; attempt <= std::max(1, options_.max_attempts); ++attempt) {
      Throttle();
      auto res = client_.Get(path, headers_);
      last_request_ = Clock::now();
      if (!res) {
        last_problem = "cannot reach " + split_.origin + ": " + httplib::to_string(res.error());
        last_status = 0;
      } else {
        const int status = res->status;
        const bool github_limit = status == 403 && res->get_header_value("x-ratelimit-remaining") == "0";
        if (status == 429 || github_limit) {
          last_status = 429;
          last_problem = "rate limited by " + split_.origin;
        } else if (status == 401 || status == 403) {
          throw Error(ErrorKind::kAuthError, "HTTP " + std::to_string(status) + " from " +
                                                 split_.origin + path +
                                                 "; check the access token");
        } else if (status >= 500) {
          last_status = status;
          last_problem = "HTTP " + std::to_string(status) + " from " + split_.origin + path;
        } else {
          return {status, res->body};
        }
      }
      if (attempt < options_.max_attempts) {
        Sleep(backoff);
        backoff *= 2;
      }
    }
    if (last_status == 429) throw Error(ErrorKind::kRateLimited, last_problem);
    throw Error(ErrorKind::kHttpError, last_problem);
  }

 private:
  void Throttle() {
    if (!last_request_) return;
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - *last_request_);
    if (elapsed < interval_) Sleep(interval_ - elapsed);
  }

  void Sleep(std::chrono::milliseconds ms) {
    if (options_.sleep) options_.sleep(ms);
    else std::this_thread::sleep_for(ms);
  }

  const TrackerConfig& config_;
  const FetchOptions& options_;
  SplitUrl split_;
  httplib::Client client_;
  httplib::Headers headers_;
  std::chrono::milliseconds interval_{0};
  std::optional<Clock::time_point> last_request_;
};

// Compact re-serialization so cached and fresh documents compare equal.
std::optional<std::string> Normalize(const std::string& body) {
  auto j = ordered_json::parse(body, nullptr, false);
  if (j.is_discarded()) return std::nullopt;
  return j.dump();
}

}  // namespace

void ValidateTrackerConfig(const TrackerConfig& config) {
  if (config.tracker == TrackerKind::kNative) {
    throw Error(ErrorKind::kParseError, "tracker must be bugzilla or github");
  }
  if (!Split(config.base_url)) {
    throw Error(ErrorKind::kParseError,
                "base URL must be an absolute http(s) URL: '" + config.base_url + "'");
  }
  if (config.rate_limit <= 0) {
    throw Error(ErrorKind::kParseError, "rate limit must be a positive number of requests per minute");
  }
}

std::optional<std::string> TokenFromEnvironment(TrackerKind tracker) {
  const char* name = tracker == TrackerKind::kGithub ? "REQLINT_GITHUB_TOKEN"
                                                     : "REQLINT_BUGZILLA_TOKEN";
  const char* value = std::getenv(name);
  if (!value || !*value) return std::nullopt;
  return std::string(value);
}

FetchResult FetchRequirements(const TrackerConfig& config, const std::vector<std::string>& ids,
                              const FetchOptions& options) {
  ValidateTrackerConfig(config);
  std::optional<std::filesystem::path> cache_root;
  if (options.cache_dir) {
    cache_root = *options.cache_dir / std::string(ToString(config.tracker)) /
                 CacheScope(config.base_url);
  }
  std::unique_ptr<Session> session;
  FetchResult result;
  for (const auto& id : ids) {
    const std::filesystem::path cache_file =
        cache_root ? *cache_root / (SafeId(id) + ".json") : std::filesystem::path();
    if (cache_root && std::filesystem::exists(cache_file)) {
      const auto cached = ordered_json::parse(ReadFile(cache_file), nullptr, false);
      if (!cached.is_discarded() && cached.is_object() && cached.contains("main") &&
          cached.contains("comments")) {
        RawDocuments docs;
        docs.id = id;
        docs.main = cached["main"].dump();
        docs.comments = cached["comments"].dump();
        if (cached.contains("attachments")) docs.attachments = cached["attachments"].dump();
        result.documents.push_back(std::move(docs));
        continue;
      }
    }
    if (options.offline) {
      result.failures.push_back({id, 0, "not in cache"});
      continue;
    }
    if (!session) session = std::make_unique<Session>(config, options);

    RawDocuments docs;
    docs.id = id;
    bool failed = false;
    auto fetch = [&](const std::string& path, std::string& into) {
      if (failed) return;
      const auto [status, body] = session->Get(path);
      if (status < 200 || status >= 300) {
        result.failures.push_back({id, status, "HTTP " + std::to_string(status) + " for " + path});
        failed = true;
        return;
      }
      auto normalized = Normalize(body);
      if (!normalized) {
        result.failures.push_back({id, status, "response for " + path + " is not JSON"});
        failed = true;
        return;
      }
      into = std::move(*normalized);
    };
    if (config.tracker == TrackerKind::kBugzilla) {
      fetch("/rest/bug/" + id, docs.main);
      fetch("/rest/bug/" + id + "/comment", docs.comments);
      std::string attachments;
      fetch("/rest/bug/" + id + "/attachment?exclude_fields=data", attachments);
      if (!failed) docs.attachments = std::move(attachments);
    } else {
      fetch("/issues/" + id, docs.main);
      // Comments are paginated; gather every page into one array.
      ordered_json all = ordered_json::array();
      for (int page = 1; !failed; ++page) {
        std::string body;
        fetch("/issues/" + id + "/comments?per_page=100&page=" + std::to_string(page), body);
        if (failed) break;
        const auto chunk = ordered_json::parse(body);
        if (!chunk.is_array()) break;
        for (const auto& c : chunk) all.push_back(c);
        if (chunk.size() < 100) break;
      }
      docs.comments = all.dump();
    }
    if (failed) continue;
    if (cache_root) {
      ordered_json cached;
      cached["main"] = ordered_json::parse(docs.main);
      cached["comments"] = ordered_json::parse(docs.comments);
      if (docs.attachments) cached["attachments"] = ordered_json::parse(*docs.attachments);
      const auto tmp = cache_file.string() + ".tmp";
      WriteFile(tmp, cached.dump(2) + "\n");
      std::filesystem::rename(tmp, cache_file);
    }
    result.documents.push_back(std::move(docs));
  }
  return result;
}

}  // namespace reqlint
