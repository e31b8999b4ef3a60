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


#include "reqlint/cli.h"

#include <iostream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "CLI11.hpp"
#include "reqlint/batch.h"
#include "reqlint/config.h"
#include "reqlint/error.h"
#include "reqlint/ingestion.h"
#include "reqlint/reporting.h"

namespace reqlint::cli {
namespace {

struct Options {
  // shared
  std::string corpus;
  std::string answers;
  std::string auto_answers;
  std::string tailoring;
  std::string out = "-";
  bool serial = false;
  // fetch
  std::string tracker;
  std::string base_url;
  std::vector<std::string> ids;
  std::string cache_dir = ".reqlint-cache";
  int rate_limit = 60;
  bool offline = false;
  int backoff_ms = 1000;
  // template
  std::string kind;
  // score
  std::string report = "markdown";
  bool strict = false;
  // gate
  std::string min = "medium";
  // summary
  std::size_t worst = 10;
};

Execution ExecutionFor(const Options& o) {
  return o.serial ? Execution::kSerial : Execution::kParallel;
}

void Emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty() || o.out == "-") {
    out << text;
  } else {
    WriteFile(o.out, text);
  }
}

Config ConfigFor(const Options& o) {
  return LoadConfig(o.tailoring.empty() ? std::nullopt
                                        : std::optional<std::filesystem::path>(o.tailoring));
}

ChecklistLookup LookupFor(const Corpus& corpus, const ChecklistSet& checklists) {
  auto kinds = std::make_shared<std::unordered_map<std::string, RequirementKind>>();
  for (const auto& r : corpus.requirements) kinds->emplace(r.id, r.kind);
  return [kinds, &checklists](std::string_view id) -> const Checklist* {
    const auto it = kinds->find(std::string(id));
    return it == kinds->end() ? nullptr : &checklists.For(it->second);
  };
}

std::vector<AnswerSheet> ReadSheets(const std::string& path, const Corpus& corpus,
                                    const ChecklistSet& checklists, AnswerFileOptions options) {
  if (path.empty()) return AlignSheets(corpus, {});
  return AlignSheets(corpus, ParseAnswerFile(ReadFile(path), LookupFor(corpus, checklists),
                                             path, options));
}

struct Scored {
  Corpus corpus;
  ChecklistSet checklists;
  std::vector<AnswerSheet> sheets;
  std::vector<ScoreCard> cards;
};

Scored ScoreInputs(const Options& o) {
  const Config config = ConfigFor(o);
  Scored s;
  s.corpus = LoadCorpus(o.corpus);
  s.checklists = BuildChecklists(config.tailoring, config.profile);
  const auto manual = ReadSheets(o.answers, s.corpus, s.checklists, {});
  const auto automatic =
      ReadSheets(o.auto_answers, s.corpus, s.checklists, {.default_provenance = std::nullopt});
  s.sheets = MergeCorpus(s.corpus, automatic, manual, s.checklists, {.strict = o.strict},
                         ExecutionFor(o));
  s.cards = ScoreCorpus(s.corpus, s.sheets, s.checklists, config.weights, ExecutionFor(o));
  return s;
}

int CmdFetch(const Options& o, std::ostream& out, std::ostream& err) {
  TrackerConfig tc;
  const auto tracker = ParseTrackerKind(o.tracker);
  if (!tracker || *tracker == TrackerKind::kNative) {
    err << "reqlint fetch: --tracker must be bugzilla or github\n";
    return kExitUsage;
  }
  tc.tracker = *tracker;
  tc.base_url = o.base_url;
  tc.rate_limit = o.rate_limit;
  tc.auth_token = TokenFromEnvironment(tc.tracker);
  std::vector<std::string> ids;
  for (const auto& arg : o.ids) {
    std::stringstream ss(arg);
    std::string id;
    while (std::getline(ss, id, ',')) {
      id = TrimCopy(id);
      if (!id.empty()) ids.push_back(id);
    }
  }
  if (ids.empty()) {
    err << "reqlint fetch: --ids needs at least one id\n";
    return kExitUsage;
  }
  FetchOptions fo;
  if (!o.cache_dir.empty()) fo.cache_dir = o.cache_dir;
  fo.offline = o.offline;
  fo.initial_backoff = std::chrono::milliseconds(o.backoff_ms);
  const FetchResult result = FetchRequirements(tc, ids, fo);
  for (const auto& f : result.failures) {
    err << "reqlint fetch: " << o.tracker << " " << f.id << ": " << f.message << "\n";
  }
  Corpus corpus;
  for (const auto& docs : result.documents) {
    ParsedRequirement parsed = ParseRawDocuments(tc.tracker, docs);
    for (const auto& w : parsed.warnings) err << "reqlint fetch: warning: " << w << "\n";
    corpus.requirements.push_back(std::move(parsed.requirement));
  }
  Emit(o, CorpusToJson(corpus), out);
  if (result.documents.empty()) return kExitNetwork;
  return kExitOk;
}

int CmdTemplate(const Options& o, std::ostream& out, std::ostream& err) {
  const Config config = ConfigFor(o);
  const Corpus corpus = LoadCorpus(o.corpus);
  const ChecklistSet checklists = BuildChecklists(config.tailoring, config.profile);
  std::optional<RequirementKind> only;
  if (!o.kind.empty()) {
    only = ParseRequirementKind(o.kind);
    if (!only) {
      err << "reqlint template: --kind must be feature-request or user-story\n";
      return kExitUsage;
    }
  }
  std::vector<AnswerSheet> sheets;
  std::vector<const Checklist*> lists;
  for (const auto& req : corpus.requirements) {
    if (only && req.kind != *only) {
      err << "reqlint template: skipping " << req.id << " (" << ToString(req.kind) << ")\n";
      continue;
    }
    lists.push_back(&checklists.For(req.kind));
    sheets.push_back(BlankAnswerSheet(*lists.back(), req.id));
  }
  std::vector<SheetForOutput> output;
  for (std::size_t i = 0; i < sheets.size(); ++i) output.push_back({&sheets[i], lists[i]});
  Emit(o, FormatAnswerFile(output, /*annotate=*/true, /*write_provenance=*/false), out);
  return kExitOk;
}

int CmdAnalyze(const Options& o, std::ostream& out, std::ostream& /*err*/) {
  const Config config = ConfigFor(o);
  const Corpus corpus = LoadCorpus(o.corpus);
  const ChecklistSet checklists = BuildChecklists(config.tailoring, config.profile);
  const text::Wordlist wordlist = LoadWordlist(config);
  const auto findings = AnalyzeCorpus(corpus, checklists, config.analyzer, &wordlist,
                                      ExecutionFor(o));
  std::vector<SheetForOutput> output;
  for (std::size_t i = 0; i < findings.size(); ++i) {
    output.push_back({&findings[i].sheet, &checklists.For(corpus.requirements[i].kind)});
  }
  Emit(o, FormatAnswerFile(output, /*annotate=*/false, /*write_provenance=*/true), out);
  return kExitOk;
}

int CmdScore(const Options& o, std::ostream& out, std::ostream& err) {
  const auto format = ParseReportFormat(o.report);
  if (!format) {
    err << "reqlint score: --report must be markdown or structured\n";
    return kExitUsage;
  }
  const Scored s = ScoreInputs(o);
  std::vector<ScoredRequirement> items;
  for (std::size_t i = 0; i < s.cards.size(); ++i) {
    const Requirement& req = s.corpus.requirements[i];
    items.push_back({&req, &s.sheets[i], &s.checklists.For(req.kind), &s.cards[i]});
  }
  Emit(o, RenderReport(items, *format), out);
  return kExitOk;
}

int CmdGate(const Options& o, std::ostream& out, std::ostream& err) {
  const auto min = ParseQualityLabel(o.min);
  if (!min) {
    err << "reqlint gate: --min must be low, medium or high\n";
    return kExitUsage;
  }
  const Scored s = ScoreInputs(o);
  int failed = 0;
  for (const auto& card : s.cards) {
    if (card.final_label < *min) {
      ++failed;
      err << "reqlint gate: " << card.requirement_id << " is " << ToString(card.final_label);
      if (card.final_pct) err << " (" << FormatScore(*card.final_pct) << ")";
      if (!card.gate_failures.empty()) {
        err << " (incomplete:";
        for (const auto& id : card.gate_failures) err << " " << id;
        err << ")";
      }
      err << ", below " << ToString(*min) << "\n";
    }
  }
  out << (s.cards.size() - static_cast<std::size_t>(failed)) << "/" << s.cards.size()
      << " requirements meet " << ToString(*min) << "\n";
  return failed ? kExitGateFailed : kExitOk;
}

int CmdSummary(const Options& o, std::ostream& out, std::ostream& /*err*/) {
  const Scored s = ScoreInputs(o);
  Emit(o, RenderCorpusSummary(s.cards, {.worst = o.worst}), out);
  return kExitOk;
}

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kHttpError:
    case ErrorKind::kAuthError:
    case ErrorKind::kRateLimited:
      return kExitNetwork;
    default:
      return kExitInput;
  }
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Scores feature requests and user stories against a quality checklist", "reqlint"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto corpus_opt = [&](CLI::App* sub) {
    sub->add_option("--corpus", o.corpus, "Native corpus file")->required();
  };
  auto tailoring_opt = [&](CLI::App* sub) {
    sub->add_option("--tailoring", o.tailoring, "Configuration file (replaces ./reqlint.conf)");
  };
  auto serial_opt = [&](CLI::App* sub) {
    sub->add_flag("--serial", o.serial, "Run the serial reference kernels");
  };
  auto answers_opts = [&](CLI::App* sub) {
    corpus_opt(sub);
    sub->add_option("--answers", o.answers, "Manual answer file")->required();
    sub->add_option("--auto", o.auto_answers, "Analyzer answer file from 'analyze'");
    tailoring_opt(sub);
    sub->add_flag("--strict", o.strict, "Reject manual overrides of automatic checks");
    serial_opt(sub);
  };

  CLI::App* fetch = app.add_subcommand("fetch", "Download requests from a tracker into a corpus");
  fetch->add_option("--tracker", o.tracker, "bugzilla or github")->required();
  fetch->add_option("--base-url", o.base_url, "Tracker root URL")->required();
  fetch->add_option("--ids", o.ids, "Ids to fetch (space or comma separated)")->required();
  fetch->add_option("--out", o.out, "Corpus file to write");
  fetch->add_option("--cache", o.cache_dir, "Response cache directory");
  fetch->add_option("--rate-limit", o.rate_limit, "Requests per minute")->check(CLI::PositiveNumber);
  fetch->add_flag("--offline", o.offline, "Serve from the cache only");
  fetch->add_option("--backoff-ms", o.backoff_ms, "First retry delay in milliseconds")
      ->check(CLI::NonNegativeNumber);

  CLI::App* tmpl = app.add_subcommand("template", "Write blank answer sheets");
  corpus_opt(tmpl);
  tmpl->add_option("--kind", o.kind, "feature-request or user-story");
  tailoring_opt(tmpl);
  tmpl->add_option("--out", o.out, "Answer file to write");

  CLI::App* analyze = app.add_subcommand("analyze", "Propose answers for automatic and assisted checks");
  corpus_opt(analyze);
  tailoring_opt(analyze);
  analyze->add_option("--out", o.out, "Answer file to write");
  serial_opt(analyze);

  CLI::App* score = app.add_subcommand("score", "Merge answers, score and render a report");
  answers_opts(score);
  score->add_option("--report", o.report, "markdown or structured");
  score->add_option("--out", o.out, "Report file to write");

  CLI::App* gate = app.add_subcommand("gate", "Fail unless every requirement reaches --min");
  answers_opts(gate);
  gate->add_option("--min", o.min, "low, medium or high");

  CLI::App* summary = app.add_subcommand("summary", "Corpus-level label distribution and worst requirements");
  answers_opts(summary);
  summary->add_option("--out", o.out, "Summary file to write");
  summary->add_option("--worst", o.worst, "How many of the worst requirements to list");

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "reqlint: " << e.what() << "\n";
    if (!app.get_subcommands().empty()) {
      err << app.get_subcommands().front()->help();
    } else {
      err << app.help();
    }
    return kExitUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "fetch") return CmdFetch(o, out, err);
    if (name == "template") return CmdTemplate(o, out, err);
    if (name == "analyze") return CmdAnalyze(o, out, err);
    if (name == "score") return CmdScore(o, out, err);
    if (name == "gate") return CmdGate(o, out, err);
    if (name == "summary") return CmdSummary(o, out, err);
  } catch (const Error& e) {
    err << "reqlint " << name << ": " << ErrorKindName(e.kind()) << ": " << e.what() << "\n";
    return ExitCodeFor(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "reqlint " << name << ": " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}

}  // namespace reqlint::cli
