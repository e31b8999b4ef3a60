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

// Analyzers propose answers for the mechanically checkable criteria.
//
// Automatic checks are decided from fields alone and are marked certain.
// Assisted checks come from text heuristics; they are proposals a reviewer
// is expected to override. Manual checks are never answered here. Every
// threshold and marker list lives in AnalyzerConfig and can be set from the
// [analyzer] section of a configuration file.

#ifndef REQLINT_ANALYZERS_H_
#define REQLINT_ANALYZERS_H_

#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "reqlint/checklist.h"
#include "reqlint/keyvalue.h"
#include "reqlint/model.h"
#include "reqlint/rational.h"
#include "reqlint/text.h"

namespace reqlint {

struct AnalyzerConfig {
  std::vector<std::string> rationale_markers = {
      "because",     "so that",    "rationale:", "in order to", "the reason",
      "would make",  "would let",  "would help", "would save",  "would avoid",
      "would allow", "otherwise",  "hard to",    "are lost",    "is lost",
      "are gone"};
  std::vector<std::string> scenario_markers = {
      "use case",    "scenario",     "steps:",    "steps to", "step 1",
      "for example", "for instance", "workflow:"};
  std::vector<std::string> solution_markers = {
      "patch",         "possible solution", "proposed solution",
      "suggested fix", "could be implemented", "could be done by",
      "one way to",    "i suggest",         "suggestion:",
      "implementation:", "we could",        "by adding"};
  std::vector<std::string> implemented_resolutions = {
      "fixed", "implemented", "done", "completed", "resolved"};

  // SC3.3: share of well-formed sentences and of unknown words.
  Rational language_high_sentences{4, 5};
  Rational language_high_misspelled{2, 100};
  Rational language_mid_sentences{1, 2};
  Rational language_mid_misspelled{5, 100};

  Rational summary_overlap{1, 2};         // SC3.6
  Rational duplicate_similarity{4, 5};    // SC3.9
  int comment_max_content_words = 2;      // SC2.2
  int atomic_max_requests = 1;            // SC3.7
  int scenario_min_numbered_steps = 2;    // SC1.3a
};

// Reads the [analyzer] section; other sections are ignored.
void ReadAnalyzerConfig(const KeyValueDocument& doc, std::string_view source_name,
                        AnalyzerConfig* config);

enum class Confidence { kCertain, kHeuristic };

struct FindingNote {
  std::string check_id;
  std::string evidence;
  Confidence confidence = Confidence::kHeuristic;

  bool operator==(const FindingNote&) const = default;
};

struct AutoFindings {
  AnswerSheet sheet;  // automatic and assisted entries only
  std::vector<FindingNote> notes;

  bool operator==(const AutoFindings&) const = default;
};

// Appends b's entries and notes to a. Both must target the same requirement.
void MergeFindings(AutoFindings& into, AutoFindings from);

// Field-presence checks (SC1.x, SC1.x'). Throws kChecklistKindMismatch when
// the checklist was built for the other requirement kind.
AutoFindings AnalyzeCompleteness(const Requirement& req, const Checklist& checklist,
                                 const AnalyzerConfig& config = {});

struct CommentClassification {
  std::vector<bool> relevant;   // one per comment, in order
  std::vector<std::string> reasons;  // why a comment was judged irrelevant
  Rational relevant_share{1};   // relevant / total; 1 without comments
};

// True when a comment is only social or administrative chatter.
bool IsIrrelevantComment(std::string_view body, const AnalyzerConfig& config,
                         std::string* reason = nullptr);

CommentClassification ClassifyComments(const Requirement& req,
                                       const AnalyzerConfig& config = {});

// Corpus-wide data shared read-only by per-requirement correctness analysis.
struct CorpusContext {
  std::unordered_set<std::string> ids;
  std::set<std::string> glossary_lower;
  // requirement id -> ids of requirements with near-identical summaries
  std::unordered_map<std::string, std::vector<std::string>> near_duplicates;
  std::unordered_map<std::string, const Requirement*> by_id;
  const text::Wordlist* wordlist = nullptr;
};

// Builds the shared context; `parallel` picks the indexed duplicate kernel
// instead of the all-pairs reference.
CorpusContext BuildCorpusContext(const Corpus& corpus, const AnalyzerConfig& config,
                                 const text::Wordlist* wordlist,
                                 bool parallel = true);

struct ReferenceScan {
  std::vector<std::string> targets;  // ids from short-codes, URLs and fields
  std::vector<std::string> bare;     // e.g. "bug 123" without # or URL
};

// Scans description and comments for references to other requirements.
ReferenceScan ScanReferences(const Requirement& req);

// True when `text` reads "As a <role>, I can|want to <activity> so that
// <value>".
bool MatchesUserVoice(std::string_view text);

// SC2.x, SC3.x proposals.
AutoFindings AnalyzeCorrectness(const Requirement& req, const CorpusContext& context,
                                const Checklist& checklist,
                                const AnalyzerConfig& config = {});

// Convenience overload that builds the context from `corpus` on the fly.
AutoFindings AnalyzeCorrectness(const Requirement& req, const Corpus& corpus,
                                const Checklist& checklist,
                                const AnalyzerConfig& config = {},
                                const text::Wordlist* wordlist = nullptr);

// Completeness plus correctness for one requirement.
AutoFindings AnalyzeRequirement(const Requirement& req, const CorpusContext& context,
                                const Checklist& checklist,
                                const AnalyzerConfig& config = {});

}  // namespace reqlint

#endif  // REQLINT_ANALYZERS_H_
