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


#include "reqlint/batch.h"

#include <exception>
#include <unordered_map>

#include "reqlint/error.h"

namespace reqlint {
namespace {

// Runs body(i) for i in [0, n). Exceptions are collected per index and the
// lowest one is rethrown, so parallel and serial runs fail identically.
template <typename Body>
void ForEach(std::size_t n, Execution execution, Body body) {
  std::vector<std::exception_ptr> errors(n);
  if (execution == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
        break;
      }
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

ChecklistSet BuildChecklists(const TailoringConfig& tailoring, const ToolProfile& profile) {
  ChecklistSet set;
  set.feature_request = BuildChecklist(RequirementKind::kFeatureRequest, tailoring, profile);
  set.user_story = BuildChecklist(RequirementKind::kUserStory, tailoring, profile);
  return set;
}

std::vector<AutoFindings> AnalyzeCorpus(const Corpus& corpus, const ChecklistSet& checklists,
                                        const AnalyzerConfig& config,
                                        const text::Wordlist* wordlist, Execution execution) {
  const CorpusContext context =
      BuildCorpusContext(corpus, config, wordlist, execution == Execution::kParallel);
  std::vector<AutoFindings> out(corpus.requirements.size());
  ForEach(out.size(), execution, [&](std::size_t i) {
    const Requirement& req = corpus.requirements[i];
    out[i] = AnalyzeRequirement(req, context, checklists.For(req.kind), config);
  });
  return out;
}

std::vector<AnswerSheet> AlignSheets(const Corpus& corpus, std::vector<AnswerSheet> sheets) {
  std::unordered_map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < corpus.requirements.size(); ++i) {
    position.emplace(corpus.requirements[i].id, i);
  }
  std::vector<AnswerSheet> out(corpus.requirements.size());
  std::vector<bool> seen(out.size(), false);
  for (auto& sheet : sheets) {
    const auto it = position.find(sheet.requirement_id);
    if (it == position.end()) {
      throw Error(ErrorKind::kSheetMismatch,
                  "answers given for unknown requirement " + sheet.requirement_id);
    }
    if (seen[it->second]) {
      throw Error(ErrorKind::kSheetMismatch,
                  "requirement " + sheet.requirement_id + " is answered twice");
    }
    seen[it->second] = true;
    out[it->second] = std::move(sheet);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].requirement_id = corpus.requirements[i].id;
  }
  return out;
}

std::vector<AnswerSheet> MergeCorpus(const Corpus& corpus, const std::vector<AnswerSheet>& automatic,
                                     const std::vector<AnswerSheet>& manual,
                                     const ChecklistSet& checklists, const MergeOptions& options,
                                     Execution execution) {
  const std::size_t n = corpus.requirements.size();
  if (automatic.size() != n || manual.size() != n) {
    throw Error(ErrorKind::kSheetMismatch, "answer sheets are not aligned with the corpus");
  }
  std::vector<AnswerSheet> out(n);
  ForEach(n, execution, [&](std::size_t i) {
    const Requirement& req = corpus.requirements[i];
    out[i] = MergeAnswers(automatic[i], manual[i], checklists.For(req.kind), options);
  });
  return out;
}

std::vector<ScoreCard> ScoreCorpus(const Corpus& corpus, const std::vector<AnswerSheet>& sheets,
                                   const ChecklistSet& checklists, const ScoringWeights& weights,
                                   Execution execution) {
  const std::size_t n = corpus.requirements.size();
  if (sheets.size() != n) {
    throw Error(ErrorKind::kSheetMismatch, "answer sheets are not aligned with the corpus");
  }
  std::vector<ScoreCard> out(n);
  ForEach(n, execution, [&](std::size_t i) {
    out[i] = FinalScore(sheets[i], checklists.For(corpus.requirements[i].kind), weights);
  });
  return out;
}

}  // namespace reqlint
