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


// Corpus-wide analysis, merging and scoring.
//
// Each kernel has an OpenMP version and a serial reference with identical
// output; tests compare the two and the benchmark times them.

#ifndef REQLINT_BATCH_H_
#define REQLINT_BATCH_H_

#include <vector>

#include "reqlint/analyzers.h"
#include "reqlint/checklist.h"
#include "reqlint/model.h"
#include "reqlint/scoring.h"
#include "reqlint/text.h"

namespace reqlint {

enum class Execution { kSerial, kParallel };

struct ChecklistSet {
  Checklist feature_request;
  Checklist user_story;

  const Checklist& For(RequirementKind kind) const {
    return kind == RequirementKind::kUserStory ? user_story : feature_request;
  }
};

ChecklistSet BuildChecklists(const TailoringConfig& tailoring = {},
                             const ToolProfile& profile = {});

// One result per requirement, in corpus order.
std::vector<AutoFindings> AnalyzeCorpus(const Corpus& corpus, const ChecklistSet& checklists,
                                        const AnalyzerConfig& config,
                                        const text::Wordlist* wordlist,
                                        Execution execution = Execution::kParallel);

// Orders `sheets` by corpus position; requirements without a sheet get an
// empty one. Throws kSheetMismatch for sheets naming unknown requirements
// or naming one requirement twice.
std::vector<AnswerSheet> AlignSheets(const Corpus& corpus, std::vector<AnswerSheet> sheets);

// Manual answers over automatic ones, requirement by requirement. Both
// inputs must already be aligned with the corpus.
std::vector<AnswerSheet> MergeCorpus(const Corpus& corpus,
                                     const std::vector<AnswerSheet>& automatic,
                                     const std::vector<AnswerSheet>& manual,
                                     const ChecklistSet& checklists,
                                     const MergeOptions& options = {},
                                     Execution execution = Execution::kParallel);

// `sheets` aligned with the corpus. The first failure by corpus position is
// rethrown.
std::vector<ScoreCard> ScoreCorpus(const Corpus& corpus, const std::vector<AnswerSheet>& sheets,
                                   const ChecklistSet& checklists,
                                   const ScoringWeights& weights = {},
                                   Execution execution = Execution::kParallel);

}  // namespace reqlint

#endif  // REQLINT_BATCH_H_
