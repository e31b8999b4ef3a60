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


// Scoring of a merged answer sheet.
//
// Each answer is normalized to a fraction in [0,1] (or n/a), averaged per
// group, and combined into the completeness label and the weighted final
// percentage. Everything is exact; rounding happens only when rendering.

#ifndef REQLINT_SCORING_H_
#define REQLINT_SCORING_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reqlint/checklist.h"
#include "reqlint/keyvalue.h"
#include "reqlint/rational.h"

namespace reqlint {

enum class CompletenessLabel { kIncomplete, kNormal, kBetter, kBest };
enum class QualityLabel { kLow, kMedium, kHigh };  // ordered

std::string_view ToString(CompletenessLabel label);
std::string_view ToString(QualityLabel label);
std::optional<CompletenessLabel> ParseCompletenessLabel(std::string_view text);
// Case-insensitive: "low", "MEDIUM", ...
std::optional<QualityLabel> ParseQualityLabel(std::string_view text);

// Weights of SC1.3, SC2 and SC3 in the final average.
struct ScoringWeights {
  Rational sc13{1};
  Rational sc2{1};
  Rational sc3{3};

  bool operator==(const ScoringWeights&) const = default;
};

// Reads `weights = a, b, c` from the [scoring] section.
void ReadScoringConfig(const KeyValueDocument& doc, std::string_view source_name,
                       ScoringWeights* weights);

// nullopt stands for n/a. Throws kTypeMismatch when the answer does not fit
// the check's metric or a percentage is outside [0,1].
std::optional<Rational> NormalizeAnswer(const CheckDefinition& check,
                                        const Answer& answer);

// Mean over the group's answered, non-n/a checks. Throws kIncompleteSheet
// when a check of the group is unanswered.
Rational GroupPercentage(const AnswerSheet& sheet, const Checklist& checklist,
                         CheckGroup group);

CompletenessLabel Sc1Label(const Rational& sc11, const Rational& sc12,
                           const Rational& sc13);

// HIGH from 3/4 up, LOW below 11/20.
QualityLabel FinalLabel(const Rational& final_pct);

struct ScoreCard {
  std::string requirement_id;
  Rational sc11_pct{0};
  Rational sc12_pct{0};
  Rational sc13_pct{0};
  CompletenessLabel sc1_label = CompletenessLabel::kIncomplete;
  Rational sc2_pct{0};
  Rational sc3_pct{0};
  std::optional<Rational> final_pct;  // absent when gated
  QualityLabel final_label = QualityLabel::kLow;
  std::map<std::string, std::optional<Rational>> per_check;
  // SC1.1/SC1.2 checks that keep the sheet from being complete.
  std::vector<std::string> gate_failures;

  bool operator==(const ScoreCard&) const = default;
};

// Throws kIncompleteSheet (unanswered checks), kSheetMismatch (entries for
// checks outside the checklist) or kTypeMismatch.
ScoreCard FinalScore(const AnswerSheet& sheet, const Checklist& checklist,
                     const ScoringWeights& weights = {});

}  // namespace reqlint

#endif  // REQLINT_SCORING_H_
