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


// Score card rendering (markdown and structured JSON) and corpus summaries.

#ifndef REQLINT_REPORTING_H_
#define REQLINT_REPORTING_H_

#include <string>
#include <string_view>
#include <vector>

#include "reqlint/checklist.h"
#include "reqlint/model.h"
#include "reqlint/scoring.h"

namespace reqlint {

enum class ReportFormat { kMarkdown, kStructured };

std::optional<ReportFormat> ParseReportFormat(std::string_view text);

inline constexpr int kReportSchemaVersion = 1;
inline constexpr std::size_t kEvidenceLimit = 200;  // markdown only

struct ScoredRequirement {
  const Requirement* requirement;
  const AnswerSheet* sheet;
  const Checklist* checklist;
  const ScoreCard* card;
};

std::string RenderScorecard(const ScoredRequirement& item, ReportFormat format);

// Markdown: cards separated by blank lines. Structured: one document with a
// "reports" array.
std::string RenderReport(const std::vector<ScoredRequirement>& items, ReportFormat format);

struct StructuredEntry {
  AnswerSheet sheet;
  ScoreCard card;

  bool operator==(const StructuredEntry&) const = default;
};

// Reads a structured report (single card or "reports" array). Throws
// kParseError, kSchemaVersionError or kMalformedDocument.
std::vector<StructuredEntry> ParseStructuredReport(std::string_view text);

// "58.7% (44/75)".
std::string FormatScore(const Rational& value);

struct SummaryOptions {
  std::size_t worst = 10;
};

// Throws kEmptyInput for an empty list.
std::string RenderCorpusSummary(const std::vector<ScoreCard>& cards,
                                const SummaryOptions& options = {});

// Gated cards first (by id), then ascending final_pct, ties by id.
std::vector<const ScoreCard*> RankWorst(const std::vector<ScoreCard>& cards);

}  // namespace reqlint

#endif  // REQLINT_REPORTING_H_
