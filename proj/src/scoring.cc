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


#include "reqlint/scoring.h"

#include <algorithm>
#include <cctype>

#include "reqlint/error.h"

namespace reqlint {
namespace {

constexpr std::string_view kToolCheck = "SC2.1";

const AnswerEntry& RequireAnswered(const AnswerSheet& sheet, const CheckDefinition& check) {
  const AnswerEntry* entry = sheet.Find(check.id);
  if (!entry || !entry->value) {
    throw Error(ErrorKind::kIncompleteSheet,
                "requirement " + sheet.requirement_id + ": " + check.id + " is unanswered");
  }
  return *entry;
}

// Mean of the present values; `empty` when none are.
Rational Mean(const std::vector<Rational>& values, const Rational& empty) {
  if (values.empty()) return empty;
  Rational sum{0};
  for (const auto& v : values) sum += v;
  return sum / static_cast<std::int64_t>(values.size());
}

Rational EmptyGroupValue(CheckGroup group) {
  return group == CheckGroup::kSC13 ? Rational(0) : Rational(1);
}

}  // namespace

std::string_view ToString(CompletenessLabel label) {
  switch (label) {
    case CompletenessLabel::kIncomplete: return "INCOMPLETE";
    case CompletenessLabel::kNormal: return "NORMAL";
    case CompletenessLabel::kBetter: return "BETTER";
    case CompletenessLabel::kBest: return "BEST";
  }
  return "?";
}

std::string_view ToString(QualityLabel label) {
  switch (label) {
    case QualityLabel::kLow: return "LOW";
    case QualityLabel::kMedium: return "MEDIUM";
    case QualityLabel::kHigh: return "HIGH";
  }
  return "?";
}

std::optional<CompletenessLabel> ParseCompletenessLabel(std::string_view text) {
  for (auto label : {CompletenessLabel::kIncomplete, CompletenessLabel::kNormal,
                     CompletenessLabel::kBetter, CompletenessLabel::kBest}) {
    if (ToString(label) == text) return label;
  }
  return std::nullopt;
}

std::optional<QualityLabel> ParseQualityLabel(std::string_view text) {
  const std::string upper = [&] {
    std::string s(text);
    for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
  }();
  for (auto label : {QualityLabel::kLow, QualityLabel::kMedium, QualityLabel::kHigh}) {
    if (ToString(label) == upper) return label;
  }
  return std::nullopt;
}

void ReadScoringConfig(const KeyValueDocument& doc, std::string_view source_name,
                       ScoringWeights* weights) {
  for (const auto& kv : doc.entries) {
    if (kv.section != "scoring") continue;
    const std::string where =
        std::string(source_name) + ":" + std::to_string(kv.line) + ": ";
    if (kv.key != "weights") {
      throw Error(ErrorKind::kParseError, where + "unknown scoring setting " + kv.key);
    }
    std::vector<Rational> parts;
    const std::string value_text = kv.value.value_or("");
    std::string_view rest = value_text;
    while (true) {
      const auto comma = rest.find(',');
      const auto part = ParseFraction(TrimCopy(rest.substr(0, comma)));
      if (!part || *part < 0) {
        throw Error(ErrorKind::kParseError,
                    where + "weights must be three non-negative numbers, e.g. 1, 1, 3");
      }
      parts.push_back(*part);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (parts.size() != 3 || parts[0] + parts[1] + parts[2] == Rational(0)) {
      throw Error(ErrorKind::kParseError,
                  where + "weights must be three non-negative numbers with a positive sum");
    }
    *weights = {parts[0], parts[1], parts[2]};
  }
}

std::optional<Rational> NormalizeAnswer(const CheckDefinition& check, const Answer& answer) {
  if (!AnswerMatchesMetric(check, answer)) {
    throw Error(ErrorKind::kTypeMismatch,
                check.id + ": answer does not match the check's metric");
  }
  switch (answer.type) {
    case Answer::Type::kYes: return Rational(1);
    case Answer::Type::kNo: return Rational(0);
    case Answer::Type::kLevel:
      if (answer.level < 0 || answer.level > 2) {
        throw Error(ErrorKind::kTypeMismatch, check.id + ": level out of range");
      }
      return Rational(answer.level, 2);
    case Answer::Type::kPercent:
      if (answer.percent < 0 || answer.percent > 1) {
        throw Error(ErrorKind::kTypeMismatch,
                    check.id + ": percentage outside 0%..100%");
      }
      return answer.percent;
    case Answer::Type::kNotApplicable: return std::nullopt;
  }
  return std::nullopt;
}

Rational GroupPercentage(const AnswerSheet& sheet, const Checklist& checklist,
                         CheckGroup group) {
  std::vector<Rational> values;
  for (const CheckDefinition* check : checklist.InGroup(group)) {
    const auto value = NormalizeAnswer(*check, *RequireAnswered(sheet, *check).value);
    if (value) values.push_back(*value);
  }
  return Mean(values, EmptyGroupValue(group));
}

CompletenessLabel Sc1Label(const Rational& sc11, const Rational& sc12, const Rational& sc13) {
  if (sc11 < 1 || sc12 < 1) return CompletenessLabel::kIncomplete;
  if (sc13 >= Rational(2, 3)) return CompletenessLabel::kBest;
  if (sc13 >= Rational(1, 3)) return CompletenessLabel::kBetter;
  return CompletenessLabel::kNormal;
}

QualityLabel FinalLabel(const Rational& final_pct) {
  if (final_pct >= Rational(3, 4)) return QualityLabel::kHigh;
  if (final_pct < Rational(11, 20)) return QualityLabel::kLow;
  return QualityLabel::kMedium;
}

ScoreCard FinalScore(const AnswerSheet& sheet, const Checklist& checklist,
                     const ScoringWeights& weights) {
  for (const auto& [id, entry] : sheet.entries) {
    if (!checklist.Find(id)) {
      throw Error(ErrorKind::kSheetMismatch, "requirement " + sheet.requirement_id +
                                                 ": " + id + " is not in the checklist");
    }
  }
  std::vector<std::string> missing;
  for (const auto& check : checklist.checks) {
    const AnswerEntry* entry = sheet.Find(check.id);
    if (!entry || !entry->value) missing.push_back(check.id);
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& id : missing) list += (list.empty() ? "" : ", ") + id;
    throw Error(ErrorKind::kIncompleteSheet,
                "requirement " + sheet.requirement_id + ": unanswered: " + list);
  }

  ScoreCard card;
  card.requirement_id = sheet.requirement_id;
  for (const auto& check : checklist.checks) {
    card.per_check[check.id] = NormalizeAnswer(check, *sheet.Find(check.id)->value);
  }

  auto group_mean = [&](CheckGroup group) {
    std::vector<Rational> values;
    for (const CheckDefinition* check : checklist.InGroup(group)) {
      if (const auto& v = card.per_check.at(check->id)) values.push_back(*v);
    }
    return Mean(values, EmptyGroupValue(group));
  };
  card.sc11_pct = group_mean(CheckGroup::kSC11);
  card.sc12_pct = group_mean(CheckGroup::kSC12);
  card.sc13_pct = group_mean(CheckGroup::kSC13);
  card.sc3_pct = group_mean(CheckGroup::kSC3);

  // SC2: the tool check is a prerequisite; the rest of the group is averaged.
  const auto tool = card.per_check.find(std::string(kToolCheck));
  const bool tool_failed =
      tool != card.per_check.end() && tool->second && *tool->second < 1;
  if (tool_failed) {
    card.sc2_pct = 0;
  } else {
    std::vector<Rational> values;
    for (const CheckDefinition* check : checklist.InGroup(CheckGroup::kSC2)) {
      if (check->id == kToolCheck) continue;
      if (const auto& v = card.per_check.at(check->id)) values.push_back(*v);
    }
    card.sc2_pct = Mean(values, Rational(1));
  }

  for (CheckGroup group : {CheckGroup::kSC11, CheckGroup::kSC12}) {
    for (const CheckDefinition* check : checklist.InGroup(group)) {
      const auto& v = card.per_check.at(check->id);
      if (v && *v < 1) card.gate_failures.push_back(check->id);
    }
  }

  card.sc1_label = Sc1Label(card.sc11_pct, card.sc12_pct, card.sc13_pct);
  if (card.sc1_label == CompletenessLabel::kIncomplete) {
    card.final_label = QualityLabel::kLow;
  } else {
    const Rational total = weights.sc13 + weights.sc2 + weights.sc3;
    if (total <= 0) throw Error(ErrorKind::kInvalidCheckDefinition, "scoring weights sum to zero");
    card.final_pct = (weights.sc13 * card.sc13_pct + weights.sc2 * card.sc2_pct +
                      weights.sc3 * card.sc3_pct) /
                     total;
    card.final_label = FinalLabel(*card.final_pct);
  }
  return card;
}

}  // namespace reqlint
