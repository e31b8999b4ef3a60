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

// Check catalog, tailoring, and answer sheets.
//
// The catalog covers three verification criteria: completeness (groups
// SC1.1 basic, SC1.2 required and SC1.3 optional elements), uniformity (SC2)
// and consistency/correctness (SC3). Feature requests and user stories share
// most checks; story-only variants carry a trailing apostrophe in their id
// ("SC1.1'", "SC3.5'"). A ToolProfile lists which of the six inherent
// tracker qualities (IQ1..IQ6) the team's tool provides; each missing one
// becomes an extra manual check.

#ifndef REQLINT_CHECKLIST_H_
#define REQLINT_CHECKLIST_H_

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "reqlint/keyvalue.h"
#include "reqlint/model.h"
#include "reqlint/rational.h"

namespace reqlint {

enum class CheckGroup { kSC11, kSC12, kSC13, kSC2, kSC3 };
inline constexpr std::array<CheckGroup, 5> kAllGroups = {
    CheckGroup::kSC11, CheckGroup::kSC12, CheckGroup::kSC13, CheckGroup::kSC2,
    CheckGroup::kSC3};

std::string_view ToString(CheckGroup group);
std::optional<CheckGroup> ParseCheckGroup(std::string_view text);

enum class MetricKind { kBinary, kThreeOption, kPercentage };
enum class Automation { kAutomatic, kAssisted, kManual };
enum class Provenance { kAutomatic, kAssisted, kManual };

std::string_view ToString(Automation automation);
std::string_view ToString(Provenance provenance);
std::optional<Provenance> ParseProvenance(std::string_view text);

class KindSet {
 public:
  constexpr KindSet() = default;
  static constexpr KindSet Both() { return KindSet(3); }
  static constexpr KindSet Only(RequirementKind kind) {
    return KindSet(kind == RequirementKind::kFeatureRequest ? 1 : 2);
  }
  constexpr bool Contains(RequirementKind kind) const {
    return (bits_ & Only(kind).bits_) != 0;
  }
  bool operator==(const KindSet&) const = default;

 private:
  constexpr explicit KindSet(std::uint8_t bits) : bits_(bits) {}
  std::uint8_t bits_ = 0;
};

struct CheckDefinition {
  std::string id;
  CheckGroup group = CheckGroup::kSC3;
  std::string title;
  std::string description;
  MetricKind metric = MetricKind::kBinary;
  // Three-option labels ordered worst to best; the stored level index is
  // therefore always "higher is better".
  std::array<std::string, 3> levels;
  Automation automation = Automation::kManual;
  KindSet applicability = KindSet::Both();
  // Binary sub-answers whose mean is the stored percentage (INVEST).
  std::vector<std::string> facets;

  bool operator==(const CheckDefinition&) const = default;
};

// The full catalog for both requirement kinds, in presentation order.
const std::vector<CheckDefinition>& Catalog();

// Ids of the supplemental checks for unsupported inherent qualities.
inline constexpr std::array<std::string_view, 6> kInherentQualityIds = {
    "IQ1", "IQ2", "IQ3", "IQ4", "IQ5", "IQ6"};

struct ToolProfile {
  std::array<bool, 6> iq_supported = {true, true, true, true, true, true};

  bool operator==(const ToolProfile&) const = default;
};

CheckDefinition InherentQualityCheck(int index);  // index 0..5 -> IQ1..IQ6

struct TailoringConfig {
  std::set<std::string> disabled;
  std::vector<CheckDefinition> added;

  bool operator==(const TailoringConfig&) const = default;
};

struct Checklist {
  RequirementKind kind = RequirementKind::kFeatureRequest;
  std::vector<CheckDefinition> checks;  // final, ordered by group
  std::set<std::string> disabled;
  std::vector<CheckDefinition> added;

  const CheckDefinition* Find(std::string_view id) const;
  std::vector<const CheckDefinition*> InGroup(CheckGroup group) const;
  bool operator==(const Checklist&) const = default;
};

// Filters the catalog to `kind`, drops disabled ids, then appends team checks
// and one manual check per unsupported IQ to the end of their group.
// Throws kUnknownCheckId / kDuplicateCheckId / kInvalidCheckDefinition.
Checklist BuildChecklist(RequirementKind kind, const TailoringConfig& tailoring,
                         const ToolProfile& profile);

// ---------------------------------------------------------------------------
// Answers

struct Answer {
  enum class Type { kYes, kNo, kLevel, kPercent, kNotApplicable };

  Type type = Type::kNotApplicable;
  int level = 0;         // kLevel: 0 worst .. 2 best
  Rational percent{0};   // kPercent: in [0,1]

  static Answer Yes() { return {Type::kYes}; }
  static Answer No() { return {Type::kNo}; }
  static Answer Level(int level) { return {Type::kLevel, level}; }
  static Answer Percent(Rational value) { return {Type::kPercent, 0, value}; }
  static Answer NotApplicable() { return {Type::kNotApplicable}; }

  bool operator==(const Answer&) const = default;
};

// True when the answer's type fits the check's metric (n/a always fits).
bool AnswerMatchesMetric(const CheckDefinition& check, const Answer& answer);

// Value as written in answer files: "yes", "a few", "80%", "2/3", "n/a".
std::string FormatAnswer(const CheckDefinition& check, const Answer& answer);

// Throws kTypeMismatch with the valid choices for `check` in the message.
Answer ParseAnswer(const CheckDefinition& check, std::string_view text);

struct AnswerEntry {
  std::optional<Answer> value;  // nullopt = unanswered placeholder
  Provenance provenance = Provenance::kManual;
  std::optional<std::string> evidence;

  bool operator==(const AnswerEntry&) const = default;
};

struct AnswerSheet {
  std::string requirement_id;
  std::map<std::string, AnswerEntry> entries;

  const AnswerEntry* Find(std::string_view check_id) const;
  bool operator==(const AnswerSheet&) const = default;
};

AnswerSheet BlankAnswerSheet(const Checklist& checklist,
                             std::string requirement_id);

struct MergeOptions {
  // Reject manual answers on automatic checks that the analyzer answered.
  bool strict = false;
};

// Manual values win, then analyzer values, else the entry stays unanswered.
// The result holds exactly one entry per check in `checklist`.
AnswerSheet MergeAnswers(const AnswerSheet& automatic, const AnswerSheet& manual,
                         const Checklist& checklist, MergeOptions options = {});

// ---------------------------------------------------------------------------
// Answer files: one [requirement <id>] section per sheet.

using ChecklistLookup =
    std::function<const Checklist*(std::string_view requirement_id)>;

struct AnswerFileOptions {
  // Provenance for entries without an explicit "<id>.provenance" line;
  // nullopt derives it from the check's automation level.
  std::optional<Provenance> default_provenance = Provenance::kManual;
};

std::vector<AnswerSheet> ParseAnswerFile(std::string_view text,
                                         const ChecklistLookup& checklist_for,
                                         std::string_view source_name,
                                         AnswerFileOptions options = {});

struct SheetForOutput {
  const AnswerSheet* sheet;
  const Checklist* checklist;
};

// Writes sheets in checklist order. With `annotate`, each check is preceded
// by a comment listing its title and the accepted answers (templates).
std::string FormatAnswerFile(const std::vector<SheetForOutput>& sheets,
                             bool annotate, bool write_provenance);

// Tailoring sections of a configuration document: [disable], [tool.iq] and
// [add.<group>].
void ReadTailoring(const KeyValueDocument& doc, std::string_view source_name,
                   TailoringConfig* tailoring, ToolProfile* profile);

}  // namespace reqlint

#endif  // REQLINT_CHECKLIST_H_
