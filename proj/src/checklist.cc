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

#include "reqlint/checklist.h"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "reqlint/error.h"

namespace reqlint {

std::string_view ToString(CheckGroup group) {
  switch (group) {
    case CheckGroup::kSC11: return "SC1.1";
    case CheckGroup::kSC12: return "SC1.2";
    case CheckGroup::kSC13: return "SC1.3";
    case CheckGroup::kSC2: return "SC2";
    case CheckGroup::kSC3: return "SC3";
  }
  return "SC3";
}

std::optional<CheckGroup> ParseCheckGroup(std::string_view text) {
  for (CheckGroup group : kAllGroups) {
    if (ToString(group) == text) return group;
  }
  return std::nullopt;
}

std::string_view ToString(Automation automation) {
  switch (automation) {
    case Automation::kAutomatic: return "automatic";
    case Automation::kAssisted: return "assisted";
    case Automation::kManual: return "manual";
  }
  return "manual";
}

std::string_view ToString(Provenance provenance) {
  switch (provenance) {
    case Provenance::kAutomatic: return "automatic";
    case Provenance::kAssisted: return "assisted";
    case Provenance::kManual: return "manual";
  }
  return "manual";
}

std::optional<Provenance> ParseProvenance(std::string_view text) {
  if (text == "automatic") return Provenance::kAutomatic;
  if (text == "assisted") return Provenance::kAssisted;
  if (text == "manual") return Provenance::kManual;
  return std::nullopt;
}

namespace {

constexpr RequirementKind kFR = RequirementKind::kFeatureRequest;
constexpr RequirementKind kUS = RequirementKind::kUserStory;

const std::array<std::string, 3> kDegreeLevels = {"not at all", "a little bit",
                                                  "very much"};
const std::array<std::string, 3> kContradictionLevels = {"a lot", "a few",
                                                         "none"};

CheckDefinition Binary(std::string id, CheckGroup group, std::string title,
                       std::string description, Automation automation,
                       KindSet kinds = KindSet::Both()) {
  CheckDefinition def;
  def.id = std::move(id);
  def.group = group;
  def.title = std::move(title);
  def.description = std::move(description);
  def.metric = MetricKind::kBinary;
  def.automation = automation;
  def.applicability = kinds;
  return def;
}

CheckDefinition ThreeOption(std::string id, std::string title,
                            std::string description,
                            const std::array<std::string, 3>& levels,
                            Automation automation,
                            KindSet kinds = KindSet::Both()) {
  CheckDefinition def = Binary(std::move(id), CheckGroup::kSC3, std::move(title),
                               std::move(description), automation, kinds);
  def.metric = MetricKind::kThreeOption;
  def.levels = levels;
  return def;
}

std::vector<CheckDefinition> MakeCatalog() {
  using enum CheckGroup;
  using enum Automation;
  std::vector<CheckDefinition> c;

  c.push_back(Binary("SC1.1a", kSC11, "Summary and Description",
                     "A description states what is wanted and a short title "
                     "names it.",
                     kAutomatic, KindSet::Only(kFR)));
  c.push_back(Binary("SC1.1'", kSC11, "Role, activity, business value",
                     "The story names who wants it, what they want to do and "
                     "why it is worth doing.",
                     kAutomatic, KindSet::Only(kUS)));
  c.push_back(Binary("SC1.1b", kSC11, "Product and Version",
                     "The product and the product version the request applies "
                     "to are recorded.",
                     kAutomatic));
  c.push_back(Binary("SC1.1c", kSC11, "Relative importance",
                     "Importance is visible through a priority field, a "
                     "severity field or a vote count.",
                     kAutomatic));

  c.push_back(Binary("SC1.2a", kSC12, "Keywords/tags",
                     "At least one keyword or tag so related requests can be "
                     "found together.",
                     kAutomatic));
  c.push_back(Binary("SC1.2b", kSC12, "Rationale",
                     "The author explains why the request matters to them.",
                     kAssisted, KindSet::Only(kFR)));
  c.push_back(Binary("SC1.2'", kSC12, "Acceptance criteria",
                     "The story lists acceptance criteria or tests that decide "
                     "when it is done.",
                     kAutomatic, KindSet::Only(kUS)));
  c.push_back(Binary("SC1.2c", kSC12, "Link to source code for fixed requirement",
                     "Once implemented, the change set or fix version that "
                     "delivered it is recorded.",
                     kAutomatic));

  c.push_back(Binary("SC1.3a", kSC13, "Use case or Scenario",
                     "Steps or situations in which the missing behaviour "
                     "would be used.",
                     kAssisted, KindSet::Only(kFR)));
  c.push_back(Binary("SC1.3b", kSC13, "Screens",
                     "Screenshots of the current state or mock-ups of the "
                     "desired one are attached.",
                     kAutomatic, KindSet::Only(kFR)));
  c.push_back(Binary("SC1.3c", kSC13, "Possible solution",
                     "A patch is attached or comments sketch how it could be "
                     "built.",
                     kAssisted, KindSet::Only(kFR)));
  c.push_back(Binary("SC1.3'", kSC13, "Detailed attachments",
                     "Attachments the team agreed on (models, sketches) add "
                     "detail to the story.",
                     kAssisted, KindSet::Only(kUS)));

  c.push_back(Binary("SC2.1", kSC2, "Issue tracker or other tool should be used",
                     "The requirement is stored in a tracker whose fields give "
                     "every entry the same structure.",
                     kAutomatic));
  {
    CheckDefinition def = Binary("SC2.2", kSC2, "All comments are necessary",
                                 "Share of comments that help follow how the "
                                 "request evolved; social chatter lowers it.",
                                 kAssisted);
    def.metric = MetricKind::kPercentage;
    c.push_back(std::move(def));
  }
  c.push_back(Binary("SC2.3", kSC2, "Stories Uniform",
                     "The story is written in the standard user voice form.",
                     kAutomatic, KindSet::Only(kUS)));
  c.push_back(Binary("SC2.4", kSC2, "Attachments Uniform",
                     "Models in attachments use one standard notation.",
                     kManual, KindSet::Only(kUS)));

  c.push_back(Binary("SC3.1", kSC3, "No contradicting feature requests",
                     "Conflicting requests are linked to each other and one "
                     "of them is closed.",
                     kManual));
  c.push_back(ThreeOption("SC3.2", "No contradicting comments",
                          "How many comments contradict each other without a "
                          "later clarification.",
                          kContradictionLevels, kManual));
  c.push_back(ThreeOption("SC3.3", "Correct language",
                          "Degree to which the text uses full sentences free "
                          "of disturbing spelling or typing errors.",
                          kDegreeLevels, kAssisted));
  c.push_back(Binary("SC3.4", kSC3, "Specify problem",
                     "The problem to be solved is described, even when a "
                     "solution is proposed too.",
                     kManual));
  c.push_back(ThreeOption("SC3.5", "SMART",
                          "Degree to which the request is specific, "
                          "measurable, acceptable, realistic and time-bounded.",
                          kDegreeLevels, kManual, KindSet::Only(kFR)));
  {
    CheckDefinition def = Binary("SC3.5'", kSC3, "INVEST",
                                 "Share of the INVEST properties the story "
                                 "has: independent, negotiable, valuable, "
                                 "estimable, small, testable.",
                                 kManual, KindSet::Only(kUS));
    def.metric = MetricKind::kPercentage;
    def.facets = {"I", "N", "V", "E", "S", "T"};
    c.push_back(std::move(def));
  }
  c.push_back(Binary("SC3.6", kSC3, "Correct summary",
                     "The summary is a short statement of the requested "
                     "feature and the description adds to it.",
                     kAssisted));
  c.push_back(Binary("SC3.7", kSC3, "Atomic",
                     "The entry asks for a single thing.", kAssisted));
  c.push_back(ThreeOption("SC3.8", "Glossary",
                          "Degree to which unfamiliar terms and abbreviations "
                          "are explained inline or in a project glossary.",
                          kDegreeLevels, kManual));
  c.push_back(Binary("SC3.9", kSC3, "No duplicate requests",
                     "Duplicates are marked as such and point at the master "
                     "entry.",
                     kAutomatic));
  c.push_back(Binary("SC3.10", kSC3, "Navigable links",
                     "References to other requests are clickable links or "
                     "short-codes that resolve.",
                     kAutomatic));
  return c;
}

bool ValidCheckId(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isspace(u) || c == '[' || c == ']' || c == '=' || c == '#' ||
        c == '|') {
      return false;
    }
  }
  const std::string lower = ToLowerCopy(id);
  return !(lower.ends_with(".evidence") || lower.ends_with(".provenance"));
}

bool IsCatalogOrIqId(std::string_view id) {
  for (const auto& def : Catalog()) {
    if (def.id == id) return true;
  }
  return std::find(kInherentQualityIds.begin(), kInherentQualityIds.end(), id) !=
         kInherentQualityIds.end();
}

std::string NormalizeCheckKey(std::string_view key) {
  // Accept the typographic prime (U+2032) as well as the ASCII apostrophe.
  std::string out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (key.substr(i, 3) == "\xE2\x80\xB2") {
      out.push_back('\'');
      i += 2;
    } else {
      out.push_back(key[i]);
    }
  }
  return out;
}

std::string CollapseSpaces(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : TrimCopy(text)) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = true;
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

std::string ChoicesText(const CheckDefinition& check) {
  switch (check.metric) {
    case MetricKind::kBinary:
      return "yes, no, n/a";
    case MetricKind::kThreeOption:
      return check.levels[0] + ", " + check.levels[1] + ", " + check.levels[2] +
             ", n/a";
    case MetricKind::kPercentage:
      return "a percentage such as 80% or a fraction such as 3/4, or n/a";
  }
  return "";
}

std::optional<bool> ParseYesNo(std::string_view text) {
  const std::string v = CollapseSpaces(text);
  if (v == "yes" || v == "y" || v == "true") return true;
  if (v == "no" || v == "n" || v == "false") return false;
  return std::nullopt;
}

bool IsNotApplicable(std::string_view text) {
  const std::string v = CollapseSpaces(text);
  return v == "n/a" || v == "na" || v == "not applicable";
}

bool IsPlaceholder(std::string_view text) {
  const std::string v = TrimCopy(text);
  return v.empty() || v == "?";
}

}  // namespace

const std::vector<CheckDefinition>& Catalog() {
  static const std::vector<CheckDefinition> catalog = MakeCatalog();
  return catalog;
}

CheckDefinition InherentQualityCheck(int index) {
  using enum CheckGroup;
  struct Row {
    CheckGroup group;
    const char* title;
    const char* description;
  };
  static const Row rows[6] = {
      {kSC3, "Unique ID present",
       "Every requirement carries an identifier that no other requirement "
       "uses."},
      {kSC12, "History recorded",
       "Every change to the requirement is kept and can be looked up."},
      {kSC12, "Source recorded",
       "The author of the requirement and of each comment is recorded."},
      {kSC12, "Status recorded",
       "A status field shows where the requirement is in the workflow."},
      {kSC12, "Modifiable storage",
       "Individual requirements can be changed without touching others."},
      {kSC12, "Organized storage",
       "Requirements carry attributes and can be searched and grouped."},
  };
  const Row& row = rows[index];
  return Binary(std::string(kInherentQualityIds[index]), row.group, row.title,
                row.description, Automation::kManual);
}

const CheckDefinition* Checklist::Find(std::string_view id) const {
  for (const auto& def : checks) {
    if (def.id == id) return &def;
  }
  return nullptr;
}

std::vector<const CheckDefinition*> Checklist::InGroup(CheckGroup group) const {
  std::vector<const CheckDefinition*> out;
  for (const auto& def : checks) {
    if (def.group == group) out.push_back(&def);
  }
  return out;
}

Checklist BuildChecklist(RequirementKind kind, const TailoringConfig& tailoring,
                         const ToolProfile& profile) {
  for (const auto& id : tailoring.disabled) {
    if (!IsCatalogOrIqId(id)) {
      bool team = false;
      for (const auto& def : tailoring.added) team = team || def.id == id;
      if (team) {
        throw Error(ErrorKind::kInvalidCheckDefinition,
                    "check " + id + " is both added and disabled");
      }
      throw Error(ErrorKind::kUnknownCheckId,
                  "tailoring disables unknown check " + id);
    }
  }
  std::unordered_set<std::string> team_ids;
  for (const auto& def : tailoring.added) {
    if (!ValidCheckId(def.id)) {
      throw Error(ErrorKind::kInvalidCheckDefinition,
                  "invalid team check id \"" + def.id + "\"");
    }
    if (IsCatalogOrIqId(def.id) || !team_ids.insert(def.id).second) {
      throw Error(ErrorKind::kDuplicateCheckId,
                  "team check " + def.id + " collides with an existing check");
    }
    if (def.metric == MetricKind::kThreeOption) {
      const auto& l = def.levels;
      if (l[0].empty() || l[1].empty() || l[2].empty() || l[0] == l[1] ||
          l[1] == l[2] || l[0] == l[2]) {
        throw Error(ErrorKind::kInvalidCheckDefinition,
                    "team check " + def.id + " needs three distinct labels");
      }
    }
  }

  Checklist out;
  out.kind = kind;
  out.disabled = tailoring.disabled;
  out.added = tailoring.added;
  for (CheckGroup group : kAllGroups) {
    for (const auto& def : Catalog()) {
      if (def.group == group && def.applicability.Contains(kind) &&
          !tailoring.disabled.contains(def.id)) {
        out.checks.push_back(def);
      }
    }
    for (const auto& def : tailoring.added) {
      if (def.group == group && def.applicability.Contains(kind)) {
        out.checks.push_back(def);
      }
    }
    for (int i = 0; i < 6; ++i) {
      if (profile.iq_supported[i]) continue;
      CheckDefinition def = InherentQualityCheck(i);
      if (def.group == group && !tailoring.disabled.contains(def.id)) {
        out.checks.push_back(std::move(def));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

bool AnswerMatchesMetric(const CheckDefinition& check, const Answer& answer) {
  switch (answer.type) {
    case Answer::Type::kNotApplicable:
      return true;
    case Answer::Type::kYes:
    case Answer::Type::kNo:
      return check.metric == MetricKind::kBinary;
    case Answer::Type::kLevel:
      return check.metric == MetricKind::kThreeOption && answer.level >= 0 &&
             answer.level <= 2;
    case Answer::Type::kPercent:
      return check.metric == MetricKind::kPercentage && answer.percent >= 0 &&
             answer.percent <= 1;
  }
  return false;
}

std::string FormatAnswer(const CheckDefinition& check, const Answer& answer) {
  switch (answer.type) {
    case Answer::Type::kYes: return "yes";
    case Answer::Type::kNo: return "no";
    case Answer::Type::kNotApplicable: return "n/a";
    case Answer::Type::kLevel:
      return check.levels[static_cast<std::size_t>(std::clamp(answer.level, 0, 2))];
    case Answer::Type::kPercent: {
      // Exact decimal percent when one exists with at most four decimals.
      Rational scaled = answer.percent * Rational(100);
      for (int decimals = 0; decimals <= 4; ++decimals) {
        if (scaled.denominator() == 1) {
          std::string digits = std::to_string(scaled.numerator());
          if (decimals > 0) {
            while (static_cast<int>(digits.size()) <= decimals) {
              digits.insert(digits.begin(), '0');
            }
            digits.insert(digits.end() - decimals, '.');
          }
          return digits + "%";
        }
        scaled *= 10;
      }
      return FormatFraction(answer.percent);
    }
  }
  return "?";
}

Answer ParseAnswer(const CheckDefinition& check, std::string_view text) {
  if (IsNotApplicable(text)) return Answer::NotApplicable();
  switch (check.metric) {
    case MetricKind::kBinary:
      if (auto yes = ParseYesNo(text)) return *yes ? Answer::Yes() : Answer::No();
      break;
    case MetricKind::kThreeOption: {
      const std::string v = CollapseSpaces(text);
      for (int i = 0; i < 3; ++i) {
        if (v == CollapseSpaces(check.levels[static_cast<std::size_t>(i)])) {
          return Answer::Level(i);
        }
      }
      break;
    }
    case MetricKind::kPercentage: {
      auto value = ParsePercent(text);
      if (!value) value = ParseFraction(text);
      if (value && *value >= 0 && *value <= 1) return Answer::Percent(*value);
      break;
    }
  }
  throw Error(ErrorKind::kTypeMismatch,
              check.id + ": invalid answer '" + TrimCopy(text) +
                  "'; expected one of: " + ChoicesText(check));
}

const AnswerEntry* AnswerSheet::Find(std::string_view check_id) const {
  auto it = entries.find(std::string(check_id));
  return it == entries.end() ? nullptr : &it->second;
}

AnswerSheet BlankAnswerSheet(const Checklist& checklist,
                             std::string requirement_id) {
  AnswerSheet sheet;
  sheet.requirement_id = std::move(requirement_id);
  for (const auto& def : checklist.checks) {
    sheet.entries.emplace(def.id, AnswerEntry{});
  }
  return sheet;
}

AnswerSheet MergeAnswers(const AnswerSheet& automatic, const AnswerSheet& manual,
                         const Checklist& checklist, MergeOptions options) {
  if (automatic.requirement_id != manual.requirement_id) {
    throw Error(ErrorKind::kSheetMismatch,
                "answer sheets for different requirements: \"" +
                    automatic.requirement_id + "\" vs \"" +
                    manual.requirement_id + "\"");
  }
  for (const auto* sheet : {&automatic, &manual}) {
    for (const auto& [id, entry] : sheet->entries) {
      const CheckDefinition* def = checklist.Find(id);
      if (!def) {
        throw Error(ErrorKind::kSheetMismatch,
                    "requirement " + sheet->requirement_id + ": check " + id +
                        " is not part of the checklist");
      }
      if (entry.value && !AnswerMatchesMetric(*def, *entry.value)) {
        throw Error(ErrorKind::kTypeMismatch,
                    "requirement " + sheet->requirement_id + ": answer for " +
                        id + " does not fit its metric");
      }
    }
  }

  AnswerSheet out;
  out.requirement_id = manual.requirement_id;
  for (const auto& def : checklist.checks) {
    const AnswerEntry* from_manual = manual.Find(def.id);
    const AnswerEntry* from_auto = automatic.Find(def.id);
    const bool has_manual = from_manual && from_manual->value;
    const bool has_auto = from_auto && from_auto->value;
    if (has_manual && has_auto && options.strict &&
        def.automation == Automation::kAutomatic &&
        from_auto->provenance != Provenance::kManual &&
        *from_manual->value != *from_auto->value) {
      throw Error(ErrorKind::kOverrideRejected,
                  "requirement " + manual.requirement_id + ": " + def.id +
                      " is decided automatically; strict mode rejects the "
                      "manual override");
    }
    if (has_manual) {
      out.entries.emplace(def.id, *from_manual);
    } else if (has_auto) {
      out.entries.emplace(def.id, *from_auto);
    } else if (from_auto) {
      out.entries.emplace(def.id, *from_auto);
    } else if (from_manual) {
      out.entries.emplace(def.id, *from_manual);
    } else {
      out.entries.emplace(def.id, AnswerEntry{});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct PendingFacets {
  std::map<std::string, std::optional<Answer>> answers;
  int line = 0;
};

Provenance DefaultProvenance(const CheckDefinition& def,
                             const AnswerFileOptions& options) {
  if (options.default_provenance) return *options.default_provenance;
  switch (def.automation) {
    case Automation::kAutomatic: return Provenance::kAutomatic;
    case Automation::kAssisted: return Provenance::kAssisted;
    case Automation::kManual: return Provenance::kManual;
  }
  return Provenance::kManual;
}

}  // namespace

std::vector<AnswerSheet> ParseAnswerFile(std::string_view text,
                                         const ChecklistLookup& checklist_for,
                                         std::string_view source_name,
                                         AnswerFileOptions options) {
  const KeyValueDocument doc = ParseKeyValue(text, source_name);

  std::vector<AnswerSheet> sheets;
  std::map<std::string, std::size_t> sheet_index;
  // (requirement, check) -> facet answers still to be combined.
  std::map<std::pair<std::string, std::string>, PendingFacets> facets;
  std::set<std::pair<std::string, std::string>> seen_keys;

  for (const auto& kv : doc.entries) {
    const std::string where =
        std::string(source_name) + ":" + std::to_string(kv.line) + ": ";
    if (!kv.section.starts_with("requirement ")) {
      throw Error(ErrorKind::kParseError,
                  where + "answers must be inside a [requirement <id>] section");
    }
    const std::string req_id = TrimCopy(kv.section.substr(12));
    const Checklist* checklist = checklist_for(req_id);
    if (!checklist) {
      throw Error(ErrorKind::kParseError,
                  where + "unknown requirement \"" + req_id + "\"");
    }
    auto [slot, inserted] = sheet_index.emplace(req_id, sheets.size());
    if (inserted) sheets.push_back(AnswerSheet{req_id, {}});
    AnswerSheet& sheet = sheets[slot->second];

    const std::string key = NormalizeCheckKey(kv.key);
    if (!seen_keys.emplace(req_id, key).second) {
      throw Error(ErrorKind::kParseError,
                  where + "requirement " + req_id + ": " + key +
                      " is given more than once");
    }
    const std::string value = kv.value.value_or("");

    try {
      if (const CheckDefinition* def = checklist->Find(key)) {
        AnswerEntry& entry = sheet.entries[key];
        if (!IsPlaceholder(value)) entry.value = ParseAnswer(*def, value);
        if (!seen_keys.contains({req_id, key + ".provenance"})) {
          entry.provenance = DefaultProvenance(*def, options);
        }
        continue;
      }
      const auto dot = key.rfind('.');
      const CheckDefinition* base =
          dot == std::string::npos ? nullptr : checklist->Find(key.substr(0, dot));
      if (!base) {
        throw Error(ErrorKind::kUnknownCheckId,
                    "requirement " + req_id + ": unknown check " + key);
      }
      const std::string suffix = key.substr(dot + 1);
      if (suffix == "evidence") {
        AnswerEntry& entry = sheet.entries[base->id];
        if (!seen_keys.contains({req_id, base->id})) {
          entry.provenance = DefaultProvenance(*base, options);
        }
        if (!value.empty()) entry.evidence = value;
      } else if (suffix == "provenance") {
        auto provenance = ParseProvenance(ToLowerCopy(value));
        if (!provenance) {
          throw Error(ErrorKind::kParseError,
                      base->id + ": provenance must be automatic, assisted or "
                                 "manual");
        }
        sheet.entries[base->id].provenance = *provenance;
      } else if (std::find(base->facets.begin(), base->facets.end(), suffix) !=
                 base->facets.end()) {
        CheckDefinition facet_def = *base;
        facet_def.id = key;
        facet_def.metric = MetricKind::kBinary;
        auto& pending = facets[{req_id, base->id}];
        pending.line = kv.line;
        pending.answers[suffix] = IsPlaceholder(value)
                                      ? std::nullopt
                                      : std::optional(ParseAnswer(facet_def, value));
      } else {
        throw Error(ErrorKind::kUnknownCheckId,
                    "requirement " + req_id + ": unknown check " + key);
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kParseError &&
          std::string_view(e.what()).starts_with(source_name)) {
        throw;
      }
      throw Error(e.kind(), where + e.what());
    }
  }

  for (auto& [key, pending] : facets) {
    const auto& [req_id, check_id] = key;
    AnswerSheet& sheet = sheets[sheet_index.at(req_id)];
    const Checklist* checklist = checklist_for(req_id);
    const CheckDefinition* def = checklist->Find(check_id);
    const std::string where =
        std::string(source_name) + ":" + std::to_string(pending.line) + ": ";
    if (seen_keys.contains({req_id, check_id})) {
      throw Error(ErrorKind::kParseError,
                  where + check_id + " is answered both directly and per facet");
    }
    int answered = 0, yes = 0, not_applicable = 0;
    for (const auto& facet : def->facets) {
      auto it = pending.answers.find(facet);
      if (it == pending.answers.end() || !it->second) continue;
      ++answered;
      if (it->second->type == Answer::Type::kYes) ++yes;
      if (it->second->type == Answer::Type::kNotApplicable) ++not_applicable;
    }
    AnswerEntry& entry = sheet.entries[check_id];
    if (!seen_keys.contains({req_id, check_id + ".provenance"})) {
      entry.provenance = DefaultProvenance(*def, options);
    }
    if (answered == 0) continue;
    if (answered != static_cast<int>(def->facets.size())) {
      throw Error(ErrorKind::kIncompleteSheet,
                  where + "requirement " + req_id + ": " + check_id +
                      " needs an answer for every facet");
    }
    const int counted = answered - not_applicable;
    entry.value = counted == 0 ? Answer::NotApplicable()
                               : Answer::Percent(Rational(yes, counted));
  }
  return sheets;
}

namespace {

std::string SingleLine(std::string_view text) {
  std::string out;
  for (char c : text) out.push_back(c == '\n' || c == '\r' ? ' ' : c);
  return TrimCopy(out);
}

}  // namespace

std::string FormatAnswerFile(const std::vector<SheetForOutput>& sheets,
                             bool annotate, bool write_provenance) {
  std::string out;
  bool first = true;
  for (const auto& [sheet, checklist] : sheets) {
    if (!first) out += "\n";
    first = false;
    out += "[requirement " + sheet->requirement_id + "]\n";
    for (const auto& def : checklist->checks) {
      const AnswerEntry* entry = sheet->Find(def.id);
      if (annotate) {
        out += "# " + def.id + " " + def.title + " (" + ChoicesText(def) + ")";
        if (!def.facets.empty()) {
          out += "; or answer each facet with yes/no";
        }
        out += "\n";
      }
      const bool answered = entry && entry->value;
      if (!answered && !def.facets.empty() && annotate) {
        for (const auto& facet : def.facets) {
          out += def.id + "." + facet + " = ?\n";
        }
      } else {
        out += def.id + " = " +
               (answered ? FormatAnswer(def, *entry->value) : std::string("?")) +
               "\n";
      }
      if (entry && write_provenance && answered) {
        out += def.id + ".provenance = " +
               std::string(ToString(entry->provenance)) + "\n";
      }
      if (entry && entry->evidence) {
        out += def.id + ".evidence = " + SingleLine(*entry->evidence) + "\n";
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

void ReadTailoring(const KeyValueDocument& doc, std::string_view source_name,
                   TailoringConfig* tailoring, ToolProfile* profile) {
  for (const auto& kv : doc.entries) {
    const std::string where =
        std::string(source_name) + ":" + std::to_string(kv.line) + ": ";
    if (kv.section == "disable") {
      if (kv.value) {
        auto flag = ParseYesNo(*kv.value);
        if (!flag) {
          throw Error(ErrorKind::kParseError,
                      where + "expected yes/no for " + kv.key);
        }
        if (!*flag) continue;
      }
      tailoring->disabled.insert(NormalizeCheckKey(kv.key));
    } else if (kv.section == "tool.iq") {
      const auto it = std::find(kInherentQualityIds.begin(),
                                kInherentQualityIds.end(), kv.key);
      if (it == kInherentQualityIds.end()) {
        throw Error(ErrorKind::kParseError,
                    where + "unknown inherent quality " + kv.key);
      }
      auto flag = kv.value ? ParseYesNo(*kv.value) : std::optional<bool>(true);
      if (!flag) {
        throw Error(ErrorKind::kParseError, where + "expected yes/no for " + kv.key);
      }
      profile->iq_supported[static_cast<std::size_t>(
          it - kInherentQualityIds.begin())] = *flag;
    } else if (kv.section.starts_with("add.")) {
      const auto group = ParseCheckGroup(kv.section.substr(4));
      if (!group) {
        throw Error(ErrorKind::kParseError,
                    where + "team checks must join an existing group, not " +
                        kv.section.substr(4));
      }
      // "<metric> | <title> | <description>"
      std::vector<std::string> parts;
      const std::string value = kv.value.value_or("");
      std::string_view rest = value;
      while (true) {
        const auto bar = rest.find('|');
        parts.push_back(TrimCopy(rest.substr(0, bar)));
        if (bar == std::string_view::npos) break;
        rest.remove_prefix(bar + 1);
      }
      if (parts.size() < 2 || parts[1].empty()) {
        throw Error(ErrorKind::kParseError,
                    where + kv.key + ": expected '<metric> | <title> [| <description>]'");
      }
      CheckDefinition def;
      def.id = NormalizeCheckKey(kv.key);
      def.group = *group;
      def.title = parts[1];
      def.description = parts.size() > 2 ? parts[2] : "";
      def.automation = Automation::kManual;
      const std::string metric = CollapseSpaces(parts[0]);
      if (metric == "yes/no" || metric == "binary") {
        def.metric = MetricKind::kBinary;
      } else if (metric == "percentage" || metric == "%") {
        def.metric = MetricKind::kPercentage;
      } else {
        std::vector<std::string> labels;
        std::string_view spec = parts[0];
        while (true) {
          const auto lt = spec.find('<');
          labels.push_back(TrimCopy(spec.substr(0, lt)));
          if (lt == std::string_view::npos) break;
          spec.remove_prefix(lt + 1);
        }
        if (labels.size() != 3) {
          throw Error(ErrorKind::kInvalidCheckDefinition,
                      where + kv.key +
                          ": metric must be yes/no, percentage or "
                          "'worst < middle < best'");
        }
        def.metric = MetricKind::kThreeOption;
        def.levels = {labels[0], labels[1], labels[2]};
      }
      tailoring->added.push_back(std::move(def));
    }
  }
}

}  // namespace reqlint
