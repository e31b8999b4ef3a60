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


#include "reqlint/reporting.h"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "reqlint/error.h"
#include "reqlint/keyvalue.h"

namespace reqlint {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view TypeName(Answer::Type type) {
  switch (type) {
    case Answer::Type::kYes: return "yes";
    case Answer::Type::kNo: return "no";
    case Answer::Type::kLevel: return "level";
    case Answer::Type::kPercent: return "percent";
    case Answer::Type::kNotApplicable: return "n/a";
  }
  return "?";
}

std::string Cell(std::string_view text, std::size_t limit = 0) {
  std::string out;
  for (char c : text) {
    if (c == '\n' || c == '\r' || c == '\t') out.push_back(' ');
    else if (c == '|') out += "\\|";
    else out.push_back(c);
  }
  if (limit && out.size() > limit) {
    std::size_t cut = limit;
    // Do not split a UTF-8 sequence.
    while (cut > 0 && (static_cast<unsigned char>(out[cut]) & 0xC0) == 0x80) --cut;
    out = out.substr(0, cut) + "...";
  }
  return out;
}

std::string ValueText(const std::optional<Rational>& value) {
  return value ? FormatFraction(*value) : "n/a";
}

std::string JoinIds(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) out += (out.empty() ? "" : ", ") + id;
  return out;
}

std::string Outcome(const ScoreCard& card) {
  std::string out = "SC1: " + std::string(ToString(card.sc1_label)) + " → final: ";
  if (card.final_pct) {
    out += FormatScore(*card.final_pct) + " — " + std::string(ToString(card.final_label));
  } else {
    out += ToString(card.final_label);
  }
  return out;
}

ordered_json AnswerToJson(const Answer& a) {
  ordered_json j;
  j["type"] = std::string(TypeName(a.type));
  if (a.type == Answer::Type::kLevel) j["level"] = a.level;
  if (a.type == Answer::Type::kPercent) j["percent"] = FormatFraction(a.percent);
  return j;
}

ordered_json ItemToJson(const ScoredRequirement& item) {
  ordered_json j;
  j["requirement_id"] = item.card->requirement_id;
  if (item.requirement) j["summary"] = item.requirement->summary;
  ordered_json entries = ordered_json::array();
  for (const auto& [id, entry] : item.sheet->entries) {
    ordered_json e;
    e["check"] = id;
    if (item.checklist) {
      if (const CheckDefinition* def = item.checklist->Find(id)) {
        e["title"] = def->title;
        if (entry.value) e["display"] = FormatAnswer(*def, *entry.value);
      }
    }
    e["value"] = entry.value ? AnswerToJson(*entry.value) : ordered_json(nullptr);
    e["provenance"] = std::string(ToString(entry.provenance));
    if (entry.evidence) e["evidence"] = *entry.evidence;
    entries.push_back(std::move(e));
  }
  ordered_json sheet;
  sheet["requirement_id"] = item.sheet->requirement_id;
  sheet["entries"] = std::move(entries);
  j["sheet"] = std::move(sheet);

  const ScoreCard& c = *item.card;
  ordered_json card;
  card["sc11_pct"] = FormatFraction(c.sc11_pct);
  card["sc12_pct"] = FormatFraction(c.sc12_pct);
  card["sc13_pct"] = FormatFraction(c.sc13_pct);
  card["sc1_label"] = std::string(ToString(c.sc1_label));
  card["sc2_pct"] = FormatFraction(c.sc2_pct);
  card["sc3_pct"] = FormatFraction(c.sc3_pct);
  card["final_pct"] = c.final_pct ? ordered_json(FormatFraction(*c.final_pct)) : ordered_json(nullptr);
  card["final_label"] = std::string(ToString(c.final_label));
  ordered_json per_check = ordered_json::object();
  for (const auto& [id, v] : c.per_check) per_check[id] = ValueText(v);
  card["per_check"] = std::move(per_check);
  ordered_json gate = ordered_json::array();
  for (const auto& id : c.gate_failures) gate.push_back(id);
  card["gate_failures"] = std::move(gate);
  j["card"] = std::move(card);
  return j;
}

[[noreturn]] void Malformed(const std::string& message) {
  throw Error(ErrorKind::kMalformedDocument, "structured report: " + message);
}

const json& Need(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) Malformed(std::string("missing '") + key + "'");
  return obj[key];
}

std::string NeedString(const json& obj, const char* key) {
  const json& v = Need(obj, key);
  if (!v.is_string()) Malformed(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

Rational NeedFraction(const json& obj, const char* key) {
  const auto r = ParseFraction(NeedString(obj, key));
  if (!r) Malformed(std::string("'") + key + "' is not a fraction");
  return *r;
}

Answer AnswerFromJson(const json& j) {
  const std::string type = NeedString(j, "type");
  if (type == "yes") return Answer::Yes();
  if (type == "no") return Answer::No();
  if (type == "n/a") return Answer::NotApplicable();
  if (type == "level") {
    const json& level = Need(j, "level");
    if (!level.is_number_integer()) Malformed("'level' must be an integer");
    return Answer::Level(level.get<int>());
  }
  if (type == "percent") return Answer::Percent(NeedFraction(j, "percent"));
  Malformed("unknown answer type '" + type + "'");
}

StructuredEntry EntryFromJson(const json& j) {
  StructuredEntry out;
  const json& sheet = Need(j, "sheet");
  out.sheet.requirement_id = NeedString(sheet, "requirement_id");
  const json& entries = Need(sheet, "entries");
  if (!entries.is_array()) Malformed("'entries' must be an array");
  for (const auto& e : entries) {
    AnswerEntry entry;
    const json& value = Need(e, "value");
    if (!value.is_null()) entry.value = AnswerFromJson(value);
    const auto provenance = ParseProvenance(NeedString(e, "provenance"));
    if (!provenance) Malformed("unknown provenance");
    entry.provenance = *provenance;
    if (e.contains("evidence")) entry.evidence = NeedString(e, "evidence");
    out.sheet.entries[NeedString(e, "check")] = std::move(entry);
  }

  const json& card = Need(j, "card");
  ScoreCard& c = out.card;
  c.requirement_id = NeedString(j, "requirement_id");
  c.sc11_pct = NeedFraction(card, "sc11_pct");
  c.sc12_pct = NeedFraction(card, "sc12_pct");
  c.sc13_pct = NeedFraction(card, "sc13_pct");
  c.sc2_pct = NeedFraction(card, "sc2_pct");
  c.sc3_pct = NeedFraction(card, "sc3_pct");
  const auto sc1 = ParseCompletenessLabel(NeedString(card, "sc1_label"));
  if (!sc1) Malformed("unknown sc1_label");
  c.sc1_label = *sc1;
  if (!Need(card, "final_pct").is_null()) c.final_pct = NeedFraction(card, "final_pct");
  const auto label = ParseQualityLabel(NeedString(card, "final_label"));
  if (!label) Malformed("unknown final_label");
  c.final_label = *label;
  const json& per_check = Need(card, "per_check");
  if (!per_check.is_object()) Malformed("'per_check' must be an object");
  for (const auto& [id, v] : per_check.items()) {
    if (!v.is_string()) Malformed("per_check values must be strings");
    const std::string text = v.get<std::string>();
    if (text == "n/a") {
      c.per_check[id] = std::nullopt;
    } else {
      const auto r = ParseFraction(text);
      if (!r) Malformed("per_check value '" + text + "' is not a fraction");
      c.per_check[id] = *r;
    }
  }
  const json& gate = Need(card, "gate_failures");
  if (!gate.is_array()) Malformed("'gate_failures' must be an array");
  for (const auto& id : gate) {
    if (!id.is_string()) Malformed("gate_failures must hold strings");
    c.gate_failures.push_back(id.get<std::string>());
  }
  return out;
}

std::string MarkdownCard(const ScoredRequirement& item) {
  const ScoreCard& card = *item.card;
  std::ostringstream out;
  out << "## " << card.requirement_id;
  if (item.requirement && !item.requirement->summary.empty()) {
    out << ": " << Cell(item.requirement->summary);
  }
  out << "\n\n";
  out << "| Check | Title | Answer | Value | Provenance | Evidence |\n";
  out << "|---|---|---|---|---|---|\n";
  auto row = [&](const CheckDefinition* def, const std::string& id) {
    const AnswerEntry* entry = item.sheet->Find(id);
    std::string answer = "?";
    if (entry && entry->value) {
      answer = def ? FormatAnswer(*def, *entry->value) : std::string(TypeName(entry->value->type));
    }
    const auto it = card.per_check.find(id);
    const std::string value = it == card.per_check.end() ? "" : ValueText(it->second);
    out << "| " << id << " | " << Cell(def ? def->title : "") << " | " << Cell(answer) << " | "
        << value << " | " << (entry ? ToString(entry->provenance) : "") << " | "
        << Cell(entry && entry->evidence ? *entry->evidence : "", kEvidenceLimit) << " |\n";
  };
  if (item.checklist) {
    for (const auto& check : item.checklist->checks) row(&check, check.id);
  } else {
    for (const auto& [id, v] : card.per_check) row(nullptr, id);
  }
  out << "\n| Group | Score |\n|---|---|\n";
  out << "| SC1.1 | " << FormatScore(card.sc11_pct) << " |\n";
  out << "| SC1.2 | " << FormatScore(card.sc12_pct) << " |\n";
  out << "| SC1.3 | " << FormatScore(card.sc13_pct) << " |\n";
  out << "| SC2 | " << FormatScore(card.sc2_pct) << " |\n";
  out << "| SC3 | " << FormatScore(card.sc3_pct) << " |\n\n";
  out << Outcome(card) << "\n";
  if (!card.gate_failures.empty()) {
    out << "\nFailing elements:\n";
    for (const auto& id : card.gate_failures) {
      const CheckDefinition* def = item.checklist ? item.checklist->Find(id) : nullptr;
      out << "- " << id;
      if (def) out << " " << def->title;
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace

std::optional<ReportFormat> ParseReportFormat(std::string_view text) {
  if (text == "markdown") return ReportFormat::kMarkdown;
  if (text == "structured") return ReportFormat::kStructured;
  return std::nullopt;
}

std::string FormatScore(const Rational& value) {
  return FormatPercentOneDecimal(value) + " (" + FormatFraction(value) + ")";
}

std::string RenderScorecard(const ScoredRequirement& item, ReportFormat format) {
  if (format == ReportFormat::kMarkdown) return MarkdownCard(item);
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  const ordered_json body = ItemToJson(item);
  for (auto& [key, value] : body.items()) j[key] = value;
  return j.dump(2) + "\n";
}

std::string RenderReport(const std::vector<ScoredRequirement>& items, ReportFormat format) {
  if (format == ReportFormat::kMarkdown) {
    std::string out = "# Requirement quality report\n";
    for (const auto& item : items) out += "\n" + MarkdownCard(item);
    return out;
  }
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  ordered_json reports = ordered_json::array();
  for (const auto& item : items) reports.push_back(ItemToJson(item));
  j["reports"] = std::move(reports);
  return j.dump(2) + "\n";
}

std::vector<StructuredEntry> ParseStructuredReport(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParseError, std::string("structured report: ") + e.what());
  }
  if (!root.is_object()) Malformed("not an object");
  const json& version = Need(root, "schema_version");
  if (!version.is_number_integer() || version.get<int>() != kReportSchemaVersion) {
    throw Error(ErrorKind::kSchemaVersionError,
                "structured report: unsupported schema_version " + version.dump());
  }
  std::vector<StructuredEntry> out;
  if (root.contains("reports")) {
    const json& reports = root["reports"];
    if (!reports.is_array()) Malformed("'reports' must be an array");
    for (const auto& r : reports) out.push_back(EntryFromJson(r));
  } else {
    out.push_back(EntryFromJson(root));
  }
  return out;
}

std::vector<const ScoreCard*> RankWorst(const std::vector<ScoreCard>& cards) {
  std::vector<const ScoreCard*> out;
  for (const auto& c : cards) out.push_back(&c);
  std::sort(out.begin(), out.end(), [](const ScoreCard* a, const ScoreCard* b) {
    if (a->final_pct.has_value() != b->final_pct.has_value()) return !a->final_pct.has_value();
    if (a->final_pct && *a->final_pct != *b->final_pct) return *a->final_pct < *b->final_pct;
    return a->requirement_id < b->requirement_id;
  });
  return out;
}

std::string RenderCorpusSummary(const std::vector<ScoreCard>& cards, const SummaryOptions& options) {
  if (cards.empty()) throw Error(ErrorKind::kEmptyInput, "no score cards to summarize");
  const auto n = static_cast<std::int64_t>(cards.size());
  std::ostringstream out;
  out << "# Corpus summary\n\nRequirements: " << n << "\n\n## Final labels\n\n";
  for (auto label : {QualityLabel::kLow, QualityLabel::kMedium, QualityLabel::kHigh}) {
    const auto count = std::count_if(cards.begin(), cards.end(),
                                     [&](const ScoreCard& c) { return c.final_label == label; });
    out << ToString(label) << " " << count << " ("
        << FormatPercentOneDecimal(Rational(static_cast<std::int64_t>(count), n)) << ")\n";
  }
  out << "\n## Completeness labels\n\n";
  for (auto label : {CompletenessLabel::kIncomplete, CompletenessLabel::kNormal,
                     CompletenessLabel::kBetter, CompletenessLabel::kBest}) {
    const auto count = std::count_if(cards.begin(), cards.end(),
                                     [&](const ScoreCard& c) { return c.sc1_label == label; });
    out << ToString(label) << " " << count << " ("
        << FormatPercentOneDecimal(Rational(static_cast<std::int64_t>(count), n)) << ")\n";
  }
  out << "\n## Mean group scores\n\n";
  auto mean = [&](auto field) {
    Rational sum{0};
    for (const auto& c : cards) sum += field(c);
    return sum / n;
  };
  out << "SC1.1 " << FormatScore(mean([](const ScoreCard& c) { return c.sc11_pct; })) << "\n";
  out << "SC1.2 " << FormatScore(mean([](const ScoreCard& c) { return c.sc12_pct; })) << "\n";
  out << "SC1.3 " << FormatScore(mean([](const ScoreCard& c) { return c.sc13_pct; })) << "\n";
  out << "SC2 " << FormatScore(mean([](const ScoreCard& c) { return c.sc2_pct; })) << "\n";
  out << "SC3 " << FormatScore(mean([](const ScoreCard& c) { return c.sc3_pct; })) << "\n";
  Rational final_sum{0};
  std::int64_t scored = 0;
  for (const auto& c : cards) {
    if (c.final_pct) {
      final_sum += *c.final_pct;
      ++scored;
    }
  }
  if (scored) {
    out << "Final " << FormatScore(final_sum / scored) << " over " << scored << " complete requirement"
        << (scored == 1 ? "" : "s") << "\n";
  } else {
    out << "Final n/a (every requirement is incomplete)\n";
  }
  out << "\n## Worst requirements\n\n";
  const auto ranked = RankWorst(cards);
  for (std::size_t i = 0; i < ranked.size() && i < options.worst; ++i) {
    const ScoreCard& c = *ranked[i];
    out << i + 1 << ". " << c.requirement_id << ": " << Outcome(c);
    if (!c.gate_failures.empty()) out << " (failing: " << JoinIds(c.gate_failures) << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace reqlint
