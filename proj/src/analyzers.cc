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

#include "reqlint/analyzers.h"

#include <algorithm>
#include <cctype>

#include "reqlint/duplicates.h"
#include "reqlint/error.h"

namespace reqlint {
namespace {

bool IsBlank(std::string_view text) {
  return std::all_of(text.begin(), text.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

bool IsAlnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

// Case-insensitive search for `marker` (already lowercase) in `lower`, on
// word boundaries where the marker itself starts or ends with a word char.
bool ContainsMarker(std::string_view lower, std::string_view marker) {
  if (marker.empty()) return false;
  std::size_t pos = 0;
  while ((pos = lower.find(marker, pos)) != std::string_view::npos) {
    const bool left_ok = pos == 0 || !IsAlnum(marker.front()) ||
                         !IsAlnum(lower[pos - 1]);
    const std::size_t end = pos + marker.size();
    const bool right_ok = end >= lower.size() || !IsAlnum(marker.back()) ||
                          !IsAlnum(lower[end]);
    if (left_ok && right_ok) return true;
    ++pos;
  }
  return false;
}

std::optional<std::string> FirstMarker(std::string_view lower,
                                       const std::vector<std::string>& markers) {
  for (const auto& marker : markers) {
    if (ContainsMarker(lower, ToLowerCopy(marker))) return marker;
  }
  return std::nullopt;
}

std::string Quote(std::string_view text, std::size_t limit = 60) {
  std::string flat;
  for (char c : text) flat.push_back(c == '\n' || c == '\r' ? ' ' : c);
  flat = TrimCopy(flat);
  if (flat.size() > limit) flat = flat.substr(0, limit) + "...";
  return "'" + flat + "'";
}

// Drops markdown image embeds ("![alt](url)"); they are attachments, not prose.
std::string WithoutImageEmbeds(std::string_view text) {
  std::string out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto start = text.find("![", pos);
    if (start == std::string_view::npos) break;
    const auto close = text.find("](", start + 2);
    const auto end = close == std::string_view::npos ? close : text.find(')', close + 2);
    if (end == std::string_view::npos || text.substr(start, close - start).find('\n') !=
                                             std::string_view::npos) {
      out.append(text.substr(pos, start + 2 - pos));
      pos = start + 2;
      continue;
    }
    out.append(text.substr(pos, start - pos));
    pos = end + 1;
  }
  out.append(text.substr(std::min(pos, text.size())));
  return out;
}

std::string JoinList(const std::vector<std::string>& items, std::size_t limit = 5) {
  std::string out;
  for (std::size_t i = 0; i < items.size() && i < limit; ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  if (items.size() > limit) out += ", ...";
  return out;
}

// Description and all comment bodies, lowercased, one block each.
std::vector<std::string> LowerTexts(const Requirement& req) {
  std::vector<std::string> out;
  out.push_back(ToLowerCopy(req.description));
  for (const auto& comment : req.comments) out.push_back(ToLowerCopy(comment.body));
  return out;
}

class Proposer {
 public:
  Proposer(const Checklist& checklist, AutoFindings& findings)
      : checklist_(checklist), findings_(findings) {}

  bool Wants(std::string_view id) const {
    const CheckDefinition* def = checklist_.Find(id);
    return def && def->automation != Automation::kManual;
  }

  void Propose(std::string_view id, const Answer& answer, std::string evidence) {
    const CheckDefinition* def = checklist_.Find(id);
    if (!def || def->automation == Automation::kManual) return;
    const bool certain = def->automation == Automation::kAutomatic;
    AnswerEntry entry;
    entry.value = answer;
    entry.provenance = certain ? Provenance::kAutomatic : Provenance::kAssisted;
    entry.evidence = evidence;
    findings_.sheet.entries[def->id] = std::move(entry);
    findings_.notes.push_back({def->id, std::move(evidence),
                               certain ? Confidence::kCertain : Confidence::kHeuristic});
  }

  // Evidence for a manual check; no value is proposed.
  void Hint(std::string_view id, std::string evidence) {
    const CheckDefinition* def = checklist_.Find(id);
    if (!def) return;
    AnswerEntry entry;
    entry.provenance = Provenance::kAssisted;
    entry.evidence = evidence;
    findings_.sheet.entries[def->id] = std::move(entry);
    findings_.notes.push_back({def->id, std::move(evidence), Confidence::kHeuristic});
  }

 private:
  const Checklist& checklist_;
  AutoFindings& findings_;
};

Answer YesNo(bool yes) { return yes ? Answer::Yes() : Answer::No(); }

bool IsImplemented(const Requirement& req, const AnalyzerConfig& config) {
  if (!req.resolution) return false;
  const std::string res = ToLowerCopy(TrimCopy(*req.resolution));
  for (const auto& ok : config.implemented_resolutions) {
    if (res == ToLowerCopy(ok)) return true;
  }
  return false;
}

int CountNumberedSteps(std::string_view text) {
  int best = 0, run = 0, expected = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string line = TrimCopy(text.substr(pos, eol - pos));
    std::size_t i = 0;
    int number = 0;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
      number = number * 10 + (line[i] - '0');
      ++i;
    }
    const bool is_step = i > 0 && i < line.size() && (line[i] == '.' || line[i] == ')');
    if (is_step && number == expected) {
      ++run;
      ++expected;
    } else if (is_step && number == 1) {
      run = 1;
      expected = 2;
    } else if (!line.empty()) {
      run = 0;
      expected = 1;
    }
    best = std::max(best, run);
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return best;
}

}  // namespace

void MergeFindings(AutoFindings& into, AutoFindings from) {
  for (auto& [id, entry] : from.sheet.entries) {
    into.sheet.entries[id] = std::move(entry);
  }
  for (auto& note : from.notes) into.notes.push_back(std::move(note));
}

// ---------------------------------------------------------------------------
// Completeness

AutoFindings AnalyzeCompleteness(const Requirement& req, const Checklist& checklist,
                                 const AnalyzerConfig& config) {
  if (req.kind != checklist.kind) {
    throw Error(ErrorKind::kChecklistKindMismatch,
                "requirement " + req.id + " is a " + std::string(ToString(req.kind)) +
                    " but the checklist was built for " +
                    std::string(ToString(checklist.kind)));
  }
  AutoFindings findings;
  findings.sheet.requirement_id = req.id;
  Proposer p(checklist, findings);
  const auto texts = LowerTexts(req);

  if (p.Wants("SC1.1a")) {
    const bool summary = !IsBlank(req.summary);
    const bool description = !IsBlank(req.description);
    std::string evidence = summary && description ? "summary and description present"
                           : summary              ? "description missing"
                           : description          ? "summary missing"
                                                  : "summary and description missing";
    p.Propose("SC1.1a", YesNo(summary && description), std::move(evidence));
  }
  if (p.Wants("SC1.1'")) {
    std::vector<std::string> missing;
    if (!req.story || IsBlank(req.story->role)) missing.push_back("role");
    if (!req.story || IsBlank(req.story->activity)) missing.push_back("activity");
    if (!req.story || IsBlank(req.story->business_value)) {
      missing.push_back("business value");
    }
    p.Propose("SC1.1'", YesNo(missing.empty()),
              missing.empty() ? "role, activity and business value present"
                              : "missing: " + JoinList(missing));
  }
  if (p.Wants("SC1.1b")) {
    const bool product = req.product && !IsBlank(*req.product);
    const bool version = req.version && !IsBlank(*req.version);
    std::string evidence = product && version
                               ? "product " + *req.product + ", version " + *req.version
                           : product ? "version missing"
                           : version ? "product missing"
                                     : "product and version missing";
    p.Propose("SC1.1b", YesNo(product && version), std::move(evidence));
  }
  if (p.Wants("SC1.1c")) {
    std::vector<std::string> found;
    if (req.importance) {
      const auto& imp = *req.importance;
      if (imp.priority && !IsBlank(*imp.priority)) found.push_back("priority " + *imp.priority);
      if (imp.severity && !IsBlank(*imp.severity)) found.push_back("severity " + *imp.severity);
      if (imp.votes) found.push_back(std::to_string(*imp.votes) + " votes");
    }
    p.Propose("SC1.1c", YesNo(!found.empty()),
              found.empty() ? "no priority, severity or votes" : JoinList(found));
  }
  if (p.Wants("SC1.2a")) {
    std::size_t count = 0;
    for (const auto& kw : req.keywords) count += IsBlank(kw) ? 0 : 1;
    p.Propose("SC1.2a", YesNo(count > 0),
              count ? std::to_string(count) + " keyword(s): " + JoinList(req.keywords)
                    : "no keywords");
  }
  if (p.Wants("SC1.2b")) {
    if (req.rationale && !IsBlank(*req.rationale)) {
      p.Propose("SC1.2b", Answer::Yes(), "rationale field present");
    } else {
      const auto marker = FirstMarker(texts[0], config.rationale_markers);
      p.Propose("SC1.2b", YesNo(marker.has_value()),
                marker ? "rationale marker '" + *marker + "' in description"
                       : "no rationale field or marker in the description");
    }
  }
  if (p.Wants("SC1.2'")) {
    std::size_t count = 0;
    if (req.story) {
      for (const auto& ac : req.story->acceptance_criteria) count += IsBlank(ac) ? 0 : 1;
    }
    p.Propose("SC1.2'", YesNo(count > 0),
              count ? std::to_string(count) + " acceptance criteria"
                    : "no acceptance criteria");
  }
  if (p.Wants("SC1.2c")) {
    if (!IsImplemented(req, config)) {
      p.Propose("SC1.2c", Answer::NotApplicable(), "not yet implemented");
    } else {
      p.Propose("SC1.2c", YesNo(!req.code_links.empty()),
                req.code_links.empty()
                    ? "resolved " + *req.resolution + " without a code link"
                    : "code link(s): " + JoinList(req.code_links));
    }
  }
  if (p.Wants("SC1.3a")) {
    const auto marker = FirstMarker(texts[0], config.scenario_markers);
    const int steps = CountNumberedSteps(req.description);
    const bool yes = marker.has_value() || steps >= config.scenario_min_numbered_steps;
    std::string evidence =
        marker ? "scenario marker '" + *marker + "' in description"
        : yes  ? std::to_string(steps) + " numbered steps"
               : "no scenario marker or numbered steps";
    p.Propose("SC1.3a", YesNo(yes), std::move(evidence));
  }
  if (p.Wants("SC1.3b")) {
    std::vector<std::string> screens;
    for (const auto& a : req.attachments) {
      if (a.kind == MediaKind::kScreenshot || a.kind == MediaKind::kMockup) {
        screens.push_back(a.name);
      }
    }
    p.Propose("SC1.3b", YesNo(!screens.empty()),
              screens.empty() ? "no screenshot or mock-up attached"
                              : "attached: " + JoinList(screens));
  }
  if (p.Wants("SC1.3c")) {
    std::optional<std::string> evidence;
    for (const auto& a : req.attachments) {
      if (a.kind == MediaKind::kPatch) {
        evidence = "patch attached: " + a.name;
        break;
      }
    }
    for (std::size_t i = 0; i < texts.size() && !evidence; ++i) {
      if (auto marker = FirstMarker(texts[i], config.solution_markers)) {
        evidence = "solution marker '" + *marker + "' in " +
                   (i == 0 ? std::string("description") : "comment " + std::to_string(i));
      }
    }
    p.Propose("SC1.3c", YesNo(evidence.has_value()),
              evidence.value_or("no patch or solution hint"));
  }
  if (p.Wants("SC1.3'")) {
    std::vector<std::string> extra;
    for (const auto& a : req.attachments) {
      if (a.kind != MediaKind::kPatch) extra.push_back(a.name);
    }
    p.Propose("SC1.3'", YesNo(!extra.empty()),
              extra.empty() ? "no attachments" : "attached: " + JoinList(extra));
  }
  return findings;
}

// ---------------------------------------------------------------------------
// Comments

namespace {

bool IsSocialWord(std::string_view w) {
  static const std::unordered_set<std::string_view> kSocial = {
      "thanks", "thank", "thx", "ty", "cheers", "sorry", "apologies",
      "apologize", "apologise", "congrats", "congratulations", "awesome",
      "great", "cool", "nice", "yay", "hooray", "hurray", "party", "wow",
      "lol", "kudos", "appreciated", "appreciate", "welcome", "excellent",
      "woohoo", "hi", "hello", "agreed"};
  if (kSocial.contains(w)) return true;
  // "woo", "wooo", "woooo": exuberance spelled out.
  if (w.size() >= 3 && w[0] == 'w' && w[1] == 'o' &&
      std::all_of(w.begin(), w.end(), [](char c) { return c == 'w' || c == 'o' || c == 'h'; })) {
    return true;
  }
  return false;
}

bool IsAdministrativeWord(std::string_view w) {
  static const std::unordered_set<std::string_view> kAdmin = {
      "vote", "votes", "voting", "voted", "cc", "cc'ing", "subscribe",
      "subscribed", "unsubscribe", "spam", "etiquette", "bump", "ping",
      "update", "updates", "news", "progress", "status", "eta"};
  return kAdmin.contains(w);
}

std::string StripQuoted(std::string_view body) {
  std::string out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t eol = body.find('\n', pos);
    if (eol == std::string_view::npos) eol = body.size();
    const std::string line = TrimCopy(body.substr(pos, eol - pos));
    const bool quoted = line.starts_with(">") || line.starts_with("(In reply to");
    if (!quoted && !line.empty()) {
      out += line;
      out += '\n';
    }
    if (eol == body.size()) break;
    pos = eol + 1;
  }
  return out;
}

}  // namespace

bool IsIrrelevantComment(std::string_view body, const AnalyzerConfig& config,
                         std::string* reason) {
  const std::string stripped = StripQuoted(body);
  const std::string lower = ToLowerCopy(stripped);
  std::vector<std::string> hits;
  for (std::string_view phrase : {"+1", "me too", "same here", "yes please", ":)", ":-)",
                                  ":d", "any update", "any news", "any progress"}) {
    if (lower.find(phrase) != std::string::npos) hits.emplace_back(phrase);
  }
  int content = 0;
  for (const auto& token : text::Tokenize(stripped)) {
    const std::string& w = token.lower;
    if (IsSocialWord(w) || IsAdministrativeWord(w)) {
      hits.push_back(w);
      continue;
    }
    if (w.size() < 2 || text::IsStopword(w)) continue;
    if (std::all_of(w.begin(), w.end(), [](unsigned char c) { return std::isdigit(c); })) {
      continue;
    }
    ++content;
  }
  const bool irrelevant = !hits.empty() && content <= config.comment_max_content_words;
  if (irrelevant && reason) {
    *reason = "social/administrative (" + JoinList(hits, 3) + "), " +
              std::to_string(content) + " content word(s)";
  }
  return irrelevant;
}

CommentClassification ClassifyComments(const Requirement& req,
                                       const AnalyzerConfig& config) {
  CommentClassification out;
  int relevant = 0;
  for (std::size_t i = 0; i < req.comments.size(); ++i) {
    std::string reason;
    const bool irrelevant = IsIrrelevantComment(req.comments[i].body, config, &reason);
    out.relevant.push_back(!irrelevant);
    if (irrelevant) {
      out.reasons.push_back("comment " + std::to_string(i + 1) + " " +
                            Quote(req.comments[i].body, 40) + ": " + reason);
    } else {
      ++relevant;
    }
  }
  out.relevant_share = req.comments.empty()
                           ? Rational(1)
                           : Rational(relevant, static_cast<std::int64_t>(req.comments.size()));
  return out;
}

// ---------------------------------------------------------------------------
// Analyzer configuration

void ReadAnalyzerConfig(const KeyValueDocument& doc, std::string_view source_name,
                        AnalyzerConfig* config) {
  for (const auto& kv : doc.entries) {
    if (kv.section != "analyzer") continue;
    const std::string where =
        std::string(source_name) + ":" + std::to_string(kv.line) + ": ";
    const std::string value = kv.value.value_or("");
    auto list = [&] {
      std::vector<std::string> out;
      std::string_view rest = value;
      while (true) {
        const auto comma = rest.find(',');
        std::string item = ToLowerCopy(TrimCopy(rest.substr(0, comma)));
        if (!item.empty()) out.push_back(std::move(item));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
      return out;
    };
    auto ratio = [&] {
      auto r = ParsePercent(value);
      if (!r) r = ParseFraction(value);
      if (!r || *r < 0) {
        throw Error(ErrorKind::kParseError,
                    where + kv.key + ": expected a percentage or fraction");
      }
      return *r;
    };
    auto integer = [&] {
      auto r = ParseFraction(value);
      if (!r || r->denominator() != 1 || *r < 0) {
        throw Error(ErrorKind::kParseError,
                    where + kv.key + ": expected a non-negative integer");
      }
      return static_cast<int>(r->numerator());
    };
    if (kv.key == "rationale_markers") config->rationale_markers = list();
    else if (kv.key == "scenario_markers") config->scenario_markers = list();
    else if (kv.key == "solution_markers") config->solution_markers = list();
    else if (kv.key == "implemented_resolutions") config->implemented_resolutions = list();
    else if (kv.key == "language_high_sentences") config->language_high_sentences = ratio();
    else if (kv.key == "language_high_misspelled") config->language_high_misspelled = ratio();
    else if (kv.key == "language_mid_sentences") config->language_mid_sentences = ratio();
    else if (kv.key == "language_mid_misspelled") config->language_mid_misspelled = ratio();
    else if (kv.key == "summary_overlap") config->summary_overlap = ratio();
    else if (kv.key == "duplicate_similarity") config->duplicate_similarity = ratio();
    else if (kv.key == "comment_max_content_words") config->comment_max_content_words = integer();
    else if (kv.key == "atomic_max_requests") config->atomic_max_requests = integer();
    else if (kv.key == "scenario_min_numbered_steps") config->scenario_min_numbered_steps = integer();
    else throw Error(ErrorKind::kParseError, where + "unknown analyzer setting " + kv.key);
  }
}

// ---------------------------------------------------------------------------
// Corpus context and references

CorpusContext BuildCorpusContext(const Corpus& corpus, const AnalyzerConfig& config,
                                 const text::Wordlist* wordlist, bool parallel) {
  CorpusContext ctx;
  ctx.wordlist = wordlist;
  if (corpus.glossary_terms) {
    for (const auto& term : *corpus.glossary_terms) {
      for (const auto& token : text::Tokenize(term)) ctx.glossary_lower.insert(token.lower);
    }
  }
  std::vector<std::vector<std::string>> sets;
  sets.reserve(corpus.requirements.size());
  for (const auto& req : corpus.requirements) {
    ctx.ids.insert(req.id);
    ctx.by_id.emplace(req.id, &req);
    sets.push_back(text::ContentStemSet(req.summary));
  }
  const auto pairs = parallel
                         ? NearDuplicatePairs(sets, config.duplicate_similarity)
                         : NearDuplicatePairsReference(sets, config.duplicate_similarity);
  for (const auto& [a, b] : pairs) {
    const auto& ra = corpus.requirements[a];
    const auto& rb = corpus.requirements[b];
    if (ra.id == rb.id) continue;
    ctx.near_duplicates[ra.id].push_back(rb.id);
    ctx.near_duplicates[rb.id].push_back(ra.id);
  }
  for (auto& [id, list] : ctx.near_duplicates) std::sort(list.begin(), list.end());
  return ctx;
}

namespace {

std::string_view PreviousWord(std::string_view text, std::size_t pos) {
  std::size_t end = pos;
  while (end > 0 && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::size_t start = end;
  while (start > 0 && std::isalpha(static_cast<unsigned char>(text[start - 1]))) --start;
  return text.substr(start, end - start);
}

void ScanText(std::string_view raw, std::vector<std::string>* targets,
              std::vector<std::string>* bare) {
  const std::string lower = ToLowerCopy(raw);
  std::size_t pos = 0;
  auto digits_at = [&](std::size_t at) {
    std::size_t end = at;
    while (end < lower.size() && std::isdigit(static_cast<unsigned char>(lower[end]))) ++end;
    return lower.substr(at, end - at);
  };
  while (pos < lower.size()) {
    const bool boundary = pos == 0 || !IsAlnum(lower[pos - 1]);
    if (boundary && (lower.compare(pos, 7, "http://") == 0 ||
                     lower.compare(pos, 8, "https://") == 0)) {
      std::size_t end = pos;
      while (end < lower.size() && !std::isspace(static_cast<unsigned char>(lower[end]))) ++end;
      const std::string_view url = std::string_view(lower).substr(pos, end - pos);
      for (std::string_view key : {"show_bug.cgi?id=", "/issues/"}) {
        const auto k = url.find(key);
        if (k == std::string_view::npos) continue;
        const std::string id = digits_at(pos + k + key.size());
        if (!id.empty()) targets->push_back(id);
      }
      pos = end;
      continue;
    }
    if (lower[pos] == '#' && (pos == 0 || !IsAlnum(lower[pos - 1])) &&
        lower[pos - (pos ? 1 : 0)] != '&') {
      const std::string id = digits_at(pos + 1);
      const std::string_view prev = PreviousWord(lower, pos);
      if (!id.empty() && prev != "comment" && prev != "comments" &&
          prev != "attachment" && prev != "step" && prev != "item") {
        targets->push_back(id);
      }
      pos += 1 + id.size();
      continue;
    }
    if (boundary && std::isalpha(static_cast<unsigned char>(lower[pos]))) {
      std::size_t end = pos;
      while (end < lower.size() && std::isalpha(static_cast<unsigned char>(lower[end]))) ++end;
      const std::string_view word = std::string_view(lower).substr(pos, end - pos);
      if (word == "bug" || word == "issue" || word == "ticket" || word == "request" ||
          word == "fr") {
        std::size_t after = end;
        while (after < lower.size() && lower[after] == ' ') ++after;
        if (after > end && after < lower.size() &&
            std::isdigit(static_cast<unsigned char>(lower[after]))) {
          const std::string id = digits_at(after);
          bare->push_back(std::string(raw.substr(pos, after - pos)) + id);
          pos = after + id.size();
          continue;
        }
      }
      pos = end;
      continue;
    }
    ++pos;
  }
}

void AppendUnique(std::vector<std::string>& into, const std::vector<std::string>& from) {
  for (const auto& item : from) {
    if (std::find(into.begin(), into.end(), item) == into.end()) into.push_back(item);
  }
}

}  // namespace

ReferenceScan ScanReferences(const Requirement& req) {
  std::vector<std::string> targets, bare;
  ScanText(req.description, &targets, &bare);
  for (const auto& comment : req.comments) {
    ScanText(comment.body, &targets, &bare);
    targets.insert(targets.end(), comment.referenced_ids.begin(),
                   comment.referenced_ids.end());
  }
  ReferenceScan out;
  AppendUnique(out.targets, targets);
  AppendUnique(out.bare, bare);
  return out;
}

bool MatchesUserVoice(std::string_view text) {
  std::string s = ToLowerCopy(TrimCopy(text));
  // Collapse whitespace so line wraps do not matter.
  std::string norm;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!norm.empty() && norm.back() != ' ') norm.push_back(' ');
    } else {
      norm.push_back(c);
    }
  }
  std::size_t role_start;
  if (norm.starts_with("as an ")) role_start = 6;
  else if (norm.starts_with("as a ")) role_start = 5;
  else return false;

  std::size_t best = std::string::npos, verb_len = 0;
  for (std::string_view verb : {" i can ", " i want to ", " i would like to ", " i want "}) {
    const auto at = norm.find(verb, role_start);
    if (at != std::string::npos && at < best) {
      best = at;
      verb_len = verb.size();
    }
  }
  if (best == std::string::npos) return false;
  std::string role = TrimCopy(std::string_view(norm).substr(role_start, best - role_start));
  if (!role.empty() && role.back() == ',') role.pop_back();
  if (TrimCopy(role).empty()) return false;

  const std::size_t activity_start = best + verb_len;
  const auto so_that = norm.find(" so that ", activity_start);
  if (so_that == std::string::npos) return false;
  std::string activity =
      TrimCopy(std::string_view(norm).substr(activity_start, so_that - activity_start));
  if (!activity.empty() && activity.back() == ',') activity.pop_back();
  const std::string value = TrimCopy(std::string_view(norm).substr(so_that + 9));
  return !TrimCopy(activity).empty() && !value.empty() && value != ".";
}

// ---------------------------------------------------------------------------
// Correctness

namespace {

bool IsRequestVerb(std::string_view stem) {
  static const std::unordered_set<std::string> kVerbs = [] {
    std::unordered_set<std::string> s;
    for (std::string_view v : {"add", "support", "allow", "enable", "provide",
                               "implement", "make", "introduce", "create", "show",
                               "display", "let", "include", "remove", "change",
                               "improve", "offer", "expose", "permit"}) {
      s.insert(text::Stem(v));
    }
    return s;
  }();
  return kVerbs.contains(std::string(stem));
}

// First word that is not politeness or modal filler, stemmed.
std::string LeadingVerb(std::string_view clause) {
  static const std::unordered_set<std::string_view> kFiller = {
      "please", "also", "and", "to", "should", "must", "could", "can", "we",
      "you", "i", "it", "would", "be", "nice", "need", "want", "like", "the"};
  for (const auto& token : text::Tokenize(clause)) {
    if (kFiller.contains(token.lower)) continue;
    return text::Stem(token.lower);
  }
  return {};
}

int CountSummaryRequests(std::string_view summary) {
  std::string s = ToLowerCopy(summary);
  for (std::string_view sep : {" and ", " & ", " plus ", " as well as ", "; ", ", "}) {
    std::size_t pos;
    while ((pos = s.find(sep)) != std::string::npos) s.replace(pos, sep.size(), "|");
  }
  int count = 0;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t bar = s.find('|', start);
    if (bar == std::string::npos) bar = s.size();
    if (IsRequestVerb(LeadingVerb(std::string_view(s).substr(start, bar - start)))) ++count;
    start = bar + 1;
  }
  return count;
}

int CountListRequests(std::string_view text) {
  int count = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string line = TrimCopy(text.substr(pos, eol - pos));
    std::size_t i = 0;
    if (!line.empty() && (line[0] == '-' || line[0] == '*' || line[0] == '+')) {
      i = 1;
    } else {
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
      if (i == 0 || i >= line.size() || (line[i] != '.' && line[i] != ')')) i = 0;
      else ++i;
    }
    if (i > 0 && IsRequestVerb(LeadingVerb(std::string_view(line).substr(i)))) ++count;
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return count;
}

Answer Level(int level) { return Answer::Level(level); }

}  // namespace

AutoFindings AnalyzeCorrectness(const Requirement& req, const CorpusContext& context,
                                const Checklist& checklist,
                                const AnalyzerConfig& config) {
  AutoFindings findings;
  findings.sheet.requirement_id = req.id;
  Proposer p(checklist, findings);

  if (p.Wants("SC2.1") && req.source.tracker != TrackerKind::kNative) {
    p.Propose("SC2.1", Answer::Yes(),
              "stored in " + std::string(ToString(req.source.tracker)));
  }
  if (p.Wants("SC2.2")) {
    const auto cls = ClassifyComments(req, config);
    const auto relevant = std::count(cls.relevant.begin(), cls.relevant.end(), true);
    std::string evidence = req.comments.empty()
                               ? "no comments"
                               : std::to_string(relevant) + " of " +
                                     std::to_string(req.comments.size()) +
                                     " comments relevant";
    for (const auto& reason : cls.reasons) evidence += "; " + reason;
    p.Propose("SC2.2", Answer::Percent(cls.relevant_share), std::move(evidence));
  }
  if (p.Wants("SC2.3")) {
    const auto sentences = text::SplitSentences(req.description);
    const bool summary_ok = MatchesUserVoice(req.summary);
    const bool description_ok = !sentences.empty() && MatchesUserVoice(sentences.front());
    p.Propose("SC2.3", YesNo(summary_ok || description_ok),
              summary_ok       ? "summary in user voice form"
              : description_ok ? "description opens in user voice form"
                               : "no 'As a <role>, I can <activity> so that "
                                 "<value>' statement");
  }

  if (checklist.Find("SC3.1")) {
    const auto refs = ScanReferences(req);
    std::vector<std::string> candidates;
    for (const auto& target : refs.targets) {
      if (target != req.id && context.ids.contains(target)) candidates.push_back("#" + target);
    }
    if (auto it = context.near_duplicates.find(req.id); it != context.near_duplicates.end()) {
      for (const auto& id : it->second) {
        if (std::find(candidates.begin(), candidates.end(), "#" + id) == candidates.end()) {
          candidates.push_back("#" + id);
        }
      }
    }
    if (!candidates.empty()) {
      p.Hint("SC3.1", "related requests to check for conflicts: " + JoinList(candidates, 10));
    }
  }

  if (p.Wants("SC3.3")) {
    const std::string prose = WithoutImageEmbeds(req.description);
    std::vector<std::string> sentences;
    for (auto& s : text::SplitSentences(prose)) {
      // Headings such as "Steps:" introduce a list and are not prose.
      if (!s.ends_with(':')) sentences.push_back(std::move(s));
    }
    std::int64_t well_formed = 0;
    for (const auto& s : sentences) well_formed += text::IsWellFormedSentence(s) ? 1 : 0;
    const Rational sentence_share =
        sentences.empty() ? Rational(0)
                          : Rational(well_formed, static_cast<std::int64_t>(sentences.size()));
    text::SpellReport spell;
    if (context.wordlist) {
      spell = text::CheckSpelling(req.summary + "\n" + prose, *context.wordlist,
                                  context.glossary_lower);
    }
    const Rational misspelled_share =
        spell.checked == 0 ? Rational(0)
                           : Rational(static_cast<std::int64_t>(spell.misspelled.size()),
                                      spell.checked);
    int level = 0;
    if (sentence_share >= config.language_high_sentences &&
        misspelled_share < config.language_high_misspelled) {
      level = 2;
    } else if (sentence_share >= config.language_mid_sentences &&
               misspelled_share < config.language_mid_misspelled) {
      level = 1;
    }
    std::string evidence = std::to_string(well_formed) + "/" +
                           std::to_string(sentences.size()) + " sentences well-formed; ";
    if (!context.wordlist || context.wordlist->empty()) {
      evidence += "no wordlist loaded";
    } else {
      evidence += std::to_string(spell.misspelled.size()) + " of " +
                  std::to_string(spell.checked) + " words unknown";
      if (!spell.misspelled.empty()) evidence += " (" + JoinList(spell.misspelled) + ")";
    }
    p.Propose("SC3.3", Level(level), std::move(evidence));
  }

  if (p.Wants("SC3.6")) {
    const auto summary = text::ContentStemSet(req.summary);
    const auto description = text::ContentStemSet(req.description);
    std::int64_t shared = 0;
    for (const auto& stem : summary) {
      shared += std::binary_search(description.begin(), description.end(), stem) ? 1 : 0;
    }
    const bool adds = static_cast<std::int64_t>(description.size()) > shared;
    const bool overlap =
        !summary.empty() &&
        Rational(shared, static_cast<std::int64_t>(summary.size())) >= config.summary_overlap;
    std::string evidence = std::to_string(shared) + " of " + std::to_string(summary.size()) +
                           " summary terms appear in the description";
    if (!adds) evidence += "; description adds nothing to the summary";
    p.Propose("SC3.6", YesNo(overlap && adds), std::move(evidence));
  }

  if (p.Wants("SC3.7")) {
    const int in_summary = CountSummaryRequests(req.summary);
    const int in_list = CountListRequests(req.description);
    int markers = 0;
    std::vector<std::string> marker_hits;
    const std::string lower = ToLowerCopy(req.description);
    for (std::string_view marker :
         {"also add", "also support", "also allow", "another feature", "another request",
          "second request", "a second feature", "while you're at it", "while we're at it",
          "separate request"}) {
      if (ContainsMarker(lower, marker)) {
        ++markers;
        marker_hits.emplace_back(marker);
      }
    }
    const int requests = std::max({1, in_summary, in_list}) + markers;
    std::string evidence = std::to_string(requests) + " request(s) detected";
    if (in_summary > 1) evidence += "; " + std::to_string(in_summary) + " requests in summary";
    if (in_list > 1) evidence += "; " + std::to_string(in_list) + " requested items listed";
    if (markers) evidence += "; markers: " + JoinList(marker_hits);
    p.Propose("SC3.7", YesNo(requests <= config.atomic_max_requests), std::move(evidence));
  }

  if (p.Wants("SC3.9")) {
    const std::string resolution =
        req.resolution ? ToLowerCopy(TrimCopy(*req.resolution)) : std::string();
    std::vector<std::string> unlinked;
    if (auto it = context.near_duplicates.find(req.id); it != context.near_duplicates.end()) {
      for (const auto& other_id : it->second) {
        const Requirement* other = context.by_id.at(other_id);
        const bool linked =
            (req.duplicate_of && *req.duplicate_of == other_id) ||
            (other->duplicate_of && *other->duplicate_of == req.id) ||
            (req.duplicate_of && other->duplicate_of &&
             *req.duplicate_of == *other->duplicate_of);
        if (!linked) unlinked.push_back("#" + other_id);
      }
    }
    const bool unmarked_master = resolution == "duplicate" && !req.duplicate_of;
    std::string evidence;
    if (unmarked_master) {
      evidence = "resolved DUPLICATE without naming the master request";
    } else if (!unlinked.empty()) {
      evidence = "unlinked near-duplicate(s): " + JoinList(unlinked);
    } else if (req.duplicate_of) {
      evidence = "marked duplicate of #" + *req.duplicate_of;
    } else {
      evidence = "no unlinked near-duplicates";
    }
    p.Propose("SC3.9", YesNo(!unmarked_master && unlinked.empty()), std::move(evidence));
  }

  if (p.Wants("SC3.10")) {
    const auto refs = ScanReferences(req);
    std::vector<std::string> problems;
    for (const auto& target : refs.targets) {
      if (!context.ids.contains(target)) problems.push_back("dangling reference #" + target);
    }
    for (const auto& bare : refs.bare) problems.push_back("bare reference '" + bare + "'");
    std::string evidence =
        problems.empty()
            ? (refs.targets.empty() ? "no references to other requests"
                                    : std::to_string(refs.targets.size()) +
                                          " reference(s), all navigable")
            : JoinList(problems);
    p.Propose("SC3.10", YesNo(problems.empty()), std::move(evidence));
  }
  return findings;
}

AutoFindings AnalyzeCorrectness(const Requirement& req, const Corpus& corpus,
                                const Checklist& checklist, const AnalyzerConfig& config,
                                const text::Wordlist* wordlist) {
  const CorpusContext context = BuildCorpusContext(corpus, config, wordlist, false);
  return AnalyzeCorrectness(req, context, checklist, config);
}

AutoFindings AnalyzeRequirement(const Requirement& req, const CorpusContext& context,
                                const Checklist& checklist, const AnalyzerConfig& config) {
  AutoFindings findings = AnalyzeCompleteness(req, checklist, config);
  MergeFindings(findings, AnalyzeCorrectness(req, context, checklist, config));
  return findings;
}

}  // namespace reqlint
