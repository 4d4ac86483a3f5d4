// Copyright 2026 The Lexiscribe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lexiscribe/metrics.hpp"

#include <algorithm>
#include <array>
#include <string_view>

#include "lexiscribe/errors.hpp"
#include "lexiscribe/text.hpp"

namespace lexiscribe::metrics {

std::string to_string(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kProperNoun: return "proper_noun";
    case ErrorCategory::kInflection: return "inflection";
    case ErrorCategory::kVerbTense: return "verb_tense";
    case ErrorCategory::kHomophone: return "homophone";
    case ErrorCategory::kOther: return "other";
  }
  return "other";
}

const std::vector<ErrorCategory>& all_categories() {
  static const std::vector<ErrorCategory> kAll = {
      ErrorCategory::kProperNoun, ErrorCategory::kInflection, ErrorCategory::kVerbTense,
      ErrorCategory::kHomophone, ErrorCategory::kOther};
  return kAll;
}

Rational WerBreakdown::wer() const {
  if (ref_len == 0)
    throw EmptyReferenceError("word error rate is undefined for an empty reference");
  return Rational(static_cast<std::int64_t>(total_edits()), static_cast<std::int64_t>(ref_len));
}

WerBreakdown compute_wer(const AlignmentResult& alignment) {
  WerBreakdown b;
  b.insertions = alignment.insertions;
  b.deletions = alignment.deletions;
  b.substitutions = alignment.substitutions;
  b.matches = alignment.matches;
  b.ref_len = alignment.ref_len;
  b.hyp_len = alignment.hyp_len;
  if (b.ref_len == 0)
    throw EmptyReferenceError("word error rate is undefined for an empty reference");
  return b;
}

namespace {

bool starts_capitalized(const Token& token) {
  if (token.surface.empty()) return false;
  auto cps = text::decode_utf8(token.surface);
  return !cps.empty() && text::is_upper(cps[0]);
}

bool ends_with(std::string_view word, std::string_view suffix) {
  return word.size() >= suffix.size() &&
         word.compare(word.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// Candidate stems modulo number/gender endings: the word itself plus the
/// word with one of -s, -es, -e removed (when long enough to leave a stem).
void inflection_stems(std::string_view word, std::vector<std::string>& out) {
  out.emplace_back(word);
  static constexpr std::array<std::string_view, 3> kEndings = {"es", "s", "e"};
  for (auto ending : kEndings) {
    if (ends_with(word, ending) && word.size() > ending.size())
      out.emplace_back(word.substr(0, word.size() - ending.size()));
  }
}

bool is_inflection_pair(const std::string& a, const std::string& b) {
  std::vector<std::string> sa, sb;
  inflection_stems(a, sa);
  inflection_stems(b, sb);
  for (const auto& x : sa)
    for (const auto& y : sb)
      if (x == y) return true;
  return false;
}

/// Conjugation endings that commonly collide in dictation: infinitive,
/// participles, imperfect and simple forms of -er verbs and the
/// -u participle family.
constexpr std::array<std::string_view, 17> kVerbEndings = {
    "aient", "ait", "ais", "ées", "ée", "és", "é", "er", "ez",
    "ai",    "a",   "ons", "ont", "ent", "ue", "ut", "u"};

bool is_verb_tense_pair(const std::string& a, const std::string& b) {
  for (auto ea : kVerbEndings) {
    if (!ends_with(a, ea) || a.size() <= ea.size()) continue;
    std::string_view stem_a = std::string_view(a).substr(0, a.size() - ea.size());
    for (auto eb : kVerbEndings) {
      if (!ends_with(b, eb) || b.size() <= eb.size()) continue;
      std::string_view stem_b = std::string_view(b).substr(0, b.size() - eb.size());
      if (stem_a == stem_b) return true;
    }
  }
  return false;
}

}  // namespace

ErrorCategory classify_substitution(const Token& ref, const Token& hyp,
                                    std::size_t phoneme_distance) {
  // Mid-sentence capitalization marks names; sentence-initial capitals
  // prove nothing and are ignored.
  if (!ref.sentence_start && starts_capitalized(ref)) return ErrorCategory::kProperNoun;
  if (is_inflection_pair(ref.normalized, hyp.normalized)) return ErrorCategory::kInflection;
  if (is_verb_tense_pair(ref.normalized, hyp.normalized)) return ErrorCategory::kVerbTense;
  if (phoneme_distance == 0) return ErrorCategory::kHomophone;
  return ErrorCategory::kOther;
}

std::vector<SubstitutionRecord> substitution_records(const AlignmentResult& alignment,
                                                     const sonnex::RuleSet& rules) {
  std::vector<SubstitutionRecord> records;
  records.reserve(alignment.substitutions);
  for (const auto& op : alignment.ops) {
    if (op.kind != EditKind::kSubstitute) continue;
    SubstitutionRecord rec;
    rec.ref = *op.ref_token;
    rec.hyp = *op.hyp_token;
    rec.distance = sonnex::sonnex_distance(rec.ref.normalized, rec.hyp.normalized, rules);
    rec.category = classify_substitution(rec.ref, rec.hyp, rec.distance);
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<Rational> Histogram::ratios() const {
  std::vector<Rational> out;
  if (total == 0) return out;
  out.reserve(bins.size());
  for (const auto& bin : bins)
    out.emplace_back(static_cast<std::int64_t>(bin.count), static_cast<std::int64_t>(total));
  return out;
}

Histogram bin_histogram(const std::vector<std::size_t>& distances, const Rational& width) {
  if (!(Rational(0) < width)) throw ConfigError("histogram bin width must be positive");
  Histogram h;
  h.total = distances.size();
  if (distances.empty()) return h;

  auto bin_index = [&width](std::size_t d) {
    // floor(d / width) in exact arithmetic.
    Rational q = Rational(static_cast<std::int64_t>(d)) / width;
    std::int64_t idx = q.num() / q.den();
    return static_cast<std::size_t>(idx);
  };

  std::size_t max_index = 0;
  for (std::size_t d : distances) max_index = std::max(max_index, bin_index(d));

  h.bins.resize(max_index + 1);
  for (std::size_t i = 0; i <= max_index; ++i) {
    h.bins[i].lower = Rational(static_cast<std::int64_t>(i)) * width;
    h.bins[i].upper = Rational(static_cast<std::int64_t>(i + 1)) * width;
  }
  for (std::size_t d : distances) h.bins[bin_index(d)].count += 1;
  return h;
}

CorpusStats aggregate(const std::vector<DocumentMetrics>& docs, const Rational& bin_width) {
  if (docs.empty()) throw EmptySelectionError("no documents selected for aggregation");

  CorpusStats stats;
  stats.documents = docs.size();
  Rational macro_sum(0);
  for (const auto& doc : docs) {
    stats.pooled.insertions += doc.wer.insertions;
    stats.pooled.deletions += doc.wer.deletions;
    stats.pooled.substitutions += doc.wer.substitutions;
    stats.pooled.matches += doc.wer.matches;
    stats.pooled.ref_len += doc.wer.ref_len;
    stats.pooled.hyp_len += doc.wer.hyp_len;
    macro_sum = macro_sum + doc.wer.wer();
    for (const auto& rec : doc.substitutions) {
      stats.category_counts[rec.category] += 1;
      stats.distances.push_back(rec.distance);
    }
  }
  stats.micro_wer = stats.pooled.wer();
  stats.macro_wer = macro_sum / Rational(static_cast<std::int64_t>(docs.size()));
  stats.histogram = bin_histogram(stats.distances, bin_width);
  return stats;
}

}  // namespace lexiscribe::metrics
