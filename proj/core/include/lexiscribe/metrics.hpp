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

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lexiscribe/aligner.hpp"
#include "lexiscribe/rational.hpp"
#include "lexiscribe/sonnex.hpp"

namespace lexiscribe::metrics {

/// Why a substitution happened, in decreasing precedence order. A pair can
/// qualify for several labels; classify_substitution assigns the first that
/// applies, so e.g. "Dupont"/"Dupond" is a proper-noun error even though it
/// is also a homophone.
enum class ErrorCategory { kProperNoun, kInflection, kVerbTense, kHomophone, kOther };

std::string to_string(ErrorCategory category);

/// All ErrorCategory values in precedence order, for stable iteration.
const std::vector<ErrorCategory>& all_categories();

/// Word error counts for one reference/hypothesis pair.
struct WerBreakdown {
  std::size_t insertions = 0;
  std::size_t deletions = 0;
  std::size_t substitutions = 0;
  std::size_t matches = 0;
  std::size_t ref_len = 0;
  std::size_t hyp_len = 0;

  std::size_t total_edits() const { return insertions + deletions + substitutions; }

  /// (I + D + S) / N as an exact rational. Throws EmptyReferenceError when
  /// the reference is empty: the rate is undefined, not zero.
  Rational wer() const;
};

WerBreakdown compute_wer(const AlignmentResult& alignment);

/// One substituted word pair with its phonetic distance and error label.
struct SubstitutionRecord {
  Token ref;
  Token hyp;
  std::size_t distance = 0;
  ErrorCategory category = ErrorCategory::kOther;
};

/// Classifies a substituted pair. Precedence:
///   ProperNoun: the reference surface is capitalized mid-sentence.
///   Inflection: the two normalized forms share a stem modulo the
///               -s / -es / -e number and gender endings.
///   VerbTense:  the two normalized forms share a stem modulo common
///               conjugation endings (-er, -é, -ez, -ait, -aient, ...).
///   Homophone:  the phonetic distance is zero.
///   Other:      everything else.
ErrorCategory classify_substitution(const Token& ref, const Token& hyp,
                                    std::size_t phoneme_distance);

/// Extracts every substitution from an alignment, phonetizes both sides,
/// computes the phonetic distance and classifies the pair. Order follows
/// the edit script, so output is deterministic.
std::vector<SubstitutionRecord> substitution_records(const AlignmentResult& alignment,
                                                     const sonnex::RuleSet& rules);

/// Half-open distance bucket [lower, upper).
struct HistogramBin {
  Rational lower;
  Rational upper;
  std::size_t count = 0;
};

struct Histogram {
  std::vector<HistogramBin> bins;  // contiguous from zero, trailing empties trimmed
  std::size_t total = 0;

  /// Exact count/total per bin. The sum over all bins is exactly 1
  /// whenever total > 0; an empty histogram yields no ratios.
  std::vector<Rational> ratios() const;
};

/// Buckets phonetic distances into fixed-width bins starting at zero.
/// Throws ConfigError when width is not positive.
Histogram bin_histogram(const std::vector<std::size_t>& distances,
                        const Rational& width = Rational(5, 2));

/// Per-document evaluation result, the unit of aggregation.
struct DocumentMetrics {
  std::string document_id;
  std::string provider;
  WerBreakdown wer;
  std::vector<SubstitutionRecord> substitutions;
};

/// Corpus-level rollup of a set of document results.
struct CorpusStats {
  std::size_t documents = 0;
  WerBreakdown pooled;  // counts summed over documents
  Rational micro_wer;   // pooled edits / pooled reference length
  Rational macro_wer;   // unweighted mean of per-document rates
  std::map<ErrorCategory, std::size_t> category_counts;
  std::vector<std::size_t> distances;  // all substitution distances, script order
  Histogram histogram;
};

/// Aggregates document metrics. Micro averaging pools the raw counts;
/// macro averaging gives every document the same weight regardless of
/// length. Throws EmptySelectionError when docs is empty.
CorpusStats aggregate(const std::vector<DocumentMetrics>& docs,
                      const Rational& bin_width = Rational(5, 2));

}  // namespace lexiscribe::metrics
