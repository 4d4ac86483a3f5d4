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
#include <string>
#include <utility>
#include <vector>

namespace lexiscribe {

/// A word unit as counted by the error-rate denominator. The surface form
/// and span point back into the source text; the normalized form is what
/// alignment compares. Diacritics are never stripped: downstream
/// phonetization depends on them.
struct Token {
  std::string surface;
  std::string normalized;
  /// Byte offsets of the surface form in the source text, [begin, end).
  std::size_t begin = 0;
  std::size_t end = 0;
  /// True for the first token of the document and tokens following
  /// sentence-ending punctuation. Capitalization at these positions is not
  /// evidence of a proper noun.
  bool sentence_start = false;

  friend bool operator==(const Token&, const Token&) = default;
};

struct NormalizerConfig {
  bool lowercase = true;
  /// Punctuation never enters normalized forms; when false, punctuation
  /// runs become standalone tokens and count toward the error rate.
  bool strip_punctuation = true;
  /// Split "l'avocat" into [l', avocat]. Lexicalized forms such as
  /// "aujourd'hui" stay whole.
  bool split_clitics = true;
  /// Only composed form is supported; the field is recorded in reports.
  std::string unicode_form = "composed";
  /// Digits are kept verbatim; "dix" vs "10" surfaces as a substitution.
  std::string number_policy = "keep_digits";

  friend bool operator==(const NormalizerConfig&, const NormalizerConfig&) = default;
};

/// Splits text into tokens under the given policy. Empty text yields an
/// empty sequence. The concatenation of surface forms with the original
/// separators reconstructs the input modulo collapsed whitespace.
std::vector<Token> tokenize(const std::string& utf8_text, const NormalizerConfig& cfg);

/// Tokenizes both sides with the identical configuration, making
/// asymmetric normalization impossible by construction.
std::pair<std::vector<Token>, std::vector<Token>> normalize_pair(const std::string& ref_text,
                                                                 const std::string& hyp_text,
                                                                 const NormalizerConfig& cfg);

}  // namespace lexiscribe
