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
#include <set>
#include <string>
#include <vector>

namespace lexiscribe::sonnex {

/// A phonemized word: ordered symbols from the rule file's declared
/// alphabet. Characters with no rule (digits, foreign letters) pass
/// through as opaque single-character symbols so ASR digit output still
/// compares.
struct PhonemeString {
  std::vector<std::string> symbols;

  std::string joined() const;  // symbols separated by spaces
  friend bool operator==(const PhonemeString&, const PhonemeString&) = default;
};

enum class ContextClass {
  kAny,
  kWordStart,  // left only
  kWordEnd,    // right only
  kVowel,
  kConsonant,
  kLetterSet,  // right only: next letter must be in `letters`
};

/// One contextual grapheme rewrite. Matching is longest-pattern first,
/// then highest priority, then file order.
struct RewriteRule {
  std::string pattern;             // grapheme sequence, lowercase
  ContextClass left = ContextClass::kAny;
  ContextClass right = ContextClass::kAny;
  std::string right_letters;       // UTF-8 letters when right == kLetterSet
  std::vector<std::string> emission;  // empty = silent
  int priority = 0;
  int line = 0;                    // rule file line, for diagnostics
};

class RuleSet {
public:
  /// Loads the TSV rule file and, when `exceptions_path` is non-empty, the
  /// exception lexicon. Validates alphabet membership, duplicate rules and
  /// file format; raises MalformedRuleFileError, UnknownPhonemeSymbolError
  /// or AmbiguousRuleError with line numbers.
  static RuleSet load(const std::string& rules_path, const std::string& exceptions_path = "");

  const std::set<std::string>& alphabet() const { return alphabet_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  const std::map<std::string, PhonemeString>& exceptions() const { return exceptions_; }
  const std::string& version() const { return version_; }

  /// Phonemizes one normalized word (lowercase, no whitespace). The
  /// exception lexicon is consulted on the exact word first; otherwise the
  /// word is split at hyphens/apostrophes and each part is rewritten
  /// left to right. Raises EmptyWordError on an empty input.
  PhonemeString phonemize(const std::string& word) const;

private:
  struct CompiledRule {
    std::vector<char32_t> pattern;
    std::vector<char32_t> right_letters;
    std::size_t source = 0;  // index into rules_
  };

  void compile();
  std::vector<std::string> apply_rules(const std::vector<char32_t>& word) const;

  std::vector<RewriteRule> rules_;
  std::map<std::string, PhonemeString> exceptions_;
  std::set<std::string> alphabet_;
  std::string version_;
  /// Compiled rules bucketed by first pattern codepoint, longest first.
  std::map<char32_t, std::vector<CompiledRule>> compiled_;
};

/// Unit-cost Levenshtein distance over phoneme symbols.
std::size_t phoneme_distance(const PhonemeString& a, const PhonemeString& b);

/// Distance between the phonemizations of two words: 0 for homophones.
std::size_t sonnex_distance(const std::string& ref_word, const std::string& hyp_word,
                            const RuleSet& rules);

/// Default locations of the shipped rule table and exception lexicon.
/// Honors the LEXISCRIBE_DATA_DIR environment variable, then the install
/// location, then the source tree.
std::string default_rules_path();
std::string default_exceptions_path();

}  // namespace lexiscribe::sonnex
