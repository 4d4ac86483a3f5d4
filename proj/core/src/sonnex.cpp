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

#include "lexiscribe/sonnex.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lexiscribe/aligner.hpp"
#include "lexiscribe/errors.hpp"
#include "lexiscribe/text.hpp"

#ifndef LEXISCRIBE_INSTALL_DATA_DIR
#define LEXISCRIBE_INSTALL_DATA_DIR ""
#endif
#ifndef LEXISCRIBE_SOURCE_DATA_DIR
#define LEXISCRIBE_SOURCE_DATA_DIR ""
#endif

namespace lexiscribe::sonnex {

namespace {

constexpr const char* kRulesFormatTag = "sonnex-rules v1";
constexpr const char* kExceptionsFormatTag = "sonnex-exceptions v1";

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == '\t') {
      fields.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  fields.push_back(current);
  return fields;
}

std::vector<std::string> split_spaces(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) fields.push_back(tok);
  return fields;
}

ContextClass parse_left_context(const std::string& text, const std::string& where) {
  if (text == "*") return ContextClass::kAny;
  if (text == "^") return ContextClass::kWordStart;
  if (text == "V") return ContextClass::kVowel;
  if (text == "C") return ContextClass::kConsonant;
  throw MalformedRuleFileError(where + ": bad left context '" + text + "'");
}

ContextClass parse_right_context(const std::string& text, std::string& letters,
                                 const std::string& where) {
  if (text == "*") return ContextClass::kAny;
  if (text == "$") return ContextClass::kWordEnd;
  if (text == "V") return ContextClass::kVowel;
  if (text == "C") return ContextClass::kConsonant;
  if (text.rfind("set:", 0) == 0) {
    letters = text.substr(4);
    if (letters.empty()) throw MalformedRuleFileError(where + ": empty letter set");
    return ContextClass::kLetterSet;
  }
  throw MalformedRuleFileError(where + ": bad right context '" + text + "'");
}

std::string context_key(const RewriteRule& r) {
  std::string key = r.pattern + "|" + std::to_string(static_cast<int>(r.left)) + "|" +
                    std::to_string(static_cast<int>(r.right));
  if (r.right == ContextClass::kLetterSet) key += "|" + r.right_letters;
  return key;
}

bool is_grapheme_vowel(char32_t cp) { return text::is_vowel_letter(cp); }
bool is_grapheme_consonant(char32_t cp) { return text::is_letter(cp) && !is_grapheme_vowel(cp); }

}  // namespace

std::string PhonemeString::joined() const {
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) out += ' ';
    out += symbols[i];
  }
  return out;
}

RuleSet RuleSet::load(const std::string& rules_path, const std::string& exceptions_path) {
  std::ifstream in(rules_path);
  if (!in) throw MissingFileError("cannot open rule file: " + rules_path);

  RuleSet rs;
  std::string line;
  int line_no = 0;
  bool saw_alphabet = false;
  std::set<std::string> rule_keys;

  while (std::getline(in, line)) {
    ++line_no;
    std::string where = rules_path + ":" + std::to_string(line_no);
    if (line_no == 1) {
      if (line.rfind(kRulesFormatTag, 0) != 0)
        throw MalformedRuleFileError(where + ": missing format tag '" + kRulesFormatTag + "'");
      rs.version_ = line;
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_tabs(line);
    if (fields[0] == "alphabet") {
      if (fields.size() != 2)
        throw MalformedRuleFileError(where + ": alphabet line needs one field of symbols");
      for (const auto& sym : split_spaces(fields[1])) rs.alphabet_.insert(sym);
      saw_alphabet = true;
      continue;
    }
    if (!saw_alphabet)
      throw MalformedRuleFileError(where + ": alphabet must be declared before rules");
    if (fields.size() != 5)
      throw MalformedRuleFileError(where + ": expected 5 tab-separated fields, got " +
                                   std::to_string(fields.size()));
    RewriteRule rule;
    rule.line = line_no;
    try {
      rule.priority = std::stoi(fields[0]);
    } catch (const std::exception&) {
      throw MalformedRuleFileError(where + ": bad priority '" + fields[0] + "'");
    }
    rule.pattern = fields[1];
    if (rule.pattern.empty()) throw MalformedRuleFileError(where + ": empty pattern");
    rule.left = parse_left_context(fields[2], where);
    rule.right = parse_right_context(fields[3], rule.right_letters, where);
    if (fields[4] != "-") {  // "-" marks a silent emission
      rule.emission = split_spaces(fields[4]);
      for (const auto& sym : rule.emission) {
        if (!rs.alphabet_.count(sym))
          throw UnknownPhonemeSymbolError(where + ": emission symbol '" + sym +
                                          "' is not in the declared alphabet");
      }
    }
    if (!rule_keys.insert(context_key(rule)).second)
      throw AmbiguousRuleError(where + ": duplicate rule for pattern '" + rule.pattern +
                               "' with identical contexts");
    rs.rules_.push_back(std::move(rule));
  }
  if (!saw_alphabet) throw MalformedRuleFileError(rules_path + ": no alphabet declaration");
  rs.compile();

  if (!exceptions_path.empty()) {
    std::ifstream ex(exceptions_path);
    if (!ex) throw MissingFileError("cannot open exception lexicon: " + exceptions_path);
    int ex_line_no = 0;
    while (std::getline(ex, line)) {
      ++ex_line_no;
      std::string where = exceptions_path + ":" + std::to_string(ex_line_no);
      if (ex_line_no == 1) {
        if (line.rfind(kExceptionsFormatTag, 0) != 0)
          throw MalformedRuleFileError(where + ": missing format tag '" +
                                       std::string(kExceptionsFormatTag) + "'");
        continue;
      }
      if (line.empty() || line[0] == '#') continue;
      auto fields = split_tabs(line);
      if (fields.size() != 2)
        throw MalformedRuleFileError(where + ": expected 'word<TAB>symbols'");
      PhonemeString ph;
      ph.symbols = split_spaces(fields[1]);
      for (const auto& sym : ph.symbols) {
        if (!rs.alphabet_.count(sym))
          throw UnknownPhonemeSymbolError(where + ": symbol '" + sym +
                                          "' is not in the declared alphabet");
      }
      if (rs.exceptions_.count(fields[0]))
        throw AmbiguousRuleError(where + ": duplicate lexicon entry '" + fields[0] + "'");
      rs.exceptions_[fields[0]] = std::move(ph);
    }
  }
  return rs;
}

void RuleSet::compile() {
  compiled_.clear();
  for (std::size_t idx = 0; idx < rules_.size(); ++idx) {
    const RewriteRule& rule = rules_[idx];
    CompiledRule c;
    c.pattern = text::decode_utf8(rule.pattern);
    if (rule.right == ContextClass::kLetterSet)
      c.right_letters = text::decode_utf8(rule.right_letters);
    c.source = idx;
    compiled_[c.pattern[0]].push_back(std::move(c));
  }
  // Longest pattern first, then priority, then file order: the first
  // matching candidate wins.
  for (auto& [first, bucket] : compiled_) {
    std::sort(bucket.begin(), bucket.end(), [this](const CompiledRule& a, const CompiledRule& b) {
      if (a.pattern.size() != b.pattern.size()) return a.pattern.size() > b.pattern.size();
      if (rules_[a.source].priority != rules_[b.source].priority)
        return rules_[a.source].priority > rules_[b.source].priority;
      return a.source < b.source;
    });
  }
}

std::vector<std::string> RuleSet::apply_rules(const std::vector<char32_t>& word) const {
  std::vector<std::string> out;
  const std::size_t n = word.size();
  std::size_t i = 0;
  while (i < n) {
    const CompiledRule* best = nullptr;
    auto bucket = compiled_.find(word[i]);
    if (bucket != compiled_.end()) {
      for (const auto& rule : bucket->second) {
        if (i + rule.pattern.size() > n) continue;
        bool matches = std::equal(rule.pattern.begin(), rule.pattern.end(), word.begin() + i);
        if (!matches) continue;
        const RewriteRule& spec = rules_[rule.source];
        switch (spec.left) {
          case ContextClass::kAny: break;
          case ContextClass::kWordStart: matches = i == 0; break;
          case ContextClass::kVowel: matches = i > 0 && is_grapheme_vowel(word[i - 1]); break;
          case ContextClass::kConsonant:
            matches = i > 0 && is_grapheme_consonant(word[i - 1]);
            break;
          default: matches = false; break;
        }
        if (!matches) continue;
        std::size_t after = i + rule.pattern.size();
        switch (spec.right) {
          case ContextClass::kAny: break;
          case ContextClass::kWordEnd: matches = after == n; break;
          case ContextClass::kVowel: matches = after < n && is_grapheme_vowel(word[after]); break;
          case ContextClass::kConsonant:
            matches = after < n && is_grapheme_consonant(word[after]);
            break;
          case ContextClass::kLetterSet:
            matches = after < n && std::find(rule.right_letters.begin(), rule.right_letters.end(),
                                             word[after]) != rule.right_letters.end();
            break;
          default: matches = false; break;
        }
        if (!matches) continue;
        best = &rule;
        break;  // bucket order already encodes the preference
      }
    }
    if (best != nullptr) {
      for (const auto& sym : rules_[best->source].emission) out.push_back(sym);
      i += best->pattern.size();
    } else {
      // No rule: the character passes through as an opaque symbol, so
      // digits and foreign letters still take part in the distance.
      out.push_back(text::encode_utf8(word[i]));
      i += 1;
    }
  }
  return out;
}

PhonemeString RuleSet::phonemize(const std::string& word) const {
  if (word.empty()) throw EmptyWordError("phonemize called with an empty word");

  auto it = exceptions_.find(word);
  if (it != exceptions_.end()) return it->second;

  PhonemeString result;
  // Hyphen and apostrophe separate pronunciation units; each part gets
  // full word-start/word-end contexts (grand-mère keeps its silent d).
  // Parts are looked up in the lexicon too, so dix-sept finds "dix".
  auto cps = text::decode_utf8(word);
  std::vector<char32_t> part;
  auto flush = [&]() {
    if (part.empty()) return;
    auto part_it = exceptions_.find(text::encode_utf8(part));
    if (part_it != exceptions_.end()) {
      result.symbols.insert(result.symbols.end(), part_it->second.symbols.begin(),
                            part_it->second.symbols.end());
    } else {
      auto partial = apply_rules(part);
      result.symbols.insert(result.symbols.end(), partial.begin(), partial.end());
    }
    part.clear();
  };
  for (char32_t cp : cps) {
    if (cp == U'-' || cp == U'\'' || cp == U'’') {
      flush();
    } else {
      part.push_back(cp);
    }
  }
  flush();
  return result;
}

std::size_t phoneme_distance(const PhonemeString& a, const PhonemeString& b) {
  return lexiscribe::detail::levenshtein<std::string>(a.symbols, b.symbols);
}

std::size_t sonnex_distance(const std::string& ref_word, const std::string& hyp_word,
                            const RuleSet& rules) {
  return phoneme_distance(rules.phonemize(ref_word), rules.phonemize(hyp_word));
}

namespace {

std::string data_file(const char* name) {
  namespace fs = std::filesystem;
  if (const char* env = std::getenv("LEXISCRIBE_DATA_DIR")) {
    fs::path p = fs::path(env) / name;
    if (fs::exists(p)) return p.string();
  }
  fs::path installed = fs::path(LEXISCRIBE_INSTALL_DATA_DIR) / name;
  if (!std::string(LEXISCRIBE_INSTALL_DATA_DIR).empty() && fs::exists(installed))
    return installed.string();
  fs::path source = fs::path(LEXISCRIBE_SOURCE_DATA_DIR) / name;
  if (!std::string(LEXISCRIBE_SOURCE_DATA_DIR).empty() && fs::exists(source))
    return source.string();
  return name;  // last resort: current directory
}

}  // namespace

std::string default_rules_path() { return data_file("sonnex_rules.tsv"); }
std::string default_exceptions_path() { return data_file("sonnex_exceptions.tsv"); }

}  // namespace lexiscribe::sonnex
