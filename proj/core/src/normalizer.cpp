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

#include "lexiscribe/normalizer.hpp"

#include <array>
#include <string_view>

#include "lexiscribe/errors.hpp"
#include "lexiscribe/text.hpp"

namespace lexiscribe {

namespace {

constexpr char32_t kApostrophe = U'\'';
constexpr char32_t kRightQuote = U'’';  // ’ as emitted by ASR output

bool is_apostrophe(char32_t cp) { return cp == kApostrophe || cp == kRightQuote; }
bool is_hyphen(char32_t cp) { return cp == U'-' || cp == U'‑'; }

bool is_word_char(char32_t cp) {
  return text::is_letter(cp) || text::is_digit(cp) || is_apostrophe(cp) || is_hyphen(cp);
}

bool is_whitespace(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U' ' ||
         cp == U' ' || cp == U' ';
}

bool is_sentence_ender(char32_t cp) {
  return cp == U'.' || cp == U'!' || cp == U'?' || cp == U'…' || cp == U':' ||
         cp == U'«';  // «
}

// Elision prefixes that keep their apostrophe when clitic splitting is on.
constexpr std::array<std::string_view, 13> kCliticPrefixes{
    "l", "d", "j", "m", "t", "s", "c", "n", "qu", "jusqu", "lorsqu", "puisqu", "quoiqu"};

bool is_clitic_prefix(const std::vector<char32_t>& cps, std::size_t begin, std::size_t end) {
  std::string lowered;
  for (std::size_t i = begin; i < end; ++i) {
    char32_t cp = text::to_lower(cps[i]);
    if (!text::is_letter(cp)) return false;
    lowered += text::encode_utf8(cp);
  }
  for (auto prefix : kCliticPrefixes)
    if (lowered == prefix) return true;
  return false;
}

struct Cp {
  char32_t value;
  std::size_t byte_begin;
  std::size_t byte_end;
};

std::vector<Cp> decode_with_offsets(const std::string& input) {
  // Two passes: decode+validate, then recompute per-codepoint byte spans.
  auto raw = text::decode_utf8(input);
  std::vector<Cp> out;
  out.reserve(raw.size());
  std::size_t offset = 0;
  for (char32_t cp : raw) {
    std::size_t len = text::encode_utf8(cp).size();
    out.push_back({cp, offset, offset + len});
    offset += len;
  }
  // Compose combining marks, merging byte spans.
  std::vector<Cp> composed;
  composed.reserve(out.size());
  for (const Cp& c : out) {
    if (!composed.empty()) {
      auto pair = text::compose_nfc({composed.back().value, c.value});
      if (pair.size() == 1) {
        composed.back() = {pair[0], composed.back().byte_begin, c.byte_end};
        continue;
      }
    }
    composed.push_back(c);
  }
  return composed;
}

std::string normalized_form(const std::vector<Cp>& cps, std::size_t begin, std::size_t end,
                            const NormalizerConfig& cfg) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    char32_t cp = cps[i].value;
    if (cp == kRightQuote) cp = kApostrophe;
    if (cfg.lowercase) cp = text::to_lower(cp);
    out += text::encode_utf8(cp);
  }
  return out;
}

}  // namespace

std::vector<Token> tokenize(const std::string& utf8_text, const NormalizerConfig& cfg) {
  std::vector<Cp> cps = decode_with_offsets(utf8_text);
  std::vector<Token> tokens;
  bool next_is_sentence_start = true;

  auto emit = [&](std::size_t begin, std::size_t end) {
    if (begin >= end) return;
    Token token;
    token.begin = cps[begin].byte_begin;
    token.end = cps[end - 1].byte_end;
    token.surface = utf8_text.substr(token.begin, token.end - token.begin);
    token.normalized = normalized_form(cps, begin, end, cfg);
    token.sentence_start = next_is_sentence_start;
    next_is_sentence_start = false;
    tokens.push_back(std::move(token));
  };

  auto emit_word = [&](std::size_t begin, std::size_t end) {
    // Trim edge punctuation: leading apostrophes/hyphens, trailing hyphens,
    // and trailing apostrophes unless they close an elision ("l'").
    while (begin < end && (is_apostrophe(cps[begin].value) || is_hyphen(cps[begin].value))) ++begin;
    while (begin < end) {
      char32_t last = cps[end - 1].value;
      if (is_hyphen(last)) {
        --end;
        continue;
      }
      if (is_apostrophe(last)) {
        std::size_t letters_begin = end - 1;
        while (letters_begin > begin && !is_apostrophe(cps[letters_begin - 1].value) &&
               !is_hyphen(cps[letters_begin - 1].value))
          --letters_begin;
        if (is_clitic_prefix(cps, letters_begin, end - 1)) break;
        --end;
        continue;
      }
      break;
    }
    if (begin >= end) return;

    if (cfg.split_clitics) {
      std::size_t segment_begin = begin;
      for (std::size_t i = begin; i < end; ++i) {
        if (is_apostrophe(cps[i].value) && i + 1 < end &&
            is_clitic_prefix(cps, segment_begin, i)) {
          emit(segment_begin, i + 1);  // prefix keeps its apostrophe
          segment_begin = i + 1;
        }
      }
      emit(segment_begin, end);
    } else {
      emit(begin, end);
    }
  };

  std::size_t i = 0;
  const std::size_t n = cps.size();
  while (i < n) {
    char32_t cp = cps[i].value;
    if (is_whitespace(cp)) {
      ++i;
      continue;
    }
    if (is_word_char(cp)) {
      std::size_t begin = i;
      while (i < n && is_word_char(cps[i].value)) ++i;
      emit_word(begin, i);
      continue;
    }
    // Punctuation run.
    std::size_t begin = i;
    bool saw_ender = false;
    while (i < n && !is_whitespace(cps[i].value) && !is_word_char(cps[i].value)) {
      saw_ender = saw_ender || is_sentence_ender(cps[i].value);
      ++i;
    }
    if (!cfg.strip_punctuation) emit(begin, i);
    if (saw_ender) next_is_sentence_start = true;
  }
  return tokens;
}

std::pair<std::vector<Token>, std::vector<Token>> normalize_pair(const std::string& ref_text,
                                                                 const std::string& hyp_text,
                                                                 const NormalizerConfig& cfg) {
  return {tokenize(ref_text, cfg), tokenize(hyp_text, cfg)};
}

}  // namespace lexiscribe
