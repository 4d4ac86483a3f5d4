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

#include "lexiscribe/text.hpp"

#include <array>
#include <cstdint>

#include "lexiscribe/errors.hpp"

namespace lexiscribe::text {

namespace {

[[noreturn]] void bad_utf8(std::size_t offset) {
  throw InvalidUtf8Error("invalid UTF-8 byte sequence at offset " + std::to_string(offset));
}

struct Composition {
  char32_t base;
  char32_t mark;
  char32_t composed;
};

// Base + combining mark pairs for the Latin letters French text uses.
// U+0300 grave, U+0301 acute, U+0302 circumflex, U+0303 tilde,
// U+0308 diaeresis, U+0327 cedilla.
constexpr std::array<Composition, 27> kCompositions{{
    {U'a', 0x0300, U'à'}, {U'a', 0x0301, U'á'}, {U'a', 0x0302, U'â'},
    {U'a', 0x0303, U'ã'}, {U'a', 0x0308, U'ä'}, {U'e', 0x0300, U'è'},
    {U'e', 0x0301, U'é'}, {U'e', 0x0302, U'ê'}, {U'e', 0x0308, U'ë'},
    {U'i', 0x0300, U'ì'}, {U'i', 0x0301, U'í'}, {U'i', 0x0302, U'î'},
    {U'i', 0x0308, U'ï'}, {U'o', 0x0300, U'ò'}, {U'o', 0x0301, U'ó'},
    {U'o', 0x0302, U'ô'}, {U'o', 0x0303, U'õ'}, {U'o', 0x0308, U'ö'},
    {U'u', 0x0300, U'ù'}, {U'u', 0x0301, U'ú'}, {U'u', 0x0302, U'û'},
    {U'u', 0x0308, U'ü'}, {U'y', 0x0308, U'ÿ'}, {U'c', 0x0327, U'ç'},
    {U'n', 0x0303, U'ñ'}, {U'Y', 0x0308, U'Ÿ'}, {U'C', 0x0327, U'Ç'},
}};

bool compose_pair(char32_t base, char32_t mark, char32_t& out) {
  for (const auto& c : kCompositions) {
    if (c.base == base && c.mark == mark) {
      out = c.composed;
      return true;
    }
  }
  // Uppercase A-U compose to the lowercase table entry minus 0x20
  // (À = à - 0x20 and so on across Latin-1).
  if (base >= U'A' && base <= U'Z') {
    char32_t lower_composed;
    if (compose_pair(base + 0x20, mark, lower_composed) && lower_composed >= 0xE0 &&
        lower_composed <= 0xFE) {
      out = lower_composed - 0x20;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<char32_t> decode_utf8(std::string_view input) {
  std::vector<char32_t> out;
  out.reserve(input.size());
  std::size_t i = 0;
  while (i < input.size()) {
    auto byte = static_cast<std::uint8_t>(input[i]);
    char32_t cp = 0;
    std::size_t len = 0;
    if (byte < 0x80) {
      cp = byte;
      len = 1;
    } else if ((byte & 0xE0) == 0xC0) {
      cp = byte & 0x1F;
      len = 2;
    } else if ((byte & 0xF0) == 0xE0) {
      cp = byte & 0x0F;
      len = 3;
    } else if ((byte & 0xF8) == 0xF0) {
      cp = byte & 0x07;
      len = 4;
    } else {
      bad_utf8(i);
    }
    if (i + len > input.size()) bad_utf8(i);
    for (std::size_t k = 1; k < len; ++k) {
      auto cont = static_cast<std::uint8_t>(input[i + k]);
      if ((cont & 0xC0) != 0x80) bad_utf8(i + k);
      cp = (cp << 6) | (cont & 0x3F);
    }
    // Overlong encodings, surrogates and out-of-range values are rejected.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000))
      bad_utf8(i);
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) bad_utf8(i);
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_utf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string encode_utf8(const std::vector<char32_t>& codepoints) {
  std::string out;
  out.reserve(codepoints.size());
  for (char32_t cp : codepoints) out += encode_utf8(cp);
  return out;
}

std::vector<char32_t> compose_nfc(const std::vector<char32_t>& codepoints) {
  std::vector<char32_t> out;
  out.reserve(codepoints.size());
  for (char32_t cp : codepoints) {
    char32_t composed;
    if (!out.empty() && compose_pair(out.back(), cp, composed)) {
      out.back() = composed;
    } else {
      out.push_back(cp);
    }
  }
  return out;
}

char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;  // À-Þ except ×
  if (cp == 0x0152) return 0x0153;                               // Œ -> œ
  if (cp == 0x0178) return 0xFF;                                 // Ÿ -> ÿ
  if (cp >= 0x0100 && cp <= 0x017F && (cp % 2) == 0 && cp != 0x0152) return cp + 1;
  return cp;
}

bool is_upper(char32_t cp) {
  return is_letter(cp) && to_lower(cp) != cp;
}

bool is_letter(char32_t cp) {
  if ((cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z')) return true;
  if (cp >= 0xC0 && cp <= 0xFF && cp != 0xD7 && cp != 0xF7) return true;
  if (cp >= 0x0100 && cp <= 0x017F) return true;  // Latin Extended-A
  return false;
}

bool is_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

bool is_vowel_letter(char32_t cp) {
  switch (cp) {
    case U'a': case U'à': case U'á': case U'â': case U'ã': case U'ä':
    case U'e': case U'é': case U'è': case U'ê': case U'ë':
    case U'i': case U'ì': case U'í': case U'î': case U'ï':
    case U'o': case U'ò': case U'ó': case U'ô': case U'õ': case U'ö':
    case U'u': case U'ù': case U'ú': case U'û': case U'ü':
    case U'y': case U'ÿ':
    case U'œ': case U'æ':
      return true;
    default:
      return false;
  }
}

}  // namespace lexiscribe::text
