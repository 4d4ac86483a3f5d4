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

#include <string>
#include <string_view>
#include <vector>

namespace lexiscribe::text {

/// Decodes UTF-8 into codepoints. Invalid byte sequences (overlong forms,
/// surrogates, truncation) raise InvalidUtf8Error naming the byte offset.
std::vector<char32_t> decode_utf8(std::string_view input);

std::string encode_utf8(const std::vector<char32_t>& codepoints);
std::string encode_utf8(char32_t codepoint);

/// Composes base letter + combining mark pairs (grave, acute, circumflex,
/// diaeresis, tilde, cedilla) into precomposed forms, so "é" always has a
/// single representation. Covers the Latin range used by French text;
/// unknown combinations pass through unchanged.
std::vector<char32_t> compose_nfc(const std::vector<char32_t>& codepoints);

/// Lowercasing for the Latin repertoire French uses (A-Z, À-Þ, Œ, Ÿ).
char32_t to_lower(char32_t cp);

/// True for uppercase letters in the same repertoire.
bool is_upper(char32_t cp);

bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
/// Vowel letters in lowercase normalized text (includes accented forms,
/// y, œ and æ).
bool is_vowel_letter(char32_t cp);

}  // namespace lexiscribe::text
