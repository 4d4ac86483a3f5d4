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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lexiscribe/normalizer.hpp"

namespace lexiscribe {

enum class EditKind { kMatch, kSubstitute, kDelete, kInsert };

std::string to_string(EditKind kind);

/// One step of the reference -> hypothesis edit script. Match/Substitute
/// carry both tokens, Delete only the reference token, Insert only the
/// hypothesis token.
struct EditOp {
  EditKind kind = EditKind::kMatch;
  std::optional<Token> ref_token;
  std::optional<Token> hyp_token;
};

struct AlignmentResult {
  std::vector<EditOp> ops;
  std::size_t insertions = 0;
  std::size_t deletions = 0;
  std::size_t substitutions = 0;
  std::size_t matches = 0;
  std::size_t ref_len = 0;
  std::size_t hyp_len = 0;

  std::size_t total_edits() const { return insertions + deletions + substitutions; }
};

/// Minimum-edit-distance alignment under unit costs, comparing normalized
/// forms only. Deterministic: ties in the backtrace resolve by
/// Match > Substitute > Delete > Insert, which maximizes the substitution
/// set handed to the phonetic analysis.
///
/// Full O(n*m) dynamic program with a backtrace matrix; evaluation
/// documents are at most ~10^4 words, so quadratic space is fine here.
AlignmentResult align(std::span<const Token> ref, std::span<const Token> hyp);

/// Edit distance only, two-row dynamic program without a backtrace.
std::size_t edit_distance(std::span<const Token> ref, std::span<const Token> hyp);

namespace detail {

/// Unit-cost Levenshtein over any equality-comparable symbols; shared by
/// the token fast path and the phoneme distance.
template <typename Symbol>
std::size_t levenshtein(std::span<const Symbol> a, std::span<const Symbol> b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<std::size_t> prev(m + 1);
  std::vector<std::size_t> curr(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    curr[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      std::size_t del = prev[j] + 1;
      std::size_t ins = curr[j - 1] + 1;
      curr[j] = std::min(sub, std::min(del, ins));
    }
    std::swap(prev, curr);
  }
  return prev[m];
}

}  // namespace detail

}  // namespace lexiscribe
