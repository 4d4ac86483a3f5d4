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

#include "lexiscribe/aligner.hpp"

#include <algorithm>
#include <cstdint>

namespace lexiscribe {

std::string to_string(EditKind kind) {
  switch (kind) {
    case EditKind::kMatch: return "match";
    case EditKind::kSubstitute: return "substitute";
    case EditKind::kDelete: return "delete";
    case EditKind::kInsert: return "insert";
  }
  return "?";
}

AlignmentResult align(std::span<const Token> ref, std::span<const Token> hyp) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();

  auto equal = [&](std::size_t i, std::size_t j) {
    return ref[i].normalized == hyp[j].normalized;
  };

  // cost[i][j]: edits to turn ref[0..i) into hyp[0..j).
  std::vector<std::vector<std::uint32_t>> cost(n + 1, std::vector<std::uint32_t>(m + 1));
  std::vector<std::vector<EditKind>> step(n + 1, std::vector<EditKind>(m + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    cost[i][0] = static_cast<std::uint32_t>(i);
    step[i][0] = EditKind::kDelete;
  }
  for (std::size_t j = 0; j <= m; ++j) {
    cost[0][j] = static_cast<std::uint32_t>(j);
    step[0][j] = EditKind::kInsert;
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      bool eq = equal(i - 1, j - 1);
      std::uint32_t diag = cost[i - 1][j - 1] + (eq ? 0 : 1);
      std::uint32_t up = cost[i - 1][j] + 1;    // delete ref token
      std::uint32_t left = cost[i][j - 1] + 1;  // insert hyp token
      std::uint32_t best = std::min(diag, std::min(up, left));
      cost[i][j] = best;
      // Tie-break priority: Match > Substitute > Delete > Insert.
      if (diag == best) {
        step[i][j] = eq ? EditKind::kMatch : EditKind::kSubstitute;
      } else if (up == best) {
        step[i][j] = EditKind::kDelete;
      } else {
        step[i][j] = EditKind::kInsert;
      }
    }
  }

  AlignmentResult result;
  result.ref_len = n;
  result.hyp_len = m;

  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    EditOp op;
    op.kind = step[i][j];
    switch (op.kind) {
      case EditKind::kMatch:
      case EditKind::kSubstitute:
        op.ref_token = ref[i - 1];
        op.hyp_token = hyp[j - 1];
        --i;
        --j;
        break;
      case EditKind::kDelete:
        op.ref_token = ref[i - 1];
        --i;
        break;
      case EditKind::kInsert:
        op.hyp_token = hyp[j - 1];
        --j;
        break;
    }
    result.ops.push_back(std::move(op));
  }
  std::reverse(result.ops.begin(), result.ops.end());

  for (const auto& op : result.ops) {
    switch (op.kind) {
      case EditKind::kMatch: ++result.matches; break;
      case EditKind::kSubstitute: ++result.substitutions; break;
      case EditKind::kDelete: ++result.deletions; break;
      case EditKind::kInsert: ++result.insertions; break;
    }
  }
  return result;
}

std::size_t edit_distance(std::span<const Token> ref, std::span<const Token> hyp) {
  std::vector<std::string> a;
  std::vector<std::string> b;
  a.reserve(ref.size());
  b.reserve(hyp.size());
  for (const auto& t : ref) a.push_back(t.normalized);
  for (const auto& t : hyp) b.push_back(t.normalized);
  return detail::levenshtein<std::string>(a, b);
}

}  // namespace lexiscribe
