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
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

using lexiscribe::align;
using lexiscribe::AlignmentResult;
using lexiscribe::EditKind;
using lexiscribe::Token;

namespace {

std::vector<Token> words(const std::string& space_separated) {
  std::vector<Token> out;
  std::istringstream in(space_separated);
  std::string w;
  while (in >> w) {
    Token t;
    t.surface = w;
    t.normalized = w;
    out.push_back(t);
  }
  return out;
}

// Independent oracle: top-down memoized recursion over the three edit
// choices. Same recurrence, different implementation shape.
std::size_t oracle_distance(const std::vector<std::string>& a,
                            const std::vector<std::string>& b) {
  std::vector<std::vector<std::size_t>> memo(
      a.size() + 1, std::vector<std::size_t>(b.size() + 1, SIZE_MAX));
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> std::size_t {
    if (memo[i][j] != SIZE_MAX) return memo[i][j];
    std::size_t result;
    if (i == a.size()) {
      result = b.size() - j;
    } else if (j == b.size()) {
      result = a.size() - i;
    } else {
      result = self(self, i + 1, j + 1) + (a[i] == b[j] ? 0 : 1);
      result = std::min(result, self(self, i + 1, j) + 1);
      result = std::min(result, self(self, i, j + 1) + 1);
    }
    return memo[i][j] = result;
  };
  return rec(rec, 0, 0);
}

// Replays the edit script and checks it is internally consistent: the
// reference/hypothesis projections reproduce the inputs in order, and the
// counted categories match the ops.
void check_script(const AlignmentResult& r, const std::vector<Token>& ref,
                  const std::vector<Token>& hyp) {
  std::vector<std::string> ref_seen, hyp_seen;
  std::size_t ins = 0, del = 0, sub = 0, match = 0;
  for (const auto& op : r.ops) {
    switch (op.kind) {
      case EditKind::kMatch:
        REQUIRE(op.ref_token.has_value());
        REQUIRE(op.hyp_token.has_value());
        CHECK(op.ref_token->normalized == op.hyp_token->normalized);
        ref_seen.push_back(op.ref_token->normalized);
        hyp_seen.push_back(op.hyp_token->normalized);
        ++match;
        break;
      case EditKind::kSubstitute:
        REQUIRE(op.ref_token.has_value());
        REQUIRE(op.hyp_token.has_value());
        CHECK(op.ref_token->normalized != op.hyp_token->normalized);
        ref_seen.push_back(op.ref_token->normalized);
        hyp_seen.push_back(op.hyp_token->normalized);
        ++sub;
        break;
      case EditKind::kDelete:
        REQUIRE(op.ref_token.has_value());
        CHECK_FALSE(op.hyp_token.has_value());
        ref_seen.push_back(op.ref_token->normalized);
        ++del;
        break;
      case EditKind::kInsert:
        REQUIRE(op.hyp_token.has_value());
        CHECK_FALSE(op.ref_token.has_value());
        hyp_seen.push_back(op.hyp_token->normalized);
        ++ins;
        break;
    }
  }
  CHECK(ins == r.insertions);
  CHECK(del == r.deletions);
  CHECK(sub == r.substitutions);
  CHECK(match == r.matches);
  CHECK(r.ref_len == ref.size());
  CHECK(r.hyp_len == hyp.size());
  REQUIRE(ref_seen.size() == ref.size());
  REQUIRE(hyp_seen.size() == hyp.size());
  for (std::size_t i = 0; i < ref.size(); ++i) CHECK(ref_seen[i] == ref[i].normalized);
  for (std::size_t i = 0; i < hyp.size(); ++i) CHECK(hyp_seen[i] == hyp[i].normalized);
}

}  // namespace

TEST_CASE("identical sequences align with zero edits") {
  const auto ref = words("le juge entend les témoins");
  const auto r = align(ref, ref);
  CHECK(r.total_edits() == 0);
  CHECK(r.matches == 5);
  CHECK(r.ops.size() == 5);
  check_script(r, ref, ref);
}

TEST_CASE("empty sequences") {
  const std::vector<Token> empty;
  const auto ref = words("a b c");

  auto r = align(empty, empty);
  CHECK(r.ops.empty());
  CHECK(r.total_edits() == 0);

  r = align(ref, empty);
  CHECK(r.deletions == 3);
  CHECK(r.total_edits() == 3);
  check_script(r, ref, {});

  r = align(empty, ref);
  CHECK(r.insertions == 3);
  check_script(r, {}, ref);
}

TEST_CASE("single substitution, deletion, insertion") {
  auto r = align(words("le juge parle"), words("le juge parlait"));
  CHECK(r.substitutions == 1);
  CHECK(r.total_edits() == 1);

  r = align(words("le juge parle"), words("le parle"));
  CHECK(r.deletions == 1);
  CHECK(r.total_edits() == 1);

  r = align(words("le parle"), words("le juge parle"));
  CHECK(r.insertions == 1);
  CHECK(r.total_edits() == 1);
}

TEST_CASE("mixed edit script") {
  const auto ref = words("la cour examine les conclusions du rapporteur");
  const auto hyp = words("la cour suprême examine des conclusions");
  const auto r = align(ref, hyp);
  // suprême inserted, les->des substituted, du + rapporteur deleted.
  CHECK(r.insertions == 1);
  CHECK(r.substitutions == 1);
  CHECK(r.deletions == 2);
  CHECK(r.total_edits() == 4);
  check_script(r, ref, hyp);
}

TEST_CASE("ties prefer match over substitution") {
  // "a b" vs "b": cost-1 scripts exist that delete either token; the
  // tie-break must keep "b" matched rather than substituting.
  const auto r = align(words("a b"), words("b"));
  CHECK(r.deletions == 1);
  CHECK(r.substitutions == 0);
  CHECK(r.matches == 1);
  REQUIRE(r.ops.size() == 2);
  CHECK(r.ops[0].kind == EditKind::kDelete);
  CHECK(r.ops[1].kind == EditKind::kMatch);
}

TEST_CASE("ties prefer substitutions over delete+insert pairs") {
  // "a b" vs "b a" admits several cost-2 scripts; the documented tie-break
  // maximizes the substitution set handed to the phonetic stage.
  const auto r = align(words("a b"), words("b a"));
  CHECK(r.total_edits() == 2);
  CHECK(r.substitutions == 2);
  CHECK(r.deletions == 0);
  CHECK(r.insertions == 0);
}

TEST_CASE("alignment is deterministic") {
  const auto ref = words("a b a b a");
  const auto hyp = words("b a b");
  const auto r1 = align(ref, hyp);
  const auto r2 = align(ref, hyp);
  REQUIRE(r1.ops.size() == r2.ops.size());
  for (std::size_t i = 0; i < r1.ops.size(); ++i)
    CHECK(r1.ops[i].kind == r2.ops[i].kind);
}

TEST_CASE("edit_distance matches align and the oracle") {
  const std::pair<std::string, std::string> cases[] = {
      {"", ""},
      {"a", ""},
      {"", "a"},
      {"a b c", "a b c"},
      {"a b c", "a x c"},
      {"a b c d e", "b c x e f"},
      {"x x x", "y y"},
      {"le chat dort", "le chien dort bien"},
  };
  for (const auto& [rs, hs] : cases) {
    CAPTURE(rs);
    CAPTURE(hs);
    const auto ref = words(rs);
    const auto hyp = words(hs);
    std::vector<std::string> rn, hn;
    for (const auto& t : ref) rn.push_back(t.normalized);
    for (const auto& t : hyp) hn.push_back(t.normalized);
    const auto want = oracle_distance(rn, hn);
    CHECK(lexiscribe::edit_distance(ref, hyp) == want);
    const auto r = align(ref, hyp);
    CHECK(r.total_edits() == want);
    check_script(r, ref, hyp);
  }
}

TEST_CASE("randomized scripts agree with the oracle") {
  std::mt19937 rng(20260824);
  std::uniform_int_distribution<int> len_dist(0, 12);
  std::uniform_int_distribution<int> sym_dist(0, 3);
  const std::string alphabet[] = {"un", "deux", "trois", "quatre"};
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<Token> ref, hyp;
    std::vector<std::string> rn, hn;
    for (int i = len_dist(rng); i > 0; --i) {
      Token t;
      t.normalized = alphabet[sym_dist(rng)];
      t.surface = t.normalized;
      ref.push_back(t);
      rn.push_back(t.normalized);
    }
    for (int i = len_dist(rng); i > 0; --i) {
      Token t;
      t.normalized = alphabet[sym_dist(rng)];
      t.surface = t.normalized;
      hyp.push_back(t);
      hn.push_back(t.normalized);
    }
    const auto want = oracle_distance(rn, hn);
    const auto r = align(ref, hyp);
    CAPTURE(iter);
    CHECK(r.total_edits() == want);
    CHECK(lexiscribe::edit_distance(ref, hyp) == want);
    check_script(r, ref, hyp);
  }
}

TEST_CASE("comparison uses normalized forms only") {
  Token a;
  a.surface = "Présente";
  a.normalized = "présente";
  Token b;
  b.surface = "présente,";
  b.normalized = "présente";
  const std::vector<Token> ref{a}, hyp{b};
  const auto r = align(ref, hyp);
  CHECK(r.matches == 1);
  CHECK(r.total_edits() == 0);
}

TEST_CASE("to_string names edit kinds") {
  CHECK(lexiscribe::to_string(EditKind::kMatch) == "match");
  CHECK(lexiscribe::to_string(EditKind::kSubstitute) == "substitute");
  CHECK(lexiscribe::to_string(EditKind::kDelete) == "delete");
  CHECK(lexiscribe::to_string(EditKind::kInsert) == "insert");
}
