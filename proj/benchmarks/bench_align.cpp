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

#include <random>
#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "lexiscribe/aligner.hpp"
#include "lexiscribe/normalizer.hpp"

namespace {

using lexiscribe::Token;

// A synthetic "document" pair: the hypothesis mutates roughly one word in
// eight, matching the error density of the corpora the aligner sees.
std::pair<std::vector<Token>, std::vector<Token>> make_pair(std::size_t words,
                                                            std::uint32_t seed) {
  static const char* kVocabulary[] = {
      "le",      "tribunal", "examine",  "la",       "commission", "des",
      "témoins", "présente", "audience", "monsieur", "conclusions", "projet",
      "loi",     "séance",   "procès",   "juge",
  };
  constexpr std::size_t kVocabularySize = std::size(kVocabulary);

  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> word_dist(0, kVocabularySize - 1);
  std::uniform_int_distribution<int> error_dist(0, 7);

  std::vector<Token> ref, hyp;
  for (std::size_t i = 0; i < words; ++i) {
    Token t;
    t.surface = t.normalized = kVocabulary[word_dist(rng)];
    ref.push_back(t);
    if (error_dist(rng) == 0) {
      Token other;
      other.surface = other.normalized = kVocabulary[word_dist(rng)];
      hyp.push_back(other);  // substitution (or accidental match)
    } else {
      hyp.push_back(t);
    }
  }
  return {std::move(ref), std::move(hyp)};
}

void BM_Align(benchmark::State& state) {
  const auto [ref, hyp] = make_pair(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) {
    auto result = lexiscribe::align(ref, hyp);
    benchmark::DoNotOptimize(result);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Align)->Arg(100)->Arg(1000)->Arg(4000);

void BM_EditDistance(benchmark::State& state) {
  const auto [ref, hyp] = make_pair(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) {
    auto d = lexiscribe::edit_distance(ref, hyp);
    benchmark::DoNotOptimize(d);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EditDistance)->Arg(100)->Arg(1000)->Arg(4000);

void BM_NormalizeAndAlign(benchmark::State& state) {
  // End-to-end: raw text through the tokenizer into the aligner.
  std::string ref_text, hyp_text;
  const auto [ref, hyp] = make_pair(static_cast<std::size_t>(state.range(0)), 7);
  for (const auto& t : ref) ref_text += t.surface + " ";
  for (const auto& t : hyp) hyp_text += t.surface + " ";

  lexiscribe::NormalizerConfig cfg;
  for (auto _ : state) {
    auto [r, h] = lexiscribe::normalize_pair(ref_text, hyp_text, cfg);
    auto result = lexiscribe::align(r, h);
    benchmark::DoNotOptimize(result);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_NormalizeAndAlign)->Arg(1000);

}  // namespace
