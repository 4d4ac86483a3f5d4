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

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "lexiscribe/errors.hpp"
#include "support/homophones.hpp"
#include "support/paths.hpp"

namespace sonnex = lexiscribe::sonnex;
using sonnex::PhonemeString;
using sonnex::RuleSet;

namespace {

const RuleSet& default_rules() {
  static const RuleSet rules =
      RuleSet::load(sonnex::default_rules_path(), sonnex::default_exceptions_path());
  return rules;
}

}  // namespace

TEST_CASE("rule file loads and declares its alphabet") {
  const auto& rules = default_rules();
  CHECK(rules.version() == "sonnex-rules v1");
  CHECK(rules.alphabet().size() == 32);
  CHECK(rules.alphabet().count("AN") == 1);
  CHECK(rules.alphabet().count("S") == 1);
  CHECK(rules.alphabet().count("8") == 1);
  CHECK_FALSE(rules.rules().empty());
  CHECK_FALSE(rules.exceptions().empty());
}

TEST_CASE("phonemize maps reference words to expected symbols") {
  const auto& rules = default_rules();
  // word -> space-joined phoneme symbols
  const std::pair<const char*, const char*> expectations[] = {
      {"eau", "o"},
      {"avocat", "a v o k a"},
      {"tribunal", "t R i b y n a l"},
      {"juge", "Z y Z"},
      {"jugement", "Z y Z 2 m AN"},
      {"témoin", "t e m w IN"},
      {"procès", "p R o s E"},
      {"chat", "S a"},
      {"audience", "o d j AN s"},
      {"présente", "p R e z AN t"},
      {"présentes", "p R e z AN t"},
      {"monsieur", "m 2 s j 2"},
      {"question", "k E s t j ON"},
      {"science", "s j AN s"},
      {"église", "e g l i z"},
      {"beaucoup", "b o k u"},
      {"nation", "n a s j ON"},
      {"deux", "d 2"},
      {"trois", "t R w a"},
      {"quatre", "k a t R"},
      {"cinq", "s IN k"},
      {"vingt", "v IN"},
      {"huit", "8 i t"},
      {"oiseau", "w a z o"},
      {"femme", "f a m"},
      {"homme", "o m"},
      {"ville", "v i l"},
      {"fille", "f i j"},
      {"travail", "t R a v a j"},
      {"soleil", "s o l E j"},
      {"feuille", "f 2 j"},
      {"bonjour", "b ON Z u R"},
      {"merci", "m E R s i"},
      {"paris", "p a R i"},
      {"france", "f R AN s"},
      {"gouvernement", "g u v E R n 2 m AN"},
      {"loi", "l w a"},
      {"droit", "d R w a"},
      {"enquête", "AN k E t"},
      {"séance", "s e AN s"},
      {"montagne", "m ON t a N"},
      {"poisson", "p w a s ON"},
      {"maison", "m E z ON"},
      {"cour", "k u R"},
      {"champagne", "S AN p a N"},
      {"simple", "s IN p l"},
      {"syndicat", "s IN d i k a"},
      {"machine", "m a S i n"},
      {"immense", "i m AN s"},
      {"conclusions", "k ON k l y z j ON"},
      {"entendu", "AN t AN d y"},
      {"aujourd'hui", "o Z u R d 8 i"},
      {"grand-mère", "g R AN m E R"},
      {"dix-sept", "d i s s E t"},
      {"parlaient", "p a R l E"},
      {"viennent", "v j E n"},
      {"donnent", "d o n"},
      {"finissent", "f i n i s"},
      {"hier", "j E R"},
      {"mangeait", "m AN Z E"},
      {"voyage", "v w a j a Z"},
      {"payons", "p E j ON"},
      {"brun", "b R UN"},
      {"parfum", "p a R f UN"},
      {"thym", "t IN"},
  };
  for (const auto& [word, want] : expectations) {
    CAPTURE(word);
    CHECK(rules.phonemize(word).joined() == want);
  }
}

TEST_CASE("well-known homophone sets collapse to distance zero") {
  const auto& rules = default_rules();
  const auto& sets = testsupport::homophone_sets();
  CHECK(sets.size() >= 25);
  for (const auto& set : sets) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        CAPTURE(set[i]);
        CAPTURE(set[j]);
        CHECK(sonnex::sonnex_distance(set[i], set[j], rules) == 0);
        CHECK(rules.phonemize(set[i]) == rules.phonemize(set[j]));
      }
    }
  }
}

TEST_CASE("distinct-sounding words keep positive distance") {
  const auto& rules = default_rules();
  CHECK(sonnex::sonnex_distance("présente", "avocat", rules) >= 4);
  CHECK(sonnex::sonnex_distance("chat", "chien", rules) > 0);
  CHECK(sonnex::sonnex_distance("un", "deux", rules) > 0);
  CHECK(sonnex::sonnex_distance("séance", "science", rules) == 1);
  CHECK(sonnex::sonnex_distance("présenté", "présentait", rules) == 1);
  CHECK(sonnex::sonnex_distance("les", "le", rules) == 1);
  CHECK(sonnex::sonnex_distance("les", "des", rules) == 1);
}

TEST_CASE("digits and unknown characters pass through opaquely") {
  const auto& rules = default_rules();
  const auto ten = rules.phonemize("10");
  CHECK(ten.symbols == std::vector<std::string>{"1", "0"});
  CHECK(sonnex::sonnex_distance("10", "dix", rules) > 0);
  CHECK(sonnex::sonnex_distance("10", "10", rules) == 0);
}

TEST_CASE("phonemize rejects empty input") {
  const auto& rules = default_rules();
  CHECK_THROWS_AS(rules.phonemize(""), lexiscribe::EmptyWordError);
}

TEST_CASE("phoneme_distance is a metric on symbol strings") {
  const auto& rules = default_rules();
  std::vector<std::string> alphabet(rules.alphabet().begin(), rules.alphabet().end());
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len_dist(0, 10);
  std::uniform_int_distribution<std::size_t> sym_dist(0, alphabet.size() - 1);
  auto random_phonemes = [&] {
    PhonemeString p;
    for (int i = len_dist(rng); i > 0; --i) p.symbols.push_back(alphabet[sym_dist(rng)]);
    return p;
  };
  for (int iter = 0; iter < 500; ++iter) {
    const auto a = random_phonemes();
    const auto b = random_phonemes();
    const auto c = random_phonemes();
    const auto dab = sonnex::phoneme_distance(a, b);
    CAPTURE(a.joined());
    CAPTURE(b.joined());
    // Identity of indiscernibles and symmetry.
    CHECK(sonnex::phoneme_distance(a, a) == 0);
    CHECK((dab == 0) == (a == b));
    CHECK(dab == sonnex::phoneme_distance(b, a));
    // Triangle inequality.
    CHECK(sonnex::phoneme_distance(a, c) <= dab + sonnex::phoneme_distance(b, c));
    // Bounded by the longer string.
    CHECK(dab <= std::max(a.symbols.size(), b.symbols.size()));
  }
}

TEST_CASE("rule loader rejects malformed files") {
  testsupport::TempDir dir;

  SUBCASE("missing file") {
    CHECK_THROWS_AS(RuleSet::load((dir.path() / "none.tsv").string()),
                    lexiscribe::MissingFileError);
  }

  SUBCASE("wrong version tag") {
    const auto p = dir.file("v.tsv", "sonnex-rules v9\nalphabet\ta\n0\ta\t*\t*\ta\n");
    CHECK_THROWS_AS(RuleSet::load(p.string()), lexiscribe::MalformedRuleFileError);
  }

  SUBCASE("missing alphabet line") {
    const auto p = dir.file("n.tsv", "sonnex-rules v1\n0\ta\t*\t*\ta\n");
    CHECK_THROWS_AS(RuleSet::load(p.string()), lexiscribe::MalformedRuleFileError);
  }

  SUBCASE("emission symbol outside the alphabet") {
    const auto p = dir.file("s.tsv",
                            "sonnex-rules v1\nalphabet\ta b\n0\ta\t*\t*\tq\n");
    CHECK_THROWS_AS(RuleSet::load(p.string()), lexiscribe::UnknownPhonemeSymbolError);
  }

  SUBCASE("duplicate rule") {
    const auto p = dir.file("d.tsv",
                            "sonnex-rules v1\nalphabet\ta\n"
                            "0\ta\t*\t*\ta\n"
                            "0\ta\t*\t*\ta\n");
    CHECK_THROWS_AS(RuleSet::load(p.string()), lexiscribe::AmbiguousRuleError);
  }

  SUBCASE("bad column count") {
    const auto p = dir.file("c.tsv", "sonnex-rules v1\nalphabet\ta\n0\ta\t*\ta\n");
    CHECK_THROWS_AS(RuleSet::load(p.string()), lexiscribe::MalformedRuleFileError);
  }

  SUBCASE("bad context class") {
    const auto p = dir.file("x.tsv",
                            "sonnex-rules v1\nalphabet\ta\n0\ta\t%\t*\ta\n");
    CHECK_THROWS_AS(RuleSet::load(p.string()), lexiscribe::MalformedRuleFileError);
  }
}

TEST_CASE("exception lexicon loader rejects malformed files") {
  testsupport::TempDir dir;
  const auto rules_path = dir.file(
      "r.tsv", "sonnex-rules v1\nalphabet\ta b\n0\ta\t*\t*\ta\n0\tb\t*\t*\tb\n");

  SUBCASE("valid lexicon applies before rules") {
    const auto lex = dir.file("l.tsv", "sonnex-exceptions v1\nab\tb a\n");
    const auto rs = RuleSet::load(rules_path.string(), lex.string());
    CHECK(rs.phonemize("ab").joined() == "b a");
    CHECK(rs.phonemize("ba").joined() == "b a");
  }

  SUBCASE("wrong version tag") {
    const auto lex = dir.file("l.tsv", "sonnex-lexicon v1\nab\tb a\n");
    CHECK_THROWS_AS(RuleSet::load(rules_path.string(), lex.string()),
                    lexiscribe::MalformedRuleFileError);
  }

  SUBCASE("symbol outside the alphabet") {
    const auto lex = dir.file("l.tsv", "sonnex-exceptions v1\nab\tz\n");
    CHECK_THROWS_AS(RuleSet::load(rules_path.string(), lex.string()),
                    lexiscribe::UnknownPhonemeSymbolError);
  }

  SUBCASE("duplicate entry") {
    const auto lex = dir.file("l.tsv", "sonnex-exceptions v1\nab\ta\nab\tb\n");
    CHECK_THROWS_AS(RuleSet::load(rules_path.string(), lex.string()),
                    lexiscribe::AmbiguousRuleError);
  }
}

TEST_CASE("contextual rule selection follows the documented precedence") {
  testsupport::TempDir dir;
  const auto p = dir.file("r.tsv",
                          "sonnex-rules v1\n"
                          "alphabet\ta b k s\n"
                          "5\ta\t^\t*\ts\n"
                          "0\ta\t*\t*\ta\n"
                          "9\tb\t*\t*\tb\n"
                          "0\tab\t*\t*\tk\n"
                          "1\tba\t*\t$\ts\n"
                          "0\tba\t*\t*\tb\n"
                          "0\tx\t*\t*\t-\n");
  const auto rs = RuleSet::load(p.string());
  // Longest pattern wins even against a higher-priority shorter rule.
  CHECK(rs.phonemize("ab").joined() == "k");
  // Same length: higher priority wins when its context holds...
  CHECK(rs.phonemize("ba").joined() == "s");
  // ...and is skipped when the $ context fails mid-word.
  CHECK(rs.phonemize("bab").joined() == "b b");
  // Word-start context applies only at the first position.
  CHECK(rs.phonemize("a").joined() == "s");
  CHECK(rs.phonemize("aa").joined() == "s a");
  // "-" emissions are silent.
  CHECK(rs.phonemize("xab").joined() == "k");
  // Characters with no rule at all pass through as opaque symbols.
  CHECK(rs.phonemize("q7").joined() == "q 7");
}
