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

#include "lexiscribe/report.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "lexiscribe/errors.hpp"
#include "support/paths.hpp"

namespace report = lexiscribe::report;
namespace metrics = lexiscribe::metrics;
using lexiscribe::Rational;
using report::EvaluationReport;
using report::ProviderReport;

namespace {

metrics::CorpusStats make_stats(std::size_t insertions, std::size_t deletions,
                                std::size_t substitutions, std::size_t ref_len,
                                std::size_t documents,
                                std::vector<std::size_t> distances = {}) {
  metrics::CorpusStats s;
  s.documents = documents;
  s.pooled.insertions = insertions;
  s.pooled.deletions = deletions;
  s.pooled.substitutions = substitutions;
  s.pooled.ref_len = ref_len;
  s.pooled.matches = ref_len - deletions - substitutions;
  s.pooled.hyp_len = ref_len - deletions + insertions;
  s.micro_wer = s.pooled.wer();
  s.macro_wer = s.micro_wer;
  s.distances = distances;
  s.histogram = metrics::bin_histogram(distances);
  return s;
}

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size()))
    ++count;
  return count;
}

EvaluationReport judgement_fixture() {
  EvaluationReport rep;
  rep.tool_version = "0.1.0";
  rep.generated_at = "2026-01-05T10:00:00Z";

  ProviderReport aws;
  aws.provider_id = "AWS";
  aws.by_corpus["judgement"] = make_stats(102, 149, 329, 3823, 12, {0, 0, 1, 3, 6});
  aws.minutes = Rational::from_decimal_string("1462.02");

  ProviderReport azure;
  azure.provider_id = "Azure";
  azure.by_corpus["judgement"] = make_stats(129, 242, 305, 3823, 12, {0, 1, 1});

  ProviderReport gcp;
  gcp.provider_id = "GCP";
  gcp.by_corpus["judgement"] = make_stats(39, 171, 238, 3823, 12, {2, 2});

  rep.providers = {aws, azure, gcp};
  return rep;
}

}  // namespace

TEST_CASE("render_table prints micro rows at published precision") {
  const auto text = report::render_table(judgement_fixture(), "judgement");
  const auto lines = split_lines(text);
  REQUIRE(lines.size() >= 5);
  CHECK(lines[0] == "corpus: judgement -- micro average (pooled counts)");
  CHECK(split_words(lines[1]) ==
        std::vector<std::string>{"Provider", "Ins.", "Del.", "Subst.", "WER", "#Words"});
  CHECK(split_words(lines[2]) ==
        std::vector<std::string>{"AWS", "102", "149", "329", "0.15", "3823"});
  CHECK(split_words(lines[3]) ==
        std::vector<std::string>{"Azure", "129", "242", "305", "0.18", "3823"});
  CHECK(split_words(lines[4]) ==
        std::vector<std::string>{"GCP", "39", "171", "238", "0.12", "3823"});

  // Macro block follows after a blank line.
  auto macro_it = std::find(lines.begin(), lines.end(),
                            "corpus: judgement -- macro average (per-document mean)");
  REQUIRE(macro_it != lines.end());
  CHECK(split_words(*(macro_it + 1)) == std::vector<std::string>{"Provider", "WER", "#Docs"});
  CHECK(split_words(*(macro_it + 2)) == std::vector<std::string>{"AWS", "0.15", "12"});
}

TEST_CASE("wer cells round half away from zero at two decimals") {
  EvaluationReport rep;
  rep.tool_version = "0.1.0";
  ProviderReport p;
  p.provider_id = "example";
  // 293/2500 = 0.1172 -> "0.12"
  p.by_corpus["all"] = make_stats(100, 100, 93, 2500, 3);
  rep.providers = {p};
  const auto text = report::render_table(rep, "all");
  CHECK(text.find(" 0.12 ") != std::string::npos);
  CHECK(text.find("0.1172") == std::string::npos);
}

TEST_CASE("render_table selection handling") {
  const auto rep = judgement_fixture();
  CHECK_THROWS_AS(report::render_table(rep, "commission"), lexiscribe::MissingSelectionError);

  // No providers at all: valid header-only output rather than an error.
  EvaluationReport empty;
  empty.tool_version = "0.1.0";
  const auto text = report::render_table(empty, "all");
  CHECK(text.find("Provider") != std::string::npos);
  CHECK(split_lines(text).size() >= 4);

  const auto all = report::render_all_tables(empty);
  CHECK(all.find("corpus: all") != std::string::npos);
}

TEST_CASE("render_all_tables concatenates only present selections") {
  const auto text = report::render_all_tables(judgement_fixture());
  CHECK(text.find("corpus: judgement") != std::string::npos);
  CHECK(text.find("corpus: commission") == std::string::npos);
  CHECK(text.find("corpus: all") == std::string::npos);
}

TEST_CASE("histogram csv lists one row per provider per bin") {
  EvaluationReport rep;
  rep.tool_version = "0.1.0";
  ProviderReport p;
  p.provider_id = "p1";
  p.by_corpus["all"] = make_stats(0, 0, 5, 100, 1, {0, 0, 0, 1, 3});
  rep.providers = {p};

  const auto csv = report::render_histogram_csv(rep);
  const auto lines = split_lines(csv);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "provider,bin_lower,bin_upper,count,ratio");
  CHECK(lines[1] == "p1,0.0,2.5,4,0.8");
  CHECK(lines[2] == "p1,2.5,5.0,1,0.2");
}

TEST_CASE("histogram csv on an empty report is header-only") {
  EvaluationReport rep;
  rep.tool_version = "0.1.0";
  const auto csv = report::render_histogram_csv(rep);
  CHECK(csv == "provider,bin_lower,bin_upper,count,ratio\n");
}

TEST_CASE("histogram svg is structurally sound") {
  EvaluationReport rep;
  rep.tool_version = "0.1.0";
  ProviderReport a;
  a.provider_id = "aws";
  a.by_corpus["all"] = make_stats(0, 0, 4, 50, 1, {0, 1, 3, 6});
  ProviderReport b;
  b.provider_id = "gcp";
  b.by_corpus["all"] = make_stats(0, 0, 2, 50, 1, {0, 0});
  rep.providers = {a, b};

  const auto svg = report::render_histogram_svg(rep);
  CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("Share of substitutions by phonetic distance") != std::string::npos);

  // aws has 3 bins ([0,2.5),[2.5,5),[5,7.5)), gcp one; the grid is the
  // union: 3 groups x 2 providers bars.
  CHECK(count_occurrences(svg, "class=\"bar\"") == 6);
  CHECK(count_occurrences(svg, "class=\"legend\"") == 2);
  CHECK(count_occurrences(svg, "data-provider=\"aws\"") == 3);
  CHECK(count_occurrences(svg, "data-provider=\"gcp\"") == 3);
  CHECK(svg.find("[0.0, 2.5)") != std::string::npos);
  // Every opened tag closes.
  CHECK(count_occurrences(svg, "<rect") == count_occurrences(svg, "/>") -
            count_occurrences(svg, "<line"));
}

TEST_CASE("json export round-trips exactly") {
  testsupport::TempDir dir;
  auto rep = judgement_fixture();
  rep.config_echo = nlohmann::json{{"manifest", "corpus.toml"}, {"bin_width", "2.5"}};
  // Attach a document with substitutions and a provider cost.
  metrics::DocumentMetrics doc;
  doc.document_id = "j-001";
  doc.provider = "AWS";
  doc.wer.substitutions = 1;
  doc.wer.matches = 9;
  doc.wer.ref_len = 10;
  doc.wer.hyp_len = 10;
  metrics::SubstitutionRecord rec;
  rec.ref.surface = "présente";
  rec.ref.normalized = "présente";
  rec.ref.begin = 4;
  rec.ref.end = 13;
  rec.hyp.surface = "présentes";
  rec.hyp.normalized = "présentes";
  rec.distance = 0;
  rec.category = metrics::ErrorCategory::kInflection;
  doc.substitutions.push_back(rec);
  rep.providers[0].documents.push_back(doc);
  rep.providers[0].cost_usd = Rational::from_decimal_string("44.11");

  const auto path = dir.path() / "report.json";
  report::export_json(rep, path);
  const auto loaded = report::import_json(path);
  CHECK(report::reports_equal(rep, loaded));
  CHECK(loaded.providers[0].cost_usd == Rational::from_decimal_string("44.11"));
  CHECK_FALSE(loaded.providers[1].cost_usd.has_value());
  CHECK(loaded.providers[0].documents.at(0).substitutions.at(0).category ==
        metrics::ErrorCategory::kInflection);

  // The export is deterministic byte-for-byte.
  const auto first = testsupport::slurp(path);
  report::export_json(loaded, path);
  CHECK(testsupport::slurp(path) == first);
}

TEST_CASE("schema version gates imports") {
  testsupport::TempDir dir;

  auto j = report::to_json(judgement_fixture());
  j["schema_version"] = 99;
  const auto p1 = dir.file("v99.json", j.dump());
  CHECK_THROWS_AS(report::import_json(p1), lexiscribe::VersionError);

  j.erase("schema_version");
  const auto p2 = dir.file("missing.json", j.dump());
  CHECK_THROWS_AS(report::import_json(p2), lexiscribe::VersionError);

  const auto p3 = dir.file("garbage.json", "not json at all");
  CHECK_THROWS_AS(report::import_json(p3), lexiscribe::IoError);

  CHECK_THROWS_AS(report::import_json(dir.path() / "absent.json"), lexiscribe::IoError);
}

TEST_CASE("unknown error categories are rejected on import") {
  auto j = report::to_json(judgement_fixture());
  // Minimal valid document with a bogus category.
  j["providers"][0]["documents"] = nlohmann::json::array();
  j["providers"][0]["documents"].push_back(
      {{"document_id", "d"},
       {"provider", "AWS"},
       {"wer",
        {{"insertions", 0},
         {"deletions", 0},
         {"substitutions", 1},
         {"matches", 9},
         {"ref_len", 10},
         {"hyp_len", 10}}},
       {"substitutions",
        {{{"ref",
           {{"surface", "a"},
            {"normalized", "a"},
            {"begin", 0},
            {"end", 1},
            {"sentence_start", false}}},
          {"hyp",
           {{"surface", "b"},
            {"normalized", "b"},
            {"begin", 0},
            {"end", 1},
            {"sentence_start", false}}},
          {"distance", 1},
          {"category", "misheard"}}}}});
  CHECK_THROWS_AS(report::from_json(j), lexiscribe::VersionError);
}

TEST_CASE("an empty report still exports valid json") {
  testsupport::TempDir dir;
  EvaluationReport rep;
  rep.tool_version = "0.1.0";
  rep.generated_at = "2026-01-05T10:00:00Z";
  const auto path = dir.path() / "empty.json";
  report::export_json(rep, path);
  const auto loaded = report::import_json(path);
  CHECK(loaded.providers.empty());
  CHECK(loaded.schema_version == report::kSchemaVersion);
  CHECK(report::reports_equal(rep, loaded));
}
