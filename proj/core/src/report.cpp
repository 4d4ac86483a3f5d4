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
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "lexiscribe/errors.hpp"

namespace lexiscribe::report {

namespace {

// ---------------------------------------------------------------------------
// Small formatting helpers

/// Decimal with up to six places, trailing zeros trimmed but at least one
/// decimal kept: 3/4 -> "0.75", 0 -> "0.0", 1/3 -> "0.333333".
std::string trim_decimal(const Rational& value) {
  std::string s = value.to_decimal_string(6);
  std::size_t last = s.find_last_not_of('0');
  if (s[last] == '.') ++last;  // keep one zero after the point
  return s.substr(0, last + 1);
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

metrics::ErrorCategory category_from_string(const std::string& text) {
  for (metrics::ErrorCategory c : metrics::all_categories())
    if (metrics::to_string(c) == text) return c;
  throw VersionError("unknown error category '" + text + "' in report");
}

// ---------------------------------------------------------------------------
// JSON (de)serialization pieces

nlohmann::json rational_to_json(const Rational& r) {
  return nlohmann::json{{"num", r.num()}, {"den", r.den()}};
}

Rational rational_from_json(const nlohmann::json& j) {
  return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

nlohmann::json wer_to_json(const metrics::WerBreakdown& w) {
  return nlohmann::json{{"insertions", w.insertions}, {"deletions", w.deletions},
                        {"substitutions", w.substitutions}, {"matches", w.matches},
                        {"ref_len", w.ref_len},           {"hyp_len", w.hyp_len}};
}

metrics::WerBreakdown wer_from_json(const nlohmann::json& j) {
  metrics::WerBreakdown w;
  w.insertions = j.at("insertions").get<std::size_t>();
  w.deletions = j.at("deletions").get<std::size_t>();
  w.substitutions = j.at("substitutions").get<std::size_t>();
  w.matches = j.at("matches").get<std::size_t>();
  w.ref_len = j.at("ref_len").get<std::size_t>();
  w.hyp_len = j.at("hyp_len").get<std::size_t>();
  return w;
}

nlohmann::json token_to_json(const Token& t) {
  return nlohmann::json{{"surface", t.surface}, {"normalized", t.normalized},
                        {"begin", t.begin},     {"end", t.end},
                        {"sentence_start", t.sentence_start}};
}

Token token_from_json(const nlohmann::json& j) {
  Token t;
  t.surface = j.at("surface").get<std::string>();
  t.normalized = j.at("normalized").get<std::string>();
  t.begin = j.at("begin").get<std::size_t>();
  t.end = j.at("end").get<std::size_t>();
  t.sentence_start = j.at("sentence_start").get<bool>();
  return t;
}

nlohmann::json histogram_to_json(const metrics::Histogram& h) {
  nlohmann::json bins = nlohmann::json::array();
  for (const auto& bin : h.bins) {
    bins.push_back(nlohmann::json{{"lower", rational_to_json(bin.lower)},
                                  {"upper", rational_to_json(bin.upper)},
                                  {"count", bin.count}});
  }
  return nlohmann::json{{"total", h.total}, {"bins", std::move(bins)}};
}

metrics::Histogram histogram_from_json(const nlohmann::json& j) {
  metrics::Histogram h;
  h.total = j.at("total").get<std::size_t>();
  for (const auto& bin : j.at("bins")) {
    metrics::HistogramBin b;
    b.lower = rational_from_json(bin.at("lower"));
    b.upper = rational_from_json(bin.at("upper"));
    b.count = bin.at("count").get<std::size_t>();
    h.bins.push_back(b);
  }
  return h;
}

nlohmann::json stats_to_json(const metrics::CorpusStats& s) {
  nlohmann::json categories = nlohmann::json::object();
  for (metrics::ErrorCategory c : metrics::all_categories()) {
    auto it = s.category_counts.find(c);
    categories[metrics::to_string(c)] = it == s.category_counts.end() ? 0 : it->second;
  }
  return nlohmann::json{{"documents", s.documents},
                        {"pooled", wer_to_json(s.pooled)},
                        {"micro_wer", rational_to_json(s.micro_wer)},
                        {"macro_wer", rational_to_json(s.macro_wer)},
                        {"categories", std::move(categories)},
                        {"distances", s.distances},
                        {"histogram", histogram_to_json(s.histogram)}};
}

metrics::CorpusStats stats_from_json(const nlohmann::json& j) {
  metrics::CorpusStats s;
  s.documents = j.at("documents").get<std::size_t>();
  s.pooled = wer_from_json(j.at("pooled"));
  s.micro_wer = rational_from_json(j.at("micro_wer"));
  s.macro_wer = rational_from_json(j.at("macro_wer"));
  for (const auto& [key, value] : j.at("categories").items()) {
    std::size_t count = value.get<std::size_t>();
    if (count > 0) s.category_counts[category_from_string(key)] = count;
  }
  s.distances = j.at("distances").get<std::vector<std::size_t>>();
  s.histogram = histogram_from_json(j.at("histogram"));
  return s;
}

nlohmann::json document_to_json(const metrics::DocumentMetrics& d) {
  nlohmann::json subs = nlohmann::json::array();
  for (const auto& rec : d.substitutions) {
    subs.push_back(nlohmann::json{{"ref", token_to_json(rec.ref)},
                                  {"hyp", token_to_json(rec.hyp)},
                                  {"distance", rec.distance},
                                  {"category", metrics::to_string(rec.category)}});
  }
  return nlohmann::json{{"document_id", d.document_id},
                        {"provider", d.provider},
                        {"wer", wer_to_json(d.wer)},
                        {"substitutions", std::move(subs)}};
}

metrics::DocumentMetrics document_from_json(const nlohmann::json& j) {
  metrics::DocumentMetrics d;
  d.document_id = j.at("document_id").get<std::string>();
  d.provider = j.at("provider").get<std::string>();
  d.wer = wer_from_json(j.at("wer"));
  for (const auto& sub : j.at("substitutions")) {
    metrics::SubstitutionRecord rec;
    rec.ref = token_from_json(sub.at("ref"));
    rec.hyp = token_from_json(sub.at("hyp"));
    rec.distance = sub.at("distance").get<std::size_t>();
    rec.category = category_from_string(sub.at("category").get<std::string>());
    d.substitutions.push_back(std::move(rec));
  }
  return d;
}

}  // namespace

// ---------------------------------------------------------------------------
// Text table

std::string render_table(const EvaluationReport& report, const std::string& selection) {
  std::vector<const ProviderReport*> rows;
  for (const auto& provider : report.providers)
    if (provider.by_corpus.count(selection)) rows.push_back(&provider);
  if (!report.providers.empty() && rows.empty())
    throw MissingSelectionError("no provider has results for corpus '" + selection + "'");

  std::size_t name_width = 8;
  for (const auto* row : rows) name_width = std::max(name_width, row->provider_id.size());

  std::ostringstream out;
  out << "corpus: " << selection << " -- micro average (pooled counts)\n";
  out << pad_right("Provider", name_width) << "  " << pad_left("Ins.", 6) << " "
      << pad_left("Del.", 6) << " " << pad_left("Subst.", 6) << " " << pad_left("WER", 5) << " "
      << pad_left("#Words", 7) << "\n";
  for (const auto* row : rows) {
    const auto& stats = row->by_corpus.at(selection);
    out << pad_right(row->provider_id, name_width) << "  "
        << pad_left(std::to_string(stats.pooled.insertions), 6) << " "
        << pad_left(std::to_string(stats.pooled.deletions), 6) << " "
        << pad_left(std::to_string(stats.pooled.substitutions), 6) << " "
        << pad_left(stats.micro_wer.to_decimal_string(2), 5) << " "
        << pad_left(std::to_string(stats.pooled.ref_len), 7) << "\n";
  }
  out << "\n";
  out << "corpus: " << selection << " -- macro average (per-document mean)\n";
  out << pad_right("Provider", name_width) << "  " << pad_left("WER", 5) << " "
      << pad_left("#Docs", 6) << "\n";
  for (const auto* row : rows) {
    const auto& stats = row->by_corpus.at(selection);
    out << pad_right(row->provider_id, name_width) << "  "
        << pad_left(stats.macro_wer.to_decimal_string(2), 5) << " "
        << pad_left(std::to_string(stats.documents), 6) << "\n";
  }
  return out.str();
}

std::string render_all_tables(const EvaluationReport& report) {
  static const char* kSelections[] = {"judgement", "commission", "all"};
  std::string out;
  for (const char* selection : kSelections) {
    bool present = false;
    for (const auto& provider : report.providers)
      if (provider.by_corpus.count(selection)) present = true;
    if (!present) continue;
    if (!out.empty()) out += "\n";
    out += render_table(report, selection);
  }
  if (out.empty()) out = render_table(report, "all");  // header-only fallback
  return out;
}

// ---------------------------------------------------------------------------
// Histogram renderers

std::string render_histogram_csv(const EvaluationReport& report) {
  std::ostringstream out;
  out << "provider,bin_lower,bin_upper,count,ratio\n";
  for (const auto& provider : report.providers) {
    auto it = provider.by_corpus.find("all");
    if (it == provider.by_corpus.end()) continue;
    const metrics::Histogram& h = it->second.histogram;
    std::vector<Rational> ratios = h.ratios();
    for (std::size_t i = 0; i < h.bins.size(); ++i) {
      out << provider.provider_id << ',' << trim_decimal(h.bins[i].lower) << ','
          << trim_decimal(h.bins[i].upper) << ',' << h.bins[i].count << ','
          << trim_decimal(ratios[i]) << "\n";
    }
  }
  return out.str();
}

std::string render_histogram_svg(const EvaluationReport& report) {
  struct Series {
    std::string provider;
    const metrics::Histogram* histogram;
  };
  std::vector<Series> series;
  std::size_t bin_count = 0;
  for (const auto& provider : report.providers) {
    auto it = provider.by_corpus.find("all");
    if (it == provider.by_corpus.end()) continue;
    series.push_back({provider.provider_id, &it->second.histogram});
    bin_count = std::max(bin_count, it->second.histogram.bins.size());
  }

  static const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759",
                                   "#76b7b2", "#59a14f", "#edc948"};
  constexpr int kBarWidth = 34;
  constexpr int kBarGap = 6;
  constexpr int kGroupGap = 30;
  constexpr int kPlotHeight = 300;
  constexpr int kLeft = 70;
  constexpr int kTop = 50;
  constexpr int kBottom = 70;

  const int group_width =
      static_cast<int>(series.size()) * (kBarWidth + kBarGap) - kBarGap + kGroupGap;
  const int plot_width =
      std::max(static_cast<int>(bin_count) * group_width, 200);
  const int total_width = kLeft + plot_width + 40;
  const int total_height = kTop + kPlotHeight + kBottom;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total_width << "\" height=\""
      << total_height << "\" viewBox=\"0 0 " << total_width << " " << total_height << "\">\n";
  svg << "  <style>text{font-family:sans-serif;font-size:12px;}.axis{stroke:#333;}"
         ".grid{stroke:#ddd;}.bar{stroke:none;}</style>\n";
  svg << "  <text x=\"" << kLeft << "\" y=\"20\" class=\"title\">"
      << "Share of substitutions by phonetic distance</text>\n";

  // y axis with gridlines every 0.25
  for (int i = 0; i <= 4; ++i) {
    double ratio = i * 0.25;
    int y = kTop + static_cast<int>((1.0 - ratio) * kPlotHeight);
    svg << "  <line class=\"grid\" x1=\"" << kLeft << "\" y1=\"" << y << "\" x2=\""
        << (kLeft + plot_width) << "\" y2=\"" << y << "\"/>\n";
    svg << "  <text x=\"" << (kLeft - 10) << "\" y=\"" << (y + 4)
        << "\" text-anchor=\"end\">" << fixed2(ratio) << "</text>\n";
  }
  svg << "  <line class=\"axis\" x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
      << "\" y2=\"" << (kTop + kPlotHeight) << "\"/>\n";
  svg << "  <line class=\"axis\" x1=\"" << kLeft << "\" y1=\"" << (kTop + kPlotHeight)
      << "\" x2=\"" << (kLeft + plot_width) << "\" y2=\"" << (kTop + kPlotHeight) << "\"/>\n";

  // grouped bars
  for (std::size_t bin = 0; bin < bin_count; ++bin) {
    int group_x = kLeft + static_cast<int>(bin) * group_width + kGroupGap / 2;
    std::string label;
    for (std::size_t s = 0; s < series.size(); ++s) {
      const metrics::Histogram& h = *series[s].histogram;
      Rational ratio(0);
      if (bin < h.bins.size() && h.total > 0)
        ratio = Rational(static_cast<std::int64_t>(h.bins[bin].count),
                         static_cast<std::int64_t>(h.total));
      if (bin < h.bins.size() && label.empty())
        label = "[" + trim_decimal(h.bins[bin].lower) + ", " + trim_decimal(h.bins[bin].upper) +
                ")";
      double r = ratio.to_double();
      int bar_height = static_cast<int>(r * kPlotHeight + 0.5);
      int x = group_x + static_cast<int>(s) * (kBarWidth + kBarGap);
      int y = kTop + kPlotHeight - bar_height;
      svg << "  <rect class=\"bar\" data-provider=\"" << series[s].provider << "\" data-bin=\""
          << bin << "\" data-ratio=\"" << trim_decimal(ratio) << "\" x=\"" << x << "\" y=\"" << y
          << "\" width=\"" << kBarWidth << "\" height=\"" << bar_height << "\" fill=\""
          << kPalette[s % 6] << "\"/>\n";
    }
    svg << "  <text x=\"" << (group_x + (group_width - kGroupGap) / 2) << "\" y=\""
        << (kTop + kPlotHeight + 20) << "\" text-anchor=\"middle\">" << label << "</text>\n";
  }

  // legend
  for (std::size_t s = 0; s < series.size(); ++s) {
    int x = kLeft + static_cast<int>(s) * 160;
    int y = kTop + kPlotHeight + 45;
    svg << "  <rect x=\"" << x << "\" y=\"" << (y - 10) << "\" width=\"12\" height=\"12\" fill=\""
        << kPalette[s % 6] << "\"/>\n";
    svg << "  <text class=\"legend\" x=\"" << (x + 18) << "\" y=\"" << y << "\">"
        << series[s].provider << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

// ---------------------------------------------------------------------------
// JSON export / import

nlohmann::json to_json(const EvaluationReport& report) {
  nlohmann::json providers = nlohmann::json::array();
  for (const auto& provider : report.providers) {
    nlohmann::json by_corpus = nlohmann::json::object();
    for (const auto& [corpus, stats] : provider.by_corpus)
      by_corpus[corpus] = stats_to_json(stats);
    nlohmann::json documents = nlohmann::json::array();
    for (const auto& doc : provider.documents) documents.push_back(document_to_json(doc));
    providers.push_back(
        nlohmann::json{{"provider_id", provider.provider_id},
                       {"minutes", rational_to_json(provider.minutes)},
                       {"cost_usd", provider.cost_usd.has_value()
                                        ? rational_to_json(*provider.cost_usd)
                                        : nlohmann::json(nullptr)},
                       {"by_corpus", std::move(by_corpus)},
                       {"documents", std::move(documents)}});
  }
  return nlohmann::json{{"schema_version", report.schema_version},
                        {"tool_version", report.tool_version},
                        {"generated_at", report.generated_at},
                        {"config", report.config_echo},
                        {"providers", std::move(providers)}};
}

EvaluationReport from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("schema_version") || !j.at("schema_version").is_number())
    throw VersionError("report is missing a schema_version field");
  int version = j.at("schema_version").get<int>();
  if (version != kSchemaVersion)
    throw VersionError("unsupported report schema version " + std::to_string(version) +
                       " (expected " + std::to_string(kSchemaVersion) + ")");
  EvaluationReport report;
  report.schema_version = version;
  report.tool_version = j.at("tool_version").get<std::string>();
  report.generated_at = j.at("generated_at").get<std::string>();
  report.config_echo = j.at("config");
  for (const auto& p : j.at("providers")) {
    ProviderReport provider;
    provider.provider_id = p.at("provider_id").get<std::string>();
    provider.minutes = rational_from_json(p.at("minutes"));
    if (!p.at("cost_usd").is_null()) provider.cost_usd = rational_from_json(p.at("cost_usd"));
    for (const auto& [corpus, stats] : p.at("by_corpus").items())
      provider.by_corpus[corpus] = stats_from_json(stats);
    for (const auto& doc : p.at("documents"))
      provider.documents.push_back(document_from_json(doc));
    report.providers.push_back(std::move(provider));
  }
  return report;
}

void export_json(const EvaluationReport& report, const std::filesystem::path& path) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << to_json(report).dump(2) << "\n";
    out.flush();
    if (!out) throw IoError("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

EvaluationReport import_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  nlohmann::json parsed;
  try {
    in >> parsed;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("report " + path.string() + " is not valid JSON: " + e.what());
  }
  return from_json(parsed);
}

bool reports_equal(const EvaluationReport& a, const EvaluationReport& b) {
  return to_json(a) == to_json(b);
}

}  // namespace lexiscribe::report
