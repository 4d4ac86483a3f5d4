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

#include "lexiscribe/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "lexiscribe/errors.hpp"
#include "lexiscribe/text.hpp"
#include "lexiscribe/toml_lite.hpp"

namespace lexiscribe {

namespace fs = std::filesystem;

Duration Duration::from_centiseconds(std::int64_t cs) {
  if (cs < 0) throw MalformedManifestError("negative duration");
  Duration d;
  d.centiseconds_ = cs;
  return d;
}

Duration Duration::parse(const std::string& input) {
  auto fail = [&]() -> void {
    throw MalformedManifestError("bad duration '" + input + "' (expected D:HH:MM:SS.cc or H:MM:SS.cc)");
  };
  std::vector<std::string> groups;
  std::string current;
  for (char c : input) {
    if (c == ':') {
      groups.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  groups.push_back(current);
  if (groups.size() != 3 && groups.size() != 4) fail();

  // Last group is SS or SS.cc.
  std::string seconds_part = groups.back();
  groups.pop_back();
  std::int64_t centis = 0;
  auto dot = seconds_part.find('.');
  std::string whole_seconds = seconds_part;
  if (dot != std::string::npos) {
    std::string frac = seconds_part.substr(dot + 1);
    whole_seconds = seconds_part.substr(0, dot);
    if (frac.size() != 2 || !std::isdigit((unsigned char)frac[0]) || !std::isdigit((unsigned char)frac[1]))
      fail();
    centis = (frac[0] - '0') * 10 + (frac[1] - '0');
  }
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    if (s.empty() || s.size() > 9) fail();
    for (char c : s)
      if (!std::isdigit((unsigned char)c)) fail();
    return std::stoll(s);
  };
  std::int64_t seconds = parse_int(whole_seconds);
  std::int64_t minutes = parse_int(groups.back());
  groups.pop_back();
  std::int64_t hours = parse_int(groups.back());
  groups.pop_back();
  std::int64_t days = 0;
  if (!groups.empty()) {
    days = parse_int(groups.back());
    if (hours > 23) fail();  // day form constrains hours
  }
  if (minutes > 59 || seconds > 59) fail();
  std::int64_t total = (((days * 24 + hours) * 60 + minutes) * 60 + seconds) * 100 + centis;
  return from_centiseconds(total);
}

std::string Duration::to_string() const {
  std::int64_t cs = centiseconds_ % 100;
  std::int64_t s = (centiseconds_ / 100) % 60;
  std::int64_t m = (centiseconds_ / 6000) % 60;
  std::int64_t h = centiseconds_ / 360000;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%lld:%02lld:%02lld.%02lld", (long long)h, (long long)m,
                (long long)s, (long long)cs);
  return buf;
}

std::string Duration::to_string_with_days() const {
  std::int64_t cs = centiseconds_ % 100;
  std::int64_t s = (centiseconds_ / 100) % 60;
  std::int64_t m = (centiseconds_ / 6000) % 60;
  std::int64_t h = (centiseconds_ / 360000) % 24;
  std::int64_t d = centiseconds_ / 8640000;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%lld:%02lld:%02lld:%02lld.%02lld", (long long)d, (long long)h,
                (long long)m, (long long)s, (long long)cs);
  return buf;
}

std::string to_string(CorpusTag tag) {
  return tag == CorpusTag::kJudgement ? "judgement" : "commission";
}

CorpusTag corpus_tag_from_string(const std::string& text) {
  if (text == "judgement") return CorpusTag::kJudgement;
  if (text == "commission") return CorpusTag::kCommission;
  throw MalformedManifestError("unknown corpus_tag '" + text + "' (expected judgement|commission)");
}

const DocumentEntry* CorpusManifest::find(const std::string& id) const {
  for (const auto& doc : documents)
    if (doc.id == id) return &doc;
  return nullptr;
}

namespace {

std::string require_string(const nlohmann::json& table, const std::string& key,
                           const std::string& context) {
  if (!table.contains(key) || !table[key].is_string())
    throw MalformedManifestError(context + ": missing or non-string field '" + key + "'");
  return table[key].get<std::string>();
}

std::string resolve_path(const fs::path& base_dir, const std::string& path) {
  fs::path p(path);
  if (p.is_absolute()) return p.string();
  return (base_dir / p).lexically_normal().string();
}

}  // namespace

CorpusManifest load_manifest(const std::string& path) {
  if (!fs::exists(path)) throw MissingFileError("manifest not found: " + path);
  nlohmann::json doc;
  try {
    doc = toml_lite::parse_file(path);
  } catch (const ConfigError& e) {
    throw MalformedManifestError(e.what());
  }
  fs::path base_dir = fs::path(path).parent_path();

  CorpusManifest manifest;
  std::set<std::string> seen_ids;
  std::set<std::string> providers_seen;

  if (doc.contains("providers")) {
    if (!doc["providers"].is_array())
      throw MalformedManifestError(path + ": 'providers' must be an array of strings");
    for (const auto& p : doc["providers"]) {
      if (!p.is_string()) throw MalformedManifestError(path + ": 'providers' must contain strings");
      manifest.providers.push_back(p.get<std::string>());
      providers_seen.insert(p.get<std::string>());
    }
  }

  const char* kKnownDocKeys[] = {"id", "corpus_tag", "duration", "reference", "hypotheses"};
  if (doc.contains("documents")) {
    if (!doc["documents"].is_array())
      throw MalformedManifestError(path + ": 'documents' must be an array of tables");
    for (const auto& entry : doc["documents"]) {
      DocumentEntry document;
      document.id = require_string(entry, "id", path);
      if (document.id.empty()) throw MalformedManifestError(path + ": document with empty id");
      if (!seen_ids.insert(document.id).second)
        throw DuplicateIdError("duplicate document id \"" + document.id + "\" in " + path);
      std::string context = path + ": document '" + document.id + "'";
      for (auto it = entry.begin(); it != entry.end(); ++it) {
        if (std::find(std::begin(kKnownDocKeys), std::end(kKnownDocKeys), it.key()) ==
            std::end(kKnownDocKeys))
          throw MalformedManifestError(context + ": unknown field '" + it.key() + "'");
      }
      document.corpus_tag = corpus_tag_from_string(require_string(entry, "corpus_tag", context));
      document.duration = Duration::parse(require_string(entry, "duration", context));
      document.reference_path = resolve_path(base_dir, require_string(entry, "reference", context));
      if (!fs::exists(document.reference_path))
        throw MissingFileError(context + ": reference transcript not found: " +
                               document.reference_path);
      if (entry.contains("hypotheses")) {
        if (!entry["hypotheses"].is_object())
          throw MalformedManifestError(context + ": 'hypotheses' must be a table");
        for (auto it = entry["hypotheses"].begin(); it != entry["hypotheses"].end(); ++it) {
          if (!it.value().is_string())
            throw MalformedManifestError(context + ": hypothesis path for '" + it.key() +
                                         "' must be a string");
          document.hypothesis_paths[it.key()] = resolve_path(base_dir, it.value().get<std::string>());
          if (!providers_seen.count(it.key())) {
            providers_seen.insert(it.key());
            manifest.providers.push_back(it.key());
          }
        }
      }
      manifest.documents.push_back(std::move(document));
    }
  }
  return manifest;
}

Duration sum_durations(const CorpusManifest& manifest, std::optional<CorpusTag> filter) {
  std::int64_t total = 0;
  for (const auto& doc : manifest.documents) {
    if (!filter || doc.corpus_tag == *filter) total += doc.duration.total_centiseconds();
  }
  return Duration::from_centiseconds(total);
}

Rational duration_minutes(Duration d) { return d.minutes(); }

std::string read_transcript(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFileError("cannot open transcript: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string content = buf.str();
  // Validate encoding up front; the normalizer assumes clean UTF-8.
  text::decode_utf8(content);
  return content;
}

}  // namespace lexiscribe
