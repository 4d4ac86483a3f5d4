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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lexiscribe/rational.hpp"

namespace lexiscribe {

/// Audio duration held as integer centiseconds (1 cs = 10 ms). Corpus
/// durations are declared at 0.05 s precision, so integer centiseconds sum
/// without drift and round-trip losslessly through the text forms.
class Duration {
public:
  constexpr Duration() = default;
  static Duration from_centiseconds(std::int64_t cs);

  /// Accepts "D:HH:MM:SS.cc" (with days) or "H:MM:SS.cc" (unbounded hours).
  /// Either form may omit the fractional part.
  static Duration parse(const std::string& text);

  std::int64_t total_centiseconds() const { return centiseconds_; }

  /// "H:MM:SS.cc" with unbounded hours: 110277.60 s -> "30:37:57.60".
  std::string to_string() const;
  /// "D:HH:MM:SS.cc": the same value renders as "1:06:37:57.60".
  std::string to_string_with_days() const;

  /// Exact decimal minutes (centiseconds / 6000), feeding cost estimation.
  Rational minutes() const { return Rational(centiseconds_, 6000); }

  friend Duration operator+(Duration a, Duration b) {
    return from_centiseconds(a.centiseconds_ + b.centiseconds_);
  }
  friend bool operator==(Duration a, Duration b) = default;

private:
  std::int64_t centiseconds_ = 0;
};

enum class CorpusTag { kJudgement, kCommission };

std::string to_string(CorpusTag tag);
CorpusTag corpus_tag_from_string(const std::string& text);

struct DocumentEntry {
  std::string id;
  CorpusTag corpus_tag = CorpusTag::kJudgement;
  Duration duration;
  std::string reference_path;
  /// provider-id -> hypothesis transcript path. A provider missing here is
  /// reported as "not evaluated", not an error.
  std::map<std::string, std::string> hypothesis_paths;
};

struct CorpusManifest {
  std::vector<DocumentEntry> documents;
  std::vector<std::string> providers;

  const DocumentEntry* find(const std::string& id) const;
};

/// Loads and validates a manifest file. Relative paths inside the manifest
/// resolve against the manifest's own directory. Raises MissingFileError,
/// DuplicateIdError or MalformedManifestError naming the offending entry.
CorpusManifest load_manifest(const std::string& path);

/// Exact sum of document durations, optionally restricted to one corpus.
Duration sum_durations(const CorpusManifest& manifest,
                       std::optional<CorpusTag> filter = std::nullopt);

/// Decimal minutes of a duration; kept as a free function to mirror the
/// costing module's input contract.
Rational duration_minutes(Duration d);

/// Reads a transcript file; must be valid UTF-8.
std::string read_transcript(const std::string& path);

}  // namespace lexiscribe
