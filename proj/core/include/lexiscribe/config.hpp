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

#include <map>
#include <string>
#include <vector>

#include "lexiscribe/costing.hpp"
#include "lexiscribe/normalizer.hpp"
#include "lexiscribe/rational.hpp"

namespace lexiscribe::config {

/// Everything a run needs, assembled from defaults, an optional config
/// file and command-line overrides (in that order of precedence, last
/// wins). Validation happens before any work starts; unknown keys are
/// rejected so a typo cannot silently fall back to a default.
struct RunConfig {
  std::string manifest_path;
  std::vector<std::string> providers;  // empty = every provider in the manifest
  NormalizerConfig normalizer;
  std::string rules_path;       // empty = bundled rule table
  std::string exceptions_path;  // empty = bundled lexicon
  Rational bin_width{5, 2};
  std::map<std::string, costing::ProviderPricing> pricing;  // merged over defaults
  std::string output_dir = "out";
  int parallelism = 1;
  bool strict = false;
};

/// Defaults only: bundled rule table, shipped pricing, bin width 2.5.
RunConfig default_config();

/// Parses a TOML-style config file over the defaults. Throws ConfigError
/// with the offending key path on unknown keys, bad types or invalid
/// values, and MissingFileError when the file does not exist.
RunConfig load_config(const std::string& path);

}  // namespace lexiscribe::config
