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

#include "lexiscribe/config.hpp"

#include <filesystem>
#include <set>

#include "lexiscribe/errors.hpp"
#include "lexiscribe/toml_lite.hpp"

namespace lexiscribe::config {

namespace {

[[noreturn]] void bad_key(const std::string& path) {
  throw ConfigError("unknown config key '" + path + "'");
}

void expect_keys(const nlohmann::json& table, const std::set<std::string>& allowed,
                 const std::string& prefix) {
  for (const auto& [key, value] : table.items()) {
    (void)value;
    if (!allowed.count(key)) bad_key(prefix.empty() ? key : prefix + "." + key);
  }
}

std::string get_string(const nlohmann::json& v, const std::string& path) {
  if (!v.is_string()) throw ConfigError("config key '" + path + "' must be a string");
  return v.get<std::string>();
}

bool get_bool(const nlohmann::json& v, const std::string& path) {
  if (!v.is_boolean()) throw ConfigError("config key '" + path + "' must be a boolean");
  return v.get<bool>();
}

std::int64_t get_int(const nlohmann::json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ConfigError("config key '" + path + "' must be an integer");
  return v.get<std::int64_t>();
}

Rational get_decimal(const nlohmann::json& v, const std::string& path) {
  try {
    if (toml_lite::is_decimal(v) || v.is_number_integer())
      return Rational::from_decimal_string(toml_lite::decimal_literal(v));
  } catch (const std::exception& e) {
    throw ConfigError("config key '" + path + "': " + e.what());
  }
  throw ConfigError("config key '" + path + "' must be a number");
}

std::vector<std::string> get_string_array(const nlohmann::json& v, const std::string& path) {
  if (!v.is_array()) throw ConfigError("config key '" + path + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : v) {
    if (!item.is_string())
      throw ConfigError("config key '" + path + "' must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

void apply_normalizer(const nlohmann::json& table, NormalizerConfig& cfg) {
  expect_keys(table,
              {"lowercase", "strip_punctuation", "split_clitics", "unicode_form",
               "number_policy"},
              "normalizer");
  if (table.contains("lowercase"))
    cfg.lowercase = get_bool(table["lowercase"], "normalizer.lowercase");
  if (table.contains("strip_punctuation"))
    cfg.strip_punctuation = get_bool(table["strip_punctuation"], "normalizer.strip_punctuation");
  if (table.contains("split_clitics"))
    cfg.split_clitics = get_bool(table["split_clitics"], "normalizer.split_clitics");
  if (table.contains("unicode_form")) {
    cfg.unicode_form = get_string(table["unicode_form"], "normalizer.unicode_form");
    if (cfg.unicode_form != "composed")
      throw ConfigError("normalizer.unicode_form supports only \"composed\"");
  }
  if (table.contains("number_policy")) {
    cfg.number_policy = get_string(table["number_policy"], "normalizer.number_policy");
    if (cfg.number_policy != "keep_digits")
      throw ConfigError("normalizer.number_policy supports only \"keep_digits\"");
  }
}

costing::ProviderPricing parse_pricing(const std::string& provider_id,
                                       const nlohmann::json& table) {
  const std::string prefix = "pricing." + provider_id;
  expect_keys(table, {"usd_per_hour", "tiers"}, prefix);
  if (table.contains("usd_per_hour") && table.contains("tiers"))
    throw ConfigError(prefix + ": give either usd_per_hour or tiers, not both");

  if (table.contains("usd_per_hour"))
    return costing::flat_per_hour(provider_id,
                                  get_decimal(table["usd_per_hour"], prefix + ".usd_per_hour"));

  if (!table.contains("tiers")) throw ConfigError(prefix + " needs usd_per_hour or tiers");
  const nlohmann::json& tiers = table["tiers"];
  if (!tiers.is_array() || tiers.empty())
    throw ConfigError(prefix + ".tiers must be a non-empty array of tables");

  costing::ProviderPricing pricing;
  pricing.provider_id = provider_id;
  for (std::size_t i = 0; i < tiers.size(); ++i) {
    const std::string tier_path = prefix + ".tiers[" + std::to_string(i) + "]";
    const nlohmann::json& tier_json = tiers[i];
    if (!tier_json.is_object()) throw ConfigError(tier_path + " must be a table");
    expect_keys(tier_json, {"up_to_minutes", "usd_per_minute"}, tier_path);
    if (!tier_json.contains("usd_per_minute"))
      throw ConfigError(tier_path + " needs usd_per_minute");
    costing::PricingTier tier;
    tier.usd_per_minute = get_decimal(tier_json["usd_per_minute"], tier_path + ".usd_per_minute");
    if (tier_json.contains("up_to_minutes"))
      tier.up_to_minutes = get_decimal(tier_json["up_to_minutes"], tier_path + ".up_to_minutes");
    pricing.tiers.push_back(std::move(tier));
  }
  try {
    costing::validate(pricing);
  } catch (const PricingError& e) {
    throw ConfigError(std::string(e.what()));
  }
  return pricing;
}

}  // namespace

RunConfig default_config() {
  RunConfig cfg;
  cfg.pricing = costing::default_pricing();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  if (!std::filesystem::exists(path)) throw MissingFileError("config file not found: " + path);
  nlohmann::json root = toml_lite::parse_file(path);

  RunConfig cfg = default_config();
  expect_keys(root,
              {"manifest", "providers", "output_dir", "parallelism", "bin_width", "strict",
               "normalizer", "sonnex", "pricing"},
              "");

  std::filesystem::path base = std::filesystem::path(path).parent_path();
  auto resolve = [&base](const std::string& p) {
    if (p.empty() || std::filesystem::path(p).is_absolute()) return p;
    return (base / p).string();
  };

  if (root.contains("manifest"))
    cfg.manifest_path = resolve(get_string(root["manifest"], "manifest"));
  if (root.contains("providers")) cfg.providers = get_string_array(root["providers"], "providers");
  if (root.contains("output_dir"))
    cfg.output_dir = resolve(get_string(root["output_dir"], "output_dir"));
  if (root.contains("parallelism")) {
    std::int64_t degree = get_int(root["parallelism"], "parallelism");
    if (degree < 1 || degree > 256)
      throw ConfigError("parallelism must be between 1 and 256");
    cfg.parallelism = static_cast<int>(degree);
  }
  if (root.contains("bin_width")) {
    cfg.bin_width = get_decimal(root["bin_width"], "bin_width");
    if (!(Rational(0) < cfg.bin_width)) throw ConfigError("bin_width must be positive");
  }
  if (root.contains("strict")) cfg.strict = get_bool(root["strict"], "strict");

  if (root.contains("normalizer")) {
    if (!root["normalizer"].is_object()) throw ConfigError("normalizer must be a table");
    apply_normalizer(root["normalizer"], cfg.normalizer);
  }
  if (root.contains("sonnex")) {
    const nlohmann::json& sx = root["sonnex"];
    if (!sx.is_object()) throw ConfigError("sonnex must be a table");
    expect_keys(sx, {"rules", "exceptions"}, "sonnex");
    if (sx.contains("rules")) cfg.rules_path = resolve(get_string(sx["rules"], "sonnex.rules"));
    if (sx.contains("exceptions"))
      cfg.exceptions_path = resolve(get_string(sx["exceptions"], "sonnex.exceptions"));
  }
  if (root.contains("pricing")) {
    const nlohmann::json& pricing = root["pricing"];
    if (!pricing.is_object()) throw ConfigError("pricing must be a table of providers");
    for (const auto& [provider_id, table] : pricing.items()) {
      if (!table.is_object())
        throw ConfigError("pricing." + provider_id + " must be a table");
      cfg.pricing[provider_id] = parse_pricing(provider_id, table);
    }
  }
  return cfg;
}

}  // namespace lexiscribe::config
