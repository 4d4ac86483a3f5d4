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

#include "lexiscribe/costing.hpp"

#include "lexiscribe/errors.hpp"

namespace lexiscribe::costing {

ProviderPricing flat_per_minute(const std::string& provider_id, const Rational& usd_per_minute) {
  ProviderPricing p;
  p.provider_id = provider_id;
  p.tiers.push_back(PricingTier{std::nullopt, usd_per_minute});
  return p;
}

ProviderPricing flat_per_hour(const std::string& provider_id, const Rational& usd_per_hour) {
  return flat_per_minute(provider_id, usd_per_hour / Rational(60));
}

void validate(const ProviderPricing& pricing) {
  if (pricing.tiers.empty())
    throw PricingError("pricing for '" + pricing.provider_id + "' has no tiers");
  const Rational zero(0);
  Rational prev_threshold(0);
  for (std::size_t i = 0; i < pricing.tiers.size(); ++i) {
    const PricingTier& tier = pricing.tiers[i];
    if (tier.usd_per_minute < zero)
      throw PricingError("pricing for '" + pricing.provider_id + "' has a negative rate");
    if (!tier.up_to_minutes.has_value()) {
      if (i + 1 != pricing.tiers.size())
        throw PricingError("pricing for '" + pricing.provider_id +
                           "': only the last tier may be unbounded");
      continue;
    }
    if (!(prev_threshold < *tier.up_to_minutes))
      throw PricingError("pricing for '" + pricing.provider_id +
                         "': tier thresholds must increase");
    prev_threshold = *tier.up_to_minutes;
  }
}

Rational estimate_cost(const Rational& minutes, const ProviderPricing& pricing) {
  const Rational zero(0);
  if (minutes < zero)
    throw NegativeMinutesError("cannot estimate a cost for negative minutes");
  validate(pricing);

  Rational cost(0);
  Rational covered(0);  // minutes billed so far
  for (const PricingTier& tier : pricing.tiers) {
    if (!(covered < minutes)) break;
    Rational upper = tier.up_to_minutes.value_or(minutes);
    if (minutes < upper) upper = minutes;
    if (covered < upper) {
      cost = cost + (upper - covered) * tier.usd_per_minute;
      covered = upper;
    }
  }
  if (covered < minutes)
    throw PricingError("pricing for '" + pricing.provider_id + "' does not cover " +
                       minutes.to_decimal_string(2) + " minutes");
  return cost;
}

std::string format_usd(const Rational& amount) { return amount.to_decimal_string(2); }

std::map<std::string, ProviderPricing> default_pricing() {
  std::map<std::string, ProviderPricing> table;
  // Published per-minute rates for the managed services. Rates past the
  // first published volume threshold are not public, so these stay flat;
  // override them in the run config when a quote applies.
  table["aws-transcribe"] =
      flat_per_minute("aws-transcribe", Rational::from_decimal_string("0.024"));
  table["gcp-stt"] = flat_per_minute("gcp-stt", Rational::from_decimal_string("0.016"));
  // Hourly GPU rental for a self-hosted recognizer.
  table["self-hosted-gpu"] =
      flat_per_hour("self-hosted-gpu", Rational::from_decimal_string("2.875"));
  return table;
}

}  // namespace lexiscribe::costing
