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
#include <optional>
#include <string>
#include <vector>

#include "lexiscribe/rational.hpp"

namespace lexiscribe::costing {

/// One pricing step: minutes up to the threshold bill at this rate.
/// An absent threshold means the tier is unbounded.
struct PricingTier {
  std::optional<Rational> up_to_minutes;
  Rational usd_per_minute;
};

struct ProviderPricing {
  std::string provider_id;
  std::vector<PricingTier> tiers;  // ascending thresholds; last may be unbounded
};

/// Builds a single-tier table from a flat per-minute rate.
ProviderPricing flat_per_minute(const std::string& provider_id, const Rational& usd_per_minute);

/// Builds a single-tier table from an hourly rate (converted exactly).
ProviderPricing flat_per_hour(const std::string& provider_id, const Rational& usd_per_hour);

/// Checks tier ordering and rate signs; throws PricingError on violation.
void validate(const ProviderPricing& pricing);

/// Piecewise-linear tier accumulation in exact rational arithmetic.
/// Throws NegativeMinutesError for minutes < 0 and PricingError when
/// minutes extend past the last bounded tier of a table with no
/// unbounded tier.
Rational estimate_cost(const Rational& minutes, const ProviderPricing& pricing);

/// USD amount rendered to cents, round half away from zero.
std::string format_usd(const Rational& amount);

/// Rates shipped as defaults; a config file can override or extend them.
/// aws-transcribe and gcp-stt are flat per-minute entries, self-hosted-gpu
/// a flat hourly one.
std::map<std::string, ProviderPricing> default_pricing();

}  // namespace lexiscribe::costing
