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

#include <random>

#include "doctest.h"
#include "lexiscribe/errors.hpp"

namespace costing = lexiscribe::costing;
using costing::PricingTier;
using costing::ProviderPricing;
using lexiscribe::Rational;

TEST_CASE("flat per-minute pricing multiplies exactly") {
  const auto p = costing::flat_per_minute("aws", Rational::from_decimal_string("0.024"));
  CHECK(costing::estimate_cost(Rational(1000), p) == Rational(24));
  CHECK(costing::estimate_cost(Rational(0), p) == Rational(0));
  CHECK(costing::estimate_cost(Rational(1, 2), p) == Rational(12, 1000));
}

TEST_CASE("published corpus duration prices at the public rate cards") {
  const auto minutes = Rational::from_decimal_string("1837.96");
  const auto aws = costing::flat_per_minute("aws", Rational::from_decimal_string("0.024"));
  const auto gcp = costing::flat_per_minute("gcp", Rational::from_decimal_string("0.016"));
  CHECK(costing::format_usd(costing::estimate_cost(minutes, aws)) == "44.11");
  CHECK(costing::format_usd(costing::estimate_cost(minutes, gcp)) == "29.41");
}

TEST_CASE("hourly rates convert exactly") {
  const auto gpu = costing::flat_per_hour("gpu", Rational::from_decimal_string("2.875"));
  // 8 hours of audio at 2.875 USD/h.
  CHECK(costing::format_usd(costing::estimate_cost(Rational(480), gpu)) == "23.00");
  CHECK(costing::estimate_cost(Rational(60), gpu) == Rational::from_decimal_string("2.875"));
}

TEST_CASE("tiered pricing accumulates piecewise") {
  ProviderPricing p;
  p.provider_id = "tiered";
  p.tiers = {
      {Rational(100), Rational::from_decimal_string("0.10")},
      {Rational(200), Rational::from_decimal_string("0.05")},
      {std::nullopt, Rational::from_decimal_string("0.01")},
  };
  costing::validate(p);
  CHECK(costing::estimate_cost(Rational(50), p) == Rational(5));
  CHECK(costing::estimate_cost(Rational(100), p) == Rational(10));
  // 100 @ 0.10 + 50 @ 0.05 = 12.50
  CHECK(costing::estimate_cost(Rational(150), p) == Rational::from_decimal_string("12.50"));
  // 100 @ 0.10 + 100 @ 0.05 + 50 @ 0.01 = 15.50
  CHECK(costing::estimate_cost(Rational(250), p) == Rational::from_decimal_string("15.50"));

  // Cost is monotone in minutes.
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dist(0, 4000);
  for (int i = 0; i < 200; ++i) {
    const Rational m1(dist(rng), 10);
    const Rational m2 = m1 + Rational(dist(rng), 10);
    CHECK(costing::estimate_cost(m1, p) <= costing::estimate_cost(m2, p));
  }
}

TEST_CASE("estimate_cost rejects bad input") {
  const auto flat = costing::flat_per_minute("x", Rational(1, 100));
  CHECK_THROWS_AS(costing::estimate_cost(Rational(-1), flat),
                  lexiscribe::NegativeMinutesError);

  ProviderPricing bounded;
  bounded.provider_id = "bounded";
  bounded.tiers = {{Rational(100), Rational(1, 10)}};
  costing::validate(bounded);
  CHECK(costing::estimate_cost(Rational(100), bounded) == Rational(10));
  CHECK_THROWS_AS(costing::estimate_cost(Rational(101), bounded), lexiscribe::PricingError);
}

TEST_CASE("validate rejects malformed tier tables") {
  ProviderPricing p;
  p.provider_id = "bad";

  SUBCASE("no tiers") {
    CHECK_THROWS_AS(costing::validate(p), lexiscribe::PricingError);
  }

  SUBCASE("negative rate") {
    p.tiers = {{std::nullopt, Rational(-1, 100)}};
    CHECK_THROWS_AS(costing::validate(p), lexiscribe::PricingError);
  }

  SUBCASE("unbounded tier before the last") {
    p.tiers = {{std::nullopt, Rational(1, 100)}, {Rational(10), Rational(1, 100)}};
    CHECK_THROWS_AS(costing::validate(p), lexiscribe::PricingError);
  }

  SUBCASE("thresholds not strictly increasing") {
    p.tiers = {{Rational(100), Rational(1, 10)}, {Rational(100), Rational(1, 20)}};
    CHECK_THROWS_AS(costing::validate(p), lexiscribe::PricingError);
  }

  SUBCASE("nonpositive threshold") {
    p.tiers = {{Rational(0), Rational(1, 10)}};
    CHECK_THROWS_AS(costing::validate(p), lexiscribe::PricingError);
  }
}

TEST_CASE("format_usd renders cents half away from zero") {
  CHECK(costing::format_usd(Rational(0)) == "0.00");
  CHECK(costing::format_usd(Rational(441082, 10000)) == "44.11");
  CHECK(costing::format_usd(Rational(1, 200)) == "0.01");
  CHECK(costing::format_usd(Rational(10)) == "10.00");
}

TEST_CASE("default pricing covers the stock providers") {
  const auto defaults = costing::default_pricing();
  REQUIRE(defaults.count("aws-transcribe") == 1);
  REQUIRE(defaults.count("gcp-stt") == 1);
  REQUIRE(defaults.count("self-hosted-gpu") == 1);
  for (const auto& [id, pricing] : defaults) {
    CAPTURE(id);
    CHECK_NOTHROW(costing::validate(pricing));
  }
  CHECK(costing::estimate_cost(Rational(1000), defaults.at("aws-transcribe")) ==
        Rational(24));
  CHECK(costing::estimate_cost(Rational(1000), defaults.at("gcp-stt")) == Rational(16));
  CHECK(costing::estimate_cost(Rational(480), defaults.at("self-hosted-gpu")) ==
        Rational(23));
}
