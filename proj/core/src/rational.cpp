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

#include "lexiscribe/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace lexiscribe {

Rational Rational::from_decimal_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty decimal literal");
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  std::int64_t whole = 0;
  bool any_digit = false;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    whole = whole * 10 + (text[pos] - '0');
    any_digit = true;
    ++pos;
  }
  std::int64_t frac = 0;
  std::int64_t scale = 1;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      frac = frac * 10 + (text[pos] - '0');
      scale *= 10;
      any_digit = true;
      ++pos;
    }
  }
  if (!any_digit || pos != text.size())
    throw std::invalid_argument("Rational: bad decimal literal '" + text + "'");
  Rational r(whole * scale + frac, scale);
  return negative ? Rational(-r.num(), r.den()) : r;
}

std::int64_t round_scaled_half_away(Rational value, int decimals) {
  std::int64_t pow10 = 1;
  for (int i = 0; i < decimals; ++i) pow10 *= 10;
  // round(num*10^d / den) half away from zero, in integer arithmetic.
  __int128 scaled = static_cast<__int128>(value.num()) * pow10;
  std::int64_t den = value.den();
  __int128 q;
  if (scaled >= 0) {
    q = (2 * scaled + den) / (2 * static_cast<__int128>(den));
  } else {
    q = (2 * scaled - den) / (2 * static_cast<__int128>(den));
  }
  return static_cast<std::int64_t>(q);
}

std::string Rational::to_decimal_string(int decimals) const {
  std::int64_t scaled = round_scaled_half_away(*this, decimals);
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::int64_t pow10 = 1;
  for (int i = 0; i < decimals; ++i) pow10 *= 10;
  std::string out = negative ? "-" : "";
  out += std::to_string(scaled / pow10);
  if (decimals > 0) {
    std::string frac = std::to_string(scaled % pow10);
    out += "." + std::string(decimals - frac.size(), '0') + frac;
  }
  return out;
}

std::string format_decimal(double value, int decimals) {
  double pow10 = std::pow(10.0, decimals);
  double scaled = value * pow10;
  // Half away from zero; std::round already does that for halfway cases.
  double rounded = std::round(std::abs(scaled)) * (std::signbit(scaled) ? -1.0 : 1.0);
  Rational as_rational(static_cast<std::int64_t>(rounded), static_cast<std::int64_t>(pow10));
  return as_rational.to_decimal_string(decimals);
}

}  // namespace lexiscribe
