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

#include <string>
#include <string_view>

#include <json.hpp>

namespace lexiscribe::toml_lite {

/// Parses the TOML subset used by manifests and run configs into a JSON
/// object tree. Supported constructs:
///   - comments (#) and blank lines
///   - [table] and [[array-of-tables]] headers, dotted names allowed
///   - key = value with bare or dotted keys
///   - values: "basic strings" (with \\ \" \n \t \r \uXXXX escapes),
///     integers, floats, booleans, arrays, and inline tables { k = v }
/// Anything outside this subset raises ConfigError with the line number.
///
/// Floats are preserved verbatim under a {"__decimal": "literal"} wrapper
/// so money and rates can be re-read exactly.
nlohmann::json parse(std::string_view text);

nlohmann::json parse_file(const std::string& path);

/// True if the value is a {"__decimal": ...} wrapper produced by parse().
bool is_decimal(const nlohmann::json& value);
/// Literal text of a decimal wrapper or integer value.
std::string decimal_literal(const nlohmann::json& value);

}  // namespace lexiscribe::toml_lite
