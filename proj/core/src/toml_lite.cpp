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

#include "lexiscribe/toml_lite.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "lexiscribe/errors.hpp"

namespace lexiscribe::toml_lite {

namespace {

using nlohmann::json;

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ConfigError("line " + std::to_string(line) + ": " + msg);
  }
  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  char take() {
    char c = text[pos++];
    if (c == '\n') ++line;
    return c;
  }
  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos;
  }
  void skip_ws_and_comment() {
    skip_ws();
    if (!eof() && peek() == '#') {
      while (!eof() && peek() != '\n') ++pos;
    }
  }
  bool at_line_end() {
    skip_ws_and_comment();
    return eof() || peek() == '\n' || peek() == '\r';
  }
  void expect_line_end() {
    if (!at_line_end()) fail("unexpected trailing characters");
    while (!eof() && (peek() == '\r' || peek() == '\n')) take();
  }
};

bool is_bare_key_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

std::string parse_bare_key(Cursor& cur) {
  std::string key;
  while (!cur.eof() && is_bare_key_char(cur.peek())) key.push_back(cur.take());
  if (key.empty()) cur.fail("expected a key");
  return key;
}

std::vector<std::string> parse_dotted_key(Cursor& cur) {
  std::vector<std::string> parts{parse_bare_key(cur)};
  while (!cur.eof() && cur.peek() == '.') {
    cur.take();
    parts.push_back(parse_bare_key(cur));
  }
  return parts;
}

std::string parse_basic_string(Cursor& cur) {
  cur.take();  // opening quote
  std::string out;
  while (true) {
    if (cur.eof() || cur.peek() == '\n') cur.fail("unterminated string");
    char c = cur.take();
    if (c == '"') break;
    if (c == '\\') {
      if (cur.eof()) cur.fail("unterminated escape");
      char esc = cur.take();
      switch (esc) {
        case '"': out.push_back('"'); break;
        case '\\': out.push_back('\\'); break;
        case 'n': out.push_back('\n'); break;
        case 't': out.push_back('\t'); break;
        case 'r': out.push_back('\r'); break;
        case 'u': {
          unsigned value = 0;
          for (int i = 0; i < 4; ++i) {
            if (cur.eof() || !std::isxdigit(static_cast<unsigned char>(cur.peek())))
              cur.fail("bad \\u escape");
            char h = cur.take();
            value = value * 16 + (std::isdigit(static_cast<unsigned char>(h))
                                      ? h - '0'
                                      : std::tolower(h) - 'a' + 10);
          }
          // encode as UTF-8
          if (value < 0x80) {
            out.push_back(static_cast<char>(value));
          } else if (value < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (value >> 6)));
            out.push_back(static_cast<char>(0x80 | (value & 0x3F)));
          } else {
            out.push_back(static_cast<char>(0xE0 | (value >> 12)));
            out.push_back(static_cast<char>(0x80 | ((value >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (value & 0x3F)));
          }
          break;
        }
        default:
          cur.fail(std::string("unsupported escape \\") + esc);
      }
    } else {
      out.push_back(c);
    }
  }
  return out;
}

json parse_value(Cursor& cur);

json parse_array(Cursor& cur) {
  cur.take();  // '['
  json arr = json::array();
  while (true) {
    cur.skip_ws_and_comment();
    if (!cur.eof() && (cur.peek() == '\n' || cur.peek() == '\r')) {
      cur.take();
      continue;
    }
    if (cur.eof()) cur.fail("unterminated array");
    if (cur.peek() == ']') {
      cur.take();
      break;
    }
    arr.push_back(parse_value(cur));
    cur.skip_ws_and_comment();
    if (!cur.eof() && cur.peek() == ',') {
      cur.take();
    }
  }
  return arr;
}

json parse_inline_table(Cursor& cur) {
  cur.take();  // '{'
  json table = json::object();
  cur.skip_ws();
  if (!cur.eof() && cur.peek() == '}') {
    cur.take();
    return table;
  }
  while (true) {
    cur.skip_ws();
    std::string key = parse_bare_key(cur);
    cur.skip_ws();
    if (cur.eof() || cur.take() != '=') cur.fail("expected '=' in inline table");
    cur.skip_ws();
    if (table.contains(key)) cur.fail("duplicate key '" + key + "' in inline table");
    table[key] = parse_value(cur);
    cur.skip_ws();
    if (cur.eof()) cur.fail("unterminated inline table");
    char c = cur.take();
    if (c == '}') break;
    if (c != ',') cur.fail("expected ',' or '}' in inline table");
  }
  return table;
}

json parse_scalar(Cursor& cur) {
  std::string tok;
  while (!cur.eof()) {
    char c = cur.peek();
    if (is_bare_key_char(c) || c == '+' || c == '.' || c == ':') {
      tok.push_back(cur.take());
    } else {
      break;
    }
  }
  if (tok.empty()) cur.fail("expected a value");
  if (tok == "true") return json(true);
  if (tok == "false") return json(false);

  bool numeric = true;
  bool has_dot = false;
  for (std::size_t i = 0; i < tok.size(); ++i) {
    char c = tok[i];
    if (i == 0 && (c == '+' || c == '-')) continue;
    if (c == '.') {
      if (has_dot) numeric = false;
      has_dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) numeric = false;
  }
  if (!numeric) cur.fail("unquoted value '" + tok + "' is not a number or boolean");
  if (!has_dot) return json(std::stoll(tok));
  // Keep the literal so decimal consumers can parse it exactly.
  return json{{"__decimal", tok}};
}

json parse_value(Cursor& cur) {
  if (cur.eof()) cur.fail("expected a value");
  char c = cur.peek();
  if (c == '"') return json(parse_basic_string(cur));
  if (c == '[') return parse_array(cur);
  if (c == '{') return parse_inline_table(cur);
  return parse_scalar(cur);
}

json* descend(json& root, const std::vector<std::string>& path, Cursor& cur) {
  json* node = &root;
  for (const auto& part : path) {
    if (node->is_array()) node = &node->back();
    if (!node->is_object()) cur.fail("key path collides with a non-table value");
    if (!node->contains(part)) (*node)[part] = json::object();
    node = &(*node)[part];
  }
  if (node->is_array()) node = &node->back();
  return node;
}

}  // namespace

json parse(std::string_view input) {
  Cursor cur{input};
  json root = json::object();
  json* active = &root;

  while (!cur.eof()) {
    cur.skip_ws_and_comment();
    if (cur.eof()) break;
    char c = cur.peek();
    if (c == '\n' || c == '\r') {
      cur.take();
      continue;
    }
    if (c == '[') {
      cur.take();
      bool array_of_tables = !cur.eof() && cur.peek() == '[';
      if (array_of_tables) cur.take();
      cur.skip_ws();
      auto path = parse_dotted_key(cur);
      cur.skip_ws();
      if (cur.eof() || cur.take() != ']') cur.fail("expected ']' after table name");
      if (array_of_tables && (cur.eof() || cur.take() != ']'))
        cur.fail("expected ']]' after array-of-tables name");
      cur.expect_line_end();

      json* parent = &root;
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (parent->is_array()) parent = &parent->back();
        if (!parent->contains(path[i])) (*parent)[path[i]] = json::object();
        parent = &(*parent)[path[i]];
      }
      if (parent->is_array()) parent = &parent->back();
      const std::string& leaf = path.back();
      if (array_of_tables) {
        if (!parent->contains(leaf)) (*parent)[leaf] = json::array();
        if (!(*parent)[leaf].is_array()) cur.fail("'" + leaf + "' is not an array of tables");
        (*parent)[leaf].push_back(json::object());
        active = &(*parent)[leaf].back();
      } else {
        if (!parent->contains(leaf)) (*parent)[leaf] = json::object();
        active = &(*parent)[leaf];
        if (!active->is_object()) cur.fail("'" + leaf + "' is not a table");
      }
      continue;
    }
    // key = value
    auto path = parse_dotted_key(cur);
    cur.skip_ws();
    if (cur.eof() || cur.take() != '=') cur.fail("expected '=' after key");
    cur.skip_ws();
    json* node = active;
    if (path.size() > 1) {
      std::vector<std::string> prefix(path.begin(), path.end() - 1);
      node = descend(*node, prefix, cur);
    }
    if (node->contains(path.back())) cur.fail("duplicate key '" + path.back() + "'");
    (*node)[path.back()] = parse_value(cur);
    cur.expect_line_end();
  }
  return root;
}

json parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFileError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

bool is_decimal(const nlohmann::json& value) {
  return value.is_object() && value.size() == 1 && value.contains("__decimal");
}

std::string decimal_literal(const nlohmann::json& value) {
  if (is_decimal(value)) return value["__decimal"].get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw ConfigError("expected a decimal number");
}

}  // namespace lexiscribe::toml_lite
