/*
 * Copyright 2026 The morphlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Line-oriented machine output: `record=<kind> key=value ...`.  Values are
// percent-encoded for '%', '=', whitespace and control characters, so a
// line splits on single spaces and each token on its first '='.

#ifndef MORPHLAB_TOOLS_MACHINE_FORMAT_HPP
#define MORPHLAB_TOOLS_MACHINE_FORMAT_HPP

#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace morphlab::machine {

struct Record {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> fields;

  const std::string* get(std::string_view key) const {
    for (const auto& [k, v] : fields) {
      if (k == key) return &v;
    }
    return nullptr;
  }
};

inline std::string encode(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) {
    if (c == '%' || c == '=' || c <= ' ' || c == 0x7f) {
      char buf[4];
      std::snprintf(buf, sizeof buf, "%%%02X", c);
      out += buf;
    } else {
      out.push_back(static_cast<char>(c));
    }
  }
  return out;
}

inline std::optional<std::string> decode(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '%') {
      out.push_back(s[i]);
      continue;
    }
    if (i + 2 >= s.size()) return std::nullopt;
    int value = 0;
    for (std::size_t k = 1; k <= 2; ++k) {
      const char h = s[i + k];
      value <<= 4;
      if (h >= '0' && h <= '9') value |= h - '0';
      else if (h >= 'A' && h <= 'F') value |= h - 'A' + 10;
      else if (h >= 'a' && h <= 'f') value |= h - 'a' + 10;
      else return std::nullopt;
    }
    out.push_back(static_cast<char>(value));
    i += 2;
  }
  return out;
}

inline std::string format(const Record& r) {
  std::string line = "record=" + encode(r.kind);
  for (const auto& [k, v] : r.fields) line += " " + encode(k) + "=" + encode(v);
  return line;
}

/// nullopt on anything that is not a well-formed record line.
inline std::optional<Record> parse(std::string_view line) {
  Record r;
  bool first = true;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    std::size_t next = line.find(' ', pos);
    if (next == std::string_view::npos) next = line.size();
    const std::string_view token = line.substr(pos, next - pos);
    const std::size_t eq = token.find('=');
    if (eq == std::string_view::npos) return std::nullopt;
    auto key = decode(token.substr(0, eq));
    auto value = decode(token.substr(eq + 1));
    if (!key || !value) return std::nullopt;
    if (first) {
      if (*key != "record") return std::nullopt;
      r.kind = std::move(*value);
      first = false;
    } else {
      r.fields.emplace_back(std::move(*key), std::move(*value));
    }
    pos = next + 1;
  }
  if (first) return std::nullopt;
  return r;
}

}  // namespace morphlab::machine

#endif  // MORPHLAB_TOOLS_MACHINE_FORMAT_HPP
