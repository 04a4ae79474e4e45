// Copyright 2026 The avc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Code configuration files: "key = value" lines, '#' starts a comment.
//
//   p = 3
//   m = 2
//   primitive_poly = 1 1 2      # highest degree first
//   N = 2
//   order = weighted_grlex      # lex | grlex | weighted_grlex
//   weights = 3 4
//   points = hermitian          # hermitian | full-grid | (e1,e2) ...
//   B = wdeg<=11                # wdeg<=K | prodplus<K | (b1,b2) ...
//   d_fr = 7

#ifndef AVC_CONFIG_HPP_
#define AVC_CONFIG_HPP_

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "avc/codes.hpp"
#include "avc/error.hpp"
#include "avc/gf.hpp"
#include "avc/mindex.hpp"
#include "avc/points.hpp"
#include "avc/textio.hpp"

namespace avc::config {

using KeyValues = std::map<std::string, std::string>;

inline KeyValues parse_key_values(const std::string& src) {
  KeyValues kv;
  std::stringstream ss(src);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    line = text::trim(text::detail::strip_comment(line));
    if (line.empty()) continue;
    auto eq = line.find('=');
    // "wdeg<=11" holds an '=' of its own; the key never does.
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = text::trim(line.substr(0, eq));
    std::string value = text::trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    if (kv.count(key)) throw ConfigError("duplicate key '" + key + "'");
    kv[key] = value;
  }
  return kv;
}

inline std::vector<long> int_list(const std::string& v) {
  std::vector<long> out;
  std::string t = v;
  for (char& c : t)
    if (c == ',') c = ' ';
  std::stringstream ss(t);
  std::string tok;
  while (ss >> tok) {
    try {
      out.push_back(text::parse_int(tok));
    } catch (const ParseError& e) {
      throw ConfigError(e.what());
    }
  }
  return out;
}

inline const std::string& need(const KeyValues& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw ConfigError("missing key '" + key + "'");
  return it->second;
}

inline long need_int(const KeyValues& kv, const std::string& key) {
  auto v = int_list(need(kv, key));
  if (v.size() != 1) throw ConfigError("key '" + key + "' needs a single integer");
  return v[0];
}

inline FieldSpec field_spec(const KeyValues& kv) {
  FieldSpec s;
  s.p = static_cast<int>(need_int(kv, "p"));
  s.m = static_cast<int>(need_int(kv, "m"));
  for (long c : int_list(need(kv, "primitive_poly"))) s.primitive_poly.push_back(static_cast<int>(c));
  return s;
}

inline FieldPtr build_field(const FieldSpec& s) {
  try {
    return Field::build(s);
  } catch (const FieldError& e) {
    throw ConfigError(std::string("field: ") + e.what());
  }
}

inline MonomialOrder order(const KeyValues& kv, int dims) {
  std::string kind = kv.count("order") ? kv.at("order") : "lex";
  if (kind == "lex") return MonomialOrder::lex();
  if (kind == "grlex") return MonomialOrder::grlex();
  if (kind == "weighted_grlex") {
    std::vector<int> w;
    for (long x : int_list(need(kv, "weights"))) w.push_back(static_cast<int>(x));
    if (static_cast<int>(w.size()) != dims) throw ConfigError("weights must have N entries");
    for (int x : w)
      if (x < 1) throw ConfigError("weights must be positive");
    return MonomialOrder::weighted(w);
  }
  throw ConfigError("unknown order '" + kind + "'");
}

inline CodeSpec code(const std::string& src, const std::string& name = "") {
  KeyValues kv = parse_key_values(src);
  FieldPtr f = build_field(field_spec(kv));
  int dims = static_cast<int>(need_int(kv, "N"));
  if (dims < 1 || dims > 16) throw ConfigError("N must lie in 1..16");
  MonomialOrder ord = order(kv, dims);
  IndexSpace space(f->q(), dims);

  const std::string& pts = need(kv, "points");
  PointSet psi;
  try {
    if (pts == "hermitian") {
      if (dims != 2) throw ConfigError("hermitian points need N = 2");
      psi = PointSet::hermitian(f);
    } else if (pts == "full-grid") {
      psi = PointSet::full_grid(f, dims);
    } else {
      psi = text::parse_points(f, dims, pts);
    }
  } catch (const ParseError& e) {
    throw ConfigError(std::string("points: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(std::string("points: ") + e.what());
  }

  const std::string& bs = need(kv, "B");
  IndexSet check(space);
  if (bs.rfind("wdeg<=", 0) == 0) {
    check = weighted_check_set(space, ord, need_int({{"v", bs.substr(6)}}, "v"));
  } else if (bs.rfind("prodplus<", 0) == 0) {
    check = hyperbolic_check_set(space, need_int({{"v", bs.substr(9)}}, "v"));
  } else {
    try {
      for (const auto& tok : text::tuple_tokens(bs)) {
        MultiIndex b = text::parse_mindex(tok);
        if (!space.contains(b)) throw ConfigError("check index " + b.str() + " outside A");
        check.insert(b);
      }
    } catch (const ParseError& e) {
      throw ConfigError(std::string("B: ") + e.what());
    }
  }
  int d_fr = static_cast<int>(need_int(kv, "d_fr"));
  try {
    return CodeSpec(psi, ord, check, d_fr, name);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace avc::config

#endif  // AVC_CONFIG_HPP_
