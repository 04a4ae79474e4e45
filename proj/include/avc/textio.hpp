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

// Text forms. A field element is its exponent k for alpha^k, or -1 for zero.

#ifndef AVC_TEXTIO_HPP_
#define AVC_TEXTIO_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "avc/error.hpp"
#include "avc/gf.hpp"
#include "avc/ideal.hpp"
#include "avc/mindex.hpp"
#include "avc/points.hpp"
#include "avc/polynomial.hpp"
#include "avc/transform.hpp"

namespace avc::text {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline long parse_int(std::string_view s) {
  std::string t = trim(s);
  if (t.empty()) throw ParseError("expected an integer");
  std::size_t used = 0;
  long v;
  try {
    v = std::stol(t, &used);
  } catch (const std::exception&) {
    throw ParseError("not an integer: '" + t + "'");
  }
  if (used != t.size()) throw ParseError("not an integer: '" + t + "'");
  return v;
}

inline std::string elem(Elem e) { return std::to_string(e.log); }

inline Elem parse_elem(const Field& f, std::string_view s) {
  long k = parse_int(s);
  if (k < -1 || k > f.q() - 2) throw ParseError("exponent " + std::to_string(k) + " out of range for GF(" +
                                                std::to_string(f.q()) + ")");
  return Elem{static_cast<std::int32_t>(k)};
}

// "(3,1)"; a bare integer is accepted for one dimension.
inline std::vector<long> parse_tuple(std::string_view s) {
  std::string t = trim(s);
  if (t.empty()) throw ParseError("empty tuple");
  if (t.front() != '(') return {parse_int(t)};
  if (t.back() != ')') throw ParseError("unterminated tuple: '" + t + "'");
  std::vector<long> out;
  std::stringstream ss(t.substr(1, t.size() - 2));
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(parse_int(part));
  if (out.empty()) throw ParseError("empty tuple");
  return out;
}

inline MultiIndex parse_mindex(std::string_view s) {
  auto v = parse_tuple(s);
  std::vector<int> c(v.begin(), v.end());
  return MultiIndex(std::move(c));
}

inline Point parse_point(const Field& f, std::string_view s) {
  auto v = parse_tuple(s);
  Point w;
  for (long k : v) w.push_back(parse_elem(f, std::to_string(k)));
  return w;
}

// Splits "(1,2) (3,4)" or "(1,2),(3,4)" into tuple tokens.
inline std::vector<std::string> tuple_tokens(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ';') {
      ++i;
      continue;
    }
    if (c == '(') {
      std::size_t j = s.find(')', i);
      if (j == std::string_view::npos) throw ParseError("unterminated tuple");
      out.emplace_back(s.substr(i, j - i + 1));
      i = j + 1;
    } else {
      std::size_t j = i;
      while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != ',' && s[j] != ';') ++j;
      out.emplace_back(s.substr(i, j - i));
      i = j;
    }
  }
  return out;
}

// ---- polynomials: "a^3*x1 + a^3*x1^2 + x1^4" ----

inline std::string monomial_str(const MultiIndex& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(i + 1);
    if (a[i] != 1) s += "^" + std::to_string(a[i]);
  }
  return s;
}

// Terms ascending in the order, as the leading term is written last.
inline std::string polynomial(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) return "0";
  std::vector<MultiIndex> exps;
  for (const auto& [a, c] : p.terms()) exps.push_back(a);
  std::sort(exps.begin(), exps.end(), [&](const MultiIndex& x, const MultiIndex& y) { return order.less(x, y); });
  std::string s;
  for (const auto& a : exps) {
    Elem c = p.coef(a);
    std::string mono = monomial_str(a);
    std::string coef = c.log == 0 ? "" : "a^" + std::to_string(c.log);
    std::string term = coef.empty() ? (mono.empty() ? "1" : mono) : (mono.empty() ? coef : coef + "*" + mono);
    if (!s.empty()) s += " + ";
    s += term;
  }
  return s;
}

inline std::string polynomial(const Polynomial& p) { return polynomial(p, MonomialOrder::lex()); }

namespace detail {

inline void apply_factor(const Field& f, const std::string& tok, int dims, Elem& coef, MultiIndex& mono) {
  std::string t = tok;
  std::string base = t, pw;
  auto caret = t.find('^');
  if (caret != std::string::npos) {
    base = t.substr(0, caret);
    pw = t.substr(caret + 1);
    if (pw.empty()) throw ParseError("missing exponent in '" + tok + "'");
  }
  if (base == "a" || base == "alpha") {
    long k = pw.empty() ? 1 : parse_int(pw);
    coef = f.mul(coef, f.exp(k));
    return;
  }
  if (base == "1" && pw.empty()) return;
  int var = -1;
  if (base == "x" && dims >= 1) var = 0;
  else if (base == "y" && dims >= 2) var = 1;
  else if (base == "z" && dims >= 3) var = 2;
  else if (base.size() > 1 && base[0] == 'x') var = static_cast<int>(parse_int(base.substr(1))) - 1;
  if (var < 0 || var >= dims) throw ParseError("unknown factor '" + tok + "'");
  long e = pw.empty() ? 1 : parse_int(pw);
  if (e < 0) throw ParseError("negative exponent in '" + tok + "'");
  mono[var] += static_cast<int>(e);
}

}  // namespace detail

// Accepts the printed form plus x/y/z for the first variables, '-' between
// terms, and '*', the middle dot or spaces between factors.
inline Polynomial parse_polynomial(const Field& f, int dims, std::string_view src) {
  std::string s;
  for (std::size_t i = 0; i < src.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (c == 0xC2 && i + 1 < src.size() && static_cast<unsigned char>(src[i + 1]) == 0xB7) {
      s += ' ';
      ++i;
    } else if (c == 0xE2 && i + 2 < src.size() && static_cast<unsigned char>(src[i + 1]) == 0x88 &&
               static_cast<unsigned char>(src[i + 2]) == 0x92) {
      s += '-';
      i += 2;
    } else {
      s += static_cast<char>(c);
    }
  }
  Polynomial p(dims);
  if (trim(s) == "0") return p;
  std::size_t i = 0;
  bool negate = false;
  while (i < s.size()) {
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = trim(std::string_view(s).substr(i, j - i));
    if (term.empty()) {
      if (j == s.size()) break;
      negate = s[j] == '-';
      i = j + 1;
      continue;
    }
    Elem coef = f.one();
    MultiIndex mono(static_cast<std::size_t>(dims));
    std::string tok;
    for (char c : term + " ") {
      if (c == '*' || std::isspace(static_cast<unsigned char>(c))) {
        if (!tok.empty()) detail::apply_factor(f, tok, dims, coef, mono);
        tok.clear();
      } else {
        tok += c;
      }
    }
    if (negate) coef = f.neg(coef);
    p.add_term(f, mono, coef);
    if (j == s.size()) break;
    negate = s[j] == '-';
    i = j + 1;
  }
  return p;
}

// ---- spectra and words ----

// One "(a1,a2) -> k" line per domain member, first component fastest.
inline std::string spectrum_entries(const Spectrum& h) {
  std::string s;
  for (auto id : h.domain().ids()) s += h.space().at(id).str() + " -> " + elem(h.dense()[id]) + "\n";
  return s;
}

// Dense layout: a_1 down the rows, a_2 across. Needs the whole of A.
inline std::string spectrum_grid(const Spectrum& h) {
  const IndexSpace& sp = h.space();
  if (h.domain().size() != sp.size()) throw DomainError("grid output needs a spectrum on all of A");
  std::ostringstream os;
  const int q = sp.q();
  if (sp.dims() == 1) {
    for (int a = 0; a < q; ++a) os << (a ? " " : "") << elem(h.dense()[a]);
    os << "\n";
  } else if (sp.dims() == 2) {
    for (int a1 = 0; a1 < q; ++a1) {
      for (int a2 = 0; a2 < q; ++a2) os << (a2 ? " " : "") << elem(h.dense()[a1 + q * a2]);
      os << "\n";
    }
  } else {
    return spectrum_entries(h);
  }
  return os.str();
}

inline std::string grid_entries(const Field& f, const GridWord& c) {
  std::string s;
  for (std::size_t i = 0; i < c.values.size(); ++i)
    s += point_str(omega_point(f, c.space.dims(), i)) + " -> " + elem(c.values[i]) + "\n";
  return s;
}

// Omega word with w_1 down and w_2 across, both labelled -1, 0, ..., q-2.
inline std::string grid_word(const Field& f, const GridWord& c) {
  const IndexSpace& sp = c.space;
  const int q = sp.q();
  std::ostringstream os;
  if (sp.dims() == 1) {
    for (int i = 0; i < q; ++i) os << (i ? " " : "") << elem(c.values[i]);
    os << "\n";
  } else if (sp.dims() == 2) {
    for (int r = 0; r < q; ++r) {
      for (int k = 0; k < q; ++k) os << (k ? " " : "") << elem(c.values[r + q * k]);
      os << "\n";
    }
  } else {
    return grid_entries(f, c);
  }
  return os.str();
}

inline std::string word_entries(const Vec& c, const PointSet& psi) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += point_str(psi[i]) + " -> " + elem(c[i]) + "\n";
  return s;
}

// Symbols separated by spaces, in point order.
inline std::string word_symbols(const Vec& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + elem(c[i]);
  return s + "\n";
}

namespace detail {

struct Entry {
  std::string key;
  std::string value;
};

inline std::string strip_comment(const std::string& line) {
  auto h = line.find('#');
  return h == std::string::npos ? line : line.substr(0, h);
}

// Lines "key -> value" (an arrow or the unicode right arrow).
inline std::vector<Entry> entries(std::string_view src) {
  std::vector<Entry> out;
  std::stringstream ss{std::string(src)};
  std::string line;
  while (std::getline(ss, line)) {
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    std::size_t pos = line.find("->"), len = 2;
    if (pos == std::string::npos) {
      pos = line.find("\xE2\x86\x92");
      len = 3;
    }
    if (pos == std::string::npos) throw ParseError("expected 'index -> value' in line: " + line);
    out.push_back({trim(line.substr(0, pos)), trim(line.substr(pos + len))});
  }
  return out;
}

inline bool has_arrow(std::string_view s) {
  return s.find("->") != std::string_view::npos || s.find("\xE2\x86\x92") != std::string_view::npos;
}

inline std::vector<std::string> plain_tokens(std::string_view src) {
  std::vector<std::string> out;
  std::stringstream ss{std::string(src)};
  std::string line;
  while (std::getline(ss, line)) {
    std::stringstream ls(strip_comment(line));
    std::string tok;
    while (ls >> tok) out.push_back(tok);
  }
  return out;
}

}  // namespace detail

// Entry lines define the domain; a dense grid means all of A.
inline Spectrum parse_spectrum(const Field& f, IndexSpace space, std::string_view src) {
  if (detail::has_arrow(src)) {
    auto es = detail::entries(src);
    IndexSet dom(space);
    std::vector<std::pair<std::size_t, Elem>> vals;
    for (const auto& e : es) {
      MultiIndex a = parse_mindex(e.key);
      if (!space.contains(a)) throw ParseError("index " + a.str() + " outside A");
      std::size_t id = space.linear(a);
      if (dom.contains(id)) throw ParseError("index " + a.str() + " given twice");
      dom.insert(id);
      vals.emplace_back(id, parse_elem(f, e.value));
    }
    Spectrum h(dom);
    for (auto& [id, v] : vals) h.set(id, v);
    return h;
  }
  auto toks = detail::plain_tokens(src);
  if (toks.size() != space.size())
    throw ParseError("dense spectrum needs " + std::to_string(space.size()) + " values, got " +
                     std::to_string(toks.size()));
  Spectrum h(IndexSet::all(space));
  const int q = space.q();
  for (std::size_t t = 0; t < toks.size(); ++t) {
    std::size_t id = t;
    if (space.dims() == 2) id = (t / q) + q * (t % q);
    h.set(id, parse_elem(f, toks[t]));
  }
  return h;
}

// Omega word as entry lines covering every point or as a dense grid.
inline GridWord parse_grid_word(const Field& f, int dims, std::string_view src) {
  IndexSpace space(f.q(), dims);
  GridWord c(space);
  if (detail::has_arrow(src)) {
    std::vector<char> seen(space.size(), 0);
    for (const auto& e : detail::entries(src)) {
      Point w = parse_point(f, e.key);
      if (static_cast<int>(w.size()) != dims) throw ParseError("point " + e.key + " has wrong dimension");
      std::size_t id = omega_linear(f, w);
      if (seen[id]) throw ParseError("point " + e.key + " given twice");
      seen[id] = 1;
      c.values[id] = parse_elem(f, e.value);
    }
    for (char s : seen)
      if (!s) throw ParseError("word must be defined on all of Omega");
    return c;
  }
  auto toks = detail::plain_tokens(src);
  if (toks.size() != space.size())
    throw ParseError("dense word needs " + std::to_string(space.size()) + " values, got " +
                     std::to_string(toks.size()));
  const int q = space.q();
  for (std::size_t t = 0; t < toks.size(); ++t) {
    std::size_t id = t;
    if (dims == 2) id = (t / q) + q * (t % q);
    c.values[id] = parse_elem(f, toks[t]);
  }
  return c;
}

// Word over psi: entry lines keyed by point, or symbols in point order.
// '?' marks an erasure; erased symbols read as zero.
struct ReceivedWord {
  Vec symbols;
  std::vector<std::size_t> erased;
};

inline ReceivedWord parse_received(const Field& f, const PointSet& psi, std::string_view src) {
  ReceivedWord r;
  r.symbols.assign(psi.size(), Elem::zero());
  if (detail::has_arrow(src)) {
    std::vector<char> seen(psi.size(), 0);
    for (const auto& e : detail::entries(src)) {
      long k = psi.find(parse_point(f, e.key));
      if (k < 0) throw ParseError("point " + e.key + " is not in the point set");
      if (seen[k]) throw ParseError("point " + e.key + " given twice");
      seen[k] = 1;
      if (e.value == "?") r.erased.push_back(static_cast<std::size_t>(k));
      else r.symbols[k] = parse_elem(f, e.value);
    }
    for (char s : seen)
      if (!s) throw ParseError("word must give a symbol for every point");
    std::sort(r.erased.begin(), r.erased.end());
    return r;
  }
  auto toks = detail::plain_tokens(src);
  if (toks.size() != psi.size())
    throw ParseError("word needs " + std::to_string(psi.size()) + " symbols, got " + std::to_string(toks.size()));
  for (std::size_t k = 0; k < toks.size(); ++k) {
    if (toks[k] == "?") r.erased.push_back(k);
    else r.symbols[k] = parse_elem(f, toks[k]);
  }
  return r;
}

inline Vec parse_word(const Field& f, const PointSet& psi, std::string_view src) {
  auto r = parse_received(f, psi, src);
  if (!r.erased.empty()) throw ParseError("erasure marks are not allowed here");
  return r.symbols;
}

// Plain symbol list of a given length.
inline Vec parse_symbols(const Field& f, std::size_t n, std::string_view src) {
  auto toks = detail::plain_tokens(src);
  if (toks.size() != n) throw ParseError("expected " + std::to_string(n) + " symbols, got " + std::to_string(toks.size()));
  Vec v;
  for (const auto& t : toks) v.push_back(parse_elem(f, t));
  return v;
}

inline PointSet parse_points(const FieldPtr& f, int dims, std::string_view src) {
  std::string joined;
  for (const auto& t : detail::plain_tokens(src)) joined += t + " ";
  PointSet s(f, dims);
  for (const auto& tok : tuple_tokens(joined)) {
    Point w = parse_point(*f, tok);
    if (static_cast<int>(w.size()) != dims) throw ParseError("point " + tok + " has wrong dimension");
    s.add(w);
  }
  return s;
}

inline std::string points(const PointSet& s) {
  std::string out;
  for (const auto& w : s.points()) out += point_str(w) + "\n";
  return out;
}

inline std::string basis(const GroebnerBasis& gb) {
  std::string s;
  for (const auto& g : gb.elements) s += polynomial(g, gb.order) + "\n";
  return s;
}

inline std::string index_set(const IndexSet& d) {
  std::string s;
  for (const auto& a : d.members()) s += (s.empty() ? "" : " ") + a.str();
  return s + "\n";
}

}  // namespace avc::text

#endif  // AVC_TEXTIO_HPP_
