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

// Bundled golden vectors. Elements are written as alpha exponents, -1 for 0.

#ifndef AVC_GOLDEN_HPP_
#define AVC_GOLDEN_HPP_

#include <algorithm>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "avc/codes.hpp"
#include "avc/decoder.hpp"
#include "avc/gf.hpp"
#include "avc/ideal.hpp"
#include "avc/maps.hpp"
#include "avc/textio.hpp"
#include "avc/transform.hpp"

namespace avc::golden {

// Redundancy set of the Hermitian code used for systematic encoding.
inline constexpr const char* kHermitianPhi = "(-1,-1) (-1,2) (-1,6) (1,0) (1,1) (1,3) (2,4) (2,5) (3,0)";

// Redundancy set of the HCRS code used for systematic encoding.
inline constexpr const char* kHcrsPhi =
    "(-1,3) (0,2) (0,4) (1,1) (1,5) (2,0) (2,3) (2,6) (3,-1) (3,2) "
    "(3,4) (3,7) (4,0) (4,3) (4,6) (5,1) (5,5) (6,2) (6,4) (7,3)";

// Sixteen points over F_8 forming a cross in the grid.
inline constexpr const char* kCrossPsi =
    "(-1,-1) (-1,6) (0,0) (0,5) (1,1) (1,4) (2,2) (2,3) (3,2) (3,3) (4,1) (4,4) (5,0) (5,5) (6,-1) (6,6)";

inline constexpr const char* kCrossG =
    "a^6*x + x^2 + a*x^3 + a^2*x^4 + a^3*x^5 + a^4*x^6"
    " + a^6*y + a*x^2*y + a^2*x^3*y + a^3*x^4*y + a^4*x^5*y + y^2";

inline constexpr const char* kHermitianErasures = "(6,4) (6,7)";
inline const std::vector<std::string> kHermitianErasureBasis = {
    "a^2 + x", "a^2*y + x*y", "a^3 + a^5*y + y^2"};
inline const std::vector<std::string> kHermitianLocatorBasis = {
    "a*x + a^4*x^2 + x^3", "1 + a^7*x + a^2*y + a^2*x^2 + x*y", "a^5 + a^7*x + a^5*y + a^2*x^2 + y^2"};

inline constexpr const char* kHcrsErasures = "(-1,4) (2,-1)";
inline const std::vector<std::string> kHcrsErasureBasis = {"a^6*x + x^2", "1 + a^2*x + y"};
inline const std::vector<std::string> kHcrsLocatorBasis = {
    "a^6 + a^6*y + a^2*x^2 + x*y + x^3", "1 + a*x + y + a^5*x^2 + x^2*y",
    "1 + a*x + a^4*y + a^5*x^2 + a^3*x*y + y^2"};

inline const std::vector<std::string> kHermitianSystematicBasis = {
    "a^2*x + a^7*x^2 + a*x^3 + x^4",
    "a^7*x + x^2 + a^4*x^3 + a^3*x*y + a^4*x^2*y + x^3*y",
    "a^4*x^2 + a^7*x^3 + a^4*x*y + a^7*x^2*y + a^5*x*y^2 + x^2*y^2",
    "a^2*x + a^7*x^2 + a*x^3 + y + y^3"};

inline const std::vector<std::string> kHcrsSystematicBasis = {
    "a^4 + a^2*x + a^2*x^2 + a^6*x^3 + x^4 + x^5 + a^6*x^6 + x^7 + a^2*y + a^6*y^2 + a^6*y^3 + a^4*y^4 + y^5"
    " + a^2*y^6 + y^7 + x^8",
    "a^6*x + x^2 + a^2*x^3 + a^5*x^4 + a^4*x^5 + a*x^6 + a^3*x^7 + a^6*y + a^5*x^2*y + a*x^3*y + a^4*y^2"
    " + a^5*x*y^2 + a^2*y^3 + a^5*x*y^3 + a*y^4 + y^5 + a^5*y^6 + a^3*y^7 + x^4*y",
    "a^4*x + a^2*x^2 + a^5*x^3 + a^7*x^5 + a^4*y + a^6*x*y + a^6*x^2*y + a^4*x^3*y + a^2*y^2 + a^6*x*y^2"
    " + a^5*y^3 + a^4*x*y^3 + a^7*y^5 + x^2*y^2",
    "a^6*x + a^5*x^2 + a*x^3 + a^2*x^4 + a^5*x^5 + a^2*x^6 + a^6*y + x^2*y + a*x^3*y + a*y^2 + a*x*y^2"
    " + a^3*y^3 + a^5*x*y^3 + a^6*y^4 + a^3*y^5 + a^6*y^6 + x^2*y^3",
    "a^6*x + a^4*x^2 + a^2*x^3 + a*x^4 + x^5 + a^5*x^6 + a^3*x^7 + a^6*y + a^5*x^2*y + a^5*x^3*y + y^2"
    " + a^5*x*y^2 + a^2*y^3 + a*x*y^3 + a^5*y^4 + a^4*y^5 + a*y^6 + a^3*y^7 + x*y^4",
    "a^3*x + a^7*x^2 + x^3 + a^4*x^4 + a^2*x^5 + a^4*x^7 + a^3*y + a^3*x^2*y + a^3*x^3*y + a^3*y^2"
    " + a^3*x*y^2 + y^3 + a^5*x*y^3 + a*y^4 + a^2*y^5 + y^6 + a^4*y^7 + x*y^5",
    "a*x + a*x^2 + a^2*x^3 + a^2*x^4 + a^7*x^5 + a^4*x^7 + a*y + a^3*x^2*y + a^3*x^3*y + a^5*y^2"
    " + a^2*x*y^2 + a^5*y^3 + a^7*x*y^3 + a^6*y^4 + a^7*y^5 + x*y^6",
    "1 + a*x + a^4*x^2 + a^5*x^4 + a^6*x^6 + a^3*x^7 + a*y + a^2*x*y + a^7*x^2*y + a^7*x^3*y + a^3*y^2"
    " + a^7*x*y^2 + a^3*x*y^3 + a*y^4 + a^2*y^6 + a^3*y^7 + x*y^7",
    "a^4 + a^2*x + a^6*x^2 + a^6*x^3 + a^4*x^4 + x^5 + a^2*x^6 + x^7 + a^2*y + a^2*y^2 + a^6*y^3 + y^4 + y^5"
    " + a^6*y^6 + y^7 + y^8"};

struct Result {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline Vec logs(std::initializer_list<int> v) {
  Vec out;
  for (int x : v) out.push_back(Elem{x});
  return out;
}

inline std::string logs_str(const Vec& v) { return text::trim(text::word_symbols(v)); }

inline PointSet points(const FieldPtr& f, const char* src) { return text::parse_points(f, 2, src); }

inline std::vector<Polynomial> polys(const Field& f, int dims, const std::vector<std::string>& src) {
  std::vector<Polynomial> out;
  for (const auto& s : src) out.push_back(text::parse_polynomial(f, dims, s));
  return out;
}

// Same polynomials regardless of listing order.
inline bool same_set(const std::vector<Polynomial>& got, const std::vector<Polynomial>& want) {
  if (got.size() != want.size()) return false;
  for (const auto& w : want)
    if (std::find(got.begin(), got.end(), w) == got.end()) return false;
  return true;
}

inline std::string basis_detail(const GroebnerBasis& gb) {
  std::string s;
  for (const auto& g : gb.elements) s += (s.empty() ? "" : "; ") + text::polynomial(g, gb.order);
  return s;
}

// Points of psi where every polynomial vanishes.
inline PointSet common_zeros(const Field& f, const PointSet& psi, const std::vector<Polynomial>& g) {
  PointSet out(psi.field(), psi.dims());
  for (const auto& w : psi.points()) {
    bool all = true;
    for (const auto& p : g) all = all && p.eval(f, w).is_zero();
    if (all) out.add(w);
  }
  return out;
}

inline Spectrum line_spectrum(const IndexSet& d, const Vec& v) {
  Spectrum h(d);
  std::size_t i = 0;
  for (auto id : d.ids()) h.set(id, v[i++]);
  return h;
}

inline Vec spectrum_values(const Spectrum& h) {
  Vec out;
  for (auto id : h.domain().ids()) out.push_back(h.dense()[id]);
  return out;
}

inline std::vector<Result> line_q8() {
  std::vector<Result> out;
  CodeSpec code = presets::rs8();
  const Field& f = code.field();
  const IndexSpace sp = code.space();

  Polynomial g = text::parse_polynomial(f, 1, "a^3*x + a^3*x^2 + a^2*x^3 + x^4");
  out.push_back({"line-q8-basis", code.gb().elements.size() == 1 && code.gb().elements[0] == g &&
                                      code.delta() == IndexSet::of(sp, {{0}, {1}, {2}, {3}}),
                 basis_detail(code.gb())});

  Spectrum h = line_spectrum(code.delta(), logs({2, 3, 5, 0}));
  Spectrum full = extend(f, h, code.gb(), IndexSet::all(sp));
  Vec ext = spectrum_values(full);
  out.push_back({"line-q8-extension", ext == logs({2, 3, 5, 0, 3, 4, 3, 3}), logs_str(ext)});

  GridWord c = idft(f, full);
  out.push_back({"line-q8-grid-word", c.values == logs({5, -1, 2, -1, 0, -1, -1, 4}), logs_str(c.values)});

  Vec cw = canonical_iso(f, h, code.gb(), code.points());
  out.push_back({"line-q8-restriction", cw == logs({5, 2, 0, 4}), logs_str(cw)});

  Vec ev1 = evaluate(f, line_spectrum(code.delta(), logs({0, -1, 4, 5})), code.points());
  Vec ev2 = evaluate(f, line_spectrum(code.delta(), logs({-1, 0, -1, 6})), code.points());
  out.push_back({"line-q8-evaluation", ev1 == logs({0, 4, 3, 0}) && ev2 == logs({-1, 4, 0, 4}),
                 logs_str(ev1) + " | " + logs_str(ev2)});

  Spectrum u1 = line_spectrum(code.delta(), logs({4, -1, 0, -1}));
  Spectrum u2 = line_spectrum(code.delta(), logs({5, 6, -1, 0}));
  Vec x1 = spectrum_values(extend(f, u1, code.gb(), IndexSet::all(sp)));
  Vec x2 = spectrum_values(extend(f, u2, code.gb(), IndexSet::all(sp)));
  Vec t1(x1.begin() + 4, x1.end()), t2(x2.begin() + 4, x2.end());
  out.push_back({"line-q8-dual-extension", t1 == logs({3, 2, 3, 6}) && t2 == logs({-1, 3, 2, 3}),
                 logs_str(t1) + " | " + logs_str(t2)});

  Vec c1 = canonical_iso(f, u1, code.gb(), code.points());
  Vec c2 = canonical_iso(f, u2, code.gb(), code.points());
  bool orth = true;
  for (const Vec* a : {&ev1, &ev2})
    for (const Vec* b : {&c1, &c2}) orth = orth && inner_product(f, *a, *b).is_zero();
  out.push_back({"line-q8-dual-codewords", c1 == logs({3, 5, 5, 6}) && c2 == logs({2, 4, 2, 0}) && orth,
                 logs_str(c1) + " | " + logs_str(c2)});
  return out;
}

inline std::vector<Result> grid_q8() {
  std::vector<Result> out;
  auto f = Field::build(fields::gf8());
  IndexSpace line(8, 1);
  Spectrum col(IndexSet::all(line));
  Vec hv = logs({4, 5, 1, 1, 4, 0, -1, 2});
  for (std::size_t i = 0; i < hv.size(); ++i) col.set(i, hv[i]);
  GridWord v = idft(*f, col);
  Vec head(v.values.begin(), v.values.begin() + 3);
  out.push_back({"grid-q8-column", head == logs({1, 2, 6}), logs_str(head)});

  // Only the sums h(0,a2) + h(7,a2) feed the corner value.
  IndexSpace sp(8, 2);
  Spectrum h(IndexSet::all(sp));
  for (int a1 = 0; a1 < 8; ++a1) h.set(sp.linear(MultiIndex({a1, 0})), hv[a1]);
  h.set(sp.linear(MultiIndex({0, 7})), Elem{4});
  h.set(sp.linear(MultiIndex({3, 5})), Elem{6});
  Elem fast = idft_fast(*f, h).values[0];
  Elem direct = idft(*f, h).values[0];
  out.push_back({"grid-q8-corner", fast == Elem{2} && direct == Elem{2},
                 text::elem(fast) + " " + text::elem(direct)});

  PointSet cross = points(f, kCrossPsi);
  GroebnerBasis gb = vanishing_gb(cross, MonomialOrder::lex());
  Polynomial g = text::parse_polynomial(*f, 2, kCrossG);
  auto it = std::find(gb.elements.begin(), gb.elements.end(), g);
  out.push_back({"cross-basis", it != gb.elements.end() && gb.delta.size() == 16, basis_detail(gb)});

  // h values referenced by the recurrence for (2,2).
  Spectrum known(IndexSet::of(sp, {{1, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0}, {7, 0},
                                   {2, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}}));
  const std::vector<std::pair<MultiIndex, int>> vals = {
      {MultiIndex({1, 0}), 5}, {MultiIndex({3, 0}), 1}, {MultiIndex({4, 0}), 4}, {MultiIndex({5, 0}), 0},
      {MultiIndex({6, 0}), -1}, {MultiIndex({7, 0}), 2}, {MultiIndex({2, 1}), 3}, {MultiIndex({4, 1}), 5},
      {MultiIndex({5, 1}), 6}, {MultiIndex({6, 1}), 3}, {MultiIndex({7, 1}), 4}};
  for (const auto& [a, e] : vals) known.set(sp.linear(a), Elem{e});
  Elem h22 = Elem::zero();
  bool ok = it != gb.elements.end() &&
            recurrence_value(*f, known, gb, static_cast<std::size_t>(it - gb.elements.begin()), MultiIndex({2, 2}), &h22);
  out.push_back({"cross-recurrence", ok && h22 == Elem{1}, text::elem(h22)});
  return out;
}

inline std::vector<Result> omega() {
  std::vector<Result> out;
  for (const char* name : {"gf8", "gf9"}) {
    FieldSpec spec;
    fields::by_name(name, &spec);
    auto f = Field::build(spec);
    GroebnerBasis gb = vanishing_gb(PointSet::full_grid(f, 2), MonomialOrder::grlex());
    std::string q = std::to_string(f->q());
    auto want = polys(*f, 2, {"x^" + q + " - x", "y^" + q + " - y"});
    out.push_back({std::string("omega-basis-") + name, same_set(gb.elements, want), basis_detail(gb)});
  }
  return out;
}

inline std::vector<Result> hermitian_curve() {
  std::vector<Result> out;
  CodeSpec code = presets::hermitian();
  const Field& f = code.field();
  Polynomial g = text::parse_polynomial(f, 2, "y^3 - x^4 + y");
  bool has = std::find(code.gb().elements.begin(), code.gb().elements.end(), g) != code.gb().elements.end();
  IndexSet d = IndexSet::where(code.space(), [](const MultiIndex& a) { return a[1] <= 2; });
  out.push_back({"hermitian-curve-basis", has && code.delta() == d, basis_detail(code.gb())});
  out.push_back({"hermitian-dimensions", code.n() == 27 && code.k() == 18 && code.check().size() == 9,
                 std::to_string(code.n()) + " " + std::to_string(code.k())});
  CodeSpec hc = presets::hcrs();
  out.push_back({"hcrs-dimensions", hc.n() == 81 && hc.k() == 61 && hc.check().size() == 20,
                 std::to_string(hc.n()) + " " + std::to_string(hc.k())});
  return out;
}

// Erasure-and-error scenario rebuilt from a printed locator basis: the located
// points are its common zeros on psi, the erasures are given, and the error
// values are `values` on the located points of an all-zero codeword.
inline std::vector<Result> scenario(const std::string& tag, const CodeSpec& code, const char* erasures,
                                    const std::vector<std::string>& erasure_basis,
                                    const std::vector<std::string>& locator_basis, std::size_t located_size,
                                    const Vec& values, bool row_form_erasures, Elem* syndrome00 = nullptr) {
  std::vector<Result> out;
  const Field& f = code.field();
  PointSet phi1 = points(code.field_ptr(), erasures);
  auto want_e = polys(f, 2, erasure_basis);
  auto want_l = polys(f, 2, locator_basis);

  GroebnerBasis ge = vanishing_gb(phi1, code.order());
  GroebnerBasis shown = row_form_erasures ? row_basis(f, ge) : ge;
  out.push_back({tag + "-erasure-basis", same_set(shown.elements, want_e), basis_detail(shown)});

  PointSet located = common_zeros(f, code.points(), want_l);
  GroebnerBasis gl = vanishing_gb(located, code.order());
  bool ok = located.size() == located_size && phi1.subset_of(located) && same_set(gl.elements, want_l);
  out.push_back({tag + "-locator-basis", ok, basis_detail(gl)});

  Vec r(code.n());
  for (std::size_t i = 0; i < located.size() && i < values.size(); ++i) r[code.points().find(located[i])] = values[i];
  try {
    DecodeResult res = decode_word(code, r, phi1);
    bool dec = res.codeword == Vec(code.n()) && res.error == r && res.located.size() == located.size() &&
               located.subset_of(res.located) && same_set(res.locator_gb.elements, want_l);
    out.push_back({tag + "-decode", dec, "located " + std::to_string(res.located.size())});
    if (syndrome00) {
      Elem s = res.received_syndrome.at(code.space().linear(MultiIndex({0, 0})));
      out.push_back({tag + "-syndrome-origin", s == *syndrome00, text::elem(s)});
    }
  } catch (const std::exception& e) {
    out.push_back({tag + "-decode", false, e.what()});
  }
  return out;
}

inline std::vector<Result> systematic(const std::string& tag, const CodeSpec& code, const char* phi_src,
                                      const std::vector<std::string>& basis) {
  std::vector<Result> out;
  PointSet phi = points(code.field_ptr(), phi_src);
  bool generic = check_systematic_support(code, phi);
  out.push_back({tag + "-systematic-support", generic, generic ? "generic" : "singular"});
  try {
    GroebnerBasis gb = systematic_basis(code, phi);
    out.push_back({tag + "-systematic-basis", same_set(gb.elements, polys(code.field(), 2, basis)), basis_detail(gb)});
  } catch (const std::exception& e) {
    out.push_back({tag + "-systematic-basis", false, e.what()});
  }
  return out;
}

inline std::vector<Result> run_all() {
  std::vector<Result> out;
  std::vector<std::function<std::vector<Result>()>> groups = {
      line_q8, grid_q8, omega, hermitian_curve,
      [] {
        CodeSpec c = presets::hermitian();
        Elem s00{2};
        return scenario("hermitian", c, kHermitianErasures, kHermitianErasureBasis, kHermitianLocatorBasis, 4,
                        logs({0, 0, 0, 2}), true, &s00);
      },
      [] {
        CodeSpec c = presets::hcrs();
        return scenario("hcrs", c, kHcrsErasures, kHcrsErasureBasis, kHcrsLocatorBasis, 5, logs({0, 1, 2, 3, 4}),
                        false);
      },
      [] { return systematic("hermitian", presets::hermitian(), kHermitianPhi, kHermitianSystematicBasis); },
      [] { return systematic("hcrs", presets::hcrs(), kHcrsPhi, kHcrsSystematicBasis); },
  };
  for (auto& g : groups) {
    try {
      for (auto& r : g()) out.push_back(std::move(r));
    } catch (const std::exception& e) {
      out.push_back({"group-error", false, e.what()});
    }
  }
  return out;
}

}  // namespace avc::golden

#endif  // AVC_GOLDEN_HPP_
