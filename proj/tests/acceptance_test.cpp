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

// Prints one PASS or FAIL line per acceptance criterion and exits nonzero
// if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "test_util.hpp"

using namespace avc;
using namespace avc::testing;

namespace {

constexpr int kRoundTrips = 200;
constexpr int kFastChecks = 100;
constexpr int kDualityPairs = 500;
constexpr int kDecodeTrials = 500;
constexpr int kTrendTrials = 20;
constexpr double kTrendTolerance = 2.0;
constexpr std::uint64_t kSeed = 20260101;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::map<std::string, golden::Result> golden_results() {
  std::map<std::string, golden::Result> out;
  for (auto& r : golden::run_all()) out[r.name] = r;
  return out;
}

Outcome require_golden(const std::vector<std::string>& names) {
  static const auto all = golden_results();
  Outcome o;
  std::ostringstream ss;
  for (const auto& n : names) {
    auto it = all.find(n);
    bool ok = it != all.end() && it->second.pass;
    if (!ok) {
      o.pass = false;
      ss << n << " failed";
      if (it != all.end()) ss << " (" << it->second.detail << ")";
      ss << "; ";
    }
  }
  o.detail = o.pass ? std::to_string(names.size()) + " values reproduced" : ss.str();
  return o;
}

struct Grid {
  const char* field;
  int dims;
};

const std::vector<Grid> kGrids = {{"gf8", 1}, {"gf8", 2}, {"gf9", 2}, {"gf4", 3}};

Outcome c1() {
  return require_golden({"line-q8-basis", "line-q8-extension", "line-q8-grid-word", "line-q8-restriction"});
}

Outcome c2() {
  std::mt19937_64 rng(kSeed + 2);
  Outcome o;
  int bad = 0;
  for (const auto& g : kGrids) {
    auto f = field(g.field);
    for (int t = 0; t < kRoundTrips; ++t) {
      GridWord c = random_grid(*f, g.dims, rng);
      if (idft(*f, dft(*f, c)).values != c.values) ++bad;
      Spectrum h = random_spectrum(*f, IndexSet::all(c.space), rng);
      if (!(dft(*f, idft(*f, h)) == h)) ++bad;
    }
  }
  o.pass = bad == 0;
  o.detail = std::to_string(bad) + " mismatches in " + std::to_string(2 * kRoundTrips * kGrids.size()) + " round trips";
  return o;
}

Outcome c3() {
  std::mt19937_64 rng(kSeed + 3);
  Outcome o;
  int bad = 0;
  std::ostringstream ss;
  for (const auto& g : kGrids) {
    auto f = field(g.field);
    std::uint64_t bound = 3ull * g.dims;
    for (int i = 0; i <= g.dims; ++i) bound *= f->q();
    std::uint64_t worst = 0;
    for (int t = 0; t < kFastChecks; ++t) {
      GridWord c = random_grid(*f, g.dims, rng);
      if (!(dft_fast(*f, c) == dft(*f, c))) ++bad;
      Spectrum h = random_spectrum(*f, IndexSet::all(c.space), rng);
      GridWord want = idft(*f, h);
      OpCounter ops;
      GridWord got = idft_fast(*f, h);
      worst = std::max<std::uint64_t>(worst, ops.count());
      if (got.values != want.values) ++bad;
    }
    if (worst > bound) o.pass = false;
    ss << g.field << "^" << g.dims << " ops " << worst << "<=" << bound << " ";
  }
  if (bad) o.pass = false;
  o.detail = std::to_string(bad) + " mismatches; " + ss.str();
  return o;
}

Outcome c4() {
  auto f = field("gf8");
  // Row-vector convention: a word times the matrix gives its image.
  Matrix want_dft = logs_matrix({{0, -1, -1, -1, -1, -1, -1, -1},
                                   {0, 0, 0, 0, 0, 0, 0, 0},
                                   {0, 1, 2, 3, 4, 5, 6, 0},
                                   {0, 2, 4, 6, 1, 3, 5, 0},
                                   {0, 3, 6, 2, 5, 1, 4, 0},
                                   {0, 4, 1, 5, 2, 6, 3, 0},
                                   {0, 5, 3, 1, 6, 4, 2, 0},
                                   {0, 6, 5, 4, 3, 2, 1, 0}});
  Matrix want_idft = logs_matrix({{0, -1, -1, -1, -1, -1, -1, -1},
                                    {-1, 0, 6, 5, 4, 3, 2, 1},
                                    {-1, 0, 5, 3, 1, 6, 4, 2},
                                    {-1, 0, 4, 1, 5, 2, 6, 3},
                                    {-1, 0, 3, 6, 2, 5, 1, 4},
                                    {-1, 0, 2, 4, 6, 1, 3, 5},
                                    {-1, 0, 1, 2, 3, 4, 5, 6},
                                    {0, 0, 0, 0, 0, 0, 0, 0}});
  Matrix want_ev = logs_matrix({{0, 0, 0, 0, 0, 0, 0, 0},
                                  {-1, 0, 1, 2, 3, 4, 5, 6},
                                  {-1, 0, 2, 4, 6, 1, 3, 5},
                                  {-1, 0, 3, 6, 2, 5, 1, 4},
                                  {-1, 0, 4, 1, 5, 2, 6, 3},
                                  {-1, 0, 5, 3, 1, 6, 4, 2},
                                  {-1, 0, 6, 5, 4, 3, 2, 1},
                                  {-1, 0, 0, 0, 0, 0, 0, 0}});
  Matrix dm = dft_matrix(*f, 1);
  Matrix im = idft_matrix(*f, 1, TransformPath::kDirect);
  Matrix fm = idft_matrix(*f, 1, TransformPath::kFast);
  PointSet omega = PointSet::full_grid(f, 1);
  // evaluate_matrix has one row per point; the row-vector form is its transpose.
  Matrix ev = transpose(evaluate_matrix(*f, IndexSet::all(IndexSpace(8, 1)), omega));
  Outcome o;
  std::ostringstream ss;
  auto need = [&](bool ok, const char* what) {
    if (!ok) {
      o.pass = false;
      ss << what << " ";
    }
  };
  need(dm == want_dft, "dft-matrix");
  need(im == want_idft && fm == want_idft, "idft-matrix");
  need(multiply(*f, dm, im) == identity_matrix(*f, 8), "product");
  need(multiply(*f, im, dm) == identity_matrix(*f, 8), "reverse-product");
  need(ev == want_ev, "ev-matrix");
  need(ev == transpose(dm), "ev-transpose");
  o.detail = o.pass ? "all four identities hold" : "mismatch: " + ss.str();
  return o;
}

Outcome c5() {
  return require_golden({"hermitian-erasure-basis", "hermitian-locator-basis", "hcrs-erasure-basis",
                         "hcrs-locator-basis", "hermitian-systematic-basis", "hcrs-systematic-basis", "cross-basis",
                         "omega-basis-gf8", "omega-basis-gf9"});
}

struct Named {
  std::string name;
  PointSet psi;
  MonomialOrder order;
};

Outcome c6() {
  auto f8 = field("gf8");
  auto f9 = field("gf9");
  std::vector<Named> sets = {
      {"line-q8", presets::rs8().points(), MonomialOrder::lex()},
      {"cross", text::parse_points(f8, 2, golden::kCrossPsi), MonomialOrder::lex()},
      {"hermitian", presets::hermitian().points(), presets::hermitian().order()},
      {"hermitian-phi", text::parse_points(f9, 2, golden::kHermitianPhi), presets::hermitian().order()},
      {"hcrs-phi", text::parse_points(f9, 2, golden::kHcrsPhi), MonomialOrder::grlex()},
      {"omega-q9", PointSet::full_grid(f9, 2), MonomialOrder::grlex()},
      {"hermitian4", presets::hermitian4().points(), presets::hermitian4().order()},
  };
  Outcome o;
  std::size_t vectors = 0;
  std::ostringstream ss;
  for (const auto& s : sets) {
    const Field& f = *s.psi.field();
    GroebnerBasis gb = vanishing_gb(s.psi, s.order);
    bool ok = gb.delta.size() == s.psi.size();
    for (std::size_t k = 0; k < s.psi.size(); ++k) {
      Vec e(s.psi.size());
      e[k] = f.one();
      if (canonical_iso(f, proper_transform(f, e, s.psi, gb.delta), gb, s.psi) != e) ok = false;
      ++vectors;
    }
    for (auto id : gb.delta.ids()) {
      Spectrum h(gb.delta);
      h.set(id, f.one());
      GridWord c = canonical_iso_grid(f, h, gb, s.psi);
      for (std::size_t i = 0; i < c.values.size(); ++i)
        if (s.psi.find_grid(i) < 0 && !c.values[i].is_zero()) ok = false;
      if (!(proper_transform(f, restrict(c, s.psi), s.psi, gb.delta) == h)) ok = false;
      ++vectors;
    }
    if (!ok) {
      o.pass = false;
      ss << s.name << " ";
    }
  }
  o.detail = o.pass ? std::to_string(vectors) + " basis vectors over " + std::to_string(sets.size()) + " point sets"
                    : "failed on " + ss.str();
  return o;
}

Outcome c7() {
  std::mt19937_64 rng(kSeed + 7);
  Outcome o;
  std::ostringstream ss;
  for (const char* name : {"hermitian", "hcrs"}) {
    CodeSpec code = *presets::by_name(name);
    int bad = 0;
    for (int t = 0; t < kDualityPairs; ++t) {
      Vec primal = primal_encode(code, random_spectrum(code.field(), code.check(), rng));
      Vec dual = encode_nonsystematic(code, random_spectrum(code.field(), code.info_set(), rng));
      if (!inner_product(code.field(), primal, dual).is_zero()) ++bad;
    }
    if (bad) o.pass = false;
    ss << name << " n=" << code.n() << " k=" << code.k() << " b=" << code.check().size() << " bad=" << bad << " ";
  }
  o.detail = ss.str();
  return o;
}

struct Trial {
  Spectrum info;
  Vec c, r;
  PointSet phi1;
};

Trial corrupt(const CodeSpec& code, int erasures, int errors, std::mt19937_64& rng) {
  Trial t{random_spectrum(code.field(), code.info_set(), rng), {}, {}, PointSet(code.field_ptr(), code.dims())};
  t.c = encode_nonsystematic(code, t.info);
  t.r = t.c;
  PointSet where = random_subset(code.points(), erasures + errors, rng);
  std::vector<std::size_t> idx(where.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  for (int i = 0; i < erasures + errors; ++i) {
    const Point& w = where[idx[i]];
    std::size_t k = static_cast<std::size_t>(code.points().find(w));
    // Errors are nonzero; an erased symbol may arrive with any value.
    t.r[k] = code.field().add(t.r[k], random_elem(code.field(), rng, i >= erasures));
    if (i < erasures) t.phi1.add(w);
  }
  t.phi1 = t.phi1.sorted();
  return t;
}

Outcome c8() {
  std::mt19937_64 rng(kSeed + 8);
  Outcome o;
  std::ostringstream ss;
  for (const char* name : {"hermitian", "hcrs"}) {
    CodeSpec code = *presets::by_name(name);
    const Field& f = code.field();
    int budget = code.d_fr() - 1;
    int failures = 0;
    for (int t = 0; t < kDecodeTrials; ++t) {
      int erasures = static_cast<int>(rng() % (budget + 1));
      int errors = static_cast<int>(rng() % ((budget - erasures) / 2 + 1));
      Trial w = corrupt(code, erasures, errors, rng);
      Vec err(code.n());
      for (std::size_t k = 0; k < code.n(); ++k) err[k] = f.sub(w.r[k], w.c[k]);
      try {
        DecodeResult res = decode_word(code, w.r, w.phi1);
        if (res.codeword != w.c || res.error != err || !(res.info == w.info)) ++failures;
      } catch (const Error&) {
        ++failures;
      }
    }
    if (failures) o.pass = false;
    ss << name << " " << failures << "/" << kDecodeTrials << " failures ";
  }
  o.detail = ss.str();
  return o;
}

Outcome c9() {
  std::mt19937_64 rng(kSeed + 9);
  Outcome o;
  std::ostringstream ss;
  for (const auto& [name, src] : {std::pair{"hermitian", golden::kHermitianPhi}, {"hcrs", golden::kHcrsPhi}}) {
    CodeSpec code = *presets::by_name(name);
    PointSet phi = text::parse_points(code.field_ptr(), 2, src);
    if (!check_systematic_support(code, phi)) {
      o.pass = false;
      ss << name << " support rejected ";
      continue;
    }
    int bad = 0;
    for (int t = 0; t < 50; ++t) {
      Vec info = random_vec(code.field(), code.n() - phi.size(), rng);
      Vec c = systematic_encode(code, info, phi);
      Vec r(code.n());
      std::size_t j = 0;
      for (std::size_t k = 0; k < code.n(); ++k)
        if (!phi.contains(code.points()[k])) r[k] = info[j++];
      if (decode_word(code, r, phi).codeword != c) ++bad;
    }
    if (bad) o.pass = false;
    ss << name << " " << bad << "/50 mismatches ";
  }
  Outcome g = require_golden({"hermitian-syndrome-origin", "hermitian-systematic-support", "hcrs-systematic-support"});
  if (!g.pass) {
    o.pass = false;
    ss << g.detail;
  }
  o.detail = ss.str();
  return o;
}

struct Consistency {
  std::size_t vectors = 0;
  std::size_t multi = 0;  // indices with two or more admissible generators
  std::size_t bad = 0;
};

// Extends every unit vector on the footprint and recomputes each value from
// every admissible generator independently.
Consistency consistency(const Field& f, const GroebnerBasis& gb, const PointSet& psi) {
  Consistency out;
  const IndexSpace& space = gb.delta.space();
  IndexSet all = IndexSet::all(space);
  for (auto id : gb.delta.ids()) {
    Spectrum h(gb.delta);
    h.set(id, f.one());
    Spectrum full = extend(f, h, gb, all, {false});
    if (!(dft(f, canonical_iso_grid(f, h, gb, psi)) == full)) ++out.bad;
    ++out.vectors;
    for (std::size_t a = 0; a < space.size(); ++a) {
      if (gb.delta.contains(a)) continue;
      std::size_t admissible = 0;
      for (std::size_t w = 0; w < gb.size(); ++w) {
        Elem v;
        if (!recurrence_value(f, full, gb, w, space.at(a), &v)) continue;
        ++admissible;
        if (!(v == full.at(a))) ++out.bad;
      }
      if (admissible >= 2) ++out.multi;
    }
  }
  return out;
}

Outcome c10() {
  auto f8 = field("gf8");
  CodeSpec herm = presets::hermitian();
  const Field& f9 = herm.field();
  PointSet cross = text::parse_points(f8, 2, golden::kCrossPsi);
  PointSet erased = text::parse_points(herm.field_ptr(), 2, golden::kHermitianErasures);
  PointSet located =
      golden::common_zeros(f9, herm.points(), golden::polys(f9, 2, golden::kHermitianLocatorBasis));
  PointSet phi = text::parse_points(herm.field_ptr(), 2, golden::kHermitianPhi);

  struct Case {
    std::string name;
    const Field* f;
    GroebnerBasis gb;
    PointSet psi;
  };
  std::vector<Case> cases = {
      {"hermitian-curve", &f9, herm.gb(), herm.points()},
      {"cross-lex", f8.get(), vanishing_gb(cross, MonomialOrder::lex()), cross},
      {"cross-grlex", f8.get(), vanishing_gb(cross, MonomialOrder::grlex()), cross},
      {"hermitian-erasures", &f9, vanishing_gb(erased, herm.order()), erased},
      {"hermitian-located", &f9, vanishing_gb(located, herm.order()), located},
      {"hermitian-redundancy", &f9, systematic_basis(herm, phi), phi},
  };
  std::mt19937_64 rng(kSeed + 10);
  for (int size : {3, 5, 7, 9, 11, 13}) {
    PointSet sub = random_subset(cross, size, rng);
    cases.push_back({"cross-subset-" + std::to_string(size), f8.get(), vanishing_gb(sub, MonomialOrder::lex()), sub});
  }
  Outcome o;
  std::ostringstream ss;
  std::size_t multi = 0;
  for (const auto& c : cases) {
    Consistency r = consistency(*c.f, c.gb, c.psi);
    multi += r.multi;
    if (r.bad) o.pass = false;
    ss << c.name << ":" << r.multi << (r.bad ? "!" : "") << " ";
  }
  // Without a single multiply covered index the check says nothing.
  if (multi == 0) o.pass = false;
  o.detail = std::to_string(multi) + " multiply covered indices; " + ss.str();
  return o;
}

Outcome c11() {
  const std::vector<std::string> configs = {"rs4", "rs8full", "rs9", "hcrs4", "hermitian4", "hcrs8", "hermitian", "hcrs"};
  std::mt19937_64 rng(kSeed + 11);
  Outcome o;
  std::ostringstream ss;
  double base = 0;
  for (const auto& name : configs) {
    CodeSpec code = *presets::by_name(name);
    int t = (code.d_fr() - 1) / 2;
    double n = static_cast<double>(code.n());
    double grid = code.dims();
    for (int i = 0; i <= code.dims(); ++i) grid *= code.field().q();
    double ratio = 0;
    for (int k = 0; k < kTrendTrials; ++k) {
      Trial w = corrupt(code, 0, t, rng);
      DecodeResult res = decode_word(code, w.r, w.phi1);
      double z = static_cast<double>(std::max<std::size_t>(1, res.locator_gb.size()));
      ratio += static_cast<double>(res.ops.total()) / (z * n * n + grid);
    }
    ratio /= kTrendTrials;
    if (base == 0) base = ratio;
    if (ratio > kTrendTolerance * base) o.pass = false;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s=%.3f ", name.c_str(), ratio);
    ss << buf;
  }
  auto f = field("gf9");
  Spectrum h = random_spectrum(*f, IndexSet::all(IndexSpace(9, 2)), rng);
  OpCounter cd;
  idft(*f, h, TransformPath::kDirect);
  std::uint64_t direct = cd.count();
  OpCounter cf;
  idft(*f, h, TransformPath::kFast);
  std::uint64_t fast = cf.count();
  if (direct <= fast) o.pass = false;
  CodeSpec hc = presets::hcrs();
  Trial w = corrupt(hc, 0, 4, rng);
  DecodeOptions dopt;
  dopt.path = TransformPath::kDirect;
  std::uint64_t dec_direct = decode_word(hc, w.r, w.phi1, dopt).ops.total();
  std::uint64_t dec_fast = decode_word(hc, w.r, w.phi1).ops.total();
  if (dec_direct <= dec_fast) o.pass = false;
  ss << "idft q=9 N=2 direct " << direct << " fast " << fast << "; hcrs decode direct " << dec_direct << " fast "
     << dec_fast;
  o.detail = ss.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"line-golden", c1},        {"fourier-inversion", c2},   {"fast-path", c3},     {"matrices", c4},
      {"basis-golden", c5},       {"canonical-isomorphism", c6}, {"duality", c7},     {"decode-round-trip", c8},
      {"systematic", c9},         {"extension-consistency", c10}, {"complexity-trend", c11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s (%.1fs) %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, secs, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
