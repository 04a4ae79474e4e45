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

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace avc;
using namespace avc::testing;

TEST(Text, ElementsAndTuples) {
  auto f = field("gf9");
  EXPECT_EQ(text::parse_elem(*f, "-1"), Elem::zero());
  EXPECT_EQ(text::parse_elem(*f, " 7 "), f->exp(7));
  EXPECT_THROW(text::parse_elem(*f, "8"), ParseError);
  EXPECT_THROW(text::parse_elem(*f, "x"), ParseError);
  EXPECT_EQ(text::parse_mindex("(3,1)"), MultiIndex({3, 1}));
  EXPECT_EQ(text::parse_point(*f, "(-1,4)"), Point({Elem::zero(), f->exp(4)}));
  EXPECT_EQ(point_str(Point({Elem::zero(), f->exp(4)})), "(-1,4)");
}

TEST(Text, PolynomialRoundTrip) {
  std::mt19937_64 rng(61);
  auto f = field("gf9");
  for (int t = 0; t < 50; ++t) {
    Polynomial p(2);
    for (int k = 0; k < 5; ++k)
      p.set(MultiIndex({static_cast<int>(rng() % 9), static_cast<int>(rng() % 9)}), random_elem(*f, rng));
    for (const auto& order : {MonomialOrder::lex(), MonomialOrder::grlex()}) {
      std::string s = text::polynomial(p, order);
      EXPECT_EQ(text::parse_polynomial(*f, 2, s), p) << s;
    }
  }
}

TEST(Text, PolynomialSpellings) {
  auto f = field("gf9");
  Polynomial want(2);
  want.set(MultiIndex({0, 3}), f->one());
  want.set(MultiIndex({4, 0}), f->minus_one());
  want.set(MultiIndex({0, 1}), f->one());
  EXPECT_EQ(text::parse_polynomial(*f, 2, "y^3 - x^4 + y"), want);
  EXPECT_EQ(text::parse_polynomial(*f, 2, "x2^3 + alpha^4*x1^4 + x2"), want);
  EXPECT_EQ(text::parse_polynomial(*f, 2, "y^3 + a^4 x^4 + y"), want);
  EXPECT_THROW(text::parse_polynomial(*f, 2, "z^2"), ParseError);
  EXPECT_THROW(text::parse_polynomial(*f, 2, "x^"), ParseError);
}

TEST(Text, SpectrumRoundTrip) {
  std::mt19937_64 rng(62);
  auto f = field("gf8");
  IndexSpace sp(8, 2);
  Spectrum h = random_spectrum(*f, IndexSet::all(sp), rng);
  EXPECT_EQ(text::parse_spectrum(*f, sp, text::spectrum_entries(h)), h);
  EXPECT_EQ(text::parse_spectrum(*f, sp, text::spectrum_grid(h)), h);
  IndexSet b = hyperbolic_check_set(sp, 5);
  Spectrum part = random_spectrum(*f, b, rng);
  EXPECT_EQ(text::parse_spectrum(*f, sp, text::spectrum_entries(part)), part);
}

TEST(Text, GridLayoutPutsTheFirstIndexDown) {
  auto f = field("gf8");
  IndexSpace sp(8, 2);
  Spectrum h(IndexSet::all(sp));
  h.set(sp.linear(MultiIndex({1, 0})), f->exp(5));
  std::string g = text::spectrum_grid(h);
  std::istringstream ss(g);
  std::string row0, row1;
  std::getline(ss, row0);
  std::getline(ss, row1);
  EXPECT_EQ(row0, "-1 -1 -1 -1 -1 -1 -1 -1");
  EXPECT_EQ(row1, "5 -1 -1 -1 -1 -1 -1 -1");
}

TEST(Text, GridWordRoundTrip) {
  std::mt19937_64 rng(63);
  auto f = field("gf9");
  for (int dims : {1, 2, 3}) {
    GridWord c = random_grid(*f, dims, rng);
    EXPECT_EQ(text::parse_grid_word(*f, dims, text::grid_entries(*f, c)).values, c.values);
    EXPECT_EQ(text::parse_grid_word(*f, dims, text::grid_word(*f, c)).values, c.values);
  }
}

TEST(Text, ReceivedWords) {
  CodeSpec code = presets::rs8();
  auto r = text::parse_received(code.field(), code.points(), "4 ? 1 3");
  EXPECT_EQ(r.erased, std::vector<std::size_t>({1}));
  EXPECT_EQ(r.symbols[0], Elem{4});
  EXPECT_TRUE(r.symbols[1].is_zero());
  Vec w = {Elem{4}, Elem::zero(), Elem{1}, Elem{3}};
  EXPECT_EQ(text::parse_word(code.field(), code.points(), text::word_entries(w, code.points())), w);
  EXPECT_EQ(text::parse_word(code.field(), code.points(), "(1) -> 1\n(-1) -> 4\n(3) -> 1\n(6) -> 3\n")[0], Elem{4});
  EXPECT_THROW(text::parse_word(code.field(), code.points(), "1 2 3"), ParseError);
  EXPECT_THROW(text::parse_word(code.field(), code.points(), "(2) -> 1\n"), ParseError);
  EXPECT_THROW(text::parse_word(code.field(), code.points(), "4 ? 1 3"), ParseError);
}

TEST(Text, CommentsAreIgnored) {
  auto f = field("gf8");
  auto pts = text::parse_points(f, 2, "# header\n(0,1) (2,3)  # two points\n\n(-1,-1)\n");
  EXPECT_EQ(pts.size(), 3u);
}

TEST(Config, ParsesAFullCode) {
  const char* src = R"(# Hermitian code over F_9
p = 3
m = 2
primitive_poly = 1 1 2
N = 2
order = weighted_grlex
weights = 3 4
points = hermitian
B = wdeg<=11
d_fr = 7
)";
  CodeSpec c = config::code(src, "h");
  CodeSpec ref = presets::hermitian();
  EXPECT_EQ(c.n(), ref.n());
  EXPECT_EQ(c.check(), ref.check());
  EXPECT_EQ(c.d_fr(), 7);
  EXPECT_EQ(c.name(), "h");
}

TEST(Config, ExplicitPointsAndChecks) {
  const char* src =
      "p = 2\nm = 3\nprimitive_poly = 1,0,1,1\nN = 1\npoints = (-1) (1) (3) (6)\nB = (0) (1)\nd_fr = 3\n";
  CodeSpec c = config::code(src);
  CodeSpec ref = presets::rs8();
  EXPECT_EQ(c.points().points(), ref.points().points());
  EXPECT_EQ(c.check(), ref.check());
}

TEST(Config, Errors) {
  EXPECT_THROW(config::code("p = 2\n"), ConfigError);
  EXPECT_THROW(config::code("p = 2\np = 3\n"), ConfigError);
  EXPECT_THROW(config::code("nonsense\n"), ConfigError);
  const char* bad_poly = "p = 2\nm = 3\nprimitive_poly = 1 1 1 1\nN = 1\npoints = full-grid\nB = prodplus<3\nd_fr = 3\n";
  EXPECT_THROW(config::code(bad_poly), ConfigError);
  const char* bad_b = "p = 2\nm = 2\nprimitive_poly = 1 1 1\nN = 1\npoints = (0) (1)\nB = (0) (3)\nd_fr = 2\n";
  EXPECT_THROW(config::code(bad_b), ConfigError);
  const char* bad_order = "p = 2\nm = 2\nprimitive_poly = 1 1 1\nN = 1\norder = revlex\npoints = full-grid\nB = (0)\nd_fr = 2\n";
  EXPECT_THROW(config::code(bad_order), ConfigError);
}
