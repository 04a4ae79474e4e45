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

TEST(CodeSpec, PresetParameters) {
  struct Want {
    const char* name;
    std::size_t n, k, b;
    int d;
  };
  for (const Want& w : {Want{"rs8", 4, 2, 2, 3}, Want{"hermitian", 27, 18, 9, 7}, Want{"hermitian4", 8, 3, 5, 5},
                        Want{"hcrs", 81, 61, 20, 9}, Want{"rs4", 4, 2, 2, 3}, Want{"rs9", 9, 5, 4, 5}}) {
    auto c = presets::by_name(w.name);
    ASSERT_TRUE(c.has_value()) << w.name;
    EXPECT_EQ(c->n(), w.n) << w.name;
    EXPECT_EQ(c->k(), w.k) << w.name;
    EXPECT_EQ(c->check().size(), w.b) << w.name;
    EXPECT_EQ(c->d_fr(), w.d) << w.name;
    EXPECT_TRUE(c->check().subset_of(c->delta()));
    EXPECT_EQ(c->info_set().size(), c->k());
  }
  EXPECT_FALSE(presets::by_name("nope").has_value());
  for (const auto& n : presets::names()) EXPECT_TRUE(presets::by_name(n).has_value()) << n;
}

TEST(CodeSpec, RejectsCheckSetOutsideFootprint) {
  CodeSpec rs = presets::rs8();
  IndexSet bad = IndexSet::of(rs.space(), {{0}, {5}});
  EXPECT_THROW(CodeSpec(rs.points(), rs.order(), bad, 3), ConfigError);
  EXPECT_THROW(CodeSpec(rs.points(), rs.order(), rs.check(), 9), ConfigError);
}

TEST(Encode, NonSystematicWordsAreDualCodewords) {
  std::mt19937_64 rng(41);
  for (const auto& name : presets::names()) {
    CodeSpec code = *presets::by_name(name);
    for (int t = 0; t < 5; ++t) {
      Spectrum h = random_spectrum(code.field(), code.info_set(), rng);
      Vec c = encode_nonsystematic(code, h);
      EXPECT_TRUE(is_dual_codeword(code, c)) << name;
      // The information comes back as the proper transform on D \ B.
      EXPECT_EQ(proper_transform(code.field(), c, code.points(), code.info_set()), h) << name;
    }
  }
}

TEST(Encode, RejectsSupportOnTheCheckSet) {
  CodeSpec code = presets::rs8();
  Spectrum h(code.delta());
  h.set(0, Elem::one());
  EXPECT_THROW(encode_nonsystematic(code, h), DomainError);
}

TEST(Encode, SyndromeMatchesDirectSums) {
  std::mt19937_64 rng(42);
  CodeSpec code = presets::hermitian();
  Vec r = random_vec(code.field(), code.n(), rng);
  Spectrum s = syndrome(code, r);
  Vec sv = syndrome_values(code, r);
  std::size_t l = 0;
  for (const auto& b : code.check().members()) {
    Elem acc = Elem::zero();
    for (std::size_t k = 0; k < code.n(); ++k)
      acc = code.field().add(acc, code.field().mul(r[k], monomial_at(code.field(), code.points()[k], b)));
    EXPECT_EQ(s.at(code.space().linear(b)), acc);
    EXPECT_EQ(sv[l++], acc);
  }
}

TEST(Duality, PrimalAndDualWordsAreOrthogonal) {
  std::mt19937_64 rng(43);
  for (const char* name : {"hermitian", "hcrs", "rs8", "hcrs4"}) {
    CodeSpec code = *presets::by_name(name);
    for (int t = 0; t < 30; ++t) {
      Vec primal = primal_encode(code, random_spectrum(code.field(), code.check(), rng));
      Vec dual = encode_nonsystematic(code, random_spectrum(code.field(), code.info_set(), rng));
      EXPECT_TRUE(inner_product(code.field(), primal, dual).is_zero()) << name;
    }
  }
}

TEST(Duality, DualDimensionIsNMinusB) {
  CodeSpec code = presets::hermitian4();
  const Field& f = code.field();
  Matrix gen;
  for (auto id : code.info_set().ids()) {
    Spectrum h(code.info_set());
    h.set(id, f.one());
    gen.push_back(encode_nonsystematic(code, h));
  }
  EXPECT_EQ(rank(f, gen), code.k());
}
