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

namespace {

struct Named {
  std::string name;
  PointSet psi;
  MonomialOrder order;
};

std::vector<Named> bundled() {
  auto f8 = field("gf8");
  std::vector<Named> out;
  out.push_back({"line-q8", presets::rs8().points(), MonomialOrder::lex()});
  out.push_back({"cross", text::parse_points(f8, 2, golden::kCrossPsi), MonomialOrder::lex()});
  out.push_back({"hermitian", presets::hermitian().points(), presets::hermitian().order()});
  out.push_back({"hermitian4", presets::hermitian4().points(), presets::hermitian4().order()});
  out.push_back({"hcrs4", PointSet::full_grid(field("gf4"), 2), MonomialOrder::grlex()});
  std::mt19937_64 rng(31);
  out.push_back({"random-q9", random_subset(PointSet::full_grid(field("gf9"), 2), 37, rng), MonomialOrder::grlex()});
  return out;
}

}  // namespace

TEST(CanonicalMap, InverseMapsOnEveryBasisVector) {
  for (const auto& b : bundled()) {
    const Field& f = *b.psi.field();
    GroebnerBasis gb = vanishing_gb(b.psi, b.order);
    for (std::size_t k = 0; k < b.psi.size(); ++k) {
      Vec e(b.psi.size());
      e[k] = f.one();
      Spectrum h = proper_transform(f, e, b.psi, gb.delta);
      EXPECT_EQ(canonical_iso(f, h, gb, b.psi), e) << b.name << " k=" << k;
    }
    for (auto id : gb.delta.ids()) {
      Spectrum h(gb.delta);
      h.set(id, f.one());
      GridWord c;
      ASSERT_NO_THROW(c = canonical_iso_grid(f, h, gb, b.psi)) << b.name;
      for (std::size_t i = 0; i < c.values.size(); ++i)
        if (b.psi.find_grid(i) < 0) {
          EXPECT_TRUE(c.values[i].is_zero()) << b.name;
        }
      EXPECT_EQ(proper_transform(f, restrict(c, b.psi), b.psi, gb.delta), h) << b.name;
    }
  }
}

TEST(CanonicalMap, CanonicalMapIsTheInverseMatrix) {
  for (const auto& b : bundled()) {
    if (b.psi.size() > 40) continue;
    const Field& f = *b.psi.field();
    GroebnerBasis gb = vanishing_gb(b.psi, b.order);
    auto inv = inverse(f, proper_transform_matrix(f, gb.delta, b.psi));
    ASSERT_TRUE(inv.has_value()) << b.name;
    std::size_t j = 0;
    for (auto id : gb.delta.ids()) {
      Spectrum h(gb.delta);
      h.set(id, f.one());
      Vec c = canonical_iso(f, h, gb, b.psi, {TransformPath::kDirect, true});
      for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(c[i], (*inv)[i][j]) << b.name;
      ++j;
    }
  }
}

TEST(CanonicalMap, TransposeRelations) {
  for (const auto& b : bundled()) {
    GroebnerBasis gb = vanishing_gb(b.psi, b.order);
    EXPECT_TRUE(transpose_check(*b.psi.field(), gb.delta, b.psi)) << b.name;
  }
}

TEST(CanonicalMap, EvaluationOnOmegaIsTheDftMatrix) {
  auto f = field("gf8");
  PointSet omega = PointSet::full_grid(f, 1);
  IndexSet a = IndexSet::all(IndexSpace(8, 1));
  EXPECT_EQ(evaluate_matrix(*f, a, omega), dft_matrix(*f, 1));
}

TEST(Evaluate, AgreesWithPolynomialEvaluation) {
  std::mt19937_64 rng(32);
  CodeSpec code = presets::hermitian();
  const Field& f = code.field();
  for (int t = 0; t < 10; ++t) {
    Spectrum h = random_spectrum(f, code.delta(), rng);
    Polynomial p(2);
    for (auto id : code.delta().ids()) p.set(code.space().at(id), h.dense()[id]);
    Vec v = evaluate(f, h, code.points());
    for (std::size_t k = 0; k < code.n(); ++k) EXPECT_EQ(v[k], p.eval(f, code.points()[k]));
  }
}

TEST(CanonicalMap, FastAndDirectPathsAgree) {
  std::mt19937_64 rng(33);
  CodeSpec code = presets::hcrs();
  Spectrum h = random_spectrum(code.field(), code.delta(), rng);
  EXPECT_EQ(canonical_iso(code.field(), h, code.gb(), code.points(), {TransformPath::kFast, true}),
            canonical_iso(code.field(), h, code.gb(), code.points(), {TransformPath::kDirect, true}));
}
