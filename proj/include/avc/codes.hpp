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

#ifndef AVC_CODES_HPP_
#define AVC_CODES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "avc/error.hpp"
#include "avc/gf.hpp"
#include "avc/ideal.hpp"
#include "avc/maps.hpp"
#include "avc/mindex.hpp"
#include "avc/points.hpp"
#include "avc/transform.hpp"

namespace avc {

// Dual affine variety code for U = V_B: words on psi orthogonal to every
// evaluation of x^b, b in B.
class CodeSpec {
 public:
  CodeSpec(PointSet psi, MonomialOrder order, IndexSet check, int d_fr, std::string name = "")
      : psi_(std::move(psi)), order_(std::move(order)), check_(std::move(check)), d_fr_(d_fr), name_(std::move(name)) {
    if (psi_.empty()) throw ConfigError("code needs at least one point");
    if (!(check_.space() == IndexSpace(field().q(), psi_.dims())))
      throw ConfigError("check set does not live in A");
    gb_ = vanishing_gb(psi_, order_);
    if (!check_.subset_of(gb_.delta)) throw ConfigError("check set is not contained in the footprint");
    if (d_fr_ < 1 || d_fr_ > static_cast<int>(n())) throw ConfigError("d_fr must lie in 1..n");
    info_ = gb_.delta.minus(check_);
    columns_.resize(psi_.size());
    const auto bs = check_.members();
    for (std::size_t k = 0; k < psi_.size(); ++k) {
      columns_[k].resize(bs.size());
      for (std::size_t l = 0; l < bs.size(); ++l) columns_[k][l] = monomial_at(field(), psi_[k], bs[l]);
    }
  }

  const Field& field() const { return *psi_.field(); }
  const FieldPtr& field_ptr() const { return psi_.field(); }
  int dims() const { return psi_.dims(); }
  const MonomialOrder& order() const { return order_; }
  const PointSet& points() const { return psi_; }
  const IndexSet& check() const { return check_; }
  const IndexSet& info_set() const { return info_; }
  const GroebnerBasis& gb() const { return gb_; }
  const DeltaSet& delta() const { return gb_.delta; }
  int d_fr() const { return d_fr_; }
  const std::string& name() const { return name_; }
  std::size_t n() const { return psi_.size(); }
  std::size_t k() const { return n() - check_.size(); }
  IndexSpace space() const { return check_.space(); }

  // psi_k^b for b in B, ascending linear order of b.
  const Vec& column(std::size_t k) const { return columns_[k]; }

 private:
  PointSet psi_;
  MonomialOrder order_;
  IndexSet check_;
  int d_fr_;
  std::string name_;
  GroebnerBasis gb_;
  IndexSet info_;
  std::vector<Vec> columns_;
};

// {b in A : weighted degree <= bound}
inline IndexSet weighted_check_set(IndexSpace space, const MonomialOrder& order, long bound) {
  return IndexSet::where(space, [&](const MultiIndex& b) { return order.degree(b) <= bound; });
}

// {b in A : prod (b_i + 1) < bound}
inline IndexSet hyperbolic_check_set(IndexSpace space, long bound) {
  return IndexSet::where(space, [&](const MultiIndex& b) {
    long p = 1;
    for (std::size_t i = 0; i < b.size(); ++i) p *= b[i] + 1;
    return p < bound;
  });
}

inline Vec syndrome_values(const CodeSpec& code, const Vec& r) {
  if (r.size() != code.n()) throw DomainError("word length does not match code length");
  const Field& f = code.field();
  Vec s(code.check().size());
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (r[k].is_zero()) continue;
    const Vec& col = code.column(k);
    for (std::size_t l = 0; l < s.size(); ++l) s[l] = f.add(s[l], f.mul(r[k], col[l]));
  }
  return s;
}

// Proper transform of r restricted to B.
inline Spectrum syndrome(const CodeSpec& code, const Vec& r) {
  return proper_transform(code.field(), r, code.points(), code.check());
}

inline bool is_dual_codeword(const CodeSpec& code, const Vec& c) {
  if (c.size() != code.n()) return false;
  for (Elem s : syndrome_values(code, c))
    if (!s.is_zero()) return false;
  return true;
}

// Canonical word of an information spectrum supported on D \ B.
inline Vec encode_nonsystematic(const CodeSpec& code, const Spectrum& h) {
  if (!(h.domain() == code.delta())) {
    if (!(h.domain() == code.info_set())) throw DomainError("information must be given on D or D\\B");
  }
  Spectrum full(code.delta());
  for (auto i : h.domain().ids()) {
    if (code.check().contains(i) && !h.dense()[i].is_zero())
      throw DomainError("information has support on B at " + code.space().at(i).str());
    full.set(i, h.dense()[i]);
  }
  return canonical_iso(code.field(), full, code.gb(), code.points());
}

inline Vec primal_encode(const CodeSpec& code, const Spectrum& h) {
  if (!h.domain().subset_of(code.check())) throw DomainError("primal message must be supported on B");
  return evaluate(code.field(), h, code.points());
}

inline Elem inner_product(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DomainError("inner product of words of different length");
  Elem acc = Elem::zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

namespace presets {

// Four points on the line over F_8 with B = {0, 1}.
inline CodeSpec rs8() {
  auto f = Field::build(fields::gf8());
  PointSet psi(f, 1, {{Elem::zero()}, {f->exp(1)}, {f->exp(3)}, {f->exp(6)}});
  IndexSpace sp(8, 1);
  return CodeSpec(psi, MonomialOrder::lex(), IndexSet::of(sp, {{0}, {1}}), 3, "rs8");
}

// Hermitian curve over F_(r^2), weights (r, r+1), B = {wdeg <= bound}.
inline CodeSpec hermitian(const FieldSpec& spec, long bound, int d_fr, std::string name) {
  auto f = Field::build(spec);
  PointSet psi = PointSet::hermitian(f);
  int r = 1;
  while (r * r < f->q()) ++r;
  auto order = MonomialOrder::weighted({r, r + 1});
  IndexSpace sp(f->q(), 2);
  return CodeSpec(psi, order, weighted_check_set(sp, order, bound), d_fr, std::move(name));
}

inline CodeSpec hermitian() { return hermitian(fields::gf9(), 11, 7, "hermitian"); }
inline CodeSpec hermitian4() { return hermitian(fields::gf4(), 5, 5, "hermitian4"); }

// All of F_q^N under grlex with B = {prod (b_i + 1) < d}.
inline CodeSpec hyperbolic(const FieldSpec& spec, int dims, int d, std::string name) {
  auto f = Field::build(spec);
  IndexSpace sp(f->q(), dims);
  return CodeSpec(PointSet::full_grid(f, dims), MonomialOrder::grlex(), hyperbolic_check_set(sp, d), d,
                  std::move(name));
}

inline CodeSpec hcrs() { return hyperbolic(fields::gf9(), 2, 9, "hcrs"); }

// Whole line over F_q with B = {0..d-2}.
inline CodeSpec full_line(const FieldSpec& spec, int d, std::string name) { return hyperbolic(spec, 1, d, std::move(name)); }

inline std::optional<CodeSpec> by_name(const std::string& name) {
  if (name == "rs8") return rs8();
  if (name == "hermitian") return hermitian();
  if (name == "hermitian4") return hermitian4();
  if (name == "hcrs") return hcrs();
  if (name == "hcrs4") return hyperbolic(fields::gf4(), 2, 5, "hcrs4");
  if (name == "hcrs8") return hyperbolic(fields::gf8(), 2, 9, "hcrs8");
  if (name == "rs4") return full_line(fields::gf4(), 3, "rs4");
  if (name == "rs8full") return full_line(fields::gf8(), 5, "rs8full");
  if (name == "rs9") return full_line(fields::gf9(), 5, "rs9");
  return std::nullopt;
}

inline std::vector<std::string> names() {
  return {"rs8", "hermitian", "hermitian4", "hcrs", "hcrs4", "hcrs8", "rs4", "rs8full", "rs9"};
}

}  // namespace presets
}  // namespace avc

#endif  // AVC_CODES_HPP_
