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

#ifndef AVC_MAPS_HPP_
#define AVC_MAPS_HPP_

#include <cstddef>
#include <vector>

#include "avc/error.hpp"
#include "avc/gf.hpp"
#include "avc/ideal.hpp"
#include "avc/linalg.hpp"
#include "avc/mindex.hpp"
#include "avc/points.hpp"
#include "avc/transform.hpp"

namespace avc {

// c_psi = sum_d h_d psi^d over the domain of h.
inline Vec evaluate(const Field& f, const Spectrum& h, const PointSet& psi) {
  const IndexSpace& space = h.space();
  Vec out(psi.size());
  std::vector<MultiIndex> ds;
  std::vector<Elem> hs;
  for (auto i : h.domain().ids())
    if (!h.dense()[i].is_zero()) {
      ds.push_back(space.at(i));
      hs.push_back(h.dense()[i]);
    }
  for (std::size_t k = 0; k < psi.size(); ++k) {
    Elem acc = Elem::zero();
    for (std::size_t j = 0; j < ds.size(); ++j) acc = f.add(acc, f.mul(hs[j], monomial_at(f, psi[k], ds[j])));
    out[k] = acc;
  }
  return out;
}

// h_d = sum_psi c_psi psi^d for d in the index set.
inline Spectrum proper_transform(const Field& f, const Vec& c, const PointSet& psi, const IndexSet& d) {
  if (c.size() != psi.size()) throw DomainError("word length does not match point set");
  Spectrum h(d);
  const IndexSpace& space = d.space();
  for (auto id : d.ids()) {
    MultiIndex a = space.at(id);
    Elem acc = Elem::zero();
    for (std::size_t k = 0; k < psi.size(); ++k)
      if (!c[k].is_zero()) acc = f.add(acc, f.mul(c[k], monomial_at(f, psi[k], a)));
    h.set(id, acc);
  }
  return h;
}

struct IsoOptions {
  TransformPath path = TransformPath::kFast;
  bool cross_check = true;
};

// Extend h over A, invert the transform and keep the Omega word. Throws when
// the word does not vanish off psi.
inline GridWord canonical_iso_grid(const Field& f, const Spectrum& h, const GroebnerBasis& gb, const PointSet& psi,
                                   IsoOptions opt = {}) {
  Spectrum full = extend(f, h, gb, IndexSet::all(h.space()), {opt.cross_check});
  GridWord c = idft(f, full, opt.path);
  for (std::size_t i = 0; i < c.values.size(); ++i)
    if (!c.values[i].is_zero() && psi.find_grid(i) < 0)
      throw ConsistencyError("canonical word does not vanish off the point set at " +
                             point_str(omega_point(f, psi.dims(), i)));
  return c;
}

inline Vec canonical_iso(const Field& f, const Spectrum& h, const GroebnerBasis& gb, const PointSet& psi,
                         IsoOptions opt = {}) {
  return restrict(canonical_iso_grid(f, h, gb, psi, opt), psi);
}

// [x_l(psi_m)] with rows l over d (ascending linear order) and columns m.
inline Matrix monomial_matrix(const Field& f, const IndexSet& d, const PointSet& psi) {
  const auto ds = d.members();
  Matrix x = zero_matrix(ds.size(), psi.size());
  for (std::size_t l = 0; l < ds.size(); ++l)
    for (std::size_t m = 0; m < psi.size(); ++m) x[l][m] = monomial_at(f, psi[m], ds[l]);
  return x;
}

// Matrices of evaluate and proper_transform, column j the image of the j-th
// unit vector.
inline Matrix evaluate_matrix(const Field& f, const IndexSet& d, const PointSet& psi) {
  Matrix m = zero_matrix(psi.size(), d.size());
  std::size_t j = 0;
  for (auto id : d.ids()) {
    Spectrum e(d);
    e.set(id, f.one());
    Vec col = evaluate(f, e, psi);
    for (std::size_t i = 0; i < psi.size(); ++i) m[i][j] = col[i];
    ++j;
  }
  return m;
}

inline Matrix proper_transform_matrix(const Field& f, const IndexSet& d, const PointSet& psi) {
  Matrix m = zero_matrix(d.size(), psi.size());
  for (std::size_t j = 0; j < psi.size(); ++j) {
    Vec e(psi.size());
    e[j] = f.one();
    Spectrum col = proper_transform(f, e, psi, d);
    std::size_t i = 0;
    for (auto id : d.ids()) m[i++][j] = col.dense()[id];
  }
  return m;
}

inline bool transpose_check(const Field& f, const IndexSet& d, const PointSet& psi) {
  if (d.size() != psi.size()) return false;
  Matrix x = monomial_matrix(f, d, psi);
  Matrix ev = evaluate_matrix(f, d, psi);
  Matrix pt = proper_transform_matrix(f, d, psi);
  return ev == transpose(x) && pt == x && ev == transpose(pt) && rank(f, x) == psi.size();
}

}  // namespace avc

#endif  // AVC_MAPS_HPP_
