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

#ifndef AVC_TRANSFORM_HPP_
#define AVC_TRANSFORM_HPP_

#include <cstddef>
#include <numeric>
#include <vector>

#include "avc/error.hpp"
#include "avc/gf.hpp"
#include "avc/mindex.hpp"
#include "avc/points.hpp"

namespace avc {

// Field values on a declared subset of A. Storage is dense over A and zero
// off the domain.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(IndexSet domain)
      : domain_(std::move(domain)), values_(domain_.space().size(), Elem::zero()) {}

  const IndexSet& domain() const { return domain_; }
  const IndexSpace& space() const { return domain_.space(); }
  const Vec& dense() const { return values_; }

  bool defined(std::size_t lin) const { return domain_.contains(lin); }
  bool defined(const MultiIndex& a) const { return domain_.contains(a); }

  Elem at(std::size_t lin) const {
    if (!domain_.contains(lin)) throw DomainError("spectrum not defined at " + space().at(lin).str());
    return values_[lin];
  }
  Elem at(const MultiIndex& a) const { return at(space().linear(a)); }

  void set(std::size_t lin, Elem v) {
    if (!domain_.contains(lin)) throw DomainError("spectrum not defined at " + space().at(lin).str());
    values_[lin] = v;
  }
  void set(const MultiIndex& a, Elem v) { set(space().linear(a), v); }

  // Same values viewed on a smaller domain.
  Spectrum restricted(const IndexSet& sub) const {
    if (!sub.subset_of(domain_)) throw DomainError("restriction domain is not a subset");
    Spectrum s(sub);
    for (auto i : sub.ids()) s.values_[i] = values_[i];
    return s;
  }

  friend bool operator==(const Spectrum& a, const Spectrum& b) {
    return a.domain_ == b.domain_ && a.values_ == b.values_;
  }

 private:
  IndexSet domain_;
  Vec values_;
};

namespace detail {

// One-dimensional DFT of a line indexed by element index, in place.
inline void dft_line(const Field& f, Vec& v, Vec& out) {
  const int q = f.q();
  Elem s0 = v[0];
  for (int e = 1; e < q; ++e) s0 = f.add(s0, v[e]);
  out[0] = s0;
  // powers[e] tracks (alpha^(e-1))^a
  static thread_local Vec powers;
  powers.assign(q, Elem::zero());
  for (int e = 1; e < q; ++e) powers[e] = f.one();
  for (int a = 1; a < q; ++a) {
    Elem acc = Elem::zero();
    for (int e = 1; e < q; ++e) {
      powers[e] = f.mul(powers[e], f.at_index(e));
      if (v[e].is_zero()) continue;
      acc = f.add(acc, f.mul(v[e], powers[e]));
    }
    out[a] = acc;
  }
}

// One-dimensional inverse: c_0 = h_0 - h_(q-1) and
// c_w = -sum_(i=1..q-1) h_i w^(-i) for w != 0.
inline void idft_line(const Field& f, Vec& h, Vec& out) {
  const int q = f.q();
  out[0] = f.sub(h[0], h[q - 1]);
  for (int e = 1; e < q; ++e) {
    Elem winv = f.inv(f.at_index(e));
    Elem pw = f.one();
    Elem acc = Elem::zero();
    for (int i = 1; i < q; ++i) {
      pw = f.mul(pw, winv);
      if (h[i].is_zero()) continue;
      acc = f.add(acc, f.mul(h[i], pw));
    }
    out[e] = f.neg(acc);
  }
}

template <class Kernel>
void axis_passes(const Field& f, Vec& data, const IndexSpace& sp, const std::vector<int>& axes, Kernel kernel) {
  const std::size_t q = static_cast<std::size_t>(f.q());
  Vec line(q), out(q);
  for (int axis : axes) {
    if (axis < 0 || axis >= sp.dims()) throw DomainError("axis out of range");
    std::size_t stride = 1;
    for (int i = 0; i < axis; ++i) stride *= q;
    for (std::size_t base = 0; base < sp.size(); ++base) {
      if ((base / stride) % q != 0) continue;
      for (std::size_t k = 0; k < q; ++k) line[k] = data[base + k * stride];
      kernel(f, line, out);
      for (std::size_t k = 0; k < q; ++k) data[base + k * stride] = out[k];
    }
  }
}

inline std::vector<int> default_axes(int n) {
  std::vector<int> a(n);
  std::iota(a.begin(), a.end(), 0);
  return a;
}

inline void check_grid(const Field& f, const IndexSpace& sp, std::size_t n) {
  if (sp.q() != f.q()) throw DomainError("grid does not match field size");
  if (n != sp.size()) throw DomainError("word must be defined on all of Omega");
}

}  // namespace detail

// h_a = sum_w c_w w^a straight from the definition.
inline Spectrum dft(const Field& f, const GridWord& c) {
  detail::check_grid(f, c.space, c.values.size());
  const IndexSpace& sp = c.space;
  const int n = sp.dims();
  Spectrum h(IndexSet::all(sp));
  std::vector<Point> pts(sp.size());
  for (std::size_t w = 0; w < sp.size(); ++w) pts[w] = omega_point(f, n, w);
  for (std::size_t a = 0; a < sp.size(); ++a) {
    MultiIndex ai = sp.at(a);
    Elem acc = Elem::zero();
    for (std::size_t w = 0; w < sp.size(); ++w) {
      if (c.values[w].is_zero()) continue;
      acc = f.add(acc, f.mul(c.values[w], monomial_at(f, pts[w], ai)));
    }
    h.set(a, acc);
  }
  return h;
}

// DFT evaluated only on target.
inline Spectrum dft_partial(const Field& f, const GridWord& c, const IndexSet& target) {
  detail::check_grid(f, c.space, c.values.size());
  const IndexSpace& sp = c.space;
  Spectrum h(target);
  std::vector<std::size_t> support;
  for (std::size_t w = 0; w < sp.size(); ++w)
    if (!c.values[w].is_zero()) support.push_back(w);
  for (std::size_t a : target.ids()) {
    MultiIndex ai = sp.at(a);
    Elem acc = Elem::zero();
    for (std::size_t w : support)
      acc = f.add(acc, f.mul(c.values[w], monomial_at(f, omega_point(f, sp.dims(), w), ai)));
    h.set(a, acc);
  }
  return h;
}

// Inverse from the closed formula: with I the nonzero coordinates of w,
// m = |I| and K the rest, c_w = (-1)^m sum over l in {1..q-1}^I and J in K
// of (-1)^|J| h_(i(I,J)) prod w_i^(-l_i), where i(I,J) holds l on I, q-1 on
// J and 0 elsewhere.
inline GridWord idft(const Field& f, const Spectrum& h) {
  const IndexSpace& sp = h.space();
  if (sp.q() != f.q()) throw DomainError("spectrum does not match field size");
  if (h.domain().size() != sp.size()) throw DomainError("spectrum must be defined on all of A");
  const int n = sp.dims();
  const int q = f.q();
  GridWord c(sp);
  for (std::size_t wl = 0; wl < sp.size(); ++wl) {
    Point w = omega_point(f, n, wl);
    std::vector<int> in, out;
    for (int i = 0; i < n; ++i) (w[i].is_zero() ? out : in).push_back(i);
    const int m = static_cast<int>(in.size());
    std::vector<Elem> winv(m);
    for (int k = 0; k < m; ++k) winv[k] = f.inv(w[in[k]]);
    MultiIndex idx(static_cast<std::size_t>(n));
    std::vector<int> l(m, 1);
    Elem total = Elem::zero();
    while (true) {
      for (int k = 0; k < m; ++k) idx[in[k]] = l[k];
      Elem inner = Elem::zero();
      const unsigned subsets = 1u << out.size();
      for (unsigned mask = 0; mask < subsets; ++mask) {
        int bits = 0;
        for (std::size_t k = 0; k < out.size(); ++k) {
          bool on = (mask >> k) & 1u;
          idx[out[k]] = on ? q - 1 : 0;
          bits += on;
        }
        Elem v = h.at(idx);
        inner = (bits & 1) ? f.sub(inner, v) : f.add(inner, v);
      }
      if (!inner.is_zero()) {
        Elem t = inner;
        for (int k = 0; k < m; ++k) t = f.mul(t, f.pow(winv[k], l[k]));
        total = f.add(total, t);
      }
      int k = 0;
      while (k < m && l[k] == q - 1) l[k++] = 1;
      if (k == m) break;
      ++l[k];
    }
    if (m & 1) total = f.neg(total);
    c.values[wl] = total;
  }
  return c;
}

// One-dimensional kernels applied along each axis in turn.
inline Spectrum dft_fast(const Field& f, const GridWord& c, std::vector<int> axes = {}) {
  detail::check_grid(f, c.space, c.values.size());
  if (axes.empty()) axes = detail::default_axes(c.space.dims());
  Vec data = c.values;
  detail::axis_passes(f, data, c.space, axes, detail::dft_line);
  Spectrum h(IndexSet::all(c.space));
  for (std::size_t i = 0; i < data.size(); ++i) h.set(i, data[i]);
  return h;
}

inline GridWord idft_fast(const Field& f, const Spectrum& h, std::vector<int> axes = {}) {
  const IndexSpace& sp = h.space();
  if (sp.q() != f.q()) throw DomainError("spectrum does not match field size");
  if (h.domain().size() != sp.size()) throw DomainError("spectrum must be defined on all of A");
  if (axes.empty()) axes = detail::default_axes(sp.dims());
  GridWord c(sp);
  c.values = h.dense();
  detail::axis_passes(f, c.values, sp, axes, detail::idft_line);
  return c;
}

enum class TransformPath { kFast, kDirect };

inline Spectrum dft(const Field& f, const GridWord& c, TransformPath path) {
  return path == TransformPath::kFast ? dft_fast(f, c) : dft(f, c);
}

inline GridWord idft(const Field& f, const Spectrum& h, TransformPath path) {
  return path == TransformPath::kFast ? idft_fast(f, h) : idft(f, h);
}

}  // namespace avc

#endif  // AVC_TRANSFORM_HPP_
