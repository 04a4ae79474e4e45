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

#ifndef AVC_POINTS_HPP_
#define AVC_POINTS_HPP_

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "avc/error.hpp"
#include "avc/gf.hpp"
#include "avc/mindex.hpp"

namespace avc {

using Point = std::vector<Elem>;

// Omega = F_q^N addressed like A: coordinate i contributes index(w_i) q^i.
inline std::size_t omega_linear(const Field& f, const Point& w) {
  std::size_t v = 0;
  for (std::size_t i = w.size(); i-- > 0;) v = v * f.q() + static_cast<std::size_t>(f.index(w[i]));
  return v;
}

inline Point omega_point(const Field& f, int dims, std::size_t lin) {
  Point w(static_cast<std::size_t>(dims));
  for (int i = 0; i < dims; ++i) {
    w[i] = f.at_index(static_cast<int>(lin % f.q()));
    lin /= f.q();
  }
  return w;
}

// Monomial value w^a with 0^0 = 1.
inline Elem monomial_at(const Field& f, const Point& w, const MultiIndex& a) {
  Elem r = f.one();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (a[i] == 0) continue;
    Elem t = f.pow(w[i], a[i]);
    r = r == f.one() ? t : f.mul(r, t);
    if (r.is_zero()) return r;
  }
  return r;
}

// Lexicographic on (w_1, w_2, ...) with elements ranked 0, 1, alpha, ...
inline bool point_less(const Field& f, const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return f.index(a[i]) < f.index(b[i]);
  return false;
}

inline std::string point_str(const Point& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i].log);
  }
  return s + ")";
}

class PointSet {
 public:
  PointSet() = default;
  PointSet(FieldPtr field, int dims) : field_(std::move(field)), dims_(dims) {
    if (dims < 1) throw DomainError("point dimension must be positive");
    pos_.assign(IndexSpace(field_->q(), dims).size(), -1);
  }
  PointSet(FieldPtr field, int dims, const std::vector<Point>& pts) : PointSet(std::move(field), dims) {
    for (const auto& w : pts) add(w);
  }

  static PointSet full_grid(FieldPtr field, int dims) {
    PointSet s(field, dims);
    std::vector<Point> all;
    IndexSpace sp(field->q(), dims);
    for (std::size_t i = 0; i < sp.size(); ++i) all.push_back(omega_point(*field, dims, i));
    s.add_sorted(std::move(all));
    return s;
  }

  // Affine points of x^(r+1) = y^r + y over F_(r^2).
  static PointSet hermitian(FieldPtr field) {
    const Field& f = *field;
    int r = 1;
    while (r * r < f.q()) ++r;
    if (r * r != f.q()) throw DomainError("hermitian point set needs q to be a square");
    std::vector<Point> pts;
    for (Elem x : f.elements())
      for (Elem y : f.elements())
        if (f.pow(x, r + 1) == f.add(f.pow(y, r), y)) pts.push_back({x, y});
    PointSet s(field, 2);
    s.add_sorted(std::move(pts));
    return s;
  }

  void add(const Point& w) {
    if (static_cast<int>(w.size()) != dims_) throw DomainError("point " + point_str(w) + " has wrong dimension");
    for (Elem e : w)
      if (!field_->valid(e)) throw DomainError("point " + point_str(w) + " has an invalid coordinate");
    std::size_t lin = omega_linear(*field_, w);
    if (pos_[lin] >= 0) throw DomainError("repeated point " + point_str(w));
    pos_[lin] = static_cast<long>(pts_.size());
    pts_.push_back(w);
    grid_.push_back(lin);
  }

  const FieldPtr& field() const { return field_; }
  int dims() const { return dims_; }
  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  const Point& operator[](std::size_t i) const { return pts_[i]; }
  const std::vector<Point>& points() const { return pts_; }
  std::size_t grid_id(std::size_t i) const { return grid_[i]; }

  // Position of w in this set, or -1.
  long find(const Point& w) const {
    if (static_cast<int>(w.size()) != dims_) return -1;
    return pos_[omega_linear(*field_, w)];
  }
  long find_grid(std::size_t lin) const { return pos_[lin]; }
  bool contains(const Point& w) const { return find(w) >= 0; }

  bool subset_of(const PointSet& other) const {
    for (const auto& w : pts_)
      if (!other.contains(w)) return false;
    return true;
  }

  PointSet sorted() const {
    PointSet s(field_, dims_);
    s.add_sorted(pts_);
    return s;
  }

  PointSet unite(const PointSet& other) const {
    auto all = pts_;
    for (const auto& w : other.pts_)
      if (!contains(w)) all.push_back(w);
    PointSet s(field_, dims_);
    s.add_sorted(std::move(all));
    return s;
  }

  PointSet minus(const PointSet& other) const {
    PointSet s(field_, dims_);
    for (const auto& w : pts_)
      if (!other.contains(w)) s.add(w);
    return s;
  }

 private:
  void add_sorted(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(),
              [&](const Point& a, const Point& b) { return point_less(*field_, a, b); });
    for (const auto& w : pts) add(w);
  }

  FieldPtr field_;
  int dims_ = 0;
  std::vector<Point> pts_;
  std::vector<std::size_t> grid_;
  std::vector<long> pos_;
};

// Values over the whole of Omega, laid out by omega_linear.
struct GridWord {
  IndexSpace space;
  Vec values;

  GridWord() = default;
  explicit GridWord(IndexSpace s) : space(s), values(s.size(), Elem::zero()) {}
};

inline GridWord pad(const Vec& c, const PointSet& psi) {
  if (c.size() != psi.size()) throw DomainError("word length does not match point set");
  GridWord g(IndexSpace(psi.field()->q(), psi.dims()));
  for (std::size_t i = 0; i < c.size(); ++i) g.values[psi.grid_id(i)] = c[i];
  return g;
}

inline Vec restrict(const GridWord& g, const PointSet& psi) {
  Vec out(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) out[i] = g.values[psi.grid_id(i)];
  return out;
}

}  // namespace avc

#endif  // AVC_POINTS_HPP_
