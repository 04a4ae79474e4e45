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

#ifndef AVC_POLYNOMIAL_HPP_
#define AVC_POLYNOMIAL_HPP_

#include <map>
#include <utility>
#include <vector>

#include "avc/error.hpp"
#include "avc/gf.hpp"
#include "avc/mindex.hpp"
#include "avc/points.hpp"

namespace avc {

class Polynomial {
 public:
  using Terms = std::map<MultiIndex, Elem>;

  Polynomial() = default;
  explicit Polynomial(int dims) : dims_(dims) {}

  static Polynomial monomial(int dims, const MultiIndex& a, Elem c) {
    Polynomial p(dims);
    p.set(a, c);
    return p;
  }

  int dims() const { return dims_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Elem coef(const MultiIndex& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Elem::zero() : it->second;
  }

  void set(const MultiIndex& a, Elem c) {
    if (static_cast<int>(a.size()) != dims_) throw DomainError("monomial " + a.str() + " has wrong dimension");
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] < 0) throw DomainError("negative exponent in " + a.str());
    if (c.is_zero())
      terms_.erase(a);
    else
      terms_[a] = c;
  }

  void add_term(const Field& f, const MultiIndex& a, Elem c) { set(a, f.add(coef(a), c)); }

  Elem eval(const Field& f, const Point& w) const {
    Elem acc = Elem::zero();
    for (const auto& [a, c] : terms_) acc = f.add(acc, f.mul(c, monomial_at(f, w, a)));
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dims_ == b.dims_ && a.terms_ == b.terms_;
  }

 private:
  int dims_ = 0;
  Terms terms_;
};

inline Polynomial add(const Field& f, const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(f, e, c);
  return r;
}

// a - c * x^shift * b
inline Polynomial sub_scaled(const Field& f, const Polynomial& a, Elem c, const MultiIndex& shift,
                             const Polynomial& b) {
  Polynomial r = a;
  for (const auto& [e, v] : b.terms()) r.add_term(f, e + shift, f.neg(f.mul(c, v)));
  return r;
}

inline MultiIndex leading_monomial(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw DomainError("leading monomial of the zero polynomial");
  const MultiIndex* best = nullptr;
  for (const auto& [a, c] : p.terms())
    if (!best || order.less(*best, a)) best = &a;
  return *best;
}

}  // namespace avc

#endif  // AVC_POLYNOMIAL_HPP_
