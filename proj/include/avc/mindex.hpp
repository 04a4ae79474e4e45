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

#ifndef AVC_MINDEX_HPP_
#define AVC_MINDEX_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "avc/error.hpp"

namespace avc {

// Exponent vector. Inside A every component is in {0..q-1}; polynomials may
// carry larger exponents (x^q - x).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : c_(n, 0) {}
  MultiIndex(std::initializer_list<int> c) : c_(c) {}
  explicit MultiIndex(std::vector<int> c) : c_(std::move(c)) {}

  std::size_t size() const { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  const std::vector<int>& components() const { return c_; }

  int total() const { return std::accumulate(c_.begin(), c_.end(), 0); }

  // Storage order only; monomial orders live in MonomialOrder.
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> c_;
};

inline void require_same_length(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size())
    throw DomainError("multi-index length mismatch: " + a.str() + " vs " + b.str());
}

// Addition in A viewed as exponents of F_q: a zero sum stays zero, anything
// else is folded into {1..q-1} modulo q-1.
inline MultiIndex semigroup_add(const MultiIndex& a, const MultiIndex& b, int q) {
  require_same_length(a, b);
  MultiIndex r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    int s = a[i] + b[i];
    r[i] = s == 0 ? 0 : (s - 1) % (q - 1) + 1;
  }
  return r;
}

inline bool dominates(const MultiIndex& a, const MultiIndex& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

inline MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  require_same_length(a, b);
  MultiIndex r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  require_same_length(a, b);
  MultiIndex r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

enum class OrderKind { kLex, kGrlex, kWeightedGrlex };

// Ties (and plain lex) are settled from the last component down to the first;
// the later position is the more significant one.
struct MonomialOrder {
  OrderKind kind = OrderKind::kLex;
  std::vector<int> weights;

  static MonomialOrder lex() { return {OrderKind::kLex, {}}; }
  static MonomialOrder grlex() { return {OrderKind::kGrlex, {}}; }
  static MonomialOrder weighted(std::vector<int> w) {
    for (int x : w)
      if (x < 1) throw DomainError("order weights must be positive");
    return {OrderKind::kWeightedGrlex, std::move(w)};
  }

  long degree(const MultiIndex& a) const {
    long d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      long w = 1;
      if (kind == OrderKind::kWeightedGrlex) {
        if (weights.size() != a.size()) throw DomainError("order weights do not match dimension");
        w = weights[i];
      }
      d += w * a[i];
    }
    return d;
  }

  std::strong_ordering compare(const MultiIndex& a, const MultiIndex& b) const {
    require_same_length(a, b);
    if (kind != OrderKind::kLex) {
      long da = degree(a), db = degree(b);
      if (da != db) return da <=> db;
    }
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
  }

  bool less(const MultiIndex& a, const MultiIndex& b) const { return compare(a, b) < 0; }

  std::string name() const {
    switch (kind) {
      case OrderKind::kLex: return "lex";
      case OrderKind::kGrlex: return "grlex";
      case OrderKind::kWeightedGrlex: return "weighted_grlex";
    }
    return "?";
  }
};

// The box {0..q-1}^N with first-component-fastest linearisation. The same
// arithmetic addresses Omega once field elements are replaced by indices.
class IndexSpace {
 public:
  IndexSpace() = default;
  IndexSpace(int q, int n) : q_(q), n_(n) {
    if (q < 2 || n < 1) throw DomainError("index space needs q >= 2 and N >= 1");
    size_ = 1;
    for (int i = 0; i < n; ++i) {
      size_ *= static_cast<std::size_t>(q);
      if (size_ > (std::size_t{1} << 26)) throw DomainError("index space too large");
    }
  }

  int q() const { return q_; }
  int dims() const { return n_; }
  std::size_t size() const { return size_; }

  bool contains(const MultiIndex& a) const {
    if (static_cast<int>(a.size()) != n_) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] < 0 || a[i] >= q_) return false;
    return true;
  }

  std::size_t linear(const MultiIndex& a) const {
    if (!contains(a)) throw DomainError("multi-index " + a.str() + " outside A");
    std::size_t v = 0;
    for (int i = n_ - 1; i >= 0; --i) v = v * q_ + static_cast<std::size_t>(a[i]);
    return v;
  }

  MultiIndex at(std::size_t lin) const {
    MultiIndex a(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      a[i] = static_cast<int>(lin % q_);
      lin /= q_;
    }
    return a;
  }

  // Linear ids of the whole box, ascending in the given order.
  std::vector<std::size_t> sorted(const MonomialOrder& order) const {
    std::vector<MultiIndex> all;
    all.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) all.push_back(at(i));
    std::vector<std::size_t> ids(size_);
    std::iota(ids.begin(), ids.end(), 0);
    std::sort(ids.begin(), ids.end(),
              [&](std::size_t x, std::size_t y) { return order.less(all[x], all[y]); });
    return ids;
  }

  friend bool operator==(const IndexSpace& a, const IndexSpace& b) {
    return a.q_ == b.q_ && a.n_ == b.n_;
  }

 private:
  int q_ = 0;
  int n_ = 0;
  std::size_t size_ = 0;
};

// A subset of A held both as a membership mask and as ascending linear ids.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(IndexSpace space) : space_(space), mask_(space.size(), 0) {}

  static IndexSet all(IndexSpace space) {
    IndexSet s(space);
    for (std::size_t i = 0; i < space.size(); ++i) s.insert(i);
    return s;
  }

  static IndexSet of(IndexSpace space, const std::vector<MultiIndex>& members) {
    IndexSet s(space);
    for (const auto& a : members) s.insert(a);
    return s;
  }

  template <class Pred>
  static IndexSet where(IndexSpace space, Pred pred) {
    IndexSet s(space);
    for (std::size_t i = 0; i < space.size(); ++i)
      if (pred(space.at(i))) s.insert(i);
    return s;
  }

  const IndexSpace& space() const { return space_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }

  bool contains(std::size_t lin) const { return lin < mask_.size() && mask_[lin]; }
  bool contains(const MultiIndex& a) const { return space_.contains(a) && mask_[space_.linear(a)]; }

  void insert(std::size_t lin) {
    if (lin >= mask_.size()) throw DomainError("index outside A");
    if (mask_[lin]) return;
    mask_[lin] = 1;
    if (ids_.empty() || lin > ids_.back()) {
      ids_.push_back(lin);
      return;
    }
    ids_.insert(std::lower_bound(ids_.begin(), ids_.end(), lin), lin);
  }
  void insert(const MultiIndex& a) { insert(space_.linear(a)); }

  const std::vector<std::size_t>& ids() const { return ids_; }

  std::vector<MultiIndex> members() const {
    std::vector<MultiIndex> out;
    out.reserve(ids_.size());
    for (auto i : ids_) out.push_back(space_.at(i));
    return out;
  }

  std::vector<MultiIndex> members(const MonomialOrder& order) const {
    auto out = members();
    std::sort(out.begin(), out.end(),
              [&](const MultiIndex& x, const MultiIndex& y) { return order.less(x, y); });
    return out;
  }

  bool subset_of(const IndexSet& other) const {
    for (auto i : ids_)
      if (!other.contains(i)) return false;
    return true;
  }

  IndexSet unite(const IndexSet& other) const {
    IndexSet s = *this;
    for (auto i : other.ids_) s.insert(i);
    return s;
  }

  IndexSet minus(const IndexSet& other) const {
    IndexSet s(space_);
    for (auto i : ids_)
      if (!other.contains(i)) s.insert(i);
    return s;
  }

  bool downward_closed() const {
    for (auto i : ids_) {
      MultiIndex a = space_.at(i);
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] == 0) continue;
        MultiIndex b = a;
        --b[k];
        if (!contains(b)) return false;
      }
    }
    return true;
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.space_ == b.space_ && a.ids_ == b.ids_;
  }

 private:
  IndexSpace space_;
  std::vector<char> mask_;
  std::vector<std::size_t> ids_;
};

using DeltaSet = IndexSet;

}  // namespace avc

#endif  // AVC_MINDEX_HPP_
