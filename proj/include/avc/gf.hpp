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

#ifndef AVC_GF_HPP_
#define AVC_GF_HPP_

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "avc/error.hpp"

namespace avc {

// Field operations performed by the current thread. Every add, sub, mul,
// div, neg, inv and pow issued through a Field bumps this by one.
inline thread_local std::uint64_t tl_field_ops = 0;

class OpCounter {
 public:
  OpCounter() : start_(tl_field_ops) {}
  std::uint64_t count() const { return tl_field_ops - start_; }
  void reset() { start_ = tl_field_ops; }

 private:
  std::uint64_t start_;
};

// Work done inside the scope is not charged to the thread counter.
class OpPause {
 public:
  OpPause() : saved_(tl_field_ops) {}
  ~OpPause() { tl_field_ops = saved_; }
  OpPause(const OpPause&) = delete;
  OpPause& operator=(const OpPause&) = delete;

 private:
  std::uint64_t saved_;
};

struct FieldSpec {
  int p = 2;
  int m = 1;
  // Monic, highest degree first: x^3 + x + 1 is {1, 0, 1, 1}.
  std::vector<int> primitive_poly;

  long q() const {
    long r = 1;
    for (int i = 0; i < m; ++i) r *= p;
    return r;
  }
};

// alpha^log, or zero when log == -1.
struct Elem {
  std::int32_t log = -1;

  static constexpr Elem zero() { return Elem{-1}; }
  static constexpr Elem one() { return Elem{0}; }
  constexpr bool is_zero() const { return log < 0; }
  friend constexpr bool operator==(Elem a, Elem b) { return a.log == b.log; }
};

using Vec = std::vector<Elem>;

class Field {
 public:
  static std::shared_ptr<const Field> build(const FieldSpec& spec) {
    return std::shared_ptr<const Field>(new Field(spec));
  }

  const FieldSpec& spec() const { return spec_; }
  int p() const { return spec_.p; }
  int m() const { return spec_.m; }
  int q() const { return q_; }

  Elem zero() const { return Elem::zero(); }
  Elem one() const { return Elem{0}; }
  Elem alpha() const { return Elem{q_ == 2 ? 0 : 1}; }
  Elem minus_one() const { return Elem{spec_.p == 2 ? 0 : (q_ - 1) / 2}; }

  // alpha^k for any integer k.
  Elem exp(long long k) const {
    long long r = k % (q_ - 1);
    if (r < 0) r += q_ - 1;
    return Elem{static_cast<std::int32_t>(r)};
  }

  Elem add(Elem a, Elem b) const {
    ++tl_field_ops;
    return add_raw(a, b);
  }
  Elem sub(Elem a, Elem b) const {
    ++tl_field_ops;
    return add_raw(a, neg_raw(b));
  }
  Elem neg(Elem a) const {
    ++tl_field_ops;
    return neg_raw(a);
  }
  Elem mul(Elem a, Elem b) const {
    ++tl_field_ops;
    if (a.is_zero() || b.is_zero()) return zero();
    return Elem{wrap(a.log + b.log)};
  }
  Elem div(Elem a, Elem b) const {
    ++tl_field_ops;
    if (b.is_zero()) throw FieldError("division by zero");
    if (a.is_zero()) return zero();
    return Elem{wrap(a.log - b.log + (q_ - 1))};
  }
  Elem inv(Elem a) const {
    ++tl_field_ops;
    if (a.is_zero()) throw FieldError("inverse of zero");
    return Elem{wrap(q_ - 1 - a.log)};
  }
  // x^0 is one for every x, zero included.
  Elem pow(Elem a, long long k) const {
    ++tl_field_ops;
    if (k == 0) return one();
    if (a.is_zero()) {
      if (k < 0) throw FieldError("negative power of zero");
      return zero();
    }
    long long r = (static_cast<long long>(a.log) * (k % (q_ - 1))) % (q_ - 1);
    if (r < 0) r += q_ - 1;
    return Elem{static_cast<std::int32_t>(r)};
  }

  // Coefficients of the element as a polynomial in alpha, packed as base-p
  // digits (digit i holds the coefficient of alpha^i).
  int to_poly(Elem a) const { return a.is_zero() ? 0 : antilog_[a.log]; }
  Elem from_poly(int v) const {
    if (v < 0 || v >= q_) throw FieldError("polynomial encoding out of range");
    return Elem{log_[v]};
  }
  Elem from_int(long long v) const {
    long long r = v % spec_.p;
    if (r < 0) r += spec_.p;
    return from_poly(static_cast<int>(r));
  }

  // Position in the order 0, 1, alpha, ..., alpha^(q-2).
  int index(Elem a) const { return a.is_zero() ? 0 : a.log + 1; }
  Elem at_index(int i) const { return Elem{i - 1}; }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(q_);
    for (int i = 0; i < q_; ++i) out.push_back(at_index(i));
    return out;
  }

  bool valid(Elem a) const { return a.log >= -1 && a.log < q_ - 1; }

  // log(1 + alpha^k), or -1 when 1 + alpha^k = 0.
  std::int32_t zech(int k) const { return zech_[k]; }

 private:
  explicit Field(const FieldSpec& spec) : spec_(spec) {
    const int p = spec.p;
    if (p < 2) throw FieldError("characteristic must be a prime");
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (spec.m < 1) throw FieldError("extension degree must be at least 1");
    long q = 1;
    for (int i = 0; i < spec.m; ++i) {
      q *= p;
      if (q > (1L << 16)) throw FieldError("field size exceeds 2^16");
    }
    q_ = static_cast<int>(q);
    const auto& f = spec.primitive_poly;
    if (static_cast<int>(f.size()) != spec.m + 1)
      throw FieldError("primitive polynomial must have m+1 coefficients");
    auto mod = [p](long v) { return static_cast<int>(((v % p) + p) % p); };
    if (mod(f[0]) != 1) throw FieldError("primitive polynomial must be monic");
    // x^m = -(f_1 x^(m-1) + ... + f_m)
    std::vector<int> red(spec.m);
    for (int i = 0; i < spec.m; ++i) red[i] = mod(-static_cast<long>(f[spec.m - i]));

    antilog_.assign(q_ - 1, 0);
    log_.assign(q_, -1);
    std::vector<int> cur(spec.m, 0);
    cur[0] = 1;
    for (int k = 0; k < q_ - 1; ++k) {
      int enc = pack(cur);
      if (enc == 0 || log_[enc] != -1) throw FieldError("polynomial is not primitive");
      antilog_[k] = enc;
      log_[enc] = k;
      // cur *= x
      int top = cur[spec.m - 1];
      for (int i = spec.m - 1; i > 0; --i) cur[i] = mod(cur[i - 1] + static_cast<long>(top) * red[i]);
      cur[0] = mod(static_cast<long>(top) * red[0]);
    }
    if (pack(cur) != 1) throw FieldError("polynomial is not primitive");

    zech_.assign(q_ - 1, -1);
    for (int k = 0; k < q_ - 1; ++k) zech_[k] = log_[add_digits(antilog_[k], 1)];
  }

  int pack(const std::vector<int>& digits) const {
    int v = 0;
    for (int i = spec_.m - 1; i >= 0; --i) v = v * spec_.p + digits[i];
    return v;
  }

  int add_digits(int a, int b) const {
    int out = 0, scale = 1;
    for (int i = 0; i < spec_.m; ++i) {
      out += ((a % spec_.p + b % spec_.p) % spec_.p) * scale;
      a /= spec_.p;
      b /= spec_.p;
      scale *= spec_.p;
    }
    return out;
  }

  std::int32_t wrap(long v) const { return static_cast<std::int32_t>(v % (q_ - 1)); }

  Elem neg_raw(Elem a) const {
    if (a.is_zero() || spec_.p == 2) return a;
    return Elem{wrap(a.log + (q_ - 1) / 2)};
  }

  Elem add_raw(Elem a, Elem b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int k = b.log - a.log;
    if (k < 0) k += q_ - 1;
    std::int32_t z = zech_[k];
    if (z < 0) return zero();
    return Elem{wrap(a.log + z)};
  }

  FieldSpec spec_;
  int q_ = 0;
  std::vector<int> antilog_;
  std::vector<std::int32_t> log_;
  std::vector<std::int32_t> zech_;
};

using FieldPtr = std::shared_ptr<const Field>;

namespace fields {

inline FieldSpec gf4() { return {2, 2, {1, 1, 1}}; }
inline FieldSpec gf8() { return {2, 3, {1, 0, 1, 1}}; }
// x^2 + x - 1, so alpha^2 = 1 - alpha.
inline FieldSpec gf9() { return {3, 2, {1, 1, 2}}; }
inline FieldSpec gf16() { return {2, 4, {1, 0, 0, 1, 1}}; }

inline bool by_name(const std::string& name, FieldSpec* out) {
  if (name == "gf4") *out = gf4();
  else if (name == "gf8") *out = gf8();
  else if (name == "gf9") *out = gf9();
  else if (name == "gf16") *out = gf16();
  else return false;
  return true;
}

}  // namespace fields
}  // namespace avc

#endif  // AVC_GF_HPP_
