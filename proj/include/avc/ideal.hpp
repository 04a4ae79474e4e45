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

#ifndef AVC_IDEAL_HPP_
#define AVC_IDEAL_HPP_

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "avc/error.hpp"
#include "avc/gf.hpp"
#include "avc/linalg.hpp"
#include "avc/mindex.hpp"
#include "avc/points.hpp"
#include "avc/polynomial.hpp"
#include "avc/transform.hpp"

namespace avc {

// Monic generators x^(a_w) + sum_d g_d x^d of a point ideal, each tail
// supported on `delta`. Vanishing ideals come out reduced and `delta` is the
// footprint D(Psi). The interpolation form built over a check set B is also
// accepted by extend; there `delta` is B and `reduced` is false.
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> elements;
  std::vector<MultiIndex> leading;
  DeltaSet delta;
  bool reduced = true;

  std::size_t size() const { return elements.size(); }
};

namespace detail {

// Lex ranks by the last component first, which lists elements row by row.
inline void sort_elements(GroebnerBasis& gb) {
  std::vector<std::size_t> idx(gb.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  auto lex = MonomialOrder::lex();
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return lex.less(gb.leading[a], gb.leading[b]); });
  GroebnerBasis out{gb.order, {}, {}, gb.delta, gb.reduced};
  for (auto i : idx) {
    out.elements.push_back(gb.elements[i]);
    out.leading.push_back(gb.leading[i]);
  }
  gb = std::move(out);
}

}  // namespace detail

// Buchberger-Moller: walk monomials of {0..q}^N upward in the order and
// eliminate their evaluation vectors against the footprint found so far.
// A dependent monomial closes off one basis element; the rest form D.
inline GroebnerBasis vanishing_gb(const PointSet& psi, const MonomialOrder& order) {
  if (psi.empty()) throw DomainError("vanishing ideal of an empty point set");
  const Field& f = *psi.field();
  const int dims = psi.dims();
  const std::size_t n = psi.size();
  IndexSpace space(f.q(), dims);
  IndexSpace box(f.q() + 1, dims);

  GroebnerBasis gb{order, {}, {}, DeltaSet(space), true};
  std::vector<MultiIndex> dmon;
  Matrix rows;                    // echelon rows, pivot entry 1
  std::vector<std::size_t> piv;   // pivot column of each row
  Matrix combo;                   // rows[i] = sum_j combo[i][j] v(dmon[j])

  for (std::size_t id : box.sorted(order)) {
    MultiIndex m = box.at(id);
    bool covered = false;
    for (const auto& a : gb.leading)
      if (dominates(m, a)) {
        covered = true;
        break;
      }
    if (covered) continue;

    Vec v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = monomial_at(f, psi[k], m);
    Vec t(n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Elem c = v[piv[i]];
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (!rows[i][k].is_zero()) v[k] = f.sub(v[k], f.mul(c, rows[i][k]));
      for (std::size_t j = 0; j < dmon.size(); ++j)
        if (!combo[i][j].is_zero()) t[j] = f.add(t[j], f.mul(c, combo[i][j]));
    }
    std::size_t p = 0;
    while (p < n && v[p].is_zero()) ++p;

    if (p == n) {
      Polynomial g = Polynomial::monomial(dims, m, f.one());
      for (std::size_t j = 0; j < dmon.size(); ++j)
        if (!t[j].is_zero()) g.set(dmon[j], f.neg(t[j]));
      gb.elements.push_back(std::move(g));
      gb.leading.push_back(m);
      continue;
    }
    if (!space.contains(m)) throw ConsistencyError("footprint left A at " + m.str());
    Elem inv = f.inv(v[p]);
    for (auto& x : v)
      if (!x.is_zero()) x = f.mul(x, inv);
    Vec c(n);
    for (std::size_t j = 0; j < dmon.size(); ++j)
      if (!t[j].is_zero()) c[j] = f.neg(f.mul(t[j], inv));
    c[dmon.size()] = inv;
    rows.push_back(std::move(v));
    piv.push_back(p);
    combo.push_back(std::move(c));
    dmon.push_back(m);
    gb.delta.insert(m);
  }
  detail::sort_elements(gb);
  return gb;
}

// Remainder of f on division by a reduced basis.
inline Polynomial normal_form(const Field& f, const Polynomial& p, const GroebnerBasis& gb) {
  if (!gb.reduced) throw DomainError("normal form needs a reduced basis");
  Polynomial r = p;
  while (true) {
    const MultiIndex* pick = nullptr;
    std::size_t which = 0;
    for (const auto& [a, c] : r.terms()) {
      if (pick && !gb.order.less(*pick, a)) continue;
      for (std::size_t w = 0; w < gb.size(); ++w)
        if (dominates(a, gb.leading[w])) {
          pick = &a;
          which = w;
          break;
        }
    }
    if (!pick) return r;
    MultiIndex a = *pick;
    r = sub_scaled(f, r, r.coef(a), a - gb.leading[which], gb.elements[which]);
  }
}

// The same ideal listed row by row: for every (a_2..a_N) the element with the
// smallest a_1 outside D, x^a minus its normal form, stopping past rows
// whose pure power of the later variables already left D. Elements whose
// leading monomial is divisible by another may appear, as in x*y next to x.
inline GroebnerBasis row_basis(const Field& f, const GroebnerBasis& gb) {
  if (!gb.reduced) throw DomainError("row form needs a reduced basis");
  const IndexSpace& space = gb.delta.space();
  const int dims = space.dims();
  const int q = space.q();
  GroebnerBasis out{gb.order, {}, {}, gb.delta, true};
  if (dims == 1) return gb;
  IndexSpace tails(q + 1, dims - 1);
  auto in_delta = [&](const MultiIndex& a) { return space.contains(a) && gb.delta.contains(a); };
  for (std::size_t t = 0; t < tails.size(); ++t) {
    MultiIndex tail = tails.at(t);
    MultiIndex a(static_cast<std::size_t>(dims));
    for (int i = 1; i < dims; ++i) a[i] = tail[i - 1];
    // Skip rows above a row that closes at a_1 = 0.
    bool blocked = false;
    for (int i = 1; i < dims && !blocked; ++i) {
      if (a[i] == 0) continue;
      MultiIndex below = a;
      below[0] = 0;
      --below[i];
      if (!in_delta(below)) blocked = true;
    }
    if (blocked) continue;
    int a1 = 0;
    while (a1 <= q) {
      a[0] = a1;
      if (!in_delta(a)) break;
      ++a1;
    }
    Polynomial nf = normal_form(f, Polynomial::monomial(dims, a, f.one()), gb);
    Polynomial g = Polynomial::monomial(dims, a, f.one());
    for (const auto& [e, c] : nf.terms()) g.set(e, f.neg(c));
    out.elements.push_back(std::move(g));
    out.leading.push_back(a);
  }
  detail::sort_elements(out);
  return out;
}

namespace detail {

struct Tail {
  std::vector<std::size_t> offsets;  // semigroup offsets d
  std::vector<MultiIndex> exps;
  Vec coefs;
};

inline std::vector<Tail> tails(const GroebnerBasis& gb) {
  const IndexSpace& space = gb.delta.space();
  std::vector<Tail> out(gb.size());
  for (std::size_t w = 0; w < gb.size(); ++w) {
    for (const auto& [d, c] : gb.elements[w].terms()) {
      if (d == gb.leading[w]) continue;
      if (!gb.delta.contains(d))
        throw ConsistencyError("basis tail term " + d.str() + " lies outside its support set");
      out[w].offsets.push_back(space.linear(d));
      out[w].exps.push_back(d);
      out[w].coefs.push_back(c);
    }
  }
  return out;
}

}  // namespace detail

// Value of h_a from generator w: -sum_d g_d h_((a - a_w) + d) in the
// semigroup. Returns false when a is not above a_w or an input is missing.
inline bool recurrence_value(const Field& f, const Spectrum& h, const GroebnerBasis& gb, std::size_t w,
                             const MultiIndex& a, Elem* out) {
  const IndexSpace& space = h.space();
  if (static_cast<int>(gb.leading[w].size()) != space.dims()) throw DomainError("basis dimension mismatch");
  if (!dominates(a, gb.leading[w])) return false;
  MultiIndex base = a - gb.leading[w];
  Elem acc = Elem::zero();
  for (const auto& [d, c] : gb.elements[w].terms()) {
    if (d == gb.leading[w]) continue;
    std::size_t ref = space.linear(semigroup_add(base, d, space.q()));
    if (!h.defined(ref)) return false;
    acc = f.add(acc, f.mul(c, h.at(ref)));
  }
  *out = f.neg(acc);
  return true;
}

struct ExtendOptions {
  // Recompute every filled value from each other admissible generator.
  bool cross_check = true;
};

// Prolongs h from the basis support to target by the recurrences, filling
// in increasing order. Runs repeated sweeps so that interpolation bases,
// whose inputs need not precede the output, also complete.
inline Spectrum extend(const Field& f, const Spectrum& h, const GroebnerBasis& gb, const IndexSet& target,
                       ExtendOptions opt = {}) {
  const IndexSpace& space = gb.delta.space();
  if (!(h.space() == space) || !(target.space() == space)) throw DomainError("extension spaces differ");
  if (!(h.domain() == gb.delta)) throw DomainError("extension input must be defined exactly on the basis support");
  const std::size_t total = space.size();
  const int q = space.q();
  const auto tl = detail::tails(gb);

  std::vector<char> known(total, 0);
  Vec val(total);
  for (auto i : gb.delta.ids()) {
    known[i] = 1;
    val[i] = h.dense()[i];
  }
  auto sorted = space.sorted(gb.order);
  // For a reduced basis every input precedes its output, so nothing past the
  // largest target is needed.
  std::size_t limit = total;
  if (gb.reduced) {
    limit = 0;
    for (std::size_t k = 0; k < total; ++k)
      if (target.contains(sorted[k])) limit = k + 1;
  }

  auto apply = [&](std::size_t w, const MultiIndex& a, Elem* out) {
    MultiIndex base = a - gb.leading[w];
    Elem acc = Elem::zero();
    for (std::size_t t = 0; t < tl[w].exps.size(); ++t) {
      std::size_t ref = space.linear(semigroup_add(base, tl[w].exps[t], q));
      if (!known[ref]) return false;
      acc = f.add(acc, f.mul(tl[w].coefs[t], val[ref]));
    }
    *out = f.neg(acc);
    return true;
  };

  auto missing = [&] {
    for (auto i : target.ids())
      if (!known[i]) return true;
    return false;
  };

  while (missing()) {
    bool progress = false;
    for (std::size_t k = 0; k < limit; ++k) {
      std::size_t id = sorted[k];
      if (known[id]) continue;
      MultiIndex a = space.at(id);
      bool admissible = false;
      for (std::size_t w = 0; w < gb.size(); ++w) {
        if (!dominates(a, gb.leading[w])) continue;
        admissible = true;
        Elem v;
        if (apply(w, a, &v)) {
          val[id] = v;
          known[id] = 1;
          progress = true;
          break;
        }
      }
      if (!admissible && gb.reduced)
        throw ConsistencyError("no basis element applies at " + a.str());
    }
    if (!progress) throw ConsistencyError("extension stalled before covering the target");
  }

  if (opt.cross_check) {
    OpPause pause;
    for (std::size_t id = 0; id < total; ++id) {
      if (!known[id] || gb.delta.contains(id)) continue;
      MultiIndex a = space.at(id);
      for (std::size_t w = 0; w < gb.size(); ++w) {
        if (!dominates(a, gb.leading[w])) continue;
        Elem v;
        if (apply(w, a, &v) && !(v == val[id]))
          throw ConsistencyError("recurrences disagree at " + a.str());
      }
    }
  }

  Spectrum out(target.unite(gb.delta));
  for (auto i : out.domain().ids()) out.set(i, val[i]);
  return out;
}

// For every row (a_2..a_N) the smallest a_1 with (a_1, a_2..a_N) outside B
// gets the unique x^a + sum_(b in B) h_b x^b vanishing on phi. Needs
// |phi| = |B| and the evaluation matrix of B on phi invertible.
inline GroebnerBasis interpolation_basis(const PointSet& phi, const IndexSet& check, const MonomialOrder& order) {
  const Field& f = *phi.field();
  const IndexSpace& space = check.space();
  if (phi.size() != check.size())
    throw DomainError("interpolation basis needs as many points as check indices");
  const auto bs = check.members();
  // rows: points, columns: b
  Matrix ev = zero_matrix(phi.size(), bs.size());
  for (std::size_t m = 0; m < phi.size(); ++m)
    for (std::size_t l = 0; l < bs.size(); ++l) ev[m][l] = monomial_at(f, phi[m], bs[l]);
  auto inv = inverse(f, ev);
  if (!inv) throw DecodeError(DecodeError::Kind::kNotGeneric, "evaluation of B on the point set is singular");

  GroebnerBasis gb{order, {}, {}, check, false};
  const int q = space.q();
  IndexSpace rows_space(q, std::max(1, space.dims() - 1));
  const std::size_t nrows = space.dims() == 1 ? 1 : rows_space.size();
  for (std::size_t r = 0; r < nrows; ++r) {
    MultiIndex a(static_cast<std::size_t>(space.dims()));
    if (space.dims() > 1) {
      MultiIndex tail = rows_space.at(r);
      for (int i = 1; i < space.dims(); ++i) a[i] = tail[i - 1];
    }
    int a1 = 0;
    while (a1 < q) {
      a[0] = a1;
      if (!check.contains(a)) break;
      ++a1;
    }
    if (a1 == q) continue;
    Vec rhs(phi.size());
    for (std::size_t m = 0; m < phi.size(); ++m) rhs[m] = f.neg(monomial_at(f, phi[m], a));
    Polynomial g = Polynomial::monomial(space.dims(), a, f.one());
    for (std::size_t l = 0; l < bs.size(); ++l) {
      Elem hb = Elem::zero();
      for (std::size_t m = 0; m < phi.size(); ++m)
        if (!(*inv)[l][m].is_zero() && !rhs[m].is_zero()) hb = f.add(hb, f.mul((*inv)[l][m], rhs[m]));
      g.set(bs[l], hb);
    }
    gb.elements.push_back(std::move(g));
    gb.leading.push_back(a);
  }
  detail::sort_elements(gb);
  return gb;
}

}  // namespace avc

#endif  // AVC_IDEAL_HPP_
