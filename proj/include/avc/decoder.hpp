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

#ifndef AVC_DECODER_HPP_
#define AVC_DECODER_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "avc/codes.hpp"
#include "avc/error.hpp"
#include "avc/gf.hpp"
#include "avc/ideal.hpp"
#include "avc/linalg.hpp"
#include "avc/maps.hpp"
#include "avc/points.hpp"
#include "avc/transform.hpp"

namespace avc {

// Field operations charged to each decoding step. `search` is the support
// enumeration inside locate and is kept out of total().
struct StepCounts {
  std::uint64_t step1 = 0;   // erasure syndrome
  std::uint64_t step2 = 0;   // erasure locator basis
  std::uint64_t step3 = 0;   // received syndrome on B
  std::uint64_t step4 = 0;   // locator basis of all located points
  std::uint64_t search = 0;  // support enumeration
  std::uint64_t step5a = 0;  // extension over A
  std::uint64_t step5b = 0;  // inverse transform and restriction
  std::uint64_t step6 = 0;   // subtraction
  std::uint64_t info = 0;    // information recovery on D \ B

  std::uint64_t total() const { return step1 + step2 + step3 + step4 + step5a + step5b + step6; }
};

inline std::string op_counter_report(const StepCounts& s) {
  std::ostringstream os;
  os << "step  operations\n"
     << "1     " << s.step1 << "\n"
     << "2     " << s.step2 << "\n"
     << "3     " << s.step3 << "\n"
     << "4     " << s.step4 << "\n"
     << "5a    " << s.step5a << "\n"
     << "5b    " << s.step5b << "\n"
     << "6     " << s.step6 << "\n"
     << "total " << s.total() << "\n"
     << "search " << s.search << "\n"
     << "info   " << s.info << "\n";
  return os.str();
}

struct LocateOptions {
  // Largest number of unknown error positions; negative selects
  // floor((d_fr - 1 - |phi1|) / 2).
  int t_max = -1;
  // Throw when two supports of the minimal size explain the syndrome;
  // otherwise the first one in point order wins.
  bool reject_ambiguous = true;
};

struct LocateResult {
  GroebnerBasis gb;   // vanishing ideal of the located points, empty if none
  PointSet located;   // phi1 and phi2, sorted
  PointSet phi2;
};

namespace detail {

// Echelon rows with pivot entry one, each remembering its combination of the
// vectors that produced it.
struct Echelon {
  std::vector<Vec> rows;
  std::vector<std::size_t> piv;
  std::vector<Vec> combo;

  // Reduces v in place, returning the coefficients taken from each row.
  Vec reduce(const Field& f, Vec& v) const {
    Vec took(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Elem c = v[piv[i]];
      if (c.is_zero()) continue;
      took[i] = c;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!rows[i][k].is_zero()) v[k] = f.sub(v[k], f.mul(c, rows[i][k]));
    }
    return took;
  }
};

inline bool is_zero_vec(const Vec& v) {
  for (Elem e : v)
    if (!e.is_zero()) return false;
  return true;
}

inline std::vector<std::size_t> positions(const CodeSpec& code, const PointSet& sub) {
  std::vector<std::size_t> out;
  for (const auto& w : sub.points()) {
    long k = code.points().find(w);
    if (k < 0) throw DomainError("point " + point_str(w) + " is not a code position");
    out.push_back(static_cast<std::size_t>(k));
  }
  return out;
}

inline Vec syndrome_vec(const Spectrum& s, const CodeSpec& code) {
  if (!(s.domain() == code.check())) throw DomainError("syndrome must be defined exactly on B");
  Vec v;
  for (auto i : code.check().ids()) v.push_back(s.dense()[i]);
  return v;
}

class SupportSearch {
 public:
  SupportSearch(const Field& f, std::vector<Vec> cand, Vec target)
      : f_(f), cand_(std::move(cand)), target_(std::move(target)) {}

  // All independent subsets of size t whose span holds the target with every
  // coefficient nonzero, in lexicographic order of candidate index.
  std::vector<std::vector<std::size_t>> run(std::size_t t, std::size_t stop_after) {
    found_.clear();
    size_ = t;
    stop_after_ = stop_after;
    chosen_.clear();
    Echelon e;
    dfs(0, e, target_, Vec());
    return found_;
  }

 private:
  // u = cand_k reduced by e, with u = cand_k + sum coef_j chosen_j.
  std::size_t reduce_candidate(const Echelon& e, std::size_t k, Vec& u, Vec& coef) const {
    const std::size_t depth = chosen_.size();
    u = cand_[k];
    Vec took = e.reduce(f_, u);
    coef.assign(depth + 1, Elem::zero());
    coef[depth] = f_.one();
    for (std::size_t i = 0; i < took.size(); ++i) {
      if (took[i].is_zero()) continue;
      for (std::size_t j = 0; j < depth; ++j)
        if (!e.combo[i][j].is_zero()) coef[j] = f_.sub(coef[j], f_.mul(took[i], e.combo[i][j]));
    }
    std::size_t p = 0;
    while (p < u.size() && u[p].is_zero()) ++p;
    return p;
  }

  // Last two choices at once. Modulo the residual r, a pair (k1, k2) can
  // only span r when the images of u_k1 and u_k2 are proportional, so
  // candidates are bucketed by their normalised image.
  void pair_level(std::size_t from, const Echelon& e, const Vec& resid, const Vec& resid_coef) {
    const std::size_t depth = chosen_.size();
    std::size_t pr = 0;
    while (pr < resid.size() && resid[pr].is_zero()) ++pr;
    if (pr == resid.size()) return;
    Elem rinv = f_.inv(resid[pr]);
    struct Item {
      std::size_t k;
      Elem along;   // component on r / resid[pr]
      Elem across;  // component on the bucket direction
      Vec coef;
    };
    std::map<std::vector<std::int32_t>, std::vector<Item>> buckets;
    Vec u, coef;
    for (std::size_t k = from; k < cand_.size(); ++k) {
      std::size_t p = reduce_candidate(e, k, u, coef);
      if (p == u.size()) continue;
      Elem a = u[pr];
      Vec w = u;
      if (!a.is_zero())
        for (std::size_t i = 0; i < w.size(); ++i)
          if (!resid[i].is_zero()) w[i] = f_.sub(w[i], f_.mul(a, f_.mul(resid[i], rinv)));
      std::size_t pw = 0;
      while (pw < w.size() && w[pw].is_zero()) ++pw;
      if (pw == w.size()) continue;
      Elem winv = f_.inv(w[pw]);
      std::vector<std::int32_t> key(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) key[i] = w[i].is_zero() ? -1 : f_.mul(w[i], winv).log;
      buckets[key].push_back({k, a, w[pw], coef});
    }
    std::vector<std::vector<std::size_t>> hits;
    for (const auto& [key, items] : buckets) {
      for (std::size_t x = 0; x < items.size(); ++x)
        for (std::size_t y = x + 1; y < items.size(); ++y) {
          const Item& i1 = items[x];
          const Item& i2 = items[y];
          // l1 a1 + l2 a2 = resid[pr] and l1 b1 + l2 b2 = 0.
          Elem det = f_.sub(f_.mul(i1.along, i2.across), f_.mul(i2.along, i1.across));
          if (det.is_zero()) continue;
          Elem l1 = f_.div(f_.mul(i2.across, resid[pr]), det);
          Elem l2 = f_.neg(f_.div(f_.mul(i1.across, resid[pr]), det));
          if (l1.is_zero() || l2.is_zero()) continue;
          bool ok = true;
          for (std::size_t j = 0; j < depth && ok; ++j) {
            Elem c = f_.add(resid_coef[j], f_.add(f_.mul(l1, i1.coef[j]), f_.mul(l2, i2.coef[j])));
            if (c.is_zero()) ok = false;
          }
          if (!ok) continue;
          auto pick = chosen_;
          pick.push_back(std::min(i1.k, i2.k));
          pick.push_back(std::max(i1.k, i2.k));
          hits.push_back(std::move(pick));
        }
    }
    std::sort(hits.begin(), hits.end());
    for (auto& h : hits) {
      if (found_.size() >= stop_after_) return;
      found_.push_back(std::move(h));
    }
  }

  void dfs(std::size_t from, const Echelon& e, const Vec& resid, const Vec& resid_coef) {
    if (found_.size() >= stop_after_) return;
    const std::size_t depth = chosen_.size();
    if (size_ - depth == 2) {
      pair_level(from, e, resid, resid_coef);
      return;
    }
    for (std::size_t k = from; k + (size_ - depth) <= cand_.size(); ++k) {
      Vec u = cand_[k];
      Vec took = e.reduce(f_, u);
      std::size_t p = 0;
      while (p < u.size() && u[p].is_zero()) ++p;
      if (p == u.size()) continue;
      // u = cand_k - sum took_i rows_i, rows_i = sum combo_i c_j.
      Vec ucoef(depth + 1);
      ucoef[depth] = f_.one();
      for (std::size_t i = 0; i < took.size(); ++i) {
        if (took[i].is_zero()) continue;
        for (std::size_t j = 0; j < depth; ++j)
          if (!e.combo[i][j].is_zero()) ucoef[j] = f_.sub(ucoef[j], f_.mul(took[i], e.combo[i][j]));
      }
      Elem lam = f_.div(resid[p], u[p]);
      chosen_.push_back(k);
      if (depth + 1 == size_) {
        bool match = true;
        for (std::size_t i = 0; i < u.size() && match; ++i)
          if (!(resid[i] == f_.mul(lam, u[i]))) match = false;
        if (match) {
          // target = sum resid_coef c_j + lam * u
          bool nonzero = true;
          for (std::size_t j = 0; j <= depth && nonzero; ++j) {
            Elem base = j < depth ? resid_coef[j] : Elem::zero();
            if (f_.add(base, f_.mul(lam, ucoef[j])).is_zero()) nonzero = false;
          }
          if (nonzero) found_.push_back(chosen_);
        }
      } else {
        Echelon next = e;
        Elem inv = f_.inv(u[p]);
        Vec row = u;
        for (auto& x : row)
          if (!x.is_zero()) x = f_.mul(x, inv);
        for (auto& c : next.combo) c.push_back(Elem::zero());
        Vec rc = ucoef;
        for (auto& x : rc)
          if (!x.is_zero()) x = f_.mul(x, inv);
        next.rows.push_back(std::move(row));
        next.piv.push_back(p);
        next.combo.push_back(std::move(rc));
        Vec r2 = resid;
        Vec r2c = resid_coef;
        r2c.push_back(Elem::zero());
        for (std::size_t i = 0; i < r2.size(); ++i)
          if (!u[i].is_zero()) r2[i] = f_.sub(r2[i], f_.mul(lam, u[i]));
        for (std::size_t j = 0; j <= depth; ++j)
          if (!ucoef[j].is_zero()) r2c[j] = f_.add(r2c[j], f_.mul(lam, ucoef[j]));
        dfs(k + 1, next, r2, r2c);
      }
      chosen_.pop_back();
      if (found_.size() >= stop_after_) return;
    }
  }

  const Field& f_;
  std::vector<Vec> cand_;
  Vec target_;
  std::size_t size_ = 0;
  std::size_t stop_after_ = 0;
  std::vector<std::size_t> chosen_;
  std::vector<std::vector<std::size_t>> found_;
};

}  // namespace detail

// Smallest set of unknown positions that, together with the erasures,
// explains the syndrome; returns the vanishing ideal of all located points.
inline LocateResult locate(const CodeSpec& code, const Spectrum& synd, const PointSet& phi1, LocateOptions opt = {},
                           StepCounts* counts = nullptr) {
  const Field& f = code.field();
  Vec s = detail::syndrome_vec(synd, code);
  auto erased = detail::positions(code, phi1);
  if (phi1.size() == code.n()) throw DecodeError(DecodeError::Kind::kNoInformation, "every position is erased");
  long tm = opt.t_max;
  if (tm < 0) tm = std::max<long>(0, (code.d_fr() - 1 - static_cast<long>(phi1.size())) / 2);

  OpCounter search_ops;
  detail::Echelon er;
  for (auto k : erased) {
    Vec v = code.column(k);
    er.reduce(f, v);
    std::size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) continue;
    Elem inv = f.inv(v[p]);
    for (auto& x : v)
      if (!x.is_zero()) x = f.mul(x, inv);
    er.rows.push_back(std::move(v));
    er.piv.push_back(p);
  }
  Vec target = s;
  er.reduce(f, target);
  std::vector<std::size_t> cand_pos;
  std::vector<Vec> cand;
  for (std::size_t k = 0; k < code.n(); ++k) {
    if (phi1.contains(code.points()[k])) continue;
    Vec v = code.column(k);
    er.reduce(f, v);
    cand_pos.push_back(k);
    cand.push_back(std::move(v));
  }

  std::vector<std::size_t> pick;
  bool solved = detail::is_zero_vec(target);
  if (!solved) {
    detail::SupportSearch search(f, cand, target);
    for (long t = 1; t <= tm && !solved; ++t) {
      auto hits = search.run(static_cast<std::size_t>(t), opt.reject_ambiguous ? 2 : 1);
      if (hits.empty()) continue;
      if (hits.size() > 1)
        throw DecodeError(DecodeError::Kind::kAmbiguous, "two error supports of the same size fit the syndrome");
      pick = hits[0];
      solved = true;
    }
  }
  if (counts) counts->search += search_ops.count();
  if (!solved) throw DecodeError(DecodeError::Kind::kUndecodable, "no error support within the decoding radius");

  LocateResult out;
  out.phi2 = PointSet(code.field_ptr(), code.dims());
  for (auto i : pick) out.phi2.add(code.points()[cand_pos[i]]);
  out.located = phi1.unite(out.phi2);
  OpCounter gb_ops;
  if (!out.located.empty()) out.gb = vanishing_gb(out.located, code.order());
  if (counts) counts->step4 += gb_ops.count();
  return out;
}

// Basis that carries a B-indexed spectrum of words supported on `pts` over
// all of A: the reduced basis when its footprint fits in B, otherwise the
// interpolation basis over B when |pts| = |B|.
inline GroebnerBasis recurrence_basis(const CodeSpec& code, const PointSet& pts, const GroebnerBasis* reduced = nullptr) {
  GroebnerBasis gb = reduced ? *reduced : vanishing_gb(pts, code.order());
  if (gb.delta.subset_of(code.check())) return gb;
  if (pts.size() == code.check().size()) return interpolation_basis(pts, code.check(), code.order());
  throw DecodeError(DecodeError::Kind::kUndecodable, "footprint of the located points is not inside B");
}

inline bool check_systematic_support(const CodeSpec& code, const PointSet& phi) {
  if (phi.size() != code.check().size()) throw DomainError("systematic support must have |B| points");
  detail::positions(code, phi);
  return rank(code.field(), monomial_matrix(code.field(), code.check(), phi)) == phi.size();
}

struct DecodeResult {
  Vec codeword;
  Vec error;
  PointSet located;
  Spectrum info;  // r~ - k on D \ B
  GroebnerBasis erasure_gb;
  GroebnerBasis locator_gb;
  Spectrum received_syndrome;  // r~ on B
  StepCounts ops;
};

struct DecodeOptions {
  LocateOptions locate;
  TransformPath path = TransformPath::kFast;
  // Also recover the information spectrum from the same extension.
  bool recover_info = true;
};

namespace detail {

inline void check_received(const CodeSpec& code, const Vec& r, const PointSet& phi1) {
  if (r.size() != code.n()) throw DomainError("received word has wrong length");
  for (Elem e : r)
    if (!code.field().valid(e)) throw DomainError("received word holds an invalid symbol");
  positions(code, phi1);
  if (phi1.size() == code.n()) throw DecodeError(DecodeError::Kind::kNoInformation, "every position is erased");
}

// Steps 1 to 4 shared by both decoders.
inline LocateResult front_end(const CodeSpec& code, const Vec& r, const PointSet& phi1, const LocateOptions& lo,
                              DecodeResult& res) {
  const Field& f = code.field();
  OpCounter c1;
  Vec erasure_synd(code.check().size());
  for (auto k : positions(code, phi1)) {
    const Vec& col = code.column(k);
    for (std::size_t l = 0; l < col.size(); ++l) erasure_synd[l] = f.add(erasure_synd[l], col[l]);
  }
  res.ops.step1 = c1.count();
  OpCounter c2;
  if (!phi1.empty()) res.erasure_gb = vanishing_gb(phi1, code.order());
  res.ops.step2 = c2.count();
  OpCounter c3;
  Vec s = syndrome_values(code, r);
  res.ops.step3 = c3.count();
  res.received_syndrome = Spectrum(code.check());
  std::size_t l = 0;
  for (auto id : code.check().ids()) res.received_syndrome.set(id, s[l++]);
  LocateResult loc = locate(code, res.received_syndrome, phi1, lo, &res.ops);
  res.locator_gb = loc.gb;
  res.located = loc.located;
  return loc;
}

inline Spectrum received_on(const CodeSpec& code, const Vec& r, const IndexSet& d) {
  return proper_transform(code.field(), r, code.points(), d);
}

}  // namespace detail

// Erasure-and-error decoding: returns the codeword, the error and, unless
// disabled, the information spectrum recovered from the same extension.
inline DecodeResult decode_word(const CodeSpec& code, const Vec& r, const PointSet& phi1, DecodeOptions opt = {}) {
  const Field& f = code.field();
  detail::check_received(code, r, phi1);
  DecodeResult res;
  LocateResult loc = detail::front_end(code, r, phi1, opt.locate, res);
  res.error = Vec(code.n());
  Spectrum full;  // error spectrum over A
  if (!loc.located.empty()) {
    OpCounter c5a;
    GroebnerBasis rb = recurrence_basis(code, loc.located, &loc.gb);
    Spectrum seed = res.received_syndrome.restricted(rb.delta);
    full = extend(f, seed, rb, IndexSet::all(code.space()), {false});
    res.ops.step5a = c5a.count();
    {
      OpPause pause;
      extend(f, seed, rb, IndexSet::all(code.space()), {true});
    }
    OpCounter c5b;
    GridWord e = idft(f, full, opt.path);
    for (std::size_t i = 0; i < e.values.size(); ++i)
      if (!e.values[i].is_zero() && loc.located.find_grid(i) < 0)
        throw DecodeError(DecodeError::Kind::kUndecodable, "error word does not vanish off the located points");
    for (std::size_t k = 0; k < code.n(); ++k) res.error[k] = e.values[code.points().grid_id(k)];
    res.ops.step5b = c5b.count();
  }
  OpCounter c6;
  res.codeword = Vec(code.n());
  for (std::size_t k = 0; k < code.n(); ++k) res.codeword[k] = f.sub(r[k], res.error[k]);
  res.ops.step6 = c6.count();
  {
    OpPause pause;
    if (!is_dual_codeword(code, res.codeword))
      throw DecodeError(DecodeError::Kind::kUndecodable, "decoded word is not a codeword");
  }
  if (opt.recover_info) {
    OpCounter ci;
    Spectrum rt = detail::received_on(code, r, code.delta());
    res.info = Spectrum(code.info_set());
    for (auto id : code.delta().ids()) {
      Elem v = rt.dense()[id];
      if (!loc.located.empty()) v = f.sub(v, full.dense()[id]);
      if (code.check().contains(id)) {
        if (!v.is_zero()) throw DecodeError(DecodeError::Kind::kUndecodable, "recovered spectrum has support on B");
      } else {
        res.info.set(id, v);
      }
    }
    res.ops.info = ci.count();
  }
  return res;
}

// Non-systematic decoding: the information spectrum on D \ B. The error
// spectrum is extended only as far as D(Psi).
inline Spectrum decode_info(const CodeSpec& code, const Vec& r, const PointSet& phi1, LocateOptions lo = {},
                            StepCounts* counts = nullptr) {
  const Field& f = code.field();
  detail::check_received(code, r, phi1);
  DecodeResult res;
  LocateResult loc = detail::front_end(code, r, phi1, lo, res);
  OpCounter c3;
  Spectrum rt = detail::received_on(code, r, code.delta());
  res.ops.step3 += c3.count();
  OpCounter c5;
  Spectrum k;
  if (!loc.located.empty()) {
    GroebnerBasis rb = recurrence_basis(code, loc.located, &loc.gb);
    k = extend(f, res.received_syndrome.restricted(rb.delta), rb, code.delta());
  }
  res.ops.step5a = c5.count();
  OpCounter c6;
  Spectrum h(code.info_set());
  for (auto id : code.delta().ids()) {
    Elem v = rt.dense()[id];
    if (!loc.located.empty()) v = f.sub(v, k.dense()[id]);
    if (code.check().contains(id)) {
      if (!v.is_zero()) throw DecodeError(DecodeError::Kind::kUndecodable, "recovered spectrum has support on B");
    } else {
      h.set(id, v);
    }
  }
  res.ops.step6 = c6.count();
  if (counts) *counts = res.ops;
  return h;
}

// Basis used to carry the check syndrome of a systematic support over A.
inline GroebnerBasis systematic_basis(const CodeSpec& code, const PointSet& phi) {
  if (!check_systematic_support(code, phi))
    throw DecodeError(DecodeError::Kind::kNotGeneric, "evaluation of B on the redundancy set is singular");
  return recurrence_basis(code, phi);
}

// Places info on Psi \ phi and fills phi so that the word is a codeword.
inline Vec systematic_encode(const CodeSpec& code, const Vec& info, const PointSet& phi) {
  const Field& f = code.field();
  if (phi.size() != code.check().size()) throw DomainError("redundancy set must have |B| points");
  if (info.size() != code.n() - phi.size()) throw DomainError("information word has wrong length");
  GroebnerBasis gb = systematic_basis(code, phi);
  Vec word(code.n());
  std::size_t j = 0;
  for (std::size_t k = 0; k < code.n(); ++k)
    if (!phi.contains(code.points()[k])) word[k] = info[j++];
  Vec s = syndrome_values(code, word);
  Spectrum seed(code.check());
  std::size_t l = 0;
  for (auto id : code.check().ids()) seed.set(id, s[l++]);
  Spectrum full = extend(f, seed.restricted(gb.delta), gb, IndexSet::all(code.space()));
  GridWord e = idft_fast(f, full);
  for (std::size_t i = 0; i < e.values.size(); ++i)
    if (!e.values[i].is_zero() && phi.find_grid(i) < 0)
      throw ConsistencyError("redundancy word does not vanish off the redundancy set");
  for (std::size_t k = 0; k < code.n(); ++k)
    if (phi.contains(code.points()[k])) word[k] = f.neg(e.values[code.points().grid_id(k)]);
  return word;
}

}  // namespace avc

#endif  // AVC_DECODER_HPP_
