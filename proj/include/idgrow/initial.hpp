#pragma once

// Initial ideals by linear algebra.  Under a degree-refined local order the
// leading monomial of an element is its smallest monomial; echelonizing an
// ideal's basis over the order-sorted monomial basis makes the pivot
// monomials exactly the monomials of the initial ideal, and the non-pivot
// (standard) monomials a basis of the quotient.  Requires the modulus to be
// m^c deep enough that the truncation is faithful: c >= colength + 1, which
// forces every degree-colength monomial to be a pivot (the pure-power
// certificate).

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "ideal_enum.hpp"
#include "quotient.hpp"
#include "staircase.hpp"

namespace idgrow {

inline ExponentVector leading_monomial(const RingElement& f, const TermOrder& o) {
  if (f.is_zero()) throw std::invalid_argument("leading_monomial: zero element");
  const QuotientAlgebra& A = *f.alg;
  std::uint32_t best = npos32;
  for (std::uint32_t i = 0; i < A.dim(); ++i) {
    if (!f.c.get(i)) continue;
    if (best == npos32 || o.less(A.mono(i), A.mono(best))) best = i;
  }
  return A.mono(best);
}

struct GroebnerData {
  IdealSubspace ideal;
  TermOrder order;
  std::vector<RingElement> reduced_basis;  // echelon basis w.r.t. the order
  Staircase initial;
};

inline GroebnerData initial_ideal(const IdealSubspace& I, const TermOrder& o) {
  const QuotientAlgebra& A = *I.alg;
  if (o.dim() != A.vars()) throw std::invalid_argument("initial_ideal: order dimension");
  o.validate();
  if (!A.modulus_is_maximal_power())
    throw std::invalid_argument("initial_ideal: modulus must be a power of the maximal ideal");
  std::uint64_t n = I.colength();
  std::uint32_t c = A.max_degree() + 1;
  if (c < n + 1)
    throw std::invalid_argument("initial_ideal: truncation too shallow (need modulus depth > colength)");

  // Column order: basis monomial indices sorted ascending by o.
  std::vector<std::uint32_t> perm(A.dim());
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    return o.less(A.mono(a), A.mono(b));
  });

  EchelonBasis eb(A.field(), A.dim());
  for (const auto& row : I.space.basis()) {
    FpVec v(A.dim(), A.p());
    for (std::uint32_t j = 0; j < A.dim(); ++j) v.set(j, row.get(perm[j]));
    eb.insert(std::move(v));
  }
  ensure(eb.rank() == I.space.rank(), "initial_ideal: rank changed under permutation");

  std::vector<ExponentVector> pivot_monos;
  std::vector<bool> is_pivot(A.dim(), false);
  for (auto piv : eb.pivots()) {
    pivot_monos.push_back(A.mono(perm[piv]));
    is_pivot[perm[piv]] = true;
  }
  Staircase stair(A.vars(), pivot_monos);

  // Pure-power certificate: a faithful truncation makes the staircase
  // cofinite with colength exactly n.
  ensure(stair.cofinite(), "initial_ideal: missing pure-power certificate");
  ensure(stair.colength() == n, "initial_ideal: staircase colength mismatch");

  // Standard monomials of the staircase coincide with the non-pivot basis
  // monomials, so they represent a basis of A/I.
  for (std::uint32_t i = 0; i < A.dim(); ++i)
    ensure(is_pivot[i] == stair.contains(A.mono(i)),
           "initial_ideal: standard monomials disagree with pivots");

  GroebnerData gd;
  gd.ideal = I;
  gd.order = o;
  gd.initial = std::move(stair);
  for (const auto& row : eb.rows()) {
    FpVec v(A.dim(), A.p());
    for (std::uint32_t j = 0; j < A.dim(); ++j) v.set(perm[j], row.get(j));
    gd.reduced_basis.push_back(RingElement(A, std::move(v)));
  }
  return gd;
}

// Layer-by-layer dimension data of an ideal inside A = R/m^c.
//   d_seq[k]  = dim of the image of I (intersected with degree >= k) in layer k
//   w_seq[k]  = dim of (x_1 .. x_d) * (that image one layer down)
//   e_seq[k]  = d_seq[k] - w_seq[k]       (new generators appearing in layer k)
//   layer_dims[k] = dim of layer k = binom(k+d-1, d-1)
struct ParamProfile {
  std::vector<std::uint32_t> d_seq;
  std::vector<std::uint32_t> w_seq;
  std::vector<std::uint32_t> e_seq;
  std::vector<std::uint32_t> layer_dims;
  std::uint64_t colength = 0;
};

inline ParamProfile param_profile(const IdealSubspace& I) {
  const QuotientAlgebra& A = *I.alg;
  if (!A.modulus_is_maximal_power())
    throw std::invalid_argument("param_profile: modulus must be a power of the maximal ideal");
  std::uint32_t c = A.max_degree() + 1;
  std::uint32_t d = A.vars();

  ParamProfile pp;
  pp.d_seq.assign(c, 0);
  pp.w_seq.assign(c, 0);
  pp.e_seq.assign(c, 0);
  pp.layer_dims.assign(c, 0);
  for (std::uint32_t k = 0; k < c; ++k) {
    pp.layer_dims[k] = A.layer_size(k);
    ensure(pp.layer_dims[k] == binom_u64(k + d - 1, d - 1),
           "param_profile: layer dimension formula");
  }

  // Rows of the canonical basis grouped by pivot degree; the layer-k slices
  // of the rows with pivot degree k form a basis of V_k (image of I from
  // degree >= k in layer k).
  std::vector<std::vector<FpVec>> v_basis(c);
  const auto& rows = I.space.basis();
  const auto& pivs = I.space.pivots();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::uint32_t k = A.mono(pivs[r]).degree();
    FpVec slice(A.layer_size(k), A.p());
    for (std::uint32_t t = 0; t < A.layer_size(k); ++t)
      slice.set(t, rows[r].get(A.layer_begin(k) + t));
    v_basis[k].push_back(std::move(slice));
  }
  for (std::uint32_t k = 0; k < c; ++k) pp.d_seq[k] = std::uint32_t(v_basis[k].size());

  // W_k = span of x_i * V_{k-1}, computed in layer-k coordinates.
  for (std::uint32_t k = 1; k < c; ++k) {
    EchelonBasis w(A.field(), A.layer_size(k));
    EchelonBasis v(A.field(), A.layer_size(k));
    for (const auto& b : v_basis[k]) v.insert(b);
    for (const auto& b : v_basis[k - 1]) {
      for (std::uint32_t var = 0; var < d; ++var) {
        FpVec img(A.layer_size(k), A.p());
        for (std::uint32_t t = 0; t < A.layer_size(k - 1); ++t) {
          std::uint32_t cv = b.get(t);
          if (!cv) continue;
          std::uint32_t idx = A.mono_index(A.mono(A.layer_begin(k - 1) + t).times_var(var));
          ensure(idx != npos32 && A.mono(idx).degree() == k, "param_profile: shift left layer");
          img.set(idx - A.layer_begin(k), cv);
        }
        ensure(v.contains(img), "param_profile: shifted vector escapes V");
        w.insert(img);
      }
    }
    pp.w_seq[k] = w.rank();
  }
  for (std::uint32_t k = 0; k < c; ++k) {
    ensure(pp.d_seq[k] >= pp.w_seq[k], "param_profile: negative excess");
    pp.e_seq[k] = pp.d_seq[k] - pp.w_seq[k];
  }

  std::uint64_t col = 0;
  for (std::uint32_t k = 0; k < c; ++k) col += pp.layer_dims[k] - pp.d_seq[k];
  ensure(col == I.colength(), "param_profile: colength mismatch");
  pp.colength = col;
  return pp;
}

// d = 2 growth check: once a layer meets the ideal, the span of its shifts
// into the next layer is strictly larger.
inline bool check_generator_growth(const IdealSubspace& I) {
  const QuotientAlgebra& A = *I.alg;
  if (A.vars() != 2) throw std::invalid_argument("check_generator_growth: requires d = 2");
  ParamProfile pp = param_profile(I);
  std::uint32_t c = std::uint32_t(pp.d_seq.size());
  for (std::uint32_t k = 0; k + 1 < c; ++k)
    if (pp.d_seq[k] > 0 && pp.w_seq[k + 1] <= pp.d_seq[k]) return false;
  return true;
}

// d = 2: build the staircase whose profile is a given admissible d_seq.
// Admissible: d_k <= k+1, strict growth past the first positive entry, and
// the final entry fills its layer.  The staircase takes the d_k smallest
// x-degrees in each layer: generators x^a y^b with a <= d_{a+b} - 1.
inline Staircase realize_profile(const std::vector<std::uint32_t>& d_seq) {
  std::uint32_t len = std::uint32_t(d_seq.size());
  if (len == 0) throw std::invalid_argument("realize_profile: empty profile");
  for (std::uint32_t k = 0; k < len; ++k) {
    if (d_seq[k] > k + 1) throw std::invalid_argument("realize_profile: d_k exceeds layer");
    if (k + 1 < len && d_seq[k] > 0 && d_seq[k + 1] < d_seq[k] + 1)
      throw std::invalid_argument("realize_profile: profile not strictly growing");
  }
  if (d_seq[len - 1] != len)
    throw std::invalid_argument("realize_profile: profile must end with a full layer");

  std::vector<ExponentVector> outside;
  for (std::uint32_t k = 0; k + 1 < len; ++k)
    for (std::uint32_t a = d_seq[k]; a <= k; ++a)
      outside.push_back(ExponentVector({a, k - a}));
  return Staircase::from_downset(2, outside);
}

// All admissible d = 2 profiles with colength at most the cap: d_k <= k+1,
// strict growth past the first positive entry, final entry full.
inline std::vector<std::vector<std::uint32_t>> enumerate_admissible_profiles(
    std::uint64_t max_colength) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> seq;
  auto rec = [&](auto&& self, std::uint64_t colength) -> void {
    std::uint32_t k = std::uint32_t(seq.size());
    std::uint32_t lo = 0;
    if (!seq.empty() && seq.back() > 0) lo = seq.back() + 1;
    for (std::uint32_t dk = lo; dk <= k + 1; ++dk) {
      std::uint64_t col = colength + (k + 1 - dk);
      if (col > max_colength) continue;  // col shrinks as dk grows
      seq.push_back(dk);
      if (dk == k + 1)
        out.push_back(seq);  // full layer: profile complete
      else
        self(self, col);
      seq.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Group ideals by their initial staircase under the given order.
inline std::map<Staircase, std::uint64_t> stratify(const std::vector<IdealSubspace>& ideals,
                                                   const TermOrder& o) {
  std::map<Staircase, std::uint64_t> buckets;
  for (const auto& I : ideals) ++buckets[initial_ideal(I, o).initial];
  return buckets;
}

}  // namespace idgrow
