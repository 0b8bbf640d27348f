#pragma once

// Top-down enumeration of subspaces closed under a family of nilpotent
// linear operators.  The children of a closed subspace V are the
// hyperplanes of V that contain op_span(V) = sum_i op_i(V); such a
// hyperplane is again closed.  Every closed subspace of codimension k+1 is
// a child of some closed subspace of codimension k (the operators act
// nilpotently, so every nonzero quotient has a nonzero common kernel),
// hence level-by-level BFS from the full space reaches everything.
//
// Instantiated with multiplication by the variables this enumerates ideals
// of a local quotient algebra; with adjoint operators it enumerates Lie
// ideals.

#include <cstdint>
#include <map>
#include <vector>

#include "count.hpp"
#include "quotient.hpp"

namespace idgrow {

using OpFamily = std::function<std::vector<FpVec>(const FpVec&)>;

// Visit all closed subspaces of codimension <= max_codim inside `start`
// (which must itself be closed).  emit(codim, subspace) is called once per
// subspace; per-level order is deterministic (sorted canonical keys).
inline void for_each_closed_subspace(const PrimeField& F, std::uint32_t ambient,
                                     const SubspaceFp& start, const OpFamily& ops,
                                     std::uint32_t max_codim,
                                     const std::function<void(std::uint32_t, const SubspaceFp&)>& emit,
                                     std::uint64_t node_guard = 5'000'000) {
  std::uint32_t p = F.p();
  std::map<std::vector<std::uint64_t>, SubspaceFp> level;
  level.emplace(start.key(), start);
  emit(0, start);
  std::uint64_t nodes = 1;

  for (std::uint32_t codim = 1; codim <= max_codim && !level.empty(); ++codim) {
    std::map<std::vector<std::uint64_t>, SubspaceFp> next;
    for (const auto& [key, V] : level) {
      // op_span(V), inside V.
      EchelonBasis u(F, ambient);
      for (const auto& b : V.basis())
        for (const auto& img : ops(b)) {
          ensure(V.contains(img), "for_each_closed_subspace: start not closed");
          u.insert(img);
        }
      // Complete u's basis to V's by greedily absorbing V's rows; the rows
      // that grow the rank span a complement W of op_span(V) in V.
      std::vector<FpVec> W;
      {
        EchelonBasis ext(F, ambient);
        for (const auto& r : u.rows()) ext.insert(r);
        for (const auto& r : V.basis())
          if (ext.insert(r)) W.push_back(r);
      }
      std::uint32_t q = std::uint32_t(W.size());
      if (q == 0) continue;  // only possible for V = 0

      // Hyperplanes of V containing op_span(V) <-> functionals on the
      // q-dimensional complement, normalized so the first nonzero entry
      // is 1.
      for (std::uint32_t j = 0; j < q; ++j) {
        std::vector<std::uint32_t> tail(q - 1 - j, 0);
        for (;;) {
          EchelonBasis child(F, ambient);
          for (const auto& r : u.rows()) child.insert(r);
          for (std::uint32_t i = 0; i < j; ++i) child.insert(W[i]);
          for (std::uint32_t i = j + 1; i < q; ++i) {
            FpVec v = W[i];
            std::uint32_t lam = tail[i - j - 1];
            if (lam) v.axpy(F.neg(lam), W[j], F);
            child.insert(v);
          }
          SubspaceFp cs(std::move(child));
          ensure(cs.rank() + codim == start.rank(),
                 "for_each_closed_subspace: child rank mismatch");
          if (++nodes > node_guard)
            throw guard_error("for_each_closed_subspace: node guard exceeded");
          next.emplace(cs.key(), std::move(cs));

          std::size_t t = 0;
          while (t < tail.size() && tail[t] + 1 == p) tail[t++] = 0;
          if (t == tail.size()) break;
          ++tail[t];
        }
      }
    }
    level = std::move(next);
    for (const auto& [key, V] : level) emit(codim, V);
  }
}

// All ideals of A of colength exactly n.
inline std::vector<IdealSubspace> enumerate_ideals(const QuotientAlgebra& A, std::uint32_t n,
                                                   std::uint64_t node_guard = 5'000'000) {
  if (n > A.dim()) return {};
  OpFamily ops = [&A](const FpVec& v) {
    std::vector<FpVec> out;
    out.reserve(A.vars());
    for (std::uint32_t var = 0; var < A.vars(); ++var)
      out.push_back(A.multiply_by_var(var, v));
    return out;
  };
  std::vector<IdealSubspace> out;
  for_each_closed_subspace(
      A.field(), A.dim(), SubspaceFp::full(A.field(), A.dim()), ops, n,
      [&](std::uint32_t codim, const SubspaceFp& s) {
        if (codim == n) out.push_back(IdealSubspace(A, s, /*verify=*/true));
      },
      node_guard);
  // Every colength-n ideal contains the image of m^n: basis monomials of
  // degree >= n must lie in each.
  for (const auto& I : out)
    for (std::uint32_t i = A.layer_begin(n); i < A.dim(); ++i)
      ensure(I.space.contains(A.unit_vec(i)), "enumerate_ideals: m^n containment failed");
  return out;
}

// Number of ideals of colength n of F_p[[x_1..x_d]], computed in the
// truncation R/m^max(n,1).
inline CountValue count_ideals(std::uint32_t p, std::uint32_t d, std::uint32_t n,
                               std::uint32_t dim_guard = 64,
                               std::uint64_t node_guard = 5'000'000) {
  if (n == 0) return CountValue::from_exact(1, p);
  QuotientAlgebra A = build_algebra(p, d, n, dim_guard);
  std::uint64_t cnt = enumerate_ideals(A, n, node_guard).size();
  return CountValue::from_exact(mpz_class(static_cast<unsigned long>(cnt)), p);
}

}  // namespace idgrow
