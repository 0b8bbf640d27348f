#pragma once

// sl_2 over a finite local quotient A, restricted to the sub-Lie-algebra
// sl_2(m) of matrices with entries in the maximal ideal.  Elements are
// coordinatized as (a, b, c) <-> [[a, b], [c, -a]]; the bracket is
//   [X, Y] = (b1 c2 - b2 c1,  2(a1 b2 - a2 b1),  2(c1 a2 - c2 a1)).
// p = 2 is rejected: the 2s in the bracket identities degenerate.

#include <cstdint>
#include <vector>

#include "ideal_enum.hpp"
#include "quotient.hpp"

namespace idgrow {

class Sl2Algebra {
 public:
  explicit Sl2Algebra(const QuotientAlgebra& A) : A_(&A) {
    if (A.p() == 2) throw std::invalid_argument("Sl2Algebra: p = 2 is not supported");
    ensure(A.mono(0).degree() == 0, "Sl2Algebra: basis must start at 1");
    m_dim_ = A.dim() - 1;
  }

  const QuotientAlgebra& base() const { return *A_; }
  std::uint32_t m_dim() const { return m_dim_; }
  std::uint32_t dim() const { return 3 * m_dim_; }  // dim of sl_2(m)
  std::uint32_t p() const { return A_->p(); }

  // Block t (0=a, 1=b, 2=c) of v, lifted to full algebra coordinates.
  FpVec block(const FpVec& v, std::uint32_t t) const {
    FpVec out = A_->zero_vec();
    for (std::uint32_t i = 0; i < m_dim_; ++i) out.set(i + 1, v.get(t * m_dim_ + i));
    return out;
  }

  // Assemble coordinates from algebra elements (which must lie in m).
  FpVec assemble(const FpVec& a, const FpVec& b, const FpVec& c) const {
    ensure(a.get(0) == 0 && b.get(0) == 0 && c.get(0) == 0, "Sl2Algebra: entries must lie in m");
    FpVec v(dim(), p());
    for (std::uint32_t i = 0; i < m_dim_; ++i) {
      v.set(i, a.get(i + 1));
      v.set(m_dim_ + i, b.get(i + 1));
      v.set(2 * m_dim_ + i, c.get(i + 1));
    }
    return v;
  }

  FpVec bracket(const FpVec& u, const FpVec& v) const {
    const auto& F = A_->field();
    FpVec a1 = block(u, 0), b1 = block(u, 1), c1 = block(u, 2);
    FpVec a2 = block(v, 0), b2 = block(v, 1), c2 = block(v, 2);
    // a' = b1 c2 - b2 c1
    FpVec ap = A_->multiply(b1, c2);
    ap.axpy(F.neg(1), A_->multiply(b2, c1), F);
    // b' = 2 (a1 b2 - a2 b1)
    FpVec bp = A_->multiply(a1, b2);
    bp.axpy(F.neg(1), A_->multiply(a2, b1), F);
    bp.scale(F.add(1, 1), F);
    // c' = 2 (c1 a2 - c2 a1)
    FpVec cp = A_->multiply(c1, a2);
    cp.axpy(F.neg(1), A_->multiply(c2, a1), F);
    cp.scale(F.add(1, 1), F);
    return assemble(ap, bp, cp);
  }

  std::vector<FpVec> spanning_set() const {
    std::vector<FpVec> out;
    for (std::uint32_t i = 0; i < dim(); ++i) {
      FpVec v(dim(), p());
      v.set(i, 1);
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  const QuotientAlgebra* A_ = nullptr;
  std::uint32_t m_dim_ = 0;
};

struct LieIdeal {
  const Sl2Algebra* alg = nullptr;
  SubspaceFp space;

  LieIdeal() = default;
  LieIdeal(const Sl2Algebra& L, SubspaceFp s, bool verify = true)
      : alg(&L), space(std::move(s)) {
    if (verify) ensure(is_closed(), "LieIdeal: not closed under bracket");
  }

  bool is_closed() const {
    for (const auto& b : space.basis())
      for (const auto& g : alg->spanning_set())
        if (!space.contains(alg->bracket(b, g))) return false;
    return true;
  }

  std::uint32_t codim() const { return alg->dim() - space.rank(); }
};

// All Lie ideals of sl_2(m) of codimension <= max_codim, via the closed-
// subspace BFS (children = hyperplanes containing the bracket span; the
// quotient of a nilpotent Lie algebra has nonzero center, so BFS levels are
// complete).
inline std::vector<LieIdeal> enumerate_lie_ideals(const Sl2Algebra& L, std::uint32_t max_codim,
                                                  std::uint64_t node_guard = 5'000'000) {
  auto gens = L.spanning_set();
  OpFamily ops = [&L, gens](const FpVec& v) {
    std::vector<FpVec> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(L.bracket(v, g));
    return out;
  };
  std::vector<LieIdeal> out;
  for_each_closed_subspace(
      PrimeField(L.p()), L.dim(), SubspaceFp::full(PrimeField(L.p()), L.dim()), ops,
      std::min(max_codim, L.dim()),
      [&](std::uint32_t, const SubspaceFp& s) { out.push_back(LieIdeal(L, s, /*verify=*/true)); },
      node_guard);
  return out;
}

// Ideal of A generated by all matrix entries of elements of the Lie ideal.
inline IdealSubspace entry_ideal(const Sl2Algebra& L, const SubspaceFp& J) {
  std::vector<FpVec> entries;
  for (const auto& b : J.basis())
    for (std::uint32_t t = 0; t < 3; ++t) entries.push_back(L.block(b, t));
  return ideal_closure(L.base(), entries);
}

// sl_2(I) inside sl_2(m), as a subspace: blockwise copies of I's basis.
inline SubspaceFp sl2_of_ideal(const Sl2Algebra& L, const IdealSubspace& I) {
  ensure(I.alg == &L.base(), "sl2_of_ideal: algebra mismatch");
  std::vector<FpVec> vecs;
  const FpVec zero = L.base().zero_vec();
  for (const auto& b : I.space.basis()) {
    ensure(b.get(0) == 0, "sl2_of_ideal: ideal not inside m");
    vecs.push_back(L.assemble(b, zero, zero));
    vecs.push_back(L.assemble(zero, b, zero));
    vecs.push_back(L.assemble(zero, zero, b));
  }
  return SubspaceFp::span(L.base().field(), L.dim(), vecs);
}

// Image of m^3 * I in A.
inline IdealSubspace cube_times(const QuotientAlgebra& A, const IdealSubspace& I) {
  std::vector<FpVec> prods;
  for (std::uint32_t i = 0; i < A.dim(); ++i) {
    if (A.mono(i).degree() < 3) continue;
    for (const auto& b : I.space.basis()) prods.push_back(A.multiply(A.unit_vec(i), b));
  }
  return ideal_closure(A, prods);
}

// Index of sl_2(I) in sl_2(m) (equivalently of the congruence subgroup):
// p^(3 (dim m - dim I)).
inline CountValue congruence_index(const QuotientAlgebra& A, const IdealSubspace& I) {
  if (I.alg != &A) throw std::invalid_argument("congruence_index: algebra mismatch");
  for (const auto& b : I.space.basis())
    if (b.get(0) != 0) throw std::invalid_argument("congruence_index: ideal not contained in m");
  std::uint32_t m_dim = A.dim() - 1;
  return CountValue::p_power(A.p(), 3ul * (m_dim - I.space.rank()));
}

// sl_2(J) >= Jfrak >= sl_2(m^3 J) with J the entry ideal of Jfrak.
inline bool lie_sandwich_check(const LieIdeal& Jfrak) {
  const Sl2Algebra& L = *Jfrak.alg;
  IdealSubspace J = entry_ideal(L, Jfrak.space);
  // Upper containment: every block of every element lies in J.
  for (const auto& b : Jfrak.space.basis())
    for (std::uint32_t t = 0; t < 3; ++t)
      if (!J.space.contains(L.block(b, t))) return false;
  // Lower containment: sl_2(m^3 J) inside the Lie ideal.
  SubspaceFp lower = sl2_of_ideal(L, cube_times(L.base(), J));
  for (const auto& b : lower.basis())
    if (!Jfrak.space.contains(b)) return false;
  return true;
}

}  // namespace idgrow
