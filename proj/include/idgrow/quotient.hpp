#pragma once

// Finite-dimensional quotients A = F_p[x_1..x_d] / (cofinite monomial
// ideal).  The standard monomials (complement of the modulus staircase)
// form the basis, sorted ascending by a degree-refined local order, so
// basis indices are grouped into contiguous total-degree layers and the
// first nonzero coordinate of a vector is its leading monomial.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "count.hpp"
#include "monomial.hpp"
#include "staircase.hpp"

namespace idgrow {

class QuotientAlgebra {
 public:
  QuotientAlgebra(std::uint32_t p, std::uint32_t d, Staircase modulus,
                  TermOrder order, std::uint32_t dim_guard = 64)
      : F_(p), d_(d), modulus_(std::move(modulus)), order_(std::move(order)) {
    if (modulus_.dim() != d) throw std::invalid_argument("QuotientAlgebra: modulus dimension");
    if (order_.dim() != d) throw std::invalid_argument("QuotientAlgebra: order dimension");
    order_.validate();
    if (!modulus_.cofinite())
      throw std::invalid_argument("QuotientAlgebra: modulus must be cofinite");
    monos_ = modulus_.downset();
    if (monos_.size() > dim_guard) throw guard_error("QuotientAlgebra: dimension exceeds guard");
    std::sort(monos_.begin(), monos_.end(),
              [&](const ExponentVector& a, const ExponentVector& b) { return order_.less(a, b); });
    for (std::uint32_t i = 0; i < monos_.size(); ++i) index_[monos_[i]] = i;

    max_degree_ = 0;
    for (const auto& m : monos_) max_degree_ = std::max(max_degree_, m.degree());
    layer_start_.assign(max_degree_ + 2, std::uint32_t(monos_.size()));
    for (std::uint32_t i = 0; i < monos_.size(); ++i) {
      std::uint32_t deg = monos_[i].degree();
      layer_start_[deg] = std::min(layer_start_[deg], i);
    }
    // Layers are contiguous under a degree-refined order.
    for (std::uint32_t i = 0; i < monos_.size(); ++i)
      ensure(monos_[i].degree() <= monos_[std::min<std::size_t>(i + 1, monos_.size() - 1)].degree(),
             "QuotientAlgebra: basis not degree-sorted");

    var_shift_.assign(d_, std::vector<std::uint32_t>(monos_.size(), npos32));
    for (std::uint32_t v = 0; v < d_; ++v)
      for (std::uint32_t i = 0; i < monos_.size(); ++i) {
        auto it = index_.find(monos_[i].times_var(v));
        if (it != index_.end()) var_shift_[v][i] = it->second;
      }

    prod_.assign(std::size_t(monos_.size()) * monos_.size(), npos32);
    for (std::uint32_t i = 0; i < monos_.size(); ++i)
      for (std::uint32_t j = 0; j <= i; ++j) {
        auto it = index_.find(monos_[i].plus(monos_[j]));
        std::uint32_t k = it == index_.end() ? npos32 : it->second;
        prod_[std::size_t(i) * monos_.size() + j] = k;
        prod_[std::size_t(j) * monos_.size() + i] = k;
      }
  }

  const PrimeField& field() const { return F_; }
  std::uint32_t p() const { return F_.p(); }
  std::uint32_t vars() const { return d_; }
  std::uint32_t dim() const { return std::uint32_t(monos_.size()); }
  const Staircase& modulus() const { return modulus_; }
  const TermOrder& order() const { return order_; }
  std::uint32_t max_degree() const { return max_degree_; }

  const ExponentVector& mono(std::uint32_t i) const { return monos_[i]; }
  std::uint32_t mono_index(const ExponentVector& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? npos32 : it->second;
  }

  // First basis index of total degree deg (== dim() when layer empty).
  std::uint32_t layer_begin(std::uint32_t deg) const {
    return deg > max_degree_ ? dim() : layer_start_[deg];
  }
  std::uint32_t layer_end(std::uint32_t deg) const { return layer_begin(deg + 1); }
  std::uint32_t layer_size(std::uint32_t deg) const {
    return layer_end(deg) - layer_begin(deg);
  }

  // Is the modulus m^c for some c >= 1?
  bool modulus_is_maximal_power() const {
    std::uint32_t c = max_degree_ + 1;
    return modulus_ == Staircase::power_of_maximal(d_, c);
  }

  FpVec zero_vec() const { return FpVec(dim(), p()); }
  FpVec unit_vec(std::uint32_t i) const {
    FpVec v(dim(), p());
    v.set(i, 1);
    return v;
  }

  FpVec multiply(const FpVec& a, const FpVec& b) const {
    FpVec out(dim(), p());
    for (std::uint32_t i = 0; i < dim(); ++i) {
      std::uint32_t av = a.get(i);
      if (!av) continue;
      for (std::uint32_t j = 0; j < dim(); ++j) {
        std::uint32_t bv = b.get(j);
        if (!bv) continue;
        std::uint32_t k = prod_[std::size_t(i) * dim() + j];
        if (k != npos32) out.set(k, F_.add(out.get(k), F_.mul(av, bv)));
      }
    }
    return out;
  }

  FpVec multiply_by_var(std::uint32_t var, const FpVec& a) const {
    FpVec out(dim(), p());
    for (std::uint32_t i = 0; i < dim(); ++i) {
      std::uint32_t av = a.get(i);
      if (!av) continue;
      std::uint32_t k = var_shift_[var][i];
      if (k != npos32) out.set(k, F_.add(out.get(k), av));
    }
    return out;
  }

  // a * (monomial given by exponent vector m); zero if m lies in the modulus.
  FpVec multiply_by_mono(const ExponentVector& m, const FpVec& a) const {
    FpVec out(dim(), p());
    for (std::uint32_t i = 0; i < dim(); ++i) {
      std::uint32_t av = a.get(i);
      if (!av) continue;
      std::uint32_t k = mono_index(monos_[i].plus(m));
      if (k != npos32) out.set(k, av);
    }
    return out;
  }

  // Multiplicative inverse of a unit (nonzero constant coefficient).
  FpVec invert_unit(const FpVec& a) const {
    std::uint32_t c0 = a.get(0);
    ensure(monos_[0].degree() == 0, "QuotientAlgebra: basis must start at 1");
    if (c0 == 0) throw std::invalid_argument("invert_unit: not a unit");
    // a = c0 (1 + mu) with mu nilpotent; invert by the finite Neumann series.
    FpVec neg_mu = a;
    neg_mu.scale(F_.neg(F_.inv(c0)), F_);
    neg_mu.set(0, 0);
    FpVec inv = unit_vec(0);
    FpVec term = unit_vec(0);
    for (std::uint32_t k = 0; k <= max_degree_; ++k) {
      term = multiply(term, neg_mu);
      if (term.is_zero()) break;
      inv.axpy(1, term, F_);
    }
    inv.scale(F_.inv(c0), F_);
    ensure(multiply(inv, a) == unit_vec(0), "invert_unit: inverse check failed");
    return inv;
  }

 private:
  PrimeField F_;
  std::uint32_t d_;
  Staircase modulus_;
  TermOrder order_;
  std::vector<ExponentVector> monos_;
  std::unordered_map<ExponentVector, std::uint32_t, ExponentVectorHash> index_;
  std::vector<std::uint32_t> layer_start_;
  std::vector<std::vector<std::uint32_t>> var_shift_;
  std::vector<std::uint32_t> prod_;
  std::uint32_t max_degree_ = 0;
};

// Element of a quotient algebra (coordinates over the standard monomials).
struct RingElement {
  const QuotientAlgebra* alg = nullptr;
  FpVec c;

  RingElement() = default;
  RingElement(const QuotientAlgebra& a, FpVec v) : alg(&a), c(std::move(v)) {}

  static RingElement zero(const QuotientAlgebra& a) { return RingElement(a, a.zero_vec()); }
  static RingElement monomial(const QuotientAlgebra& a, const ExponentVector& m,
                              std::uint32_t coeff = 1) {
    FpVec v = a.zero_vec();
    std::uint32_t i = a.mono_index(m);
    if (i != npos32) v.set(i, coeff % a.p());
    return RingElement(a, std::move(v));
  }

  bool is_zero() const { return c.is_zero(); }
  RingElement operator*(const RingElement& o) const {
    return RingElement(*alg, alg->multiply(c, o.c));
  }
  RingElement operator+(const RingElement& o) const {
    FpVec v = c;
    v.axpy(1, o.c, alg->field());
    return RingElement(*alg, std::move(v));
  }
  RingElement operator-(const RingElement& o) const {
    FpVec v = c;
    v.axpy(alg->field().neg(1), o.c, alg->field());
    return RingElement(*alg, std::move(v));
  }
};

// An ideal of A represented as a subspace closed under multiplication by
// every variable.
struct IdealSubspace {
  const QuotientAlgebra* alg = nullptr;
  SubspaceFp space;

  IdealSubspace() = default;
  IdealSubspace(const QuotientAlgebra& a, SubspaceFp s, bool verify = true)
      : alg(&a), space(std::move(s)) {
    if (verify)
      ensure(is_closed(), "IdealSubspace: subspace not closed under variable multiplication");
  }

  bool is_closed() const {
    for (const auto& b : space.basis())
      for (std::uint32_t v = 0; v < alg->vars(); ++v)
        if (!space.contains(alg->multiply_by_var(v, b))) return false;
    return true;
  }

  std::uint64_t colength() const { return alg->dim() - space.rank(); }

  bool contains(const FpVec& v) const { return space.contains(v); }
  bool operator==(const IdealSubspace& o) const { return space == o.space; }
};

// Smallest ideal of A containing the given elements.
inline IdealSubspace ideal_closure(const QuotientAlgebra& A,
                                   const std::vector<FpVec>& gens) {
  EchelonBasis eb(A.field(), A.dim());
  std::vector<FpVec> work;
  for (const auto& g : gens)
    if (eb.insert(g)) work.push_back(g);
  while (!work.empty()) {
    FpVec v = std::move(work.back());
    work.pop_back();
    for (std::uint32_t var = 0; var < A.vars(); ++var) {
      FpVec img = A.multiply_by_var(var, v);
      if (eb.insert(img)) work.push_back(std::move(img));
    }
  }
  return IdealSubspace(A, SubspaceFp(std::move(eb)), /*verify=*/true);
}

inline QuotientAlgebra build_algebra(std::uint32_t p, std::uint32_t d, std::uint32_t c,
                                     std::uint32_t dim_guard = 64) {
  return QuotientAlgebra(p, d, Staircase::power_of_maximal(d, c), TermOrder::standard(d),
                         dim_guard);
}

}  // namespace idgrow
