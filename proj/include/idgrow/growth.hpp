#pragma once

// Quantitative growth engines.
//
// Lower bound: a family of perturbed monomial ideals.  Starting from the
// degree-m monomials that are not pure powers of x_1, each generator is
// perturbed by a univariate polynomial in x_1 supported in degrees
// (m, n_tilde); the cutoff n_tilde is chosen so the intended staircase has
// colength exactly n.  Whether a perturbation really yields colength n with
// the intended initial ideal is *measured* (S-pair reductions can create
// smaller leading terms), so the census reports a valid fraction rather
// than asserting one.
//
// Upper bound: the per-profile bound
//   prod_n gauss(layer_n - d_n + e_n, e_n)_p * p^(sum_n e_n * sum_{m>n}(layer_m - d_m)).

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "count.hpp"
#include "ideal_enum.hpp"
#include "initial.hpp"
#include "quotient.hpp"
#include "staircase.hpp"

namespace idgrow {

struct PhiFamilySpec {
  std::uint32_t n = 0, d = 0, p = 0;
  std::uint32_t m = 0;        // largest m with 3 m^d <= 2n
  std::uint32_t n_tilde = 0;  // pure-power cutoff forcing colength n
  std::vector<ExponentVector> X;
  Staircase baseline;
  CountValue claimed;  // p^((n_tilde - m - 1) |X|)
};

inline PhiFamilySpec build_family_spec(std::uint32_t n, std::uint32_t d, std::uint32_t p) {
  if (d < 1) throw std::invalid_argument("build_family_spec: d must be >= 1");
  PhiFamilySpec spec;
  spec.n = n;
  spec.d = d;
  spec.p = p;

  std::uint32_t m = 0;
  for (std::uint32_t t = 1;; ++t) {
    std::uint64_t power = 1;
    for (std::uint32_t i = 0; i < d; ++i) power *= t;
    if (3 * power <= 2 * std::uint64_t(n))
      m = t;
    else
      break;
  }
  if (m < 2) throw std::invalid_argument("build_family_spec: n too small (m < 2)");
  spec.m = m;

  std::uint64_t below = binom_u64(m + d - 1, d);  // monomials of degree < m
  if (std::uint64_t(n) + m <= below + m + 1)
    throw std::invalid_argument("build_family_spec: n too small (cutoff <= m+1)");
  spec.n_tilde = std::uint32_t(n - below + m);
  ensure(spec.n_tilde > m + 1, "build_family_spec: cutoff check");

  for (auto& ev : exponents_of_degree(d, m))
    if (ev.e[0] != m) spec.X.push_back(ev);
  if (d == 2) ensure(spec.X.size() == m, "build_family_spec: |X| = m in d = 2");

  std::vector<ExponentVector> gens = spec.X;
  std::vector<std::uint32_t> pure(d, 0);
  pure[0] = spec.n_tilde;
  gens.push_back(ExponentVector(pure));
  spec.baseline = Staircase(d, std::move(gens));
  ensure(spec.baseline.colength() == n, "build_family_spec: baseline colength");

  unsigned long freedoms =
      static_cast<unsigned long>(spec.X.size()) * (spec.n_tilde - m - 1);
  spec.claimed = CountValue::p_power(p, freedoms);
  return spec;
}

// One coefficient per (generator, degree) pair; degrees run m+1 .. n_tilde-1.
struct PhiAssignment {
  std::vector<std::vector<std::uint32_t>> coeffs;  // [|X|][n_tilde - m - 1]
};

struct InstantiatedIdeal {
  IdealSubspace ideal;
  std::uint64_t colength = 0;
  bool valid = false;
};

// Closure of the perturbed generators in R/m^(n+1).  Note the pure power
// x_1^n_tilde is *not* a generator: whether it lands in the closure is part
// of what validity measures.
inline InstantiatedIdeal instantiate_ideal(const PhiFamilySpec& spec, const PhiAssignment& phi,
                                           const QuotientAlgebra& A) {
  ensure(A.p() == spec.p && A.vars() == spec.d, "instantiate_ideal: algebra mismatch");
  ensure(A.max_degree() + 1 == spec.n + 1, "instantiate_ideal: modulus must be m^(n+1)");
  if (phi.coeffs.size() != spec.X.size())
    throw std::invalid_argument("instantiate_ideal: assignment arity");
  std::uint32_t window = spec.n_tilde - spec.m - 1;

  std::vector<FpVec> gens;
  for (std::size_t i = 0; i < spec.X.size(); ++i) {
    if (phi.coeffs[i].size() != window)
      throw std::invalid_argument("instantiate_ideal: degree window mismatch");
    RingElement g = RingElement::monomial(A, spec.X[i]);
    for (std::uint32_t j = 0; j < window; ++j) {
      std::uint32_t cv = phi.coeffs[i][j] % spec.p;
      if (!cv) continue;
      std::vector<std::uint32_t> e(spec.d, 0);
      e[0] = spec.m + 1 + j;
      g = g + RingElement::monomial(A, ExponentVector(std::move(e)), cv);
    }
    gens.push_back(g.c);
  }

  InstantiatedIdeal out;
  out.ideal = ideal_closure(A, gens);
  out.colength = out.ideal.colength();
  out.valid = out.colength == spec.n &&
              initial_ideal(out.ideal, A.order()).initial == spec.baseline;
  return out;
}

struct CensusReport {
  CountValue claimed;
  std::uint64_t checked = 0;
  std::uint64_t valid = 0;
  bool injective_on_valid = true;
  bool sampled = false;
  std::uint64_t distinct_phi = 0;  // distinct assignments among checked
};

// Iterate assignments (all of them when the family size fits the guard,
// otherwise a seeded uniform sample) and measure validity, distinctness of
// the valid ideals, and injectivity of phi -> I_phi on the valid set.
inline CensusReport family_census(const PhiFamilySpec& spec, std::uint64_t guard = 1'000'000,
                                  std::uint64_t sample = 0, std::uint64_t seed = 0) {
  CensusReport rep;
  rep.claimed = spec.claimed;

  std::uint32_t window = spec.n_tilde - spec.m - 1;
  std::size_t digits = spec.X.size() * window;
  bool exhaustive = sample == 0 && rep.claimed.exact <= guard;
  rep.sampled = !exhaustive;

  std::uint32_t algebra_dim_guard =
      std::uint32_t(std::max<std::uint64_t>(64, binom_u64(spec.n + spec.d, spec.d)));
  QuotientAlgebra A = build_algebra(spec.p, spec.d, spec.n + 1, algebra_dim_guard);

  std::set<std::vector<std::uint64_t>> valid_keys;
  std::set<std::vector<std::uint32_t>> seen_phi;
  std::uint64_t valid_distinct_phi = 0;

  auto check = [&](const std::vector<std::uint32_t>& digit_vec) {
    PhiAssignment phi;
    phi.coeffs.assign(spec.X.size(), std::vector<std::uint32_t>(window, 0));
    for (std::size_t t = 0; t < digits; ++t)
      phi.coeffs[t / window][t % window] = digit_vec[t];
    InstantiatedIdeal inst = instantiate_ideal(spec, phi, A);
    ++rep.checked;
    bool new_phi = seen_phi.insert(digit_vec).second;
    if (new_phi) ++rep.distinct_phi;
    if (inst.valid) {
      ++rep.valid;
      if (new_phi) {
        ++valid_distinct_phi;
        valid_keys.insert(inst.ideal.space.key());
      }
    }
  };

  if (exhaustive) {
    std::vector<std::uint32_t> dv(digits, 0);
    for (;;) {
      check(dv);
      std::size_t t = 0;
      while (t < digits && dv[t] + 1 == spec.p) dv[t++] = 0;
      if (t == digits) break;
      ++dv[t];
    }
  } else {
    std::uint64_t draws = sample ? sample : 1024;
    std::mt19937_64 rng(seed);
    for (std::uint64_t it = 0; it < draws; ++it) {
      std::vector<std::uint32_t> dv(digits);
      for (auto& x : dv) x = std::uint32_t(rng() % spec.p);
      check(dv);
    }
  }

  rep.injective_on_valid = valid_keys.size() == valid_distinct_phi;
  return rep;
}

// Per-profile upper bound on the number of ideals realizing the profile:
//   prod_n gauss(layer_n - d_n + e_n, e_n)_p * p^(sum_n e_n sum_{m>n} (layer_m - d_m)).
inline CountValue upper_bound_value(const ParamProfile& profile, std::uint32_t p) {
  std::size_t c = profile.d_seq.size();
  if (profile.e_seq.size() != c || profile.layer_dims.size() != c)
    throw std::invalid_argument("upper_bound_value: ragged profile");
  mpz_class total = 1;
  unsigned long exponent = 0;
  for (std::size_t k = 0; k < c; ++k) {
    if (profile.d_seq[k] > profile.layer_dims[k] || profile.e_seq[k] > profile.d_seq[k])
      throw std::invalid_argument("upper_bound_value: inconsistent profile");
    std::uint32_t nn = profile.layer_dims[k] - profile.d_seq[k] + profile.e_seq[k];
    total *= gaussian_binomial(nn, profile.e_seq[k], p).exact;
    unsigned long tail = 0;
    for (std::size_t mdeg = k + 1; mdeg < c; ++mdeg)
      tail += profile.layer_dims[mdeg] - profile.d_seq[mdeg];
    exponent += profile.e_seq[k] * tail;
  }
  mpz_class pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), p, exponent);
  total *= pw;
  return CountValue::from_exact(std::move(total), p);
}

}  // namespace idgrow
