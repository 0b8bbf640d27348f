#pragma once

// Exact counts with a base-p logarithm alongside.  Counts of subspaces,
// ideals and subgroups grow like p^(cN^a), so the log is the quantity the
// growth experiments actually consume; the exact value guards against
// rounding stories.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "fp.hpp"

namespace idgrow {

struct CountValue {
  mpz_class exact = 0;
  double log_p = 0.0;  // log base p of exact; -inf for 0

  static CountValue from_exact(mpz_class v, std::uint32_t p) {
    CountValue c;
    c.exact = std::move(v);
    if (c.exact == 0) {
      c.log_p = -std::numeric_limits<double>::infinity();
    } else {
      signed long exp2;
      double d = mpz_get_d_2exp(&exp2, c.exact.get_mpz_t());
      // exact = d * 2^exp2 with 0.5 <= d < 1
      c.log_p = (std::log2(d) + double(exp2)) / std::log2(double(p));
    }
    return c;
  }

  static CountValue p_power(std::uint32_t p, unsigned long k) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), p, k);
    return from_exact(std::move(v), p);
  }
};

// Number of k-dimensional subspaces of F_p^n.
inline CountValue gaussian_binomial(std::uint32_t n, std::uint32_t k, std::uint32_t p) {
  if (k > n) return CountValue::from_exact(0, p);
  mpz_class num = 1, den = 1, pk;
  for (std::uint32_t i = 0; i < k; ++i) {
    mpz_ui_pow_ui(pk.get_mpz_t(), p, n - i);
    num *= pk - 1;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, i + 1);
    den *= pk - 1;
  }
  mpz_class q = num / den;
  ensure(q * den == num, "gaussian_binomial: inexact division");
  return CountValue::from_exact(std::move(q), p);
}

// Enumerate all k-dimensional subspaces of F_p^n in their canonical RREF
// form, by pivot pattern (lexicographic) and then free-entry odometer.
// The guard bounds the number of subspaces visited.
inline void for_each_subspace(std::uint32_t n, std::uint32_t k, const PrimeField& F,
                              const std::function<void(const SubspaceFp&)>& fn,
                              std::uint64_t guard = 10'000'000) {
  std::uint32_t p = F.p();
  CountValue total = gaussian_binomial(n, k, p);
  if (total.exact > guard)
    throw guard_error("for_each_subspace: count exceeds guard");
  if (k > n) return;

  std::vector<std::uint32_t> piv(k);
  for (std::uint32_t i = 0; i < k; ++i) piv[i] = i;

  auto emit_pattern = [&](const std::vector<std::uint32_t>& pv) {
    // Free positions: (row i, col j) with j > pv[i] and j not a pivot.
    std::vector<bool> is_piv(n, false);
    for (auto c : pv) is_piv[c] = true;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> free_pos;
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = pv[i] + 1; j < n; ++j)
        if (!is_piv[j]) free_pos.push_back({i, j});

    std::vector<std::uint32_t> digits(free_pos.size(), 0);
    for (;;) {
      EchelonBasis eb(F, n);
      {
        std::vector<FpVec> rows(k, FpVec(n, p));
        for (std::uint32_t i = 0; i < k; ++i) rows[i].set(pv[i], 1);
        for (std::size_t t = 0; t < free_pos.size(); ++t)
          rows[free_pos[t].first].set(free_pos[t].second, digits[t]);
        for (auto& r : rows) eb.insert(std::move(r));
      }
      SubspaceFp s(std::move(eb));
      ensure(s.rank() == k, "for_each_subspace: rank mismatch");
      fn(s);

      std::size_t t = 0;
      while (t < digits.size() && digits[t] + 1 == p) digits[t++] = 0;
      if (t == digits.size()) break;
      ++digits[t];
    }
  };

  // Iterate k-combinations of {0..n-1} in lexicographic order.
  if (k == 0) {
    emit_pattern({});
    return;
  }
  for (;;) {
    emit_pattern(piv);
    std::int64_t i = std::int64_t(k) - 1;
    while (i >= 0 && piv[std::size_t(i)] == n - k + std::uint32_t(i)) --i;
    if (i < 0) break;
    ++piv[std::size_t(i)];
    for (std::size_t j = std::size_t(i) + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
}

inline std::vector<SubspaceFp> enumerate_subspaces(std::uint32_t n, std::uint32_t k,
                                                   const PrimeField& F,
                                                   std::uint64_t guard = 10'000'000) {
  std::vector<SubspaceFp> out;
  for_each_subspace(n, k, F, [&](const SubspaceFp& s) { out.push_back(s); }, guard);
  return out;
}

}  // namespace idgrow
