#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <idgrow/count.hpp>
#include <idgrow/fp.hpp>

#include "oracles.hpp"

using namespace idgrow;

TEST_CASE("prime field arithmetic") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    PrimeField F(p);
    for (std::uint32_t a = 0; a < p; ++a) {
      REQUIRE(F.add(a, F.neg(a)) == 0);
      if (a) REQUIRE(F.mul(a, F.inv(a)) == 1);
      for (std::uint32_t b = 0; b < p; ++b) {
        REQUIRE(F.add(a, b) == (a + b) % p);
        REQUIRE(F.sub(a, b) == (a + p - b) % p);
        REQUIRE(F.mul(a, b) == (a * b) % p);
      }
    }
  }
  REQUIRE_THROWS_AS(PrimeField(4), std::invalid_argument);
  REQUIRE_THROWS_AS(PrimeField(1), std::invalid_argument);
  PrimeField F3(3);
  REQUIRE_THROWS_AS(F3.inv(0), std::invalid_argument);
}

TEST_CASE("packed vector get/set round trip") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 31u}) {
    FpVec v(100, p);
    for (std::uint32_t i = 0; i < 100; ++i) v.set(i, (i * 7 + 1) % p);
    for (std::uint32_t i = 0; i < 100; ++i) REQUIRE(v.get(i) == (i * 7 + 1) % p);
    REQUIRE(v.size() == 100);
  }
}

TEST_CASE("first_nonzero and axpy") {
  PrimeField F(3);
  FpVec a(10, 3), b(10, 3);
  REQUIRE(a.is_zero());
  REQUIRE(a.first_nonzero() == npos32);
  a.set(4, 2);
  a.set(7, 1);
  REQUIRE(a.first_nonzero() == 4);
  b.set(4, 1);
  a.axpy(1, b, F);  // a[4] = 2 + 1 = 0 mod 3
  REQUIRE(a.get(4) == 0);
  REQUIRE(a.first_nonzero() == 7);
  a.scale(2, F);
  REQUIRE(a.get(7) == 2);
}

TEST_CASE("echelon basis ranks and membership") {
  PrimeField F(2);
  EchelonBasis eb(F, 4);
  FpVec v1(4, 2), v2(4, 2), v3(4, 2);
  v1.set(0, 1);
  v1.set(2, 1);
  v2.set(1, 1);
  v3.set(0, 1);
  v3.set(1, 1);
  v3.set(2, 1);  // v3 = v1 + v2
  REQUIRE(eb.insert(v1));
  REQUIRE(eb.insert(v2));
  REQUIRE_FALSE(eb.insert(v3));
  REQUIRE(eb.rank() == 2);
  REQUIRE(eb.contains(v3));
  FpVec w(4, 2);
  w.set(3, 1);
  REQUIRE_FALSE(eb.contains(w));
}

TEST_CASE("hand RREF") {
  // Over F_5: rows (2 4 1), (1 2 4) reduce to (1 2 0), (0 0 1).
  // Note 3 * (2 4 1) = (1 2 3), so the second row differs from a multiple
  // of the first only in the last coordinate.
  PrimeField F(5);
  EchelonBasis eb(F, 3);
  FpVec r1(3, 5), r2(3, 5);
  r1.set(0, 2);
  r1.set(1, 4);
  r1.set(2, 1);
  r2.set(0, 1);
  r2.set(1, 2);
  r2.set(2, 4);
  eb.insert(r1);
  eb.insert(r2);
  REQUIRE(eb.rank() == 2);
  REQUIRE(eb.pivots() == std::vector<std::uint32_t>{0, 2});
  REQUIRE(eb.rows()[0].get(0) == 1);
  REQUIRE(eb.rows()[0].get(1) == 2);
  REQUIRE(eb.rows()[0].get(2) == 0);
  REQUIRE(eb.rows()[1].get(0) == 0);
  REQUIRE(eb.rows()[1].get(1) == 0);
  REQUIRE(eb.rows()[1].get(2) == 1);
}

TEST_CASE("subspace canonical form is representation independent") {
  PrimeField F(3);
  FpVec a(3, 3), b(3, 3);
  a.set(0, 1);
  a.set(1, 2);
  b.set(1, 1);
  b.set(2, 1);
  FpVec c(3, 3), d(3, 3);  // different spanning set of the same plane
  c = a;
  c.axpy(2, b, F);
  d = b;
  d.axpy(1, a, F);
  auto s1 = SubspaceFp::span(F, 3, {a, b});
  auto s2 = SubspaceFp::span(F, 3, {c, d});
  REQUIRE(s1 == s2);
  REQUIRE(s1.key() == s2.key());
  REQUIRE(s1.rank() == 2);
  REQUIRE(s1.contains(c));
  auto z = SubspaceFp::zero(F, 3);
  auto full = SubspaceFp::full(F, 3);
  REQUIRE(full.contains(s1));
  REQUIRE(s1.contains(z));
  REQUIRE_FALSE(z.contains(s1));
  REQUIRE(s1.sum(full) == full);
}

TEST_CASE("gaussian binomials match the Pascal recursion") {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::uint32_t n = 0; n <= 8; ++n)
      for (std::uint32_t k = 0; k <= n; ++k)
        REQUIRE(gaussian_binomial(n, k, p).exact == oracle::gauss_rec(n, k, p));
  REQUIRE(gaussian_binomial(4, 2, 2).exact == 35);
  REQUIRE(gaussian_binomial(3, 1, 3).exact == 13);
}

TEST_CASE("subspace enumeration hits the gaussian count exactly once each") {
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField F(p);
    for (std::uint32_t n = 1; n <= 4; ++n)
      for (std::uint32_t k = 0; k <= n; ++k) {
        std::set<std::vector<std::uint64_t>> seen;
        for_each_subspace(n, k, F, [&](const SubspaceFp& s) {
          REQUIRE(s.rank() == k);
          REQUIRE(seen.insert(s.key()).second);
        });
        REQUIRE(mpz_class(seen.size()) == oracle::gauss_rec(n, k, p));
      }
  }
}

TEST_CASE("subspace enumeration guard") {
  PrimeField F(2);
  REQUIRE_THROWS_AS(
      for_each_subspace(10, 5, F, [](const SubspaceFp&) {}, 100),
      guard_error);
}

TEST_CASE("count value exact and log") {
  CountValue c = CountValue::p_power(3, 4);
  REQUIRE(c.exact == 81);
  REQUIRE(c.log_p == Catch::Approx(4.0));
  CountValue one = CountValue::from_exact(1, 3);
  REQUIRE(one.log_p == Catch::Approx(0.0));
}
