#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <idgrow/quotient.hpp>

using namespace idgrow;

namespace {
ExponentVector ev(std::vector<std::uint32_t> e) { return ExponentVector(std::move(e)); }

FpVec random_vec(const QuotientAlgebra& A, std::mt19937_64& rng) {
  FpVec v = A.zero_vec();
  for (std::uint32_t i = 0; i < A.dim(); ++i) v.set(i, std::uint32_t(rng() % A.p()));
  return v;
}
}  // namespace

TEST_CASE("algebra dimensions and layers") {
  for (std::uint32_t d = 1; d <= 3; ++d)
    for (std::uint32_t c = 1; c <= 4; ++c) {
      QuotientAlgebra A = build_algebra(3, d, c);
      REQUIRE(A.dim() == binom_u64(c - 1 + d, d));
      REQUIRE(A.max_degree() == c - 1);
      REQUIRE(A.modulus_is_maximal_power());
      for (std::uint32_t k = 0; k < c; ++k)
        REQUIRE(A.layer_end(k) - A.layer_begin(k) == binom_u64(k + d - 1, d - 1));
    }
}

TEST_CASE("monomial index round trip and degree sort") {
  QuotientAlgebra A = build_algebra(2, 2, 4);
  for (std::uint32_t i = 0; i < A.dim(); ++i) REQUIRE(A.mono_index(A.mono(i)) == i);
  for (std::uint32_t i = 0; i + 1 < A.dim(); ++i)
    REQUIRE(A.mono(i).degree() <= A.mono(i + 1).degree());
  REQUIRE(A.mono(0).degree() == 0);
  REQUIRE(A.mono_index(ev({4, 0})) == npos32);
}

TEST_CASE("hand multiplication in F_2[x,y]/m^3") {
  QuotientAlgebra A = build_algebra(2, 2, 3);
  RingElement x = RingElement::monomial(A, ev({1, 0}));
  RingElement y = RingElement::monomial(A, ev({0, 1}));
  RingElement one = RingElement::monomial(A, ev({0, 0}));
  RingElement f = one + x;  // 1 + x
  RingElement g = one + y;  // 1 + y
  RingElement fg = f * g;   // 1 + x + y + xy
  REQUIRE(fg.c.get(A.mono_index(ev({0, 0}))) == 1);
  REQUIRE(fg.c.get(A.mono_index(ev({1, 0}))) == 1);
  REQUIRE(fg.c.get(A.mono_index(ev({0, 1}))) == 1);
  REQUIRE(fg.c.get(A.mono_index(ev({1, 1}))) == 1);
  REQUIRE((x * x * x).is_zero());  // x^3 = 0 mod m^3
  REQUIRE((f - f).is_zero());
}

TEST_CASE("multiplication is commutative and associative (sampled)") {
  QuotientAlgebra A = build_algebra(3, 2, 4);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    FpVec a = random_vec(A, rng), b = random_vec(A, rng), c = random_vec(A, rng);
    REQUIRE(A.multiply(a, b) == A.multiply(b, a));
    REQUIRE(A.multiply(A.multiply(a, b), c) == A.multiply(a, A.multiply(b, c)));
  }
}

TEST_CASE("multiply_by_var agrees with full multiplication") {
  QuotientAlgebra A = build_algebra(5, 2, 3);
  std::mt19937_64 rng(11);
  for (std::uint32_t var = 0; var < 2; ++var) {
    std::vector<std::uint32_t> e(2, 0);
    e[var] = 1;
    FpVec xv = RingElement::monomial(A, ev(e)).c;
    for (int t = 0; t < 20; ++t) {
      FpVec a = random_vec(A, rng);
      REQUIRE(A.multiply_by_var(var, a) == A.multiply(xv, a));
    }
  }
}

TEST_CASE("unit inversion") {
  QuotientAlgebra A = build_algebra(3, 1, 4);
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    FpVec a = random_vec(A, rng);
    if (a.get(0) == 0) {
      REQUIRE_THROWS_AS(A.invert_unit(a), std::invalid_argument);
      continue;
    }
    FpVec inv = A.invert_unit(a);
    REQUIRE(A.multiply(a, inv) == A.unit_vec(0));
  }
}

TEST_CASE("ideal closure of a principal ideal") {
  QuotientAlgebra A = build_algebra(2, 2, 3);
  // (x) in F_2[x,y]/m^3 has basis {x, x^2, xy}: colength 3.
  IdealSubspace I = ideal_closure(A, {RingElement::monomial(A, ev({1, 0})).c});
  REQUIRE(I.space.rank() == 3);
  REQUIRE(I.colength() == 3);
  REQUIRE(I.contains(RingElement::monomial(A, ev({1, 1})).c));
  REQUIRE_FALSE(I.contains(RingElement::monomial(A, ev({0, 1})).c));
  REQUIRE(I.is_closed());
}

TEST_CASE("ideal closure of a unit is everything") {
  QuotientAlgebra A = build_algebra(3, 2, 3);
  IdealSubspace I = ideal_closure(A, {A.unit_vec(0)});
  REQUIRE(I.colength() == 0);
  REQUIRE(I.space.rank() == A.dim());
}

TEST_CASE("non-closed subspace is rejected as an ideal") {
  QuotientAlgebra A = build_algebra(2, 2, 3);
  // span{1} is not an ideal.
  SubspaceFp s = SubspaceFp::span(A.field(), A.dim(), {A.unit_vec(0)});
  REQUIRE_THROWS(IdealSubspace(A, s));
}

TEST_CASE("dimension guard") {
  REQUIRE_THROWS_AS(build_algebra(2, 3, 20, 64), guard_error);
}
