#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include <idgrow/staircase.hpp>

#include "oracles.hpp"

using namespace idgrow;

namespace {
ExponentVector ev(std::vector<std::uint32_t> e) { return ExponentVector(std::move(e)); }
}  // namespace

TEST_CASE("exponent vector basics") {
  ExponentVector a = ev({2, 1});
  ExponentVector b = ev({1, 3});
  REQUIRE(a.degree() == 3);
  REQUIRE_FALSE(a.divides(b));
  REQUIRE(ev({1, 1}).divides(a));
  REQUIRE(a.times_var(1) == ev({2, 2}));
  REQUIRE(a.plus(b) == ev({3, 4}));
}

TEST_CASE("binomials") {
  REQUIRE(binom_u64(0, 0) == 1);
  REQUIRE(binom_u64(5, 2) == 10);
  REQUIRE(binom_u64(10, 3) == 120);
  REQUIRE(binom_u64(3, 5) == 0);
}

TEST_CASE("exponents_of_degree sizes") {
  for (std::uint32_t d = 1; d <= 3; ++d)
    for (std::uint32_t k = 0; k <= 6; ++k)
      REQUIRE(exponents_of_degree(d, k).size() == binom_u64(k + d - 1, d - 1));
}

TEST_CASE("staircase colength and membership") {
  // Staircase of (x^3, x y, y^2): complement {1, x, x^2, y}.
  Staircase s(2, {ev({3, 0}), ev({1, 1}), ev({0, 2})});
  REQUIRE(s.cofinite());
  REQUIRE(s.colength() == 4);
  REQUIRE(s.contains(ev({3, 0})));
  REQUIRE(s.contains(ev({4, 2})));
  REQUIRE_FALSE(s.contains(ev({2, 0})));
  REQUIRE_FALSE(s.contains(ev({0, 1})));
  auto ds = s.downset();
  REQUIRE(ds.size() == 4);
  REQUIRE(Staircase::from_downset(2, ds) == s);
}

TEST_CASE("power of maximal ideal staircase") {
  Staircase m3 = Staircase::power_of_maximal(2, 3);
  REQUIRE(m3.colength() == 6);
  REQUIRE(m3.contains(ev({2, 1})));
  REQUIRE_FALSE(m3.contains(ev({1, 1})));
  Staircase m2d3 = Staircase::power_of_maximal(3, 2);
  REQUIRE(m2d3.colength() == 4);
}

TEST_CASE("non-cofinite staircase reports no colength") {
  Staircase s(2, {ev({1, 0})});  // (x): complement is the whole y axis
  REQUIRE_FALSE(s.cofinite());
  REQUIRE_THROWS_AS(s.colength(), std::invalid_argument);
}

TEST_CASE("staircase json round trip") {
  Staircase s(3, {ev({2, 0, 0}), ev({0, 1, 0}), ev({0, 0, 3}), ev({1, 0, 1})});
  auto j = s.to_json();
  REQUIRE(Staircase::from_json(j, 3) == s);
}

TEST_CASE("d=1 staircases are single powers") {
  for (std::uint32_t n = 1; n <= 6; ++n) {
    auto v = enumerate_staircases(1, n);
    REQUIRE(v.size() == 1);
    REQUIRE(v[0].colength() == n);
  }
}

TEST_CASE("d=2 staircase counts are partition numbers") {
  for (std::uint32_t n = 1; n <= 12; ++n) {
    auto v = enumerate_staircases(2, n);
    REQUIRE(v.size() == oracle::partition_table()[n - 1]);
    REQUIRE(v.size() == oracle::partitions_rec(n));
    std::set<Staircase> uniq(v.begin(), v.end());
    REQUIRE(uniq.size() == v.size());
    for (const auto& s : v) REQUIRE(s.colength() == n);
  }
}

TEST_CASE("d=3 staircase counts are plane partition numbers") {
  for (std::uint32_t n = 1; n <= 8; ++n) {
    auto v = enumerate_staircases(3, n);
    REQUIRE(v.size() == oracle::plane_partition_table()[n - 1]);
    std::set<Staircase> uniq(v.begin(), v.end());
    REQUIRE(uniq.size() == v.size());
    for (const auto& s : v) REQUIRE(s.colength() == n);
  }
}

TEST_CASE("staircase enumeration guards") {
  REQUIRE_THROWS_AS(enumerate_staircases(4, 3), std::invalid_argument);
  REQUIRE_THROWS_AS(enumerate_staircases(2, 100, 64), guard_error);
}

TEST_CASE("minimal generator bound constants") {
  REQUIRE(BoundConstants::value(1) == Catch::Approx(1.0));
  REQUIRE(BoundConstants::value(2) == Catch::Approx(2.0 * std::sqrt(2.0)));
  double c3 = BoundConstants::value(3);
  REQUIRE(c3 * c3 * c3 * c3 * c3 * c3 == Catch::Approx(2239488.0).epsilon(1e-9));
}

TEST_CASE("generator bound holds on enumerated staircases") {
  for (std::uint32_t n = 1; n <= 14; ++n)
    for (const auto& s : enumerate_staircases(2, n)) {
      auto gens = minimal_generators(s);
      REQUIRE(BoundConstants::check(2, gens.size(), n));
    }
  for (std::uint32_t n = 1; n <= 8; ++n)
    for (const auto& s : enumerate_staircases(3, n)) {
      auto gens = minimal_generators(s);
      REQUIRE(BoundConstants::check(3, gens.size(), n));
    }
}

TEST_CASE("minimal generators are an antichain generating the staircase") {
  for (std::uint32_t n = 1; n <= 8; ++n)
    for (const auto& s : enumerate_staircases(2, n)) {
      auto gens = minimal_generators(s);
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j)
          if (i != j) REQUIRE_FALSE(gens[i].divides(gens[j]));
      REQUIRE(Staircase(2, gens) == s);
    }
}

TEST_CASE("slice inequality audit on d=3 staircases") {
  for (std::uint32_t n = 1; n <= 8; ++n)
    for (const auto& s : enumerate_staircases(3, n)) {
      HoelderReport rep = hoelder_audit(s);
      REQUIRE(rep.holds);
      REQUIRE(rep.slice_colengths.size() == rep.slice_count);
    }
}

TEST_CASE("slice audit hand case") {
  // m^2 in three variables: generators of degree 2, witness slice at z = 1.
  Staircase s = Staircase::power_of_maximal(3, 2);
  HoelderReport rep = hoelder_audit(s);
  REQUIRE(rep.min_degree == 2);
  REQUIRE(rep.slice_count == 2);
  // Slice at z^0 is the staircase of m^2 in (x,y): colength 3; at z^1: colength 1.
  REQUIRE(rep.slice_colengths == std::vector<std::uint64_t>{3, 1});
  REQUIRE(rep.holds);
}
