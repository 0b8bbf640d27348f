#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <utility>

#include <idgrow/growth.hpp>
#include <idgrow/ideal_enum.hpp>
#include <idgrow/initial.hpp>

#include "oracles.hpp"

using namespace idgrow;

TEST_CASE("family spec hand case n=6 d=2") {
  PhiFamilySpec spec = build_family_spec(6, 2, 2);
  REQUIRE(spec.m == 2);
  REQUIRE(spec.n_tilde == 5);
  REQUIRE(spec.X.size() == 2);
  REQUIRE(spec.baseline.colength() == 6);
  REQUIRE(spec.claimed.exact == 16);  // p^(|X| * (n_tilde - m - 1)) = 2^4
}

TEST_CASE("family spec rejects tiny colengths") {
  REQUIRE_THROWS_AS(build_family_spec(2, 2, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(build_family_spec(4, 2, 2), std::invalid_argument);
}

TEST_CASE("validity measures whether the pure power is reached") {
  PhiFamilySpec spec = build_family_spec(6, 2, 2);
  QuotientAlgebra A = build_algebra(2, 2, 7, 64);
  std::uint32_t window = spec.n_tilde - spec.m - 1;

  // Unperturbed generators (x y, y^2) never reach x^5: colength stays 8.
  PhiAssignment zero;
  zero.coeffs.assign(spec.X.size(), std::vector<std::uint32_t>(window, 0));
  InstantiatedIdeal flat = instantiate_ideal(spec, zero, A);
  REQUIRE_FALSE(flat.valid);
  REQUIRE(flat.colength == 8);

  // Perturbing x y to g = x y + x^3 puts x^5 = x^2 g - x^2 (x y) in the
  // ideal, restoring colength 6 with the baseline staircase as initial.
  PhiAssignment tilt = zero;
  bool found = false;
  for (std::size_t i = 0; i < spec.X.size(); ++i)
    if (spec.X[i] == ExponentVector({1, 1})) {
      tilt.coeffs[i][0] = 1;
      found = true;
    }
  REQUIRE(found);
  InstantiatedIdeal bent = instantiate_ideal(spec, tilt, A);
  REQUIRE(bent.valid);
  REQUIRE(bent.colength == 6);
  REQUIRE(initial_ideal(bent.ideal, A.order()).initial == spec.baseline);
}

TEST_CASE("census is exhaustive, partially valid, and injective where valid") {
  for (std::uint32_t p : {2u, 3u}) {
    PhiFamilySpec spec = build_family_spec(6, 2, p);
    CensusReport rep = family_census(spec);
    REQUIRE_FALSE(rep.sampled);
    REQUIRE(mpz_class(rep.checked) == spec.claimed.exact);
    REQUIRE(rep.distinct_phi == rep.checked);
    REQUIRE(rep.valid >= 1);
    REQUIRE(rep.valid < rep.checked);  // the all-valid claim fails at this size
    REQUIRE(rep.injective_on_valid);
  }
}

TEST_CASE("census sampling is deterministic in the seed") {
  PhiFamilySpec spec = build_family_spec(6, 2, 3);
  CensusReport a = family_census(spec, 1'000'000, 50, 99);
  CensusReport b = family_census(spec, 1'000'000, 50, 99);
  REQUIRE(a.checked == 50);
  REQUIRE(a.sampled);
  REQUIRE(a.valid == b.valid);
  REQUIRE(a.distinct_phi == b.distinct_phi);
  CensusReport c = family_census(spec, 1'000'000, 50, 100);
  REQUIRE(c.checked == 50);
}

TEST_CASE("census falls back to sampling over the guard") {
  PhiFamilySpec spec = build_family_spec(6, 2, 2);
  CensusReport rep = family_census(spec, /*guard=*/4);
  REQUIRE(rep.sampled);
  REQUIRE(rep.checked == 1024);  // default draw count
}

TEST_CASE("instantiation validates its inputs") {
  PhiFamilySpec spec = build_family_spec(6, 2, 2);
  QuotientAlgebra deep = build_algebra(2, 2, 7, 64);
  PhiAssignment bad;
  bad.coeffs.assign(1, std::vector<std::uint32_t>(2, 0));
  REQUIRE_THROWS_AS(instantiate_ideal(spec, bad, deep), std::invalid_argument);
  QuotientAlgebra shallow = build_algebra(2, 2, 6, 64);
  PhiAssignment zero;
  zero.coeffs.assign(spec.X.size(), std::vector<std::uint32_t>(2, 0));
  REQUIRE_THROWS_AS(instantiate_ideal(spec, zero, shallow), std::logic_error);
}

TEST_CASE("per-stratum upper bound hand value") {
  // Profile of m^2 at p=2: gauss(3,3) * 2^(3 * (4-4)) = 1 and the stratum
  // holds exactly the monomial ideal.
  ParamProfile pp;
  pp.d_seq = {0, 0, 3, 4};
  pp.e_seq = {0, 0, 3, 0};
  pp.layer_dims = {1, 2, 3, 4};
  REQUIRE(upper_bound_value(pp, 2).exact == 1);

  // One excess generator in layer 1 of a depth-3 profile: (0,1,3).
  ParamProfile q;
  q.d_seq = {0, 1, 3};
  q.e_seq = {0, 1, 0};
  q.layer_dims = {1, 2, 3};
  // gauss(2-1+1, 1)_p * p^(1 * (3-3)) = gauss(2,1)_p = p + 1.
  REQUIRE(upper_bound_value(q, 2).exact == 3);
  REQUIRE(upper_bound_value(q, 3).exact == 4);
}

TEST_CASE("upper bound validates profiles") {
  ParamProfile ragged;
  ragged.d_seq = {0, 1};
  ragged.e_seq = {0};
  ragged.layer_dims = {1, 2};
  REQUIRE_THROWS_AS(upper_bound_value(ragged, 2), std::invalid_argument);
  ParamProfile bad;
  bad.d_seq = {2};
  bad.e_seq = {0};
  bad.layer_dims = {1};
  REQUIRE_THROWS_AS(upper_bound_value(bad, 2), std::invalid_argument);
}

TEST_CASE("strata obey the upper bound") {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    QuotientAlgebra A = build_algebra(2, 2, n + 1, 64);
    auto ideals = enumerate_ideals(A, n);
    // Bucket by full profile: count per (d_seq, e_seq) must fit the bound.
    std::map<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>, std::uint64_t>
        buckets;
    std::map<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>, ParamProfile>
        profiles;
    for (const auto& I : ideals) {
      ParamProfile pp = param_profile(I);
      auto key = std::make_pair(pp.d_seq, pp.e_seq);
      ++buckets[key];
      profiles.emplace(key, pp);
    }
    for (const auto& [key, cnt] : buckets)
      REQUIRE(mpz_class(cnt) <= upper_bound_value(profiles.at(key), 2).exact);
  }
}
