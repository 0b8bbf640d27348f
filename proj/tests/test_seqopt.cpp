#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include <idgrow/seqopt.hpp>

using namespace idgrow;

namespace {
SequenceProfile prof(std::vector<std::int64_t> r) {
  SequenceProfile s;
  s.r = std::move(r);
  return s;
}
}  // namespace

TEST_CASE("profile admissibility") {
  REQUIRE(prof({1, 2, 3}).admissible());
  REQUIRE(prof({1, 2, 1, 1}).admissible());
  REQUIRE(prof({1, 2, 2, 1}).admissible());
  REQUIRE_FALSE(prof({2, 1}).admissible());      // prefix must be 1,2,..
  REQUIRE_FALSE(prof({1, 2, 1, 2}).admissible());  // tail must not grow
  REQUIRE_FALSE(prof({1, -1}).admissible());
  REQUIRE(prof({}).admissible());
}

TEST_CASE("objective hand computation") {
  // r = (1,2,1,1): n0 = 2, suffix sums past each tail entry weight the drops.
  // acc = (r_1 - r_2) * (r_3) + (r_2 - r_3) * 0 = (2-1)*1 = 1.
  REQUIRE(objective(prof({1, 2, 1, 1})) == 1);
  REQUIRE(objective(prof({1, 2, 3})) == 0);  // pure prefix scores zero
  REQUIRE(objective(prof({})) == 0);
  // (1,2,2,1,1): 2*(1+1) - (2*1 + 1*1) = 1 in the abel form.
  REQUIRE(objective(prof({1, 2, 2, 1, 1})) == 1);
  REQUIRE(objective(prof({1, 2, 1, 1, 1})) == 2);
  REQUIRE_THROWS_AS(objective(prof({2, 2})), std::invalid_argument);
}

TEST_CASE("abel form agrees with the direct sum on every profile") {
  for (std::uint32_t N = 0; N <= 14; ++N)
    for_each_profile(N, [&](const SequenceProfile& s) {
      REQUIRE(s.total() == std::int64_t(N));
      REQUIRE(s.admissible());
      REQUIRE(objective(s) == abel_objective(s));
    });
}

TEST_CASE("profile enumeration has no duplicates") {
  std::set<std::vector<std::int64_t>> seen;
  for_each_profile(10, [&](const SequenceProfile& s) { REQUIRE(seen.insert(s.r).second); });
  // n0 = 1..4 leave 9, 7, 4, 0 for the tail: 1 + 4 + 4 + 1 profiles.
  REQUIRE(seen.size() == 10);
}

TEST_CASE("dp agrees with exhaustive search") {
  DpTable dp(20);
  for (std::uint32_t N = 1; N <= 20; ++N) REQUIRE(dp.dp_max(N) == exhaustive_max(N));
  REQUIRE_THROWS_AS(exhaustive_max(100), guard_error);
}

TEST_CASE("small maxima pinned") {
  DpTable dp(8);
  REQUIRE(dp.dp_max(5) == 1);
  REQUIRE(dp.dp_max(6) == 2);
}

TEST_CASE("tail-of-ones closed form") {
  // Profile (1,2,..,n0,1,..,1) with k trailing ones scores (n0-1)(k-1).
  for (std::uint32_t N = 3; N <= 60; ++N)
    for (std::uint32_t n0 = 1; std::uint64_t(n0) * (n0 + 1) / 2 + 1 <= N; ++n0) {
      std::uint32_t k = N - std::uint32_t(std::uint64_t(n0) * (n0 + 1) / 2);
      SequenceProfile s;
      for (std::uint32_t t = 1; t <= n0; ++t) s.r.push_back(t);
      for (std::uint32_t t = 0; t < k; ++t) s.r.push_back(1);
      REQUIRE(objective(s) == tail_ones_value(N, n0));
    }
  REQUIRE_THROWS_AS(tail_ones_value(10, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(tail_ones_value(3, 3), std::invalid_argument);
}

TEST_CASE("tail-of-ones maximum is dominated by the dp") {
  DpTable dp(300);
  for (std::uint32_t N = 1; N <= 300; ++N) {
    TailOnesBest t = tail_ones_max(N);
    REQUIRE(dp.dp_max(N) >= t.value);
    if (t.n0 > 0) REQUIRE(t.value == tail_ones_value(N, t.n0));
  }
}

TEST_CASE("growth constant ratio at moderate size") {
  DpTable dp(400);
  double ratio = double(dp.dp_max(400)) / (std::pow(2.0 / 3.0, 1.5) * std::pow(400.0, 1.5));
  REQUIRE(ratio > 0.8);
  REQUIRE(ratio < 1.1);
}
