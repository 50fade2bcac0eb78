#include <map>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"

#include "homcount/oracle.hpp"
#include "support/oracles.hpp"

using namespace homcount;
using namespace homcount::oracle;

namespace {

std::map<std::uint32_t, Nat> to_nat_hist(
    const std::map<std::uint32_t, std::uint64_t>& hist) {
  std::map<std::uint32_t, Nat> out;
  for (const auto& [k, v] : hist) {
    out[k] = Nat(static_cast<unsigned long>(v));
  }
  return out;
}

}  // namespace

TEST_CASE("symmetric_group materializes S_n in lexicographic order") {
  std::vector<Permutation> s3 = symmetric_group(3);
  REQUIRE(s3.size() == 6);
  CHECK(s3.front() == Permutation({0, 1, 2}));
  CHECK(s3[1] == Permutation({0, 2, 1}));
  CHECK(s3.back() == Permutation({2, 1, 0}));
  CHECK(symmetric_group(0).size() == 1);
  CHECK(symmetric_group(1).size() == 1);
  CHECK(symmetric_group(5).size() == 120);
  CHECK_THROWS_AS(symmetric_group(10), std::invalid_argument);
}

TEST_CASE("centralizer filters in pool order") {
  std::vector<Permutation> s3 = symmetric_group(3);
  const Permutation swap01({1, 0, 2});
  std::vector<Permutation> c = centralizer(s3, swap01);
  CHECK(c == std::vector<Permutation>{Permutation({0, 1, 2}), swap01});
  CHECK(centralizer(s3, Permutation::identity(3)) == s3);
  const Permutation cycle({1, 2, 0});
  CHECK(centralizer(s3, cycle).size() == 3);
}

TEST_CASE("orbit_count of generated groups") {
  CHECK(orbit_count(5, {}) == 5);
  CHECK(orbit_count(0, {}) == 0);
  CHECK(orbit_count(3, {Permutation({1, 2, 0})}) == 1);
  CHECK(orbit_count(4, {Permutation({1, 0, 2, 3})}) == 3);
  CHECK(orbit_count(4, {Permutation({1, 0, 2, 3}), Permutation({0, 1, 3, 2})}) ==
        2);
  CHECK_THROWS_AS(orbit_count(3, {Permutation::identity(4)}),
                  std::invalid_argument);
}

TEST_CASE("make_commuting_tuple validates") {
  const Permutation a({1, 0, 2});
  const Permutation b({0, 1, 2});
  CHECK(make_commuting_tuple(3, {a, b}).parts.size() == 2);
  CHECK(make_commuting_tuple(3, {}).degree == 3);
  CHECK_THROWS_AS(make_commuting_tuple(3, {a, Permutation({1, 2, 0})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_commuting_tuple(4, {a}), std::invalid_argument);
}

TEST_CASE("estimated_nodes is n! times partitions^(r-1)") {
  CHECK(estimated_nodes(1, 6) == 720);
  CHECK(estimated_nodes(2, 6) == 7920);
  CHECK(estimated_nodes(3, 6) == 87120);
  CHECK(estimated_nodes(4, 6) == 958320);
  CHECK(estimated_nodes(4, 5) == 41160);
  CHECK(estimated_nodes(0, 4) == 1);
}

TEST_CASE("census of small symmetric groups") {
  auto hist = [](const OrbitCensusResult& r) { return r.by_orbits; };

  OrbitCensusResult r13 = oracle_census(1, 3);
  CHECK(r13.total == 6);
  CHECK(hist(r13) ==
        std::map<std::uint32_t, Nat>{{1, Nat(2)}, {2, Nat(3)}, {3, Nat(1)}});

  OrbitCensusResult r14 = oracle_census(1, 4);
  CHECK(r14.total == 24);
  CHECK(hist(r14) == std::map<std::uint32_t, Nat>{
                         {1, Nat(6)}, {2, Nat(11)}, {3, Nat(6)}, {4, Nat(1)}});

  OrbitCensusResult r22 = oracle_census(2, 2);
  CHECK(r22.total == 4);
  CHECK(hist(r22) == std::map<std::uint32_t, Nat>{{1, Nat(3)}, {2, Nat(1)}});

  OrbitCensusResult r23 = oracle_census(2, 3);
  CHECK(r23.total == 18);
  CHECK(hist(r23) ==
        std::map<std::uint32_t, Nat>{{1, Nat(8)}, {2, Nat(9)}, {3, Nat(1)}});

  OrbitCensusResult r24 = oracle_census(2, 4);
  CHECK(r24.total == 120);
  CHECK(hist(r24) == std::map<std::uint32_t, Nat>{
                         {1, Nat(42)}, {2, Nat(59)}, {3, Nat(18)}, {4, Nat(1)}});

  OrbitCensusResult r32 = oracle_census(3, 2);
  CHECK(r32.total == 8);
  CHECK(hist(r32) == std::map<std::uint32_t, Nat>{{1, Nat(7)}, {2, Nat(1)}});

  OrbitCensusResult r33 = oracle_census(3, 3);
  CHECK(r33.total == 48);
  CHECK(hist(r33) ==
        std::map<std::uint32_t, Nat>{{1, Nat(26)}, {2, Nat(21)}, {3, Nat(1)}});
}

TEST_CASE("degenerate censuses") {
  OrbitCensusResult rank0 = oracle_census(0, 4);
  CHECK(rank0.total == 1);
  CHECK(rank0.by_orbits == std::map<std::uint32_t, Nat>{{4, Nat(1)}});

  OrbitCensusResult empty = oracle_census(2, 0);
  CHECK(empty.total == 1);
  CHECK(empty.by_orbits == std::map<std::uint32_t, Nat>{{0, Nat(1)}});

  CHECK_THROWS_AS(oracle_census(-1, 3), std::invalid_argument);
}

TEST_CASE("budget guard refuses oversized searches up front") {
  CHECK_THROWS_AS(oracle_census(4, 6), BudgetExceeded);   // estimate too big
  CHECK_THROWS_AS(oracle_census(5, 2), BudgetExceeded);   // rank cap
  CHECK_THROWS_AS(oracle_census(2, 7), BudgetExceeded);   // degree cap
  CensusOptions tight;
  tight.node_budget = 100;
  CHECK_THROWS_AS(oracle_census(2, 4, tight), BudgetExceeded);
  try {
    oracle_census(4, 6);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    const std::string what = e.what();
    CHECK(what.find("958320") != std::string::npos);
    CHECK(what.find("120000") != std::string::npos);
  }
}

TEST_CASE("thread count does not change the census") {
  CensusOptions parallel;
  parallel.threads = 4;
  for (auto [rank, degree] : std::vector<std::pair<int, std::uint32_t>>{
           {2, 4}, {3, 4}, {1, 5}}) {
    OrbitCensusResult sequential = oracle_census(rank, degree);
    OrbitCensusResult threaded = oracle_census(rank, degree, parallel);
    CHECK(sequential.total == threaded.total);
    CHECK(sequential.by_orbits == threaded.by_orbits);
  }
}

TEST_CASE("search census equals the exhaustive product census") {
  for (int rank = 0; rank <= 3; ++rank) {
    for (std::uint32_t degree = 0; degree <= 4; ++degree) {
      OrbitCensusResult fast = oracle_census(rank, degree);
      CHECK(fast.by_orbits == to_nat_hist(testsupport::naive_census(rank, degree)));
    }
  }
  OrbitCensusResult r25 = oracle_census(2, 5);
  CHECK(r25.by_orbits == to_nat_hist(testsupport::naive_census(2, 5)));
}
