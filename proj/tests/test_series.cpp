#include <vector>

#include "doctest.h"

#include "homcount/nat.hpp"
#include "homcount/numtheory.hpp"
#include "homcount/series.hpp"

using namespace homcount;
using namespace homcount::series;
using numtheory::Seq1;

namespace {

Seq1 sigma_seq(std::size_t n) {
  Seq1 s(n);
  for (std::size_t m = 1; m <= n; ++m) {
    s(m) = numtheory::sigma(m);
  }
  return s;
}

}  // namespace

TEST_CASE("OrbitPolynomial trims, pads and rejects") {
  OrbitPolynomial p({Nat(0), Nat(2), Nat(3), Nat(0), Nat(0)});
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == 0);
  CHECK(p.coeff(1) == 2);
  CHECK(p.coeff(2) == 3);
  CHECK(p.coeff(7) == 0);
  CHECK(OrbitPolynomial({Nat(0), Nat(0)}).degree() == 0);
  CHECK(OrbitPolynomial() == OrbitPolynomial({Nat(0)}));
  CHECK(OrbitPolynomial::one().coeff(0) == 1);
  CHECK(evaluate_at_one(p) == 5);
  CHECK_THROWS_AS(OrbitPolynomial({Nat(1), Nat(-2)}), std::invalid_argument);
}

TEST_CASE("euler_transform of the identity-like inputs") {
  SUBCASE("delta gives the all-ones series") {
    OgfSeries c = euler_transform(numtheory::delta(8), 8);
    REQUIRE(c.order() == 8);
    for (const Nat& v : c.coeffs) {
      CHECK(v == 1);
    }
  }
  SUBCASE("ones gives the partition numbers") {
    OgfSeries c = euler_transform(numtheory::ones(60), 60);
    std::vector<Nat> p = numtheory::partition_numbers(60);
    CHECK(c.coeffs == p);
  }
  SUBCASE("sigma input, the rank-3 normalized counts") {
    OgfSeries c = euler_transform(sigma_seq(6), 5);
    CHECK(c.coeffs ==
          std::vector<Nat>{Nat(1), Nat(1), Nat(4), Nat(8), Nat(21), Nat(39)});
  }
  SUBCASE("order 0 needs no terms") {
    OgfSeries c = euler_transform(numtheory::ones(1), 0);
    CHECK(c.coeffs == std::vector<Nat>{Nat(1)});
  }
  SUBCASE("input shorter than the order is rejected") {
    CHECK_THROWS_AS(euler_transform(numtheory::ones(3), 4),
                    std::invalid_argument);
  }
}

TEST_CASE("exponential formula, rank-1 transitive counts (k-1)!") {
  const std::size_t order = 8;
  Seq1 d(order);
  Nat f = 1;
  for (std::size_t k = 1; k <= order; ++k) {
    d(k) = f;  // (k-1)!
    f *= static_cast<unsigned long>(k);
  }
  std::vector<OrbitPolynomial> rows = egf_exp_formula(d, order);
  REQUIRE(rows.size() == order + 1);
  CHECK(rows[0] == OrbitPolynomial::one());
  CHECK(rows[1] == OrbitPolynomial({Nat(0), Nat(1)}));
  CHECK(rows[2] == OrbitPolynomial({Nat(0), Nat(1), Nat(1)}));
  // Cycle-type census of S_3: two 3-cycles, three transpositions, identity.
  CHECK(rows[3] == OrbitPolynomial({Nat(0), Nat(2), Nat(3), Nat(1)}));
  // Stirling-cycle row for n = 4.
  CHECK(rows[4] == OrbitPolynomial({Nat(0), Nat(6), Nat(11), Nat(6), Nat(1)}));
  // Totals must be n!.
  Nat factorial = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    factorial *= static_cast<unsigned long>(n);
    CHECK(evaluate_at_one(rows[n]) == factorial);
  }
}

TEST_CASE("exponential formula, rank-2 transitive counts (k-1)! sigma(k)") {
  const std::size_t order = 6;
  Seq1 d(order);
  Nat f = 1;
  for (std::size_t k = 1; k <= order; ++k) {
    d(k) = f * numtheory::sigma(k);
    f *= static_cast<unsigned long>(k);
  }
  std::vector<OrbitPolynomial> rows = egf_exp_formula(d, order);
  CHECK(rows[2] == OrbitPolynomial({Nat(0), Nat(3), Nat(1)}));
  CHECK(rows[3] == OrbitPolynomial({Nat(0), Nat(8), Nat(9), Nat(1)}));
  // Totals must be p(n) * n!.
  std::vector<Nat> p = numtheory::partition_numbers(order);
  Nat factorial = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    factorial *= static_cast<unsigned long>(n);
    CHECK(evaluate_at_one(rows[n]) == p[n] * factorial);
  }
}

TEST_CASE("exponential formula structure") {
  const std::size_t order = 10;
  Seq1 d(order);
  for (std::size_t k = 1; k <= order; ++k) {
    d(k) = 2 * k + 1;  // arbitrary positive weights
  }
  std::vector<OrbitPolynomial> rows = egf_exp_formula(d, order);
  Nat top = 1;  // d(1)^n: every component a singleton
  for (std::size_t n = 1; n <= order; ++n) {
    top *= d(1);
    CHECK(rows[n].coeff(0) == 0);
    CHECK(rows[n].coeff(1) == d(n));  // one orbit means one component
    CHECK(rows[n].degree() == n);
    CHECK(rows[n].coeff(n) == top);
  }
}

TEST_CASE("scalar route equals the polynomial route at y = 1") {
  const std::size_t order = 20;
  for (int variant = 0; variant < 3; ++variant) {
    Seq1 d(order);
    for (std::size_t k = 1; k <= order; ++k) {
      d(k) = variant == 0 ? Nat(1) : variant == 1 ? Nat(k) : Nat(k * k + 3);
    }
    std::vector<OrbitPolynomial> rows = egf_exp_formula(d, order);
    std::vector<Nat> totals = egf_exp_totals(d, order);
    REQUIRE(totals.size() == rows.size());
    for (std::size_t n = 0; n <= order; ++n) {
      CHECK(totals[n] == evaluate_at_one(rows[n]));
    }
  }
  CHECK_THROWS_AS(egf_exp_formula(numtheory::ones(3), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(egf_exp_totals(numtheory::ones(3), 4),
                  std::invalid_argument);
}
