#pragma once

#include <cstdint>
#include <vector>

#include "homcount/nat.hpp"
#include "homcount/numtheory.hpp"

namespace homcount::series {

using numtheory::Seq1;

/// Truncated ordinary generating function: coeffs[n] = [u^n], n = 0..order.
struct OgfSeries {
  std::vector<Nat> coeffs;

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool operator==(const OgfSeries&) const = default;
};

/// Polynomial in the orbit-marking variable y with exact nonnegative
/// coefficients; coeff(k) is the coefficient of y^k. Trailing zeros are
/// trimmed on construction.
class OrbitPolynomial {
 public:
  OrbitPolynomial() : coeffs_{Nat(0)} {}
  explicit OrbitPolynomial(std::vector<Nat> coeffs);
  static OrbitPolynomial one();

  std::size_t degree() const { return coeffs_.size() - 1; }
  /// Coefficient of y^k; zero beyond the degree.
  Nat coeff(std::size_t k) const;
  const std::vector<Nat>& coeffs() const { return coeffs_; }

  bool operator==(const OrbitPolynomial&) const = default;

 private:
  std::vector<Nat> coeffs_;
};

/// Sum of coefficients: sets y = 1, forgetting the orbit counts.
Nat evaluate_at_one(const OrbitPolynomial& p);

/// Per-degree orbit census for rank-r actions. entries[n] is the polynomial
/// P_n(y) whose y^k coefficient counts the actions on [n] with k orbits; all
/// entries are stored n!-scaled so everything stays in exact integers.
struct EgfCensus {
  int rank = 0;
  std::vector<OrbitPolynomial> entries;
};

/// First `order`+1 coefficients of prod_{j>=1} (1 - u^j)^(-a(j)).
///
/// Computed through b(m) = sum_{d|m} d*a(d) and the recurrence
/// n*c(n) = sum_{k=1..n} b(k) c(n-k) with c(0) = 1. The division by n is
/// exact for every input; a remainder signals an implementation bug and
/// aborts via std::logic_error rather than rounding.
///
/// Requires a.size() >= order.
OgfSeries euler_transform(const Seq1& a, std::size_t order);

/// Labeled-structure census from a table of connected (transitive) counts.
///
/// transitive_counts(k) is the number of connected labeled structures on
/// [k]. Returns P_0..P_order where P_0 = 1 and, splitting off the component
/// that contains the largest label,
///
///   P_n(y) = sum_{k=1..n} C(n-1, k-1) * transitive_counts(k) * y * P_{n-k}(y).
///
/// The binomial factors are maintained incrementally; no factorial
/// quotients are formed. Requires transitive_counts.size() >= order.
std::vector<OrbitPolynomial> egf_exp_formula(const Seq1& transitive_counts, std::size_t order);

/// Same recurrence specialized to y = 1: returns only the per-degree totals
/// P_n(1). Used where the full orbit refinement is not needed.
std::vector<Nat> egf_exp_totals(const Seq1& transitive_counts, std::size_t order);

}  // namespace homcount::series
