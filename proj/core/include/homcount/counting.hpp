#pragma once

#include <cstdint>
#include <vector>

#include "homcount/nat.hpp"
#include "homcount/series.hpp"

namespace homcount {

/// T_r(n) for n = 0..n_max: the number of commuting r-tuples in S_n,
/// equivalently the number of actions of Z^r on a set of n labeled points.
/// Computed as n! times the Euler transform of the rank-(r-1) subgroup
/// counts. Requires rank >= 1.
std::vector<Nat> count_tuples(int rank, std::size_t n_max);

/// The factorially normalized coefficients T_r(n)/n!, which are exact
/// integers: coefficient n of prod_j (1-u^j)^(-lambda_{r-1}(j)).
series::OgfSeries count_tuples_egf(int rank, std::size_t n_max);

/// Orbit-refined census: entry n is the polynomial whose y^k coefficient
/// counts the commuting r-tuples in S_n generating a group with k orbits.
/// Built from the transitive counts d(k) = (k-1)! * lambda_r(k) by the
/// exponential formula, with no search anywhere.
series::EgfCensus count_tuples_by_orbits(int rank, std::size_t n_max);

/// T_r(n) again, but through the exponential-formula recurrence instead of
/// the Euler transform. The two routes share no code past the lambda
/// table; agreement is a strong end-to-end check.
std::vector<Nat> count_tuples_via_exp_formula(int rank, std::size_t n_max);

}  // namespace homcount
