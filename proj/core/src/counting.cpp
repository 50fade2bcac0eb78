#include "homcount/counting.hpp"

#include <algorithm>
#include <stdexcept>

#include "homcount/lattice.hpp"

namespace homcount {

namespace {

void require_rank(int rank, const char* where) {
  if (rank < 1) {
    throw std::invalid_argument(std::string(where) + ": rank must be >= 1");
  }
}

// d(k) = (k-1)! * lambda_rank(k): the number of transitive actions of
// Z^rank on k labeled points, for k = 1..length.
numtheory::Seq1 transitive_table(int rank, std::size_t length) {
  lattice::LambdaTable lambda = lattice::lambda_table(rank, length);
  numtheory::Seq1 d(length);
  Nat factorial = 1;
  for (std::size_t k = 1; k <= length; ++k) {
    d(k) = factorial * lambda.values(k);
    factorial *= static_cast<unsigned long>(k);
  }
  return d;
}

}  // namespace

std::vector<Nat> count_tuples(int rank, std::size_t n_max) {
  require_rank(rank, "count_tuples");
  series::OgfSeries normalized = count_tuples_egf(rank, n_max);
  std::vector<Nat> totals(normalized.coeffs.size());
  Nat factorial = 1;
  for (std::size_t n = 0; n < totals.size(); ++n) {
    if (n > 0) {
      factorial *= static_cast<unsigned long>(n);
    }
    totals[n] = normalized.coeffs[n] * factorial;
  }
  return totals;
}

series::OgfSeries count_tuples_egf(int rank, std::size_t n_max) {
  require_rank(rank, "count_tuples_egf");
  lattice::LambdaTable lambda =
      lattice::lambda_table(rank - 1, std::max<std::size_t>(n_max, 1));
  return series::euler_transform(lambda.values, n_max);
}

series::EgfCensus count_tuples_by_orbits(int rank, std::size_t n_max) {
  require_rank(rank, "count_tuples_by_orbits");
  series::EgfCensus census;
  census.rank = rank;
  census.entries = series::egf_exp_formula(
      transitive_table(rank, std::max<std::size_t>(n_max, 1)), n_max);
  return census;
}

std::vector<Nat> count_tuples_via_exp_formula(int rank, std::size_t n_max) {
  require_rank(rank, "count_tuples_via_exp_formula");
  return series::egf_exp_totals(
      transitive_table(rank, std::max<std::size_t>(n_max, 1)), n_max);
}

}  // namespace homcount
