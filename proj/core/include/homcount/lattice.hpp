#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "homcount/nat.hpp"
#include "homcount/numtheory.hpp"
#include "homcount/permutation.hpp"

namespace homcount::lattice {

using numtheory::Seq1;

/// lambda_r(n) for fixed rank r and n = 1..N: the number of index-n
/// subgroups of Z^r. Rank 0 is the delta sequence (only the full group,
/// of index 1).
struct LambdaTable {
  int rank = 0;
  Seq1 values;
};

/// Builds the table by iterated Dirichlet convolution of the power
/// sequences n^0, n^1, ..., n^(rank-1). O(rank * N log N).
LambdaTable lambda_table(int rank, std::size_t n_max);

/// Reference route for a single value: direct summation of
/// d_2 * d_3^2 * ... * d_r^(r-1) over ordered factorizations
/// d_1 d_2 ... d_r = n. Exponential in rank; for spot checks only.
Nat lambda_direct(int rank, std::uint64_t n);

/// Upper-triangular basis matrix of a finite-index subgroup of Z^r in
/// Hermite normal form: diagonal entries >= 1 and each entry above the
/// diagonal reduced modulo the diagonal entry of its column. Row-style
/// variants and unreduced matrices are rejected at construction.
class HnfBasis {
 public:
  /// `row_major` holds rank*rank entries; rows are basis vectors.
  HnfBasis(int rank, std::vector<std::uint64_t> row_major);

  int rank() const { return rank_; }
  std::uint64_t at(int row, int col) const {
    return entries_[static_cast<std::size_t>(row) * rank_ + col];
  }
  std::uint64_t diag(int i) const { return at(i, i); }
  /// Subgroup index: product of the diagonal.
  std::uint64_t index() const;
  /// Rows as nested lists, e.g. "[[1,1],[0,2]]".
  std::string to_string() const;

  bool operator==(const HnfBasis&) const = default;

 private:
  HnfBasis() = default;
  friend void enumerate_hnf(int, std::uint64_t,
                            const std::function<void(const HnfBasis&)>&);

  int rank_ = 0;
  std::vector<std::uint64_t> entries_;
};

/// Streams every HNF basis with diagonal product `index`, each exactly
/// once, ordered lexicographically by the diagonal vector and then by the
/// off-diagonal entries read row-major. The basis passed to the visitor is
/// a reused workspace: copy it if it must outlive the call.
void enumerate_hnf(int rank, std::uint64_t index,
                   const std::function<void(const HnfBasis&)>& visit);

std::vector<HnfBasis> collect_hnf(int rank, std::uint64_t index);
std::uint64_t count_hnf(int rank, std::uint64_t index);

/// The action of Z^r on the coset space of the subgroup spanned by an HNF
/// basis. Cosets are labeled by their canonical representatives, the
/// mixed-radix box vectors (x_1, ..., x_r) with 0 <= x_i < d_i, obtained by
/// reducing coordinate i against basis row i in increasing i. A
/// representative maps to a point of [n] by mixed-radix rank with x_1
/// varying fastest: label = x_1 + d_1*(x_2 + d_2*(x_3 + ...)).
struct CosetAction {
  int rank = 0;
  std::uint64_t degree = 0;  // the subgroup index n
  /// generators[i] is the permutation induced by the standard basis vector
  /// e_{i+1}; they commute pairwise and act transitively.
  std::vector<Permutation> generators;
  std::vector<std::uint64_t> basis_row_major;
};

CosetAction coset_action(const HnfBasis& basis);

/// Number of transitive Z^r actions on [n]: (n-1)! * lambda_r(n).
Nat transitive_count(int rank, std::uint64_t n);

struct GrowthBoundEntry {
  std::uint64_t n = 0;
  Nat lambda;
  Nat bound;
};

/// Empirical probe of the polynomial bound lambda_r(n) <= n^(r(r-1)/2).
/// `violations` lists every n where even the non-strict bound fails;
/// `equalities` lists every n where it holds with equality (so the strict
/// form fails there too).
struct GrowthBoundReport {
  int rank = 0;
  std::size_t n_max = 0;
  unsigned exponent = 0;
  std::vector<GrowthBoundEntry> violations;
  std::vector<std::uint64_t> equalities;
};

GrowthBoundReport check_growth_bound(int rank, std::size_t n_max);

/// Deterministic plain-text rendering of a report.
std::string format_report(const GrowthBoundReport& report);

}  // namespace homcount::lattice
