#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "homcount/nat.hpp"
#include "homcount/permutation.hpp"

namespace homcount::oracle {

/// Pairwise-commuting permutations of a common degree, i.e. one point of
/// the census the formula side predicts.
struct CommutingTuple {
  std::uint32_t degree = 0;
  std::vector<Permutation> parts;
};

/// Validates degrees and pairwise commutation. The empty tuple is allowed;
/// it generates the trivial group.
CommutingTuple make_commuting_tuple(std::uint32_t degree,
                                    std::vector<Permutation> parts);

/// Number of orbits of the group generated by `parts` on {0..degree-1}.
std::uint32_t orbit_count(std::uint32_t degree,
                          const std::vector<Permutation>& parts);

/// All of S_n in lexicographic order of image vectors. Refuses degrees
/// whose group would not fit in memory.
std::vector<Permutation> symmetric_group(std::uint32_t degree);

/// The elements of `pool` commuting with g, in pool order.
std::vector<Permutation> centralizer(const std::vector<Permutation>& pool,
                                     const Permutation& g);

/// Predicted search size for a census: n! * p(n)^(r-1), the exact number
/// of tuples for r = 2 and a heuristic for higher ranks (the average
/// centralizer order in S_n is the number of partitions of n).
Nat estimated_nodes(int rank, std::uint32_t degree);

struct CensusOptions {
  /// Refuse searches whose estimated_nodes exceeds this.
  std::uint64_t node_budget = 120'000;
  int max_rank = 4;
  std::uint32_t max_degree = 6;
  /// Worker threads over the outermost choice; results are identical for
  /// any thread count.
  unsigned threads = 1;
};

/// A census was refused up front because it would blow its budget. The
/// message says which limit tripped.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OrbitCensusResult {
  int rank = 0;
  std::uint32_t degree = 0;
  /// Number of commuting rank-tuples in S_degree.
  Nat total;
  /// total, refined by orbit count of the generated group.
  std::map<std::uint32_t, Nat> by_orbits;
};

/// Exhaustive census by depth-first search: each successive coordinate is
/// drawn from the centralizer of the ones before it, so exactly the
/// commuting tuples are visited. Independent of the generating-function
/// machinery; this is the ground truth the formulas are tested against.
OrbitCensusResult oracle_census(int rank, std::uint32_t degree,
                                const CensusOptions& options = {});

}  // namespace homcount::oracle
