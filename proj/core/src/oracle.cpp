#include "homcount/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>
#include <utility>

#include "homcount/disjoint_sets.hpp"
#include "homcount/numtheory.hpp"

namespace homcount::oracle {

CommutingTuple make_commuting_tuple(std::uint32_t degree,
                                    std::vector<Permutation> parts) {
  for (const Permutation& p : parts) {
    if (p.degree() != degree) {
      throw std::invalid_argument(
          "make_commuting_tuple: degree mismatch");
    }
  }
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      if (!commute(parts[a], parts[b])) {
        throw std::invalid_argument(
            "make_commuting_tuple: entries must commute pairwise");
      }
    }
  }
  return {degree, std::move(parts)};
}

std::uint32_t orbit_count(std::uint32_t degree,
                          const std::vector<Permutation>& parts) {
  DisjointSets components(degree);
  for (const Permutation& p : parts) {
    if (p.degree() != degree) {
      throw std::invalid_argument("orbit_count: degree mismatch");
    }
    for (std::uint32_t i = 0; i < degree; ++i) {
      components.unite(i, p(i));
    }
  }
  return static_cast<std::uint32_t>(components.count());
}

std::vector<Permutation> symmetric_group(std::uint32_t degree) {
  if (degree >= 10) {
    throw std::invalid_argument(
        "symmetric_group: degree too large to materialize");
  }
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0U);
  std::vector<Permutation> group;
  do {
    group.push_back(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return group;
}

std::vector<Permutation> centralizer(const std::vector<Permutation>& pool,
                                     const Permutation& g) {
  std::vector<Permutation> kept;
  for (const Permutation& p : pool) {
    if (commute(p, g)) {
      kept.push_back(p);
    }
  }
  return kept;
}

Nat estimated_nodes(int rank, std::uint32_t degree) {
  if (rank < 0) {
    throw std::invalid_argument("estimated_nodes: rank must be >= 0");
  }
  if (rank == 0) {
    return 1;
  }
  Nat nodes = nat_factorial(degree);
  const Nat partitions = numtheory::partition_numbers(degree).back();
  for (int k = 1; k < rank; ++k) {
    nodes *= partitions;
  }
  return nodes;
}

namespace {

void tally_orbits(std::uint32_t degree,
                  const std::vector<const Permutation*>& chosen,
                  std::map<std::uint32_t, Nat>& hist) {
  DisjointSets components(degree);
  for (const Permutation* g : chosen) {
    for (std::uint32_t i = 0; i < degree; ++i) {
      components.unite(i, (*g)(i));
    }
  }
  hist[static_cast<std::uint32_t>(components.count())] += 1;
}

// Extends the tuple by every element of `pool` (the common centralizer of
// the choices so far), narrowing the pool as it goes.
void census_walk(int remaining, std::uint32_t degree,
                 const std::vector<Permutation>& pool,
                 std::vector<const Permutation*>& chosen,
                 std::map<std::uint32_t, Nat>& hist) {
  if (remaining == 0) {
    tally_orbits(degree, chosen, hist);
    return;
  }
  for (const Permutation& g : pool) {
    chosen.push_back(&g);
    if (remaining == 1) {
      tally_orbits(degree, chosen, hist);
    } else {
      census_walk(remaining - 1, degree, centralizer(pool, g), chosen, hist);
    }
    chosen.pop_back();
  }
}

}  // namespace

OrbitCensusResult oracle_census(int rank, std::uint32_t degree,
                                const CensusOptions& options) {
  if (rank < 0) {
    throw std::invalid_argument("oracle_census: rank must be >= 0");
  }
  std::ostringstream tag;
  tag << "oracle census (r=" << rank << ", n=" << degree << "): ";
  if (rank > options.max_rank) {
    throw BudgetExceeded(tag.str() + "rank exceeds limit " +
                         std::to_string(options.max_rank));
  }
  if (degree > options.max_degree) {
    throw BudgetExceeded(tag.str() + "degree exceeds limit " +
                         std::to_string(options.max_degree));
  }
  const Nat estimate = estimated_nodes(rank, degree);
  if (estimate > Nat(static_cast<unsigned long>(options.node_budget))) {
    throw BudgetExceeded(tag.str() + "estimated " + estimate.get_str() +
                         " search nodes exceed budget " +
                         std::to_string(options.node_budget));
  }

  OrbitCensusResult result;
  result.rank = rank;
  result.degree = degree;
  if (rank == 0) {
    result.by_orbits[degree] = 1;
    result.total = 1;
    return result;
  }

  const std::vector<Permutation> group = symmetric_group(degree);
  unsigned threads = std::max(1U, options.threads);
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, group.size()));

  std::vector<std::map<std::uint32_t, Nat>> partial(threads);
  auto worker = [&](unsigned t) {
    std::vector<const Permutation*> chosen;
    for (std::size_t i = t; i < group.size(); i += threads) {
      const Permutation& g = group[i];
      chosen.push_back(&g);
      if (rank == 1) {
        tally_orbits(degree, chosen, partial[t]);
      } else {
        census_walk(rank - 1, degree, centralizer(group, g), chosen,
                    partial[t]);
      }
      chosen.pop_back();
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> crew;
    crew.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      crew.emplace_back(worker, t);
    }
    for (std::thread& th : crew) {
      th.join();
    }
  }

  result.total = 0;
  for (const auto& hist : partial) {
    for (const auto& [orbits, count] : hist) {
      result.by_orbits[orbits] += count;
      result.total += count;
    }
  }
  return result;
}

}  // namespace homcount::oracle
