#include "homcount/lattice.hpp"

#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "homcount/disjoint_sets.hpp"

namespace homcount::lattice {

LambdaTable lambda_table(int rank, std::size_t n_max) {
  if (rank < 0) {
    throw std::invalid_argument("lambda_table: rank must be >= 0");
  }
  if (rank == 0) {
    return {0, numtheory::delta(n_max)};
  }
  Seq1 acc = numtheory::ones(n_max);
  for (int k = 1; k < rank; ++k) {
    acc = numtheory::dirichlet_convolve(acc, numtheory::power_seq(k, n_max));
  }
  return {rank, std::move(acc)};
}

Nat lambda_direct(int rank, std::uint64_t n) {
  if (rank < 0) {
    throw std::invalid_argument("lambda_direct: rank must be >= 0");
  }
  if (n == 0) {
    throw std::invalid_argument("lambda_direct: n must be >= 1");
  }
  if (rank == 0) {
    return n == 1 ? 1 : 0;
  }
  // Sum of d_1^0 d_2^1 ... d_r^(r-1) over ordered factorizations of n.
  std::function<Nat(int, std::uint64_t)> rest = [&](int level,
                                                    std::uint64_t m) -> Nat {
    if (level == rank) {
      return nat_pow(m, static_cast<std::uint64_t>(rank - 1));
    }
    Nat sum = 0;
    for (std::uint64_t d : numtheory::divisors(m)) {
      sum += nat_pow(d, static_cast<std::uint64_t>(level - 1)) *
             rest(level + 1, m / d);
    }
    return sum;
  };
  return rest(1, n);
}

HnfBasis::HnfBasis(int rank, std::vector<std::uint64_t> row_major)
    : rank_(rank), entries_(std::move(row_major)) {
  if (rank_ < 1) {
    throw std::invalid_argument("HnfBasis: rank must be >= 1");
  }
  if (entries_.size() != static_cast<std::size_t>(rank_) * rank_) {
    throw std::invalid_argument("HnfBasis: expected rank*rank entries");
  }
  for (int i = 0; i < rank_; ++i) {
    if (diag(i) == 0) {
      throw std::invalid_argument("HnfBasis: diagonal entries must be >= 1");
    }
    for (int j = 0; j < i; ++j) {
      if (at(i, j) != 0) {
        throw std::invalid_argument("HnfBasis: lower triangle must vanish");
      }
    }
    for (int j = i + 1; j < rank_; ++j) {
      if (at(i, j) >= diag(j)) {
        throw std::invalid_argument(
            "HnfBasis: entry above the diagonal must be reduced modulo the "
            "column diagonal");
      }
    }
  }
}

std::uint64_t HnfBasis::index() const {
  std::uint64_t prod = 1;
  for (int i = 0; i < rank_; ++i) {
    prod *= diag(i);
  }
  return prod;
}

std::string HnfBasis::to_string() const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < rank_; ++i) {
    out << (i == 0 ? "[" : ",[");
    for (int j = 0; j < rank_; ++j) {
      if (j > 0) {
        out << ',';
      }
      out << at(i, j);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

namespace {

// Fills the off-diagonal entries at `positions[pos]` onward with every
// admissible value (ascending, so the whole sweep is lexicographic) and
// visits each completed matrix.
void fill_upper(HnfBasis& ws,
                const std::vector<std::pair<int, int>>& positions,
                std::size_t pos,
                const std::function<void(const HnfBasis&)>& visit,
                std::vector<std::uint64_t>& entries) {
  if (pos == positions.size()) {
    visit(ws);
    return;
  }
  auto [i, j] = positions[pos];
  std::size_t slot = static_cast<std::size_t>(i) * ws.rank() + j;
  for (std::uint64_t v = 0; v < ws.diag(j); ++v) {
    entries[slot] = v;
    fill_upper(ws, positions, pos + 1, visit, entries);
  }
}

void choose_diagonal(HnfBasis& ws, int level, std::uint64_t remaining,
                     const std::vector<std::pair<int, int>>& positions,
                     const std::function<void(const HnfBasis&)>& visit,
                     std::vector<std::uint64_t>& entries) {
  int r = ws.rank();
  std::size_t slot = static_cast<std::size_t>(level) * r + level;
  if (level == r - 1) {
    entries[slot] = remaining;
    fill_upper(ws, positions, 0, visit, entries);
    return;
  }
  for (std::uint64_t d : numtheory::divisors(remaining)) {
    entries[slot] = d;
    choose_diagonal(ws, level + 1, remaining / d, positions, visit, entries);
  }
}

}  // namespace

void enumerate_hnf(int rank, std::uint64_t index,
                   const std::function<void(const HnfBasis&)>& visit) {
  if (rank < 1) {
    throw std::invalid_argument("enumerate_hnf: rank must be >= 1");
  }
  if (index == 0) {
    throw std::invalid_argument("enumerate_hnf: index must be >= 1");
  }
  HnfBasis ws;
  ws.rank_ = rank;
  ws.entries_.assign(static_cast<std::size_t>(rank) * rank, 0);
  std::vector<std::pair<int, int>> positions;
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      positions.emplace_back(i, j);
    }
  }
  choose_diagonal(ws, 0, index, positions, visit, ws.entries_);
}

std::vector<HnfBasis> collect_hnf(int rank, std::uint64_t index) {
  std::vector<HnfBasis> out;
  enumerate_hnf(rank, index,
                [&](const HnfBasis& basis) { out.push_back(basis); });
  return out;
}

std::uint64_t count_hnf(int rank, std::uint64_t index) {
  std::uint64_t count = 0;
  enumerate_hnf(rank, index, [&](const HnfBasis&) { ++count; });
  return count;
}

namespace {

std::int64_t floordiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) {
    --q;
  }
  return q;
}

// Reduces an integer vector to the canonical box representative of its
// coset: sweep the coordinates upward, clearing each one modulo the
// matching basis row. Later coordinates absorb the row tails and are
// cleaned up in turn.
void canonicalize(const HnfBasis& basis, std::vector<std::int64_t>& v) {
  int r = basis.rank();
  for (int i = 0; i < r; ++i) {
    std::int64_t d = static_cast<std::int64_t>(basis.diag(i));
    std::int64_t q = floordiv(v[i], d);
    if (q == 0) {
      continue;
    }
    for (int j = i; j < r; ++j) {
      v[j] -= q * static_cast<std::int64_t>(basis.at(i, j));
    }
  }
}

std::uint32_t box_rank(const HnfBasis& basis,
                       const std::vector<std::int64_t>& v) {
  int r = basis.rank();
  std::uint64_t label = static_cast<std::uint64_t>(v[r - 1]);
  for (int i = r - 2; i >= 0; --i) {
    label = static_cast<std::uint64_t>(v[i]) + basis.diag(i) * label;
  }
  return static_cast<std::uint32_t>(label);
}

void box_unrank(const HnfBasis& basis, std::uint64_t label,
                std::vector<std::int64_t>& v) {
  int r = basis.rank();
  for (int i = 0; i < r; ++i) {
    v[i] = static_cast<std::int64_t>(label % basis.diag(i));
    label /= basis.diag(i);
  }
}

}  // namespace

CosetAction coset_action(const HnfBasis& basis) {
  std::uint64_t n = basis.index();
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("coset_action: index too large");
  }
  int r = basis.rank();
  CosetAction action;
  action.rank = r;
  action.degree = n;
  action.basis_row_major.reserve(static_cast<std::size_t>(r) * r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      action.basis_row_major.push_back(basis.at(i, j));
    }
  }
  std::vector<std::int64_t> point(r);
  for (int t = 0; t < r; ++t) {
    std::vector<std::uint32_t> images(n);
    for (std::uint64_t label = 0; label < n; ++label) {
      box_unrank(basis, label, point);
      point[t] += 1;
      canonicalize(basis, point);
      images[label] = box_rank(basis, point);
    }
    action.generators.push_back(Permutation(std::move(images)));
  }
  // Translations of a quotient group commute and act transitively; anything
  // else signals a reduction bug.
  for (int a = 0; a < r; ++a) {
    for (int b = a + 1; b < r; ++b) {
      if (!commute(action.generators[a], action.generators[b])) {
        throw std::logic_error("coset_action: generators fail to commute");
      }
    }
  }
  DisjointSets components(n);
  for (const Permutation& g : action.generators) {
    for (std::uint32_t i = 0; i < n; ++i) {
      components.unite(i, g(i));
    }
  }
  if (components.count() != 1) {
    throw std::logic_error("coset_action: action is not transitive");
  }
  return action;
}

Nat transitive_count(int rank, std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("transitive_count: n must be >= 1");
  }
  return nat_factorial(n - 1) * lambda_table(rank, n).values(n);
}

GrowthBoundReport check_growth_bound(int rank, std::size_t n_max) {
  if (rank < 0) {
    throw std::invalid_argument("check_growth_bound: rank must be >= 0");
  }
  GrowthBoundReport report;
  report.rank = rank;
  report.n_max = n_max;
  report.exponent = rank > 0 ? static_cast<unsigned>(rank * (rank - 1) / 2) : 0;
  LambdaTable table = lambda_table(rank, n_max);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    Nat bound = nat_pow(n, report.exponent);
    const Nat& lambda = table.values(n);
    if (lambda > bound) {
      report.violations.push_back({n, lambda, bound});
    } else if (lambda == bound) {
      report.equalities.push_back(n);
    }
  }
  return report;
}

std::string format_report(const GrowthBoundReport& report) {
  std::ostringstream out;
  out << "growth probe: lambda_" << report.rank << "(n) <= n^"
      << report.exponent << " for 1 <= n <= " << report.n_max << "\n";
  out << "violations: " << report.violations.size()
      << ", equalities: " << report.equalities.size() << "\n";
  for (const GrowthBoundEntry& e : report.violations) {
    out << "violation n=" << e.n << " lambda=" << e.lambda.get_str()
        << " bound=" << e.bound.get_str() << "\n";
  }
  if (!report.equalities.empty()) {
    out << "equality n=";
    for (std::size_t i = 0; i < report.equalities.size(); ++i) {
      if (i > 0) {
        out << ',';
      }
      out << report.equalities[i];
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace homcount::lattice
