// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Every numeric expectation and every time limit is pinned here,
// in code, so a regression in either correctness or asymptotics fails CI.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "homcount/bfile.hpp"
#include "homcount/counting.hpp"
#include "homcount/lattice.hpp"
#include "homcount/nat.hpp"
#include "homcount/numtheory.hpp"
#include "homcount/oeis.hpp"
#include "homcount/oracle.hpp"
#include "homcount/permutation.hpp"
#include "homcount/series.hpp"

namespace {

using homcount::Nat;
namespace lattice = homcount::lattice;
namespace numtheory = homcount::numtheory;
namespace oracle = homcount::oracle;
namespace series = homcount::series;

// --- criterion bodies ------------------------------------------------------

bool egf_prefix_rank4(std::ostream& detail) {
  const series::OgfSeries got = homcount::count_tuples_egf(4, 5);
  const std::vector<unsigned long> want{1, 1, 8, 21, 84, 206};
  if (got.coeffs.size() != want.size()) {
    detail << "expected 6 coefficients, got " << got.coeffs.size() << '\n';
    return false;
  }
  for (std::size_t n = 0; n < want.size(); ++n) {
    if (got.coeffs[n] != want[n]) {
      detail << "coefficient " << n << " is " << got.coeffs[n].get_str()
             << ", expected " << want[n] << '\n';
      return false;
    }
  }
  return true;
}

bool two_routes_agree(std::ostream& detail) {
  constexpr std::size_t kOrder = 500;
  for (int rank = 1; rank <= 5; ++rank) {
    const std::vector<Nat> via_euler = homcount::count_tuples(rank, kOrder);
    const std::vector<Nat> via_exp =
        homcount::count_tuples_via_exp_formula(rank, kOrder);
    if (via_euler != via_exp) {
      for (std::size_t n = 0; n <= kOrder; ++n) {
        if (via_euler[n] != via_exp[n]) {
          detail << "rank " << rank << ", n=" << n << ": Euler route "
                 << via_euler[n].get_str() << " != exponential route "
                 << via_exp[n].get_str() << '\n';
          return false;
        }
      }
    }
  }
  return true;
}

bool oracle_agrees(std::ostream& detail) {
  oracle::CensusOptions options;
  options.threads = 2;
  auto cell = [&](int rank, std::uint32_t degree) -> bool {
    const oracle::OrbitCensusResult census =
        oracle::oracle_census(rank, degree, options);
    const std::vector<Nat> totals = homcount::count_tuples(rank, degree);
    if (census.total != totals[degree]) {
      detail << "r=" << rank << " n=" << degree << ": oracle total "
             << census.total.get_str() << " != formula "
             << totals[degree].get_str() << '\n';
      return false;
    }
    const series::EgfCensus refined =
        homcount::count_tuples_by_orbits(rank, degree);
    const series::OrbitPolynomial& poly = refined.entries[degree];
    for (std::uint32_t k = 0; k <= degree; ++k) {
      const auto it = census.by_orbits.find(k);
      const Nat observed = it == census.by_orbits.end() ? Nat(0) : it->second;
      if (poly.coeff(k) != observed) {
        detail << "r=" << rank << " n=" << degree << " orbits=" << k
               << ": oracle " << observed.get_str() << " != formula "
               << poly.coeff(k).get_str() << '\n';
        return false;
      }
    }
    for (const auto& [k, count] : census.by_orbits) {
      if (k > degree && count != 0) {
        detail << "oracle reported " << count.get_str() << " tuples with "
               << k << " orbits at degree " << degree << '\n';
        return false;
      }
    }
    return true;
  };
  for (int rank = 1; rank <= 3; ++rank) {
    for (std::uint32_t degree = 0; degree <= 5; ++degree) {
      if (!cell(rank, degree)) {
        return false;
      }
    }
  }
  return cell(2, 6);
}

bool hnf_counts_match(std::ostream& detail) {
  constexpr std::uint64_t kMax = 50;
  for (int rank = 1; rank <= 4; ++rank) {
    const lattice::LambdaTable table = lattice::lambda_table(rank, kMax);
    for (std::uint64_t n = 1; n <= kMax; ++n) {
      const std::uint64_t enumerated = lattice::count_hnf(rank, n);
      if (table.values(n) != enumerated) {
        detail << "rank " << rank << ", index " << n << ": enumerated "
               << enumerated << " bases, table says "
               << table.values(n).get_str() << '\n';
        return false;
      }
    }
  }
  return true;
}

bool divisor_identity(std::ostream& detail) {
  constexpr std::size_t kMax = 1000;
  for (int rank = 1; rank <= 6; ++rank) {
    const numtheory::Seq1 lower = lattice::lambda_table(rank - 1, kMax).values;
    const numtheory::Seq1 expect = lattice::lambda_table(rank, kMax).values;
    const numtheory::Seq1 got = numtheory::weighted_divisor_sum(lower);
    if (!(got == expect)) {
      for (std::size_t n = 1; n <= kMax; ++n) {
        if (got(n) != expect(n)) {
          detail << "rank " << rank << ", n=" << n << ": divisor sum "
                 << got(n).get_str() << " != table " << expect(n).get_str()
                 << '\n';
          return false;
        }
      }
    }
  }
  return true;
}

bool conjugation_closure(std::ostream& detail) {
  for (int rank = 1; rank <= 3; ++rank) {
    for (std::uint32_t n = 1; n <= 5; ++n) {
      const std::vector<homcount::Permutation> group =
          oracle::symmetric_group(n);
      std::map<std::vector<std::uint32_t>, std::uint64_t> multiplicity;
      for (const lattice::HnfBasis& basis : lattice::collect_hnf(rank, n)) {
        const lattice::CosetAction action = lattice::coset_action(basis);
        for (const homcount::Permutation& relabel : group) {
          std::vector<std::uint32_t> key;
          key.reserve(static_cast<std::size_t>(rank) * n);
          for (const homcount::Permutation& generator : action.generators) {
            const homcount::Permutation conjugated =
                homcount::conjugate(generator, relabel);
            key.insert(key.end(), conjugated.images().begin(),
                       conjugated.images().end());
          }
          ++multiplicity[key];
        }
      }
      const Nat expect_distinct = lattice::transitive_count(rank, n);
      if (expect_distinct != static_cast<unsigned long>(multiplicity.size())) {
        detail << "r=" << rank << " n=" << n << ": "
               << multiplicity.size()
               << " distinct transitive tuples from relabeling, expected "
               << expect_distinct.get_str() << '\n';
        return false;
      }
      for (const auto& [key, count] : multiplicity) {
        if (count != n) {
          detail << "r=" << rank << " n=" << n
                 << ": a tuple was produced " << count
                 << " times, expected exactly " << n << '\n';
          return false;
        }
      }
    }
  }
  return true;
}

bool classical_identities(std::ostream& detail) {
  const std::vector<Nat> rank1 = homcount::count_tuples(1, 100);
  Nat factorial = 1;
  for (std::size_t n = 0; n <= 100; ++n) {
    if (n > 0) {
      factorial *= static_cast<unsigned long>(n);
    }
    if (rank1[n] != factorial) {
      detail << "rank-1 count at n=" << n << " is " << rank1[n].get_str()
             << ", not n!\n";
      return false;
    }
  }
  const lattice::LambdaTable rank2 = lattice::lambda_table(2, 10'000);
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    if (rank2.values(n) != numtheory::sigma(n)) {
      detail << "rank-2 subgroup count at n=" << n << " is "
             << rank2.values(n).get_str() << ", sigma gives "
             << numtheory::sigma(n).get_str() << '\n';
      return false;
    }
  }
  constexpr std::size_t kOrder = 2000;
  const series::OgfSeries partitions_via_et =
      series::euler_transform(numtheory::ones(kOrder), kOrder);
  const std::vector<Nat> partitions = numtheory::partition_numbers(kOrder);
  if (partitions_via_et.coeffs != partitions) {
    detail << "Euler transform of the all-ones sequence disagrees with the "
              "pentagonal recurrence\n";
    return false;
  }
  return true;
}

bool bundled_corpus(std::ostream& detail) {
  std::size_t checked = 0;
  for (const homcount::oeis::OeisEntry& entry : homcount::oeis::registry()) {
    if (entry.bundled == nullptr) {
      continue;
    }
    const homcount::bfile::BFile reference =
        homcount::bfile::parse_bfile(std::string(entry.bundled));
    const homcount::oeis::SequenceDiff diff =
        homcount::oeis::compare_bfile(reference, entry.derive, 0);
    if (!diff.match) {
      detail << entry.id << ": mismatch at n=" << diff.mismatch_index
             << " (file " << diff.file_value << ", derived "
             << diff.computed_value << ")\n";
      return false;
    }
    if (diff.compared == 0) {
      detail << entry.id << ": bundled b-file is empty\n";
      return false;
    }
    ++checked;
  }
  if (checked < 4) {
    detail << "only " << checked << " bundled reference files\n";
    return false;
  }
  return true;
}

bool growth_bound_probe(std::ostream& detail) {
  constexpr std::size_t kMax = 100;
  for (int rank = 1; rank <= 4; ++rank) {
    const lattice::GrowthBoundReport report =
        lattice::check_growth_bound(rank, kMax);
    const std::string rendered = lattice::format_report(report);
    const std::string again =
        lattice::format_report(lattice::check_growth_bound(rank, kMax));
    if (rendered != again) {
      detail << "rank " << rank << ": report is not deterministic\n";
      return false;
    }
    if (rank == 1) {
      if (!report.violations.empty() || report.equalities.size() != kMax) {
        detail << "rank 1: expected equality at every n\n";
        return false;
      }
    } else if (rank == 2) {
      // The non-strict bound already fails at every n >= 2 (so the strict
      // variant certainly does not hold universally).
      if (report.violations.size() != kMax - 1 ||
          report.equalities != std::vector<std::uint64_t>{1}) {
        detail << "rank 2: expected violations at all n >= 2, got "
               << report.violations.size() << " violations and "
               << report.equalities.size() << " equalities\n";
        return false;
      }
      if (report.violations.front().n != 2 ||
          report.violations.front().lambda != 3 ||
          report.violations.front().bound != 2) {
        detail << "rank 2: first violation should be n=2 with lambda=3, "
                  "bound=2\n";
        return false;
      }
    } else {
      if (!report.violations.empty() ||
          report.equalities != std::vector<std::uint64_t>{1}) {
        detail << "rank " << rank
               << ": expected no violations and equality only at n=1\n";
        return false;
      }
    }
  }
  return true;
}

bool performance_floor(std::ostream& detail) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const lattice::LambdaTable table = lattice::lambda_table(5, 10'000);
  const double lambda_seconds =
      std::chrono::duration<double>(clock::now() - t0).count();
  if (table.values.size() != 10'000 || table.values(1) != 1) {
    detail << "rank-5 table has the wrong shape\n";
    return false;
  }
  if (lambda_seconds >= 5.0) {
    detail << "rank-5 table to n=10000 took " << lambda_seconds
           << "s (limit 5s)\n";
    return false;
  }
  const auto t1 = clock::now();
  const std::vector<Nat> totals = homcount::count_tuples(6, 1000);
  const double count_seconds =
      std::chrono::duration<double>(clock::now() - t1).count();
  if (totals.size() != 1001 || totals[0] != 1 || totals[1] != 1) {
    detail << "rank-6 totals have the wrong shape\n";
    return false;
  }
  if (count_seconds >= 60.0) {
    detail << "rank-6 totals to n=1000 took " << count_seconds
           << "s (limit 60s)\n";
    return false;
  }
  return true;
}

// --- harness ---------------------------------------------------------------

struct Criterion {
  std::string name;
  double time_limit_seconds;
  std::function<bool(std::ostream&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"rank-4 normalized counts start 1,1,8,21,84,206", 1.0,
       egf_prefix_rank4},
      {"Euler-transform and exponential-formula routes agree, r<=5, n<=500",
       60.0, two_routes_agree},
      {"exhaustive oracle matches formulas, r<=3 n<=5 and r=2 n=6", 120.0,
       oracle_agrees},
      {"basis enumeration matches subgroup counts, r<=4, n<=50", 60.0,
       hnf_counts_match},
      {"divisor identity links consecutive ranks, r<=6, n<=1000", 30.0,
       divisor_identity},
      {"relabeled coset actions cover each transitive tuple n times, "
       "r<=3, n<=5",
       60.0, conjugation_closure},
      {"classical specializations: factorials, divisor sums, partitions",
       60.0, classical_identities},
      {"bundled reference b-files match their derivations", 60.0,
       bundled_corpus},
      {"growth-bound probe is deterministic with the expected shape", 60.0,
       growth_bound_probe},
      {"performance floor: rank-5 table in 5s, rank-6 counts in 60s", 65.0,
       performance_floor},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& criterion = criteria[i];
    std::ostringstream detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.body(detail);
    } catch (const std::exception& error) {
      detail << "exception: " << error.what() << '\n';
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed >= criterion.time_limit_seconds) {
      detail << "took " << elapsed << "s, limit is "
             << criterion.time_limit_seconds << "s\n";
      ok = false;
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << (i + 1) << "/"
              << criteria.size() << " " << criterion.name << " ("
              << std::fixed << std::setprecision(2) << elapsed << "s, limit "
              << std::setprecision(0) << criterion.time_limit_seconds
              << "s)\n"
              << std::defaultfloat;
    if (!ok) {
      ++failures;
      std::istringstream lines(detail.str());
      std::string line;
      while (std::getline(lines, line)) {
        std::cout << "       " << line << '\n';
      }
    }
  }
  if (failures == 0) {
    std::cout << "acceptance: all " << criteria.size() << " criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " of " << criteria.size()
            << " criteria FAILED\n";
  return 1;
}
