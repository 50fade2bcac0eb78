#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace testsupport {

namespace {

using Perm = std::vector<std::uint32_t>;

bool commutes(const Perm& a, const Perm& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[b[i]] != b[a[i]]) {
      return false;
    }
  }
  return true;
}

std::uint32_t orbits(const std::vector<const Perm*>& generators,
                     std::uint32_t n) {
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> stack;
  std::uint32_t count = 0;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (seen[start]) {
      continue;
    }
    ++count;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      std::uint32_t v = stack.back();
      stack.pop_back();
      for (const Perm* g : generators) {
        std::uint32_t w = (*g)[v];
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

}  // namespace

std::map<std::uint32_t, std::uint64_t> naive_census(int rank,
                                                    std::uint32_t degree) {
  std::map<std::uint32_t, std::uint64_t> hist;
  if (rank == 0) {
    hist[degree] = 1;
    return hist;
  }
  std::vector<Perm> group;
  Perm base(degree);
  std::iota(base.begin(), base.end(), 0U);
  do {
    group.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));

  std::vector<std::size_t> odometer(static_cast<std::size_t>(rank), 0);
  std::vector<const Perm*> tuple(static_cast<std::size_t>(rank));
  for (;;) {
    for (std::size_t t = 0; t < odometer.size(); ++t) {
      tuple[t] = &group[odometer[t]];
    }
    bool ok = true;
    for (std::size_t a = 0; a < tuple.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < tuple.size() && ok; ++b) {
        ok = commutes(*tuple[a], *tuple[b]);
      }
    }
    if (ok) {
      hist[orbits(tuple, degree)] += 1;
    }
    int pos = rank - 1;
    while (pos >= 0) {
      if (++odometer[static_cast<std::size_t>(pos)] < group.size()) {
        break;
      }
      odometer[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) {
      break;
    }
  }
  return hist;
}

std::uint64_t brute_partitions(std::uint32_t n) {
  std::function<std::uint64_t(std::uint32_t, std::uint32_t)> rec =
      [&](std::uint32_t remaining, std::uint32_t max_part) -> std::uint64_t {
    if (remaining == 0) {
      return 1;
    }
    std::uint64_t total = 0;
    for (std::uint32_t part = std::min(remaining, max_part); part >= 1;
         --part) {
      total += rec(remaining - part, part);
    }
    return total;
  };
  return rec(n, n == 0 ? 1 : n);
}

}  // namespace testsupport
