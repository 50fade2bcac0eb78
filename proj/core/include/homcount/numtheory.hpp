#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "homcount/nat.hpp"

namespace homcount::numtheory {

/// 1-indexed finite sequence of exact nonnegative integers. This is the
/// Dirichlet-side convention: entry n is the value at n, n = 1..size().
/// Power-series code (0-indexed) lives in series.hpp; the boundary between
/// the two conventions is explicit in every operation signature.
class Seq1 {
 public:
  /// Sequence of `length` zeros; length must be >= 1.
  explicit Seq1(std::size_t length);
  /// Takes entries for n = 1..values.size(); must be nonempty.
  explicit Seq1(std::vector<Nat> values);

  std::size_t size() const { return values_.size(); }
  const Nat& operator()(std::size_t n) const;
  Nat& operator()(std::size_t n);
  const std::vector<Nat>& values() const { return values_; }

  bool operator==(const Seq1&) const = default;

 private:
  std::vector<Nat> values_;
};

Seq1 ones(std::size_t length);
/// Convolution identity: (1, 0, 0, ...).
Seq1 delta(std::size_t length);

/// Sum of divisors of n. Rejects n = 0.
Nat sigma(std::uint64_t n);

/// Divisors of n in ascending order, by trial division.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Smallest-prime-factor table, built once per session and then shared.
/// Immutable after construction; safe for concurrent readers.
class FactorSieve {
 public:
  explicit FactorSieve(std::uint32_t limit);

  std::uint32_t limit() const { return static_cast<std::uint32_t>(spf_.size() - 1); }
  /// (prime, exponent) pairs, primes ascending. n must be in [1, limit].
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factor(std::uint32_t n) const;
  /// Divisors of n in ascending order. n must be in [1, limit].
  std::vector<std::uint64_t> divisors(std::uint32_t n) const;

 private:
  std::vector<std::uint32_t> spf_;
};

/// Dirichlet convolution c(n) = sum_{d|n} a(d) b(n/d). Inputs must have
/// equal length; runs in O(N log N) big-integer operations.
Seq1 dirichlet_convolve(const Seq1& a, const Seq1& b);

/// The sequence n^k for n = 1..length.
Seq1 power_seq(std::uint64_t k, std::size_t length);

/// b(n) = sum_{d|n} d * a(d).
Seq1 weighted_divisor_sum(const Seq1& a);

/// Partition numbers p(0..n) by the pentagonal-number recurrence. Kept
/// deliberately independent of the series module's Euler transform so the
/// two routes can validate each other.
std::vector<Nat> partition_numbers(std::size_t n);

}  // namespace homcount::numtheory
