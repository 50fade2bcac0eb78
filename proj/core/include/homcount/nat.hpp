#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace homcount {

/// Exact nonnegative integer. Every count in this library is exact; there is
/// no fixed-width fast path anywhere.
using Nat = mpz_class;

Nat nat_pow(std::uint64_t base, std::uint64_t exponent);
Nat nat_factorial(std::uint64_t n);

/// Checked quotient: throws std::logic_error unless divisor divides dividend.
/// A failure here means a broken arithmetic identity, never bad user input.
Nat nat_divexact(const Nat& dividend, const Nat& divisor);

/// Parses a base-10 nonnegative integer; rejects signs, blanks and garbage.
Nat nat_from_decimal(const std::string& text);

}  // namespace homcount
