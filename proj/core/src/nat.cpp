#include "homcount/nat.hpp"

#include <stdexcept>

namespace homcount {

Nat nat_pow(std::uint64_t base, std::uint64_t exponent) {
  Nat result;
  mpz_ui_pow_ui(result.get_mpz_t(), base, exponent);
  return result;
}

Nat nat_factorial(std::uint64_t n) {
  Nat result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Nat nat_divexact(const Nat& dividend, const Nat& divisor) {
  if (divisor == 0) {
    throw std::logic_error("nat_divexact: division by zero");
  }
  if (!mpz_divisible_p(dividend.get_mpz_t(), divisor.get_mpz_t())) {
    throw std::logic_error("nat_divexact: " + dividend.get_str() +
                           " is not divisible by " + divisor.get_str());
  }
  Nat result;
  mpz_divexact(result.get_mpz_t(), dividend.get_mpz_t(), divisor.get_mpz_t());
  return result;
}

Nat nat_from_decimal(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("nat_from_decimal: empty string");
  }
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("nat_from_decimal: not a nonnegative decimal integer: '" +
                                  text + "'");
    }
  }
  return Nat(text, 10);
}

}  // namespace homcount
