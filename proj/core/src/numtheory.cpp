#include "homcount/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace homcount::numtheory {

Seq1::Seq1(std::size_t length) : values_(length) {
  if (length == 0) {
    throw std::invalid_argument("Seq1: length must be >= 1");
  }
}

Seq1::Seq1(std::vector<Nat> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("Seq1: length must be >= 1");
  }
}

const Nat& Seq1::operator()(std::size_t n) const {
  if (n == 0 || n > values_.size()) {
    throw std::out_of_range("Seq1: index " + std::to_string(n) + " outside 1.." +
                            std::to_string(values_.size()));
  }
  return values_[n - 1];
}

Nat& Seq1::operator()(std::size_t n) {
  if (n == 0 || n > values_.size()) {
    throw std::out_of_range("Seq1: index " + std::to_string(n) + " outside 1.." +
                            std::to_string(values_.size()));
  }
  return values_[n - 1];
}

Seq1 ones(std::size_t length) {
  Seq1 s(length);
  for (std::size_t n = 1; n <= length; ++n) {
    s(n) = 1;
  }
  return s;
}

Seq1 delta(std::size_t length) {
  Seq1 s(length);
  s(1) = 1;
  return s;
}

Nat sigma(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("sigma: n must be >= 1");
  }
  // Multiplicative: sigma(p^e) = (p^(e+1) - 1) / (p - 1).
  Nat result = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) {
      continue;
    }
    Nat primepow = p;
    Nat factor = 1 + primepow;
    n /= p;
    while (n % p == 0) {
      n /= p;
      primepow *= p;
      factor += primepow;
    }
    result *= factor;
  }
  if (n > 1) {
    result *= Nat(1) + Nat(static_cast<unsigned long>(n));
  }
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("divisors: n must be >= 1");
  }
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) {
        large.push_back(n / d);
      }
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

FactorSieve::FactorSieve(std::uint32_t limit) : spf_(static_cast<std::size_t>(limit) + 1, 0) {
  if (limit < 1) {
    throw std::invalid_argument("FactorSieve: limit must be >= 1");
  }
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      for (std::uint64_t j = i; j <= limit; j += i) {
        if (spf_[j] == 0) {
          spf_[j] = static_cast<std::uint32_t>(i);
        }
      }
    }
  }
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> FactorSieve::factor(std::uint32_t n) const {
  if (n == 0 || n >= spf_.size()) {
    throw std::out_of_range("FactorSieve::factor: n outside table range");
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  while (n > 1) {
    std::uint32_t p = spf_[n];
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

std::vector<std::uint64_t> FactorSieve::divisors(std::uint32_t n) const {
  std::vector<std::uint64_t> divs{1};
  for (auto [p, e] : factor(n)) {
    const std::size_t base = divs.size();
    std::uint64_t pk = 1;
    for (std::uint32_t k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) {
        divs.push_back(divs[i] * pk);
      }
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

Seq1 dirichlet_convolve(const Seq1& a, const Seq1& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dirichlet_convolve: length mismatch (" +
                                std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                                ")");
  }
  const std::size_t n = a.size();
  Seq1 c(n);
  for (std::size_t d = 1; d <= n; ++d) {
    const Nat& ad = a(d);
    if (ad == 0) {
      continue;
    }
    for (std::size_t q = 1; q <= n / d; ++q) {
      mpz_addmul(c(d * q).get_mpz_t(), ad.get_mpz_t(), b(q).get_mpz_t());
    }
  }
  return c;
}

Seq1 power_seq(std::uint64_t k, std::size_t length) {
  Seq1 s(length);
  for (std::size_t n = 1; n <= length; ++n) {
    mpz_ui_pow_ui(s(n).get_mpz_t(), n, k);
  }
  return s;
}

Seq1 weighted_divisor_sum(const Seq1& a) {
  const std::size_t n = a.size();
  Seq1 b(n);
  for (std::size_t d = 1; d <= n; ++d) {
    if (a(d) == 0) {
      continue;
    }
    Nat w = a(d) * static_cast<unsigned long>(d);
    for (std::size_t m = d; m <= n; m += d) {
      b(m) += w;
    }
  }
  return b;
}

std::vector<Nat> partition_numbers(std::size_t n) {
  std::vector<Nat> p(n + 1);
  p[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Nat acc = 0;
    for (std::size_t k = 1;; ++k) {
      const std::size_t g1 = k * (3 * k - 1) / 2;
      if (g1 > m) {
        break;
      }
      const std::size_t g2 = k * (3 * k + 1) / 2;
      if (k % 2 == 1) {
        acc += p[m - g1];
        if (g2 <= m) {
          acc += p[m - g2];
        }
      } else {
        acc -= p[m - g1];
        if (g2 <= m) {
          acc -= p[m - g2];
        }
      }
    }
    p[m] = acc;
  }
  return p;
}

}  // namespace homcount::numtheory
