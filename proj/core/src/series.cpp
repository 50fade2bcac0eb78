#include "homcount/series.hpp"

#include <stdexcept>

namespace homcount::series {

OrbitPolynomial::OrbitPolynomial(std::vector<Nat> coeffs) : coeffs_(std::move(coeffs)) {
  for (const Nat& c : coeffs_) {
    if (c < 0) {
      throw std::invalid_argument("OrbitPolynomial: negative coefficient");
    }
  }
  while (coeffs_.size() > 1 && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
  if (coeffs_.empty()) {
    coeffs_.emplace_back(0);
  }
}

OrbitPolynomial OrbitPolynomial::one() { return OrbitPolynomial({Nat(1)}); }

Nat OrbitPolynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Nat(0);
}

Nat evaluate_at_one(const OrbitPolynomial& p) {
  Nat sum = 0;
  for (const Nat& c : p.coeffs()) {
    sum += c;
  }
  return sum;
}

OgfSeries euler_transform(const Seq1& a, std::size_t order) {
  if (a.size() < order) {
    throw std::invalid_argument("euler_transform: sequence of length " +
                                std::to_string(a.size()) + " is shorter than truncation order " +
                                std::to_string(order));
  }
  // b(m) = sum_{d|m} d*a(d), needed for m <= order only.
  std::vector<Nat> b(order + 1);
  for (std::size_t d = 1; d <= order; ++d) {
    if (a(d) == 0) {
      continue;
    }
    Nat w = a(d) * static_cast<unsigned long>(d);
    for (std::size_t m = d; m <= order; m += d) {
      b[m] += w;
    }
  }

  OgfSeries c;
  c.coeffs.resize(order + 1);
  c.coeffs[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Nat acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      mpz_addmul(acc.get_mpz_t(), b[k].get_mpz_t(), c.coeffs[n - k].get_mpz_t());
    }
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), n)) {
      throw std::logic_error("euler_transform: non-exact division at n=" + std::to_string(n));
    }
    mpz_divexact_ui(c.coeffs[n].get_mpz_t(), acc.get_mpz_t(), n);
  }
  return c;
}

namespace {

// Walks the exponential-formula recurrence, handing each (k, weight) term to
// `emit` with weight = C(n-1, k-1) * d(k). The binomial is updated in place:
// C(n-1, k) = C(n-1, k-1) * (n-k) / k, an exact division at every step.
template <typename Emit>
void for_each_term(const Seq1& d, std::size_t n, Emit&& emit) {
  Nat binom = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    if (d(k) != 0) {
      Nat w = binom * d(k);
      emit(k, w);
    }
    if (k < n) {
      binom *= static_cast<unsigned long>(n - k);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), k);
    }
  }
}

}  // namespace

std::vector<OrbitPolynomial> egf_exp_formula(const Seq1& transitive_counts, std::size_t order) {
  if (transitive_counts.size() < order) {
    throw std::invalid_argument("egf_exp_formula: sequence of length " +
                                std::to_string(transitive_counts.size()) +
                                " is shorter than truncation order " + std::to_string(order));
  }
  std::vector<std::vector<Nat>> p(order + 1);
  p[0] = {Nat(1)};
  for (std::size_t n = 1; n <= order; ++n) {
    p[n].assign(n + 1, Nat(0));
    for_each_term(transitive_counts, n, [&](std::size_t k, const Nat& w) {
      const std::vector<Nat>& prev = p[n - k];
      for (std::size_t j = 0; j < prev.size(); ++j) {
        // The split-off component contributes one extra orbit: shift by y.
        mpz_addmul(p[n][j + 1].get_mpz_t(), w.get_mpz_t(), prev[j].get_mpz_t());
      }
    });
  }
  std::vector<OrbitPolynomial> result;
  result.reserve(order + 1);
  for (auto& coeffs : p) {
    result.emplace_back(std::move(coeffs));
  }
  return result;
}

std::vector<Nat> egf_exp_totals(const Seq1& transitive_counts, std::size_t order) {
  if (transitive_counts.size() < order) {
    throw std::invalid_argument("egf_exp_totals: sequence of length " +
                                std::to_string(transitive_counts.size()) +
                                " is shorter than truncation order " + std::to_string(order));
  }
  std::vector<Nat> totals(order + 1);
  totals[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    for_each_term(transitive_counts, n, [&](std::size_t k, const Nat& w) {
      mpz_addmul(totals[n].get_mpz_t(), w.get_mpz_t(), totals[n - k].get_mpz_t());
    });
  }
  return totals;
}

}  // namespace homcount::series
