#include "homcount/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace homcount {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw std::invalid_argument("Permutation: image vector is not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::uint32_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

namespace {
void require_same_degree(const Permutation& p, const Permutation& q, const char* op) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument(std::string(op) + ": degree mismatch");
  }
}
}  // namespace

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q, "compose");
  std::vector<std::uint32_t> images(p.degree());
  for (std::uint32_t i = 0; i < p.degree(); ++i) {
    images[i] = p(q(i));
  }
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<std::uint32_t> images(p.degree());
  for (std::uint32_t i = 0; i < p.degree(); ++i) {
    images[p(i)] = i;
  }
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation& p, const Permutation& by) {
  require_same_degree(p, by, "conjugate");
  // (by * p * by^-1)(by(i)) = by(p(i))
  std::vector<std::uint32_t> images(p.degree());
  for (std::uint32_t i = 0; i < p.degree(); ++i) {
    images[by(i)] = by(p(i));
  }
  return Permutation(std::move(images));
}

bool commute(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q, "commute");
  for (std::uint32_t i = 0; i < p.degree(); ++i) {
    if (p(q(i)) != q(p(i))) {
      return false;
    }
  }
  return true;
}

}  // namespace homcount
