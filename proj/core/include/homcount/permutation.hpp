#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace homcount {

/// Bijection on {0, ..., degree-1}, stored as its image vector.
class Permutation {
 public:
  /// Validates that `images` is a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation identity(std::uint32_t degree);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t operator()(std::uint32_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// Function composition: (p * q)(i) = p(q(i)). Degrees must match.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// by * p * by^-1 (the action of relabeling points by `by`).
Permutation conjugate(const Permutation& p, const Permutation& by);
bool commute(const Permutation& p, const Permutation& q);

}  // namespace homcount
