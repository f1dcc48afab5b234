#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tabcurv {

// Element of S_r in one-line notation. Public API is 1-based: the permutation
// [2,3,1] sends 1->2, 2->3, 3->1. Storage is 0-based.
class Permutation {
 public:
  static constexpr std::size_t kMaxDegree = 8;

  // Throws std::invalid_argument unless `one_line` is a bijection of {1..r}
  // with 1 <= r <= kMaxDegree.
  explicit Permutation(std::span<const int> one_line);
  Permutation(std::initializer_list<int> one_line);

  static Permutation identity(std::size_t degree);
  // (i j), 1-based.
  static Permutation transposition(std::size_t degree, int i, int j);
  static Permutation from_zero_based(std::span<const std::uint8_t> images);

  std::size_t degree() const noexcept { return degree_; }

  // 1-based image of the 1-based point i.
  int operator()(int i) const;
  // 0-based image of the 0-based point i; unchecked.
  std::size_t image0(std::size_t i) const noexcept { return images_[i]; }

  std::vector<int> one_line() const;
  Permutation inverse() const;
  int sign() const noexcept;
  bool is_identity() const noexcept;

  // Degree first, then lexicographic on images.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  friend Permutation compose(const Permutation& p, const Permutation& q);

 private:
  Permutation() = default;

  std::uint8_t degree_ = 0;
  std::array<std::uint8_t, kMaxDegree> images_{};
};

// (p o q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);

inline int sign(const Permutation& p) noexcept { return p.sign(); }
inline Permutation inverse(const Permutation& p) { return p.inverse(); }

// All r! permutations, lexicographic by one-line notation.
std::vector<Permutation> all_permutations(std::size_t degree);

// "[2,3,1]"
std::string to_string(const Permutation& p);

}  // namespace tabcurv
