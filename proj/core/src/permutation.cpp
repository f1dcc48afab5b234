#include "tabcurv/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tabcurv {

namespace {

void check_degree(std::size_t degree) {
  if (degree == 0 || degree > Permutation::kMaxDegree) {
    throw std::invalid_argument("permutation degree " + std::to_string(degree) +
                                " outside [1, " + std::to_string(Permutation::kMaxDegree) + "]");
  }
}

}  // namespace

Permutation::Permutation(std::span<const int> one_line) {
  check_degree(one_line.size());
  degree_ = static_cast<std::uint8_t>(one_line.size());
  std::array<bool, kMaxDegree> seen{};
  for (std::size_t i = 0; i < one_line.size(); ++i) {
    const int v = one_line[i];
    if (v < 1 || v > static_cast<int>(degree_) || seen[v - 1]) {
      throw std::invalid_argument("not a permutation in one-line notation");
    }
    seen[v - 1] = true;
    images_[i] = static_cast<std::uint8_t>(v - 1);
  }
}

Permutation::Permutation(std::initializer_list<int> one_line)
    : Permutation(std::span<const int>(one_line.begin(), one_line.size())) {}

Permutation Permutation::identity(std::size_t degree) {
  check_degree(degree);
  Permutation p;
  p.degree_ = static_cast<std::uint8_t>(degree);
  for (std::size_t i = 0; i < degree; ++i) p.images_[i] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation Permutation::transposition(std::size_t degree, int i, int j) {
  Permutation p = identity(degree);
  if (i < 1 || j < 1 || i > static_cast<int>(degree) || j > static_cast<int>(degree)) {
    throw std::invalid_argument("transposition point out of range");
  }
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

Permutation Permutation::from_zero_based(std::span<const std::uint8_t> images) {
  std::vector<int> one_line(images.size());
  std::transform(images.begin(), images.end(), one_line.begin(),
                 [](std::uint8_t v) { return static_cast<int>(v) + 1; });
  return Permutation(std::span<const int>(one_line));
}

int Permutation::operator()(int i) const {
  if (i < 1 || i > static_cast<int>(degree_)) {
    throw std::out_of_range("permutation argument out of range");
  }
  return images_[i - 1] + 1;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(degree_);
  for (std::size_t i = 0; i < degree_; ++i) out[i] = images_[i] + 1;
  return out;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.degree_ = degree_;
  for (std::size_t i = 0; i < degree_; ++i) inv.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return inv;
}

int Permutation::sign() const noexcept {
  // Parity via cycle decomposition: each cycle of length L contributes L-1 transpositions.
  std::array<bool, kMaxDegree> visited{};
  int transpositions = 0;
  for (std::size_t i = 0; i < degree_; ++i) {
    if (visited[i]) continue;
    std::size_t j = i;
    int length = 0;
    while (!visited[j]) {
      visited[j] = true;
      j = images_[j];
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < degree_; ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("compose: degree mismatch");
  }
  Permutation out;
  out.degree_ = p.degree_;
  for (std::size_t i = 0; i < p.degree_; ++i) out.images_[i] = p.images_[q.images_[i]];
  return out;
}

std::vector<Permutation> all_permutations(std::size_t degree) {
  check_degree(degree);
  std::vector<int> one_line(degree);
  std::iota(one_line.begin(), one_line.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(std::span<const int>(one_line));
  } while (std::next_permutation(one_line.begin(), one_line.end()));
  return out;
}

std::string to_string(const Permutation& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.image0(i) + 1);
  }
  return out + "]";
}

}  // namespace tabcurv
