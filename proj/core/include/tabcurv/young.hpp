#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tabcurv/group_ring.hpp"

namespace tabcurv {

// lambda = (l_1 >= l_2 >= ... >= l_k > 0). Trailing zeros are stripped on
// construction; the empty partition is the partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int weight() const noexcept { return weight_; }
  // Row length, 0 beyond the last row.
  int row(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const;
  bool contains(const Partition& other) const;

  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// "[2 1 1]"
std::string to_string(const Partition& lambda);

// All partitions of r, in decreasing lexicographic order: (r), (r-1,1), ...
std::vector<Partition> partitions_of(int r);

// Number of standard tableaux f^lambda via the hook length formula.
std::uint64_t hook_length_count(const Partition& lambda);

class YoungTableau {
 public:
  // Rows are filled left to right; the frame is read off the row lengths.
  // Throws std::invalid_argument unless the row lengths are weakly decreasing
  // and the entries are exactly {1..r}.
  explicit YoungTableau(std::vector<std::vector<int>> rows);

  const Partition& frame() const noexcept { return frame_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  std::vector<std::vector<int>> columns() const;
  std::size_t degree() const noexcept { return static_cast<std::size_t>(frame_.weight()); }
  bool is_standard() const;
  // Entries concatenated row by row.
  std::vector<int> reading_word() const;

  friend bool operator==(const YoungTableau&, const YoungTableau&) = default;

 private:
  Partition frame_;
  std::vector<std::vector<int>> rows_;
};

// Parses "1,3;2,4" (rows separated by ';').
YoungTableau parse_tableau(std::string_view text);
std::string to_string(const YoungTableau& t);

// Standard tableaux of lambda, ordered lexicographically by reading word.
std::vector<YoungTableau> standard_tableaux(const Partition& lambda);

// Permutations that map every row (column) of t onto itself.
std::vector<Permutation> horizontal_group(const YoungTableau& t);
std::vector<Permutation> vertical_group(const YoungTableau& t);

// y_t = sum_{p in H_t} sum_{q in V_t} sign(q) p o q
GroupRingElement young_symmetrizer(const YoungTableau& t);

// mu with y*y = mu*y, or nothing when y*y is not a multiple of y.
std::pair<bool, Rational> essential_idempotency_factor(const GroupRingElement& y);

struct RingDecompositionReport {
  int degree = 0;
  std::uint64_t group_order = 0;
  std::vector<std::pair<Partition, std::uint64_t>> standard_counts;
  std::uint64_t sum_of_squares = 0;
  std::size_t left_ideal_span_rank = 0;

  bool sum_matches() const { return sum_of_squares == group_order; }
  bool rank_matches() const { return left_ideal_span_rank == group_order; }
};

// Checks sum_lambda (f^lambda)^2 = r! and that {p*y_t : p in S_r, t standard}
// spans all of Q[S_r]. Requires 1 <= r <= 5.
RingDecompositionReport verify_ring_decomposition(int r);

}  // namespace tabcurv
