#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tabcurv/rational.hpp"

namespace tabcurv {

// Incremental row echelon form over Q, kept fraction-free: every stored row is
// a primitive integer vector (content 1, positive pivot). Reduction of a new
// row uses cross-multiplication followed by content removal, so no fractions
// and no unbounded coefficient growth.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t width) : width_(width) {}

  // Returns true when the row was independent of the rows seen so far.
  bool insert(std::span<const Rational> row);
  bool insert_integer(std::vector<BigInt> row);

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t width() const noexcept { return width_; }

 private:
  struct Row {
    std::size_t pivot;
    std::vector<BigInt> values;
  };

  std::size_t width_;
  std::vector<Row> rows_;  // ascending pivot
};

std::size_t exact_rank(std::span<const std::vector<Rational>> rows);

}  // namespace tabcurv
