#include "tabcurv/lr.hpp"

#include <stdexcept>
#include <vector>

namespace tabcurv {

void PartitionMultiset::add(const Partition& nu, int multiplicity) {
  if (multiplicity < 0) throw std::invalid_argument("negative multiplicity");
  if (multiplicity == 0) return;
  entries_[nu] += multiplicity;
}

int PartitionMultiset::multiplicity(const Partition& nu) const {
  const auto it = entries_.find(nu);
  return it == entries_.end() ? 0 : it->second;
}

namespace {

struct Cell {
  std::size_t row;
  int col;
};

class LrCounter {
 public:
  LrCounter(const Partition& lambda, const Partition& mu, const Partition& nu)
      : lambda_(lambda), mu_(mu), nu_(nu), content_(mu.length() + 1, 0) {
    grid_.resize(nu.length());
    for (std::size_t i = 0; i < nu.length(); ++i) {
      grid_[i].assign(static_cast<std::size_t>(nu.row(i)), 0);
      // Reverse reading order: rows top to bottom, each right to left.
      for (int j = nu.row(i) - 1; j >= lambda.row(i); --j) cells_.push_back({i, j});
    }
  }

  int count() { return place(0); }

 private:
  int place(std::size_t k) {
    if (k == cells_.size()) return 1;
    const auto [i, j] = cells_[k];
    int total = 0;
    for (int v = 1; v <= static_cast<int>(mu_.length()); ++v) {
      if (content_[v] >= mu_.row(static_cast<std::size_t>(v - 1))) continue;
      // Lattice condition on the reverse reading word.
      if (v > 1 && content_[v] + 1 > content_[v - 1]) continue;
      // Rows weakly increase left to right; the cell to the right is filled.
      if (j + 1 < nu_.row(i) && grid_[i][j + 1] < v) continue;
      // Columns strictly increase downward; skew cells above are filled.
      if (i > 0 && j >= lambda_.row(i - 1) && grid_[i - 1][j] >= v) continue;
      grid_[i][j] = v;
      ++content_[v];
      total += place(k + 1);
      --content_[v];
      grid_[i][j] = 0;
    }
    return total;
  }

  const Partition& lambda_;
  const Partition& mu_;
  const Partition& nu_;
  std::vector<int> content_;
  std::vector<std::vector<int>> grid_;
  std::vector<Cell> cells_;
};

}  // namespace

int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.weight() != lambda.weight() + mu.weight() || !nu.contains(lambda)) return 0;
  return LrCounter(lambda, mu, nu).count();
}

PartitionMultiset lr_product(const Partition& lambda, const Partition& mu) {
  PartitionMultiset out;
  for (const auto& nu : partitions_of(lambda.weight() + mu.weight())) {
    if (!nu.contains(lambda) || !nu.contains(mu)) continue;
    out.add(nu, lr_coefficient(lambda, mu, nu));
  }
  return out;
}

std::string format_multiset(const PartitionMultiset& product) {
  if (product.empty()) return "0";
  std::string out;
  for (const auto& [nu, mult] : product.entries()) {
    if (!out.empty()) out += " + ";
    if (mult != 1) out += std::to_string(mult);
    out += to_string(nu);
  }
  return out;
}

std::string format_product(const Partition& lambda, const Partition& mu,
                           const PartitionMultiset& product) {
  return to_string(lambda) + to_string(mu) + " = " + format_multiset(product);
}

}  // namespace tabcurv
