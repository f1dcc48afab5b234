#pragma once

#include <functional>
#include <map>
#include <string>

#include "tabcurv/young.hpp"

namespace tabcurv {

// Partitions with positive multiplicities, iterated in decreasing
// lexicographic order ([3 1] before [2 2] before [2 1 1]).
class PartitionMultiset {
 public:
  using EntryMap = std::map<Partition, int, std::greater<>>;

  void add(const Partition& nu, int multiplicity = 1);
  int multiplicity(const Partition& nu) const;

  const EntryMap& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  friend bool operator==(const PartitionMultiset&, const PartitionMultiset&) = default;

 private:
  EntryMap entries_;
};

// Littlewood-Richardson product [lambda][mu] = sum_nu c^nu_{lambda mu} [nu].
// c^nu_{lambda mu} counts semistandard fillings of nu/lambda with content mu
// whose reverse reading word is a lattice word.
PartitionMultiset lr_product(const Partition& lambda, const Partition& mu);

// Number of fillings for one nu; 0 unless nu contains lambda and
// |nu| = |lambda| + |mu|.
int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

inline int contains_partition(const PartitionMultiset& product, const Partition& nu) {
  return product.multiplicity(nu);
}

// "[3 1] + [2 2] + [2 1 1]"; multiplicities above one print as "2[3 2 1]".
std::string format_multiset(const PartitionMultiset& product);

// "[2 1][1] = [3 1] + [2 2] + [2 1 1]"
std::string format_product(const Partition& lambda, const Partition& mu,
                           const PartitionMultiset& product);

}  // namespace tabcurv
