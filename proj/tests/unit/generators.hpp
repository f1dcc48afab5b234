#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "tabcurv/group_ring.hpp"
#include "tabcurv/random.hpp"
#include "tabcurv/young.hpp"

namespace gen {

using tabcurv::GroupRingElement;
using tabcurv::Partition;
using tabcurv::Permutation;
using tabcurv::Rational;
using tabcurv::SplitMix64;

inline Permutation permutation(SplitMix64& rng, std::size_t degree) {
  std::vector<int> v(degree);
  std::iota(v.begin(), v.end(), 1);
  for (std::size_t i = degree; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i) - 1));
    std::swap(v[i - 1], v[j]);
  }
  return Permutation(v);
}

inline Rational small_rational(SplitMix64& rng) {
  return Rational(rng.uniform_int(-6, 6), rng.uniform_int(1, 4));
}

inline GroupRingElement element(SplitMix64& rng, std::size_t degree, int terms = 4) {
  GroupRingElement a(degree);
  for (int k = 0; k < terms; ++k) a.add_term(permutation(rng, degree), small_rational(rng));
  return a;
}

inline Partition partition(SplitMix64& rng, int weight) {
  std::vector<int> parts;
  int left = weight;
  int cap = weight;
  while (left > 0) {
    const int p = static_cast<int>(rng.uniform_int(1, std::min(left, cap)));
    parts.push_back(p);
    left -= p;
    cap = p;
  }
  return Partition(parts);
}

// Runs body(rng) for `cases` independent streams derived from `label`.
template <class Body>
void for_cases(const char* label, int cases, Body&& body) {
  SplitMix64 root(tabcurv::derive_seed(0x5eed, label));
  for (int i = 0; i < cases; ++i) {
    SplitMix64 rng = root.split();
    body(rng);
  }
}

}  // namespace gen
