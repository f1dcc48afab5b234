#include "tabcurv/exact_rank.hpp"

#include <algorithm>
#include <stdexcept>

namespace tabcurv {

namespace {

void make_primitive(std::vector<BigInt>& v) {
  BigInt content = 0;
  for (const auto& x : v) {
    if (x != 0) content = boost::multiprecision::gcd(content, x);
    if (content == 1) break;
  }
  if (content > 1) {
    for (auto& x : v) x /= content;
  }
}

}  // namespace

bool RowEchelon::insert(std::span<const Rational> row) {
  if (row.size() != width_) throw std::invalid_argument("RowEchelon: row width mismatch");
  BigInt lcm = 1;
  for (const auto& x : row) {
    const BigInt den = boost::multiprecision::denominator(x);
    if (den != 1) lcm = boost::multiprecision::lcm(lcm, den);
  }
  std::vector<BigInt> ints(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    ints[i] = boost::multiprecision::numerator(row[i]) * (lcm / boost::multiprecision::denominator(row[i]));
  }
  return insert_integer(std::move(ints));
}

bool RowEchelon::insert_integer(std::vector<BigInt> v) {
  if (v.size() != width_) throw std::invalid_argument("RowEchelon: row width mismatch");
  if (rows_.size() == width_) return false;
  make_primitive(v);
  for (const auto& basis : rows_) {
    const BigInt& lead = basis.values[basis.pivot];
    if (v[basis.pivot] == 0) continue;
    const BigInt factor = v[basis.pivot];
    for (std::size_t j = 0; j < width_; ++j) {
      if (basis.values[j] == 0) {
        if (v[j] != 0) v[j] *= lead;
      } else {
        v[j] = lead * v[j] - factor * basis.values[j];
      }
    }
    make_primitive(v);
  }
  const auto first = std::find_if(v.begin(), v.end(), [](const BigInt& x) { return x != 0; });
  if (first == v.end()) return false;
  const auto pivot = static_cast<std::size_t>(first - v.begin());
  if (*first < 0) {
    for (auto& x : v) x = -x;
  }
  const auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                    [](const Row& r, std::size_t p) { return r.pivot < p; });
  rows_.insert(pos, Row{pivot, std::move(v)});
  return true;
}

std::size_t exact_rank(std::span<const std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  RowEchelon echelon(rows.front().size());
  for (const auto& row : rows) echelon.insert(row);
  return echelon.rank();
}

}  // namespace tabcurv
