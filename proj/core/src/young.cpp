#include "tabcurv/young.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tabcurv/exact_rank.hpp"

namespace tabcurv {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> conj(parts_.empty() ? 0 : parts_.front(), 0);
  for (int len : parts_) {
    for (int j = 0; j < len; ++j) ++conj[j];
  }
  return Partition(std::move(conj));
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (std::size_t i = 0; i < other.length(); ++i) {
    if (other.parts_[i] > parts_[i]) return false;
  }
  return true;
}

std::string to_string(const Partition& lambda) {
  std::string out = "[";
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    if (i) out += ' ';
    out += std::to_string(lambda.parts()[i]);
  }
  return out + "]";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int r) {
  if (r < 0) throw std::invalid_argument("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(r, r, prefix, out);
  return out;
}

std::uint64_t hook_length_count(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  // r! / prod hooks, accumulated exactly.
  BigInt numerator = 1;
  for (int k = 2; k <= lambda.weight(); ++k) numerator *= k;
  BigInt hooks = 1;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.parts()[i]; ++j) {
      const int arm = lambda.parts()[i] - j - 1;
      const int leg = conj.parts()[j] - static_cast<int>(i) - 1;
      hooks *= arm + leg + 1;
    }
  }
  return (numerator / hooks).convert_to<std::uint64_t>();
}

YoungTableau::YoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> shape;
  for (const auto& row : rows_) {
    if (row.empty()) throw std::invalid_argument("tableau rows must be non-empty");
    shape.push_back(static_cast<int>(row.size()));
  }
  frame_ = Partition(shape);
  std::vector<int> entries = reading_word();
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] != static_cast<int>(i) + 1) {
      throw std::invalid_argument("tableau entries must be exactly 1..r");
    }
  }
  if (degree() > Permutation::kMaxDegree) throw std::invalid_argument("tableau too large");
}

std::vector<std::vector<int>> YoungTableau::columns() const {
  std::vector<std::vector<int>> cols(rows_.empty() ? 0 : rows_.front().size());
  for (const auto& row : rows_) {
    for (std::size_t j = 0; j < row.size(); ++j) cols[j].push_back(row[j]);
  }
  return cols;
}

bool YoungTableau::is_standard() const {
  const auto increasing = [](const std::vector<int>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
  };
  return std::all_of(rows_.begin(), rows_.end(), increasing) &&
         std::ranges::all_of(columns(), increasing);
}

std::vector<int> YoungTableau::reading_word() const {
  std::vector<int> word;
  for (const auto& row : rows_) word.insert(word.end(), row.begin(), row.end());
  return word;
}

YoungTableau parse_tableau(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::stringstream all{std::string(text)};
  std::string row_text;
  while (std::getline(all, row_text, ';')) {
    std::vector<int> row;
    std::stringstream rs(row_text);
    std::string cell;
    while (std::getline(rs, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stoi(cell, &used));
        if (cell.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed tableau '" + std::string(text) + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  return YoungTableau(std::move(rows));
}

std::string to_string(const YoungTableau& t) {
  std::string out;
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < t.rows()[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(t.rows()[i][j]);
    }
  }
  return out;
}

namespace {

void fill_standard(const Partition& lambda, int next, std::vector<std::vector<int>>& rows,
                   std::vector<YoungTableau>& out) {
  if (next > lambda.weight()) {
    out.emplace_back(rows);
    return;
  }
  // `next` goes into an outer corner of the shape filled so far.
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    const auto len = static_cast<int>(rows[i].size());
    if (len >= lambda.parts()[i]) continue;
    if (i > 0 && static_cast<int>(rows[i - 1].size()) <= len) continue;
    rows[i].push_back(next);
    fill_standard(lambda, next + 1, rows, out);
    rows[i].pop_back();
  }
}

std::vector<Permutation> block_group(const std::vector<std::vector<int>>& blocks, std::size_t degree) {
  std::vector<Permutation> group{Permutation::identity(degree)};
  for (const auto& block : blocks) {
    if (block.size() < 2) continue;
    std::vector<int> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> images = sorted;
    std::vector<Permutation> block_perms;
    do {
      std::vector<int> one_line(degree);
      std::iota(one_line.begin(), one_line.end(), 1);
      for (std::size_t k = 0; k < sorted.size(); ++k) one_line[sorted[k] - 1] = images[k];
      block_perms.emplace_back(std::span<const int>(one_line));
    } while (std::next_permutation(images.begin(), images.end()));
    std::vector<Permutation> next;
    next.reserve(group.size() * block_perms.size());
    for (const auto& g : group) {
      for (const auto& b : block_perms) next.push_back(compose(g, b));
    }
    group = std::move(next);
  }
  std::sort(group.begin(), group.end());
  return group;
}

}  // namespace

std::vector<YoungTableau> standard_tableaux(const Partition& lambda) {
  std::vector<YoungTableau> out;
  if (lambda.weight() == 0) return out;
  std::vector<std::vector<int>> rows(lambda.length());
  fill_standard(lambda, 1, rows, out);
  std::sort(out.begin(), out.end(), [](const YoungTableau& a, const YoungTableau& b) {
    return a.reading_word() < b.reading_word();
  });
  return out;
}

std::vector<Permutation> horizontal_group(const YoungTableau& t) {
  return block_group(t.rows(), t.degree());
}

std::vector<Permutation> vertical_group(const YoungTableau& t) {
  return block_group(t.columns(), t.degree());
}

GroupRingElement young_symmetrizer(const YoungTableau& t) {
  GroupRingElement y(t.degree());
  const auto vertical = vertical_group(t);
  for (const auto& p : horizontal_group(t)) {
    for (const auto& q : vertical) y.add_term(compose(p, q), q.sign());
  }
  return y;
}

std::pair<bool, Rational> essential_idempotency_factor(const GroupRingElement& y) {
  if (y.is_zero()) return {false, Rational(0)};
  const GroupRingElement square = y * y;
  const auto& [p0, c0] = *y.terms().begin();
  const Rational mu = square.coefficient(p0) / c0;
  GroupRingElement scaled = y;
  scaled *= mu;
  return {scaled == square, mu};
}

RingDecompositionReport verify_ring_decomposition(int r) {
  if (r < 1 || r > 5) throw std::invalid_argument("verify_ring_decomposition: need 1 <= r <= 5");
  RingDecompositionReport report;
  report.degree = r;
  report.group_order = 1;
  for (int k = 2; k <= r; ++k) report.group_order *= static_cast<std::uint64_t>(k);

  const auto group = all_permutations(static_cast<std::size_t>(r));
  // Coordinates of a group ring element: coefficient of the i-th permutation.
  const auto coordinates = [&group](const GroupRingElement& a) {
    std::vector<Rational> v(group.size());
    for (const auto& [p, c] : a.terms()) {
      v[static_cast<std::size_t>(std::lower_bound(group.begin(), group.end(), p) - group.begin())] = c;
    }
    return v;
  };

  RowEchelon echelon(group.size());
  for (const auto& lambda : partitions_of(r)) {
    const auto tableaux = standard_tableaux(lambda);
    report.standard_counts.emplace_back(lambda, tableaux.size());
    report.sum_of_squares += tableaux.size() * tableaux.size();
    for (const auto& t : tableaux) {
      const GroupRingElement y = young_symmetrizer(t);
      for (const auto& p : group) {
        if (echelon.rank() == group.size()) break;
        echelon.insert(coordinates(GroupRingElement::from_permutation(p) * y));
      }
    }
  }
  report.left_ideal_span_rank = echelon.rank();
  return report;
}

}  // namespace tabcurv
