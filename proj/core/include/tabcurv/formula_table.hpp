#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tabcurv/rational.hpp"
#include "tabcurv/tensor.hpp"

namespace tabcurv {

// Tensor symbols that can appear in a term table.
//   P      order 4     F      order 1     tau  order 1
//   W      order 2, tau_[m;n]
//   theta  order 3     a      order 3, any alternating stand-in
//   A, D   order 2
enum class Field { P, F, tau, W, theta, a, A, D };

std::string to_string(Field f);
Field parse_field(std::string_view name);
std::size_t field_order(Field f);

struct Factor {
  Field field;
  std::vector<std::size_t> slots;  // positions into the free index list
  friend bool operator==(const Factor&, const Factor&) = default;
};

struct Term {
  Rational coefficient;
  std::vector<Factor> factors;
  friend bool operator==(const Term&, const Term&) = default;
};

// A right-hand side  sum_i c_i prod_j X_j  with four free indices. The
// left-hand side is always -Z with the same index order.
struct FormulaTable {
  std::string id;
  std::string description;
  std::string letters;  // one character per free index
  std::vector<Term> terms;
};

// Text format, one item per line, '#' starts a comment:
//   formula <id>
//   about <free text>
//   indices k l m n
//   <coefficient> <factor> <factor> ...     e.g.  -3/4 F_l F_n tau_k tau_m
// Throws std::invalid_argument with the line number on malformed input.
std::vector<FormulaTable> parse_formula_tables(std::string_view text);

// The built-in tables, in a fixed order.
const std::vector<FormulaTable>& formula_tables();
std::vector<std::string> formula_ids();
// Throws std::invalid_argument for an unknown id.
const FormulaTable& formula_table(std::string_view id);

// Terms whose factor fields, as a multiset, equal `fields`.
FormulaTable select_terms(const FormulaTable& table, std::vector<Field> fields);

// Every product tau_b W_cd inside a term becomes replacement_bcd.
FormulaTable substitute_tau_curl(const FormulaTable& table, Field replacement);

std::string format_term(const Term& term, const std::string& letters);
std::string format_table(const FormulaTable& table);

template <class Scalar>
using FieldValues = std::map<Field, DenseTensor<Scalar>>;

// Throws std::invalid_argument if a field is missing or has the wrong order.
template <class Scalar>
DenseTensor<Scalar> evaluate(const FormulaTable& table, const FieldValues<Scalar>& values, std::size_t dim);

extern template DenseTensor<Rational> evaluate(const FormulaTable&, const FieldValues<Rational>&, std::size_t);
extern template DenseTensor<double> evaluate(const FormulaTable&, const FieldValues<double>&, std::size_t);

}  // namespace tabcurv
