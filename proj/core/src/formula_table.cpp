#include "tabcurv/formula_table.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tabcurv {

namespace {

struct FieldInfo {
  Field field;
  const char* name;
  std::size_t order;
};

constexpr FieldInfo kFields[] = {
    {Field::P, "P", 4},         {Field::F, "F", 1}, {Field::tau, "tau", 1}, {Field::W, "W", 2},
    {Field::theta, "theta", 3}, {Field::a, "a", 3}, {Field::A, "A", 2},     {Field::D, "D", 2},
};

const FieldInfo& info(Field f) {
  for (const auto& i : kFields) {
    if (i.field == f) return i;
  }
  throw std::logic_error("unregistered field");
}

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw std::invalid_argument("formula table line " + std::to_string(line_no) + ": " + msg);
}

Factor parse_factor(const std::string& word, const std::string& letters, std::size_t line_no) {
  const auto us = word.find('_');
  if (us == std::string::npos) fail(line_no, "factor '" + word + "' has no index list");
  Factor f{};
  try {
    f.field = parse_field(std::string_view(word).substr(0, us));
  } catch (const std::invalid_argument& e) {
    fail(line_no, e.what());
  }
  for (char c : word.substr(us + 1)) {
    const auto pos = letters.find(c);
    if (pos == std::string::npos) fail(line_no, std::string("index '") + c + "' is not declared");
    f.slots.push_back(pos);
  }
  if (f.slots.size() != field_order(f.field)) {
    fail(line_no, "factor '" + word + "' needs " + std::to_string(field_order(f.field)) + " indices");
  }
  return f;
}

}  // namespace

std::string to_string(Field f) { return info(f).name; }

Field parse_field(std::string_view name) {
  for (const auto& i : kFields) {
    if (name == i.name) return i.field;
  }
  throw std::invalid_argument("unknown tensor symbol '" + std::string(name) + "'");
}

std::size_t field_order(Field f) { return info(f).order; }

std::vector<FormulaTable> parse_formula_tables(std::string_view text) {
  std::vector<FormulaTable> tables;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto words = split_words(raw);
    if (words.empty()) continue;

    if (words[0] == "formula") {
      if (words.size() != 2) fail(line_no, "expected 'formula <id>'");
      tables.push_back(FormulaTable{words[1], "", "", {}});
      continue;
    }
    if (tables.empty()) fail(line_no, "content before the first 'formula' line");
    auto& table = tables.back();

    if (words[0] == "about") {
      const auto start = raw.find("about") + 5;
      const auto first = raw.find_first_not_of(' ', start);
      table.description = first == std::string::npos ? "" : raw.substr(first);
      continue;
    }
    if (words[0] == "indices") {
      if (words.size() != 5) fail(line_no, "expected four index letters");
      table.letters.clear();
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (words[i].size() != 1) fail(line_no, "index names are single letters");
        if (table.letters.find(words[i][0]) != std::string::npos) fail(line_no, "repeated index letter");
        table.letters += words[i];
      }
      continue;
    }

    if (table.letters.empty()) fail(line_no, "term before 'indices'");
    Term term;
    try {
      term.coefficient = parse_rational(words[0]);
    } catch (const std::invalid_argument&) {
      fail(line_no, "bad coefficient '" + words[0] + "'");
    }
    if (words.size() < 2) fail(line_no, "term without factors");
    std::vector<std::size_t> used;
    for (std::size_t i = 1; i < words.size(); ++i) {
      term.factors.push_back(parse_factor(words[i], table.letters, line_no));
      const auto& s = term.factors.back().slots;
      used.insert(used.end(), s.begin(), s.end());
    }
    std::sort(used.begin(), used.end());
    if (used != std::vector<std::size_t>{0, 1, 2, 3}) {
      fail(line_no, "every free index must appear exactly once");
    }
    table.terms.push_back(std::move(term));
  }
  for (const auto& t : tables) {
    if (t.terms.empty()) throw std::invalid_argument("formula '" + t.id + "' has no terms");
  }
  return tables;
}

std::vector<std::string> formula_ids() {
  std::vector<std::string> ids;
  for (const auto& t : formula_tables()) ids.push_back(t.id);
  return ids;
}

const FormulaTable& formula_table(std::string_view id) {
  for (const auto& t : formula_tables()) {
    if (t.id == id) return t;
  }
  throw std::invalid_argument("unknown formula '" + std::string(id) + "'");
}

FormulaTable select_terms(const FormulaTable& table, std::vector<Field> fields) {
  std::sort(fields.begin(), fields.end());
  FormulaTable out{table.id, table.description, table.letters, {}};
  for (const auto& term : table.terms) {
    std::vector<Field> have;
    for (const auto& f : term.factors) have.push_back(f.field);
    std::sort(have.begin(), have.end());
    if (have == fields) out.terms.push_back(term);
  }
  return out;
}

FormulaTable substitute_tau_curl(const FormulaTable& table, Field replacement) {
  if (field_order(replacement) != 3) throw std::invalid_argument("replacement must have order 3");
  FormulaTable out{table.id, table.description, table.letters, {}};
  for (auto term : table.terms) {
    for (;;) {
      auto tau = std::find_if(term.factors.begin(), term.factors.end(),
                              [](const Factor& f) { return f.field == Field::tau; });
      auto curl = std::find_if(term.factors.begin(), term.factors.end(),
                               [](const Factor& f) { return f.field == Field::W; });
      if (tau == term.factors.end() || curl == term.factors.end()) break;
      Factor merged{replacement, {tau->slots[0], curl->slots[0], curl->slots[1]}};
      const auto ti = tau - term.factors.begin();
      const auto ci = curl - term.factors.begin();
      term.factors.erase(term.factors.begin() + std::max(ti, ci));
      term.factors.erase(term.factors.begin() + std::min(ti, ci));
      term.factors.push_back(std::move(merged));
    }
    out.terms.push_back(std::move(term));
  }
  return out;
}

std::string format_term(const Term& term, const std::string& letters) {
  std::string out = to_string(term.coefficient);
  for (const auto& f : term.factors) {
    out += ' ';
    out += to_string(f.field);
    out += '_';
    for (auto s : f.slots) out += letters.at(s);
  }
  return out;
}

std::string format_table(const FormulaTable& table) {
  std::string out = "formula " + table.id + "\n";
  if (!table.description.empty()) out += "about " + table.description + "\n";
  out += "indices";
  for (char c : table.letters) {
    out += ' ';
    out += c;
  }
  out += '\n';
  for (const auto& term : table.terms) out += format_term(term, table.letters) + "\n";
  return out;
}

template <class Scalar>
DenseTensor<Scalar> evaluate(const FormulaTable& table, const FieldValues<Scalar>& values, std::size_t dim) {
  struct Bound {
    const DenseTensor<Scalar>* tensor;
    const std::vector<std::size_t>* slots;
  };
  DenseTensor<Scalar> out(4, dim);
  std::vector<std::size_t> idx(4), sub;
  for (const auto& term : table.terms) {
    std::vector<Bound> bound;
    for (const auto& f : term.factors) {
      auto it = values.find(f.field);
      if (it == values.end()) {
        throw std::invalid_argument("formula '" + table.id + "' needs field " + to_string(f.field));
      }
      if (it->second.order() != field_order(f.field) || it->second.dim() != dim) {
        throw std::invalid_argument("field " + to_string(f.field) + " has the wrong shape");
      }
      bound.push_back({&it->second, &f.slots});
    }
    Scalar c;
    if constexpr (std::is_same_v<Scalar, Rational>) {
      c = term.coefficient;
    } else {
      c = to_double(term.coefficient);
    }
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
      std::size_t rest = flat;
      for (std::size_t k = 4; k-- > 0;) {
        idx[k] = rest % dim;
        rest /= dim;
      }
      Scalar prod = c;
      for (const auto& b : bound) {
        sub.clear();
        for (auto s : *b.slots) sub.push_back(idx[s]);
        prod *= b.tensor->at(sub);
        if (prod == 0) break;
      }
      out[flat] += prod;
    }
  }
  return out;
}

template DenseTensor<Rational> evaluate(const FormulaTable&, const FieldValues<Rational>&, std::size_t);
template DenseTensor<double> evaluate(const FormulaTable&, const FieldValues<double>&, std::size_t);

}  // namespace tabcurv
