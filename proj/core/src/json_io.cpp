#include "tabcurv/json_io.hpp"

#include <stdexcept>

namespace tabcurv {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("JSON object lacks key '") + key + "'");
  }
  return j.at(key);
}

std::vector<int> int_array(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument("expected a JSON array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational as string or integer");
}

template <class Tensor>
Tensor shaped(const Json& j, const char* mode) {
  const auto order = require(j, "order").get<std::size_t>();
  const auto dim = require(j, "dim").get<std::size_t>();
  if (j.contains("mode") && j.at("mode") != mode) {
    throw std::invalid_argument("tensor JSON has mode " + j.at("mode").dump() + ", expected \"" + mode + "\"");
  }
  const Json& comps = require(j, "components");
  if (!comps.is_array()) throw std::invalid_argument("tensor components must be an array");
  std::vector<typename Tensor::scalar_type> values;
  for (const auto& c : comps) {
    if constexpr (std::is_same_v<typename Tensor::scalar_type, Rational>) {
      values.push_back(rational_from(c));
    } else {
      values.push_back(c.template get<double>());
    }
  }
  return Tensor(order, dim, std::move(values));
}

}  // namespace

Json to_json(const GroupRingElement& a) {
  Json terms = Json::array();
  for (const auto& [p, c] : a.terms()) {
    terms.push_back({{"perm", to_json(p)},
                     {"num", numerator(c).str()},
                     {"den", denominator(c).str()}});
  }
  return {{"degree", a.degree()}, {"terms", std::move(terms)}};
}

GroupRingElement group_ring_from_json(const Json& j) {
  GroupRingElement a(require(j, "degree").get<std::size_t>());
  for (const auto& t : require(j, "terms")) {
    const auto perm = int_array(require(t, "perm"));
    const Permutation p(perm);
    if (p.degree() != a.degree()) throw std::invalid_argument("term permutation has the wrong degree");
    const Rational c = parse_rational(require(t, "num").get<std::string>() + "/" + require(t, "den").get<std::string>());
    a.add_term(p, c);
  }
  return a;
}

Json to_json(const Permutation& p) { return p.one_line(); }

Json to_json(const Partition& lambda) { return lambda.parts(); }

Partition partition_from_json(const Json& j) { return Partition(int_array(j)); }

Json to_json(const YoungTableau& t) { return t.rows(); }

YoungTableau tableau_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("tableau JSON must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& r : j) rows.push_back(int_array(r));
  return YoungTableau(std::move(rows));
}

Json to_json(const PartitionMultiset& m) {
  Json out = Json::array();
  for (const auto& [nu, k] : m.entries()) out.push_back({{"partition", to_json(nu)}, {"multiplicity", k}});
  return out;
}

Json to_json(const RationalTensor& t) {
  Json comps = Json::array();
  for (const auto& c : t.components()) comps.push_back(to_string(c));
  return {{"order", t.order()}, {"dim", t.dim()}, {"mode", to_string(ScalarMode::rational)}, {"components", comps}};
}

Json to_json(const RealTensor& t) {
  Json comps = Json::array();
  for (double c : t.components()) comps.push_back(c);
  return {{"order", t.order()}, {"dim", t.dim()}, {"mode", to_string(ScalarMode::floating)}, {"components", comps}};
}

RationalTensor rational_tensor_from_json(const Json& j) { return shaped<RationalTensor>(j, "rational"); }

RealTensor real_tensor_from_json(const Json& j) { return shaped<RealTensor>(j, "float"); }

}  // namespace tabcurv
