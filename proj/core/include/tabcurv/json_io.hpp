#pragma once

#include <nlohmann/json.hpp>

#include "tabcurv/group_ring.hpp"
#include "tabcurv/lr.hpp"
#include "tabcurv/tensor.hpp"
#include "tabcurv/young.hpp"

namespace tabcurv {

using Json = nlohmann::json;  // keys sorted on output

// {"degree": r, "terms": [{"perm": [..], "num": "p", "den": "q"}, ...]},
// terms in lexicographic order of perm.
Json to_json(const GroupRingElement& a);
GroupRingElement group_ring_from_json(const Json& j);

Json to_json(const Permutation& p);
Json to_json(const Partition& lambda);
Partition partition_from_json(const Json& j);

// Array of rows.
Json to_json(const YoungTableau& t);
YoungTableau tableau_from_json(const Json& j);

// [{"partition": [..], "multiplicity": k}, ...]
Json to_json(const PartitionMultiset& m);

// {"order": r, "dim": n, "mode": "rational"|"float", "components": [...]},
// row-major; rational components are strings "p" or "p/q".
Json to_json(const RationalTensor& t);
Json to_json(const RealTensor& t);
RationalTensor rational_tensor_from_json(const Json& j);
RealTensor real_tensor_from_json(const Json& j);

}  // namespace tabcurv
