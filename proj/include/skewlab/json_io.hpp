#pragma once

#include <json.hpp>

#include "skewlab/classifier.hpp"
#include "skewlab/invariants.hpp"
#include "skewlab/shape.hpp"
#include "skewlab/sparse.hpp"

namespace skewlab {

using Json = nlohmann::ordered_json;

/// int64 when it fits, otherwise the decimal string.
Json integer_to_json(const Integer& value);

/// [{"partition":[...],"coeff":n}, ...] in lexicographically descending order.
Json to_json(const SchurVector& f);
/// As above with the key "subscripts".
Json to_json(const HPolynomial& f);
Json to_json(const EPolynomial& f);
Json to_json(const MonomialVector& f);
Json to_json(const CharacterVector& f);

SchurVector schur_vector_from_json(const Json& j);

/// {"rank":r,"rho":[[...]],"gamma":[[...]],"rect":[[...]]}
Json invariants_to_json(const SkewShape& d);

Json to_json(const SporadicResult& r);
/// {n, classes:[{members, size, rank, power_of_two}], sporadics:[{pair_id, equal}]}
Json to_json(const ClassificationReport& report);

} // namespace skewlab
