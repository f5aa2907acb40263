#pragma once

// JSON encodings. Objects use nlohmann's default (sorted) key order and orbit
// sets are always written as sorted representative lists, so output is stable.

#include <nlohmann/json.hpp>

#include "abelian/codes.hpp"
#include "abelian/hypermatrix.hpp"
#include "abelian/mad.hpp"

namespace abelian {

using Json = nlohmann::json;

Json index_to_json(const Index& index);
Json index_list_to_json(const std::vector<Index>& indices);

/// {"q", "r"}; missing or malformed fields raise ValidationError.
Shape shape_from_json(const Json& j);

/// {"q", "r", "t", "defining_set_orbit_reps"}
Json hypermatrix_to_json(const OrbitHypermatrix& m);
OrbitHypermatrix hypermatrix_from_json(const Json& j);

/// {"q", "r", "orbit_reps"}
Json code_to_json(const AbelianCode& code);
AbelianCode code_from_json(const Json& j);

/// {"gamma": [k...], "delta": {"k": d}, "b": {"k": b}} with 1-based directions;
/// a missing offset defaults to 0.
BchSpec bch_spec_from_json(const Json& j);
Json bch_spec_to_json(const BchSpec& spec);

Json root_class_to_json(const RootClass& root_class);
/// Parses "a1,...,as".
RootClass root_class_from_string(const std::string& text, const Shape& shape);

Json involved_pairs_to_json(const std::vector<InvolvedPair>& pairs);
Json mad_trace_to_json(const MadTrace& trace);

}  // namespace abelian
