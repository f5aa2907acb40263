#include "abelian/serialize.hpp"

#include <charconv>
#include <string>

#include "abelian/errors.hpp"

namespace abelian {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ValidationError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ValidationError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::uint64_t unsigned_value(const Json& j, const std::string& what) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
    throw ValidationError(what + " must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

Index index_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("an index must be an array of integers");
  Index index;
  for (const auto& x : j) {
    const auto v = unsigned_value(x, "index coordinate");
    if (v > UINT32_MAX) throw ValidationError("index coordinate out of range");
    index.push_back(static_cast<std::uint32_t>(v));
  }
  return index;
}

std::vector<Index> index_list_from_json(const Json& j, const Shape& shape) {
  if (!j.is_array()) throw ValidationError("expected an array of indices");
  std::vector<Index> out;
  for (const auto& x : j) {
    auto index = index_from_json(x);
    if (!shape.contains(index)) {
      throw ValidationError("index " + to_string(index) + " lies outside the index set");
    }
    out.push_back(std::move(index));
  }
  return out;
}

// 1-based direction key of a delta/b map.
std::size_t direction_key(const std::string& key) {
  std::size_t k = 0;
  const auto* end = key.data() + key.size();
  const auto [ptr, ec] = std::from_chars(key.data(), end, k);
  if (ec != std::errc() || ptr != end || k == 0) {
    throw ValidationError("direction key \"" + key + "\" must be a positive integer");
  }
  return k - 1;
}

}  // namespace

Json index_to_json(const Index& index) {
  Json out = Json::array();
  for (auto x : index) out.push_back(x);
  return out;
}

Json index_list_to_json(const std::vector<Index>& indices) {
  Json out = Json::array();
  for (const auto& index : indices) out.push_back(index_to_json(index));
  return out;
}

Shape shape_from_json(const Json& j) {
  const auto q = unsigned_value(field(j, "q"), "q");
  const auto& r = field(j, "r");
  if (!r.is_array()) throw ValidationError("\"r\" must be an array of lengths");
  std::vector<std::uint32_t> lengths;
  for (const auto& x : r) {
    const auto v = unsigned_value(x, "length");
    if (v == 0 || v > UINT32_MAX) throw ValidationError("lengths must be positive");
    lengths.push_back(static_cast<std::uint32_t>(v));
  }
  if (lengths.empty()) throw ValidationError("at least one variable is required");
  return Shape(q, std::move(lengths));
}

Json hypermatrix_to_json(const OrbitHypermatrix& m) {
  Json out;
  out["q"] = m.shape().q();
  out["r"] = m.shape().lengths();
  out["t"] = m.step();
  out["defining_set_orbit_reps"] = index_list_to_json(m.defining_orbit_reps());
  return out;
}

OrbitHypermatrix hypermatrix_from_json(const Json& j) {
  const auto shape = shape_from_json(j);
  std::uint64_t t = 1;
  if (j.contains("t")) t = unsigned_value(j["t"], "t");
  if (t == 0) throw ValidationError("t must be positive");
  return OrbitHypermatrix::from_orbit_reps(shape, t,
                                           index_list_from_json(field(j, "defining_set_orbit_reps"), shape));
}

Json code_to_json(const AbelianCode& code) {
  Json out;
  out["q"] = code.shape().q();
  out["r"] = code.shape().lengths();
  out["orbit_reps"] = index_list_to_json(code.orbit_representatives());
  return out;
}

AbelianCode code_from_json(const Json& j) {
  const auto shape = shape_from_json(j);
  return code_from_orbits(shape, index_list_from_json(field(j, "orbit_reps"), shape));
}

BchSpec bch_spec_from_json(const Json& j) {
  const auto& gamma = field(j, "gamma");
  if (!gamma.is_array()) throw ValidationError("\"gamma\" must be an array of directions");
  const auto& delta = field(j, "delta");
  if (!delta.is_object()) throw ValidationError("\"delta\" must map directions to designed distances");
  Json offsets = Json::object();
  if (j.contains("b")) {
    offsets = j["b"];
    if (!offsets.is_object()) throw ValidationError("\"b\" must map directions to offsets");
  }
  BchSpec spec;
  for (const auto& g : gamma) {
    const auto k = unsigned_value(g, "direction");
    if (k == 0) throw ValidationError("directions are numbered from 1");
    const auto key = std::to_string(k);
    if (!delta.contains(key)) throw ValidationError("no designed distance for direction " + key);
    const auto d = unsigned_value(delta[key], "designed distance");
    if (d > UINT32_MAX) throw ValidationError("designed distance out of range");
    const auto b = offsets.contains(key) ? unsigned_value(offsets[key], "offset") : 0;
    spec.directions.push_back({static_cast<std::size_t>(k - 1), static_cast<std::uint32_t>(d), b});
  }
  for (const auto& [key, value] : delta.items()) {
    const auto axis = direction_key(key);
    bool listed = false;
    for (const auto& dir : spec.directions) listed = listed || dir.axis == axis;
    if (!listed) throw ValidationError("designed distance given for direction " + key + " outside gamma");
  }
  return spec;
}

Json bch_spec_to_json(const BchSpec& spec) {
  Json out;
  out["gamma"] = Json::array();
  out["delta"] = Json::object();
  out["b"] = Json::object();
  for (const auto& dir : spec.directions) {
    const auto key = std::to_string(dir.axis + 1);
    out["gamma"].push_back(dir.axis + 1);
    out["delta"][key] = dir.designed;
    out["b"][key] = dir.offset;
  }
  return out;
}

Json root_class_to_json(const RootClass& root_class) { return index_to_json(root_class.multiplier); }

RootClass root_class_from_string(const std::string& text, const Shape& shape) {
  std::vector<std::uint64_t> values;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw ValidationError("root class \"" + text + "\" must be comma-separated integers");
    }
    values.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (values.size() != shape.dims()) {
    throw ValidationError("root class needs " + std::to_string(shape.dims()) + " components");
  }
  Index multiplier;
  for (std::size_t k = 0; k < values.size(); ++k) {
    multiplier.push_back(static_cast<std::uint32_t>(values[k] % shape.length(k)));
  }
  if (!is_unit_multiplier(shape, multiplier)) {
    throw ValidationError("root class " + text + " is not a unit in every component");
  }
  return RootClass{multiplier};
}

Json involved_pairs_to_json(const std::vector<InvolvedPair>& pairs) {
  Json out = Json::array();
  for (const auto& p : pairs) out.push_back(Json::array({p.axis + 1, p.level}));
  return out;
}

namespace {

const char* stop_name(MadStop stop) {
  switch (stop) {
    case MadStop::Vector: return "vector";
    case MadStop::UnitHypercolumn: return "unit_hypercolumn";
    case MadStop::Exhausted: return "exhausted";
  }
  return "unknown";
}

}  // namespace

Json mad_trace_to_json(const MadTrace& trace) {
  Json out;
  out["eval_count"] = eval_count(trace);
  out["first_minimal"] = trace.first_minimal;
  out["last"] = trace.last;
  out["result"] = trace.result;
  out["stop"] = stop_name(trace.stop);
  out["stages"] = Json::array();
  for (const auto& stage : trace.stages) {
    Json s;
    s["m"] = stage.m;
    s["members"] = Json::array();
    for (const auto& member : stage.members) {
      s["members"].push_back(index_list_to_json(member.defining_orbit_reps()));
    }
    s["explored"] = Json::array();
    for (const auto& node : stage.explored) {
      Json n;
      n["apparent_distance"] = node.apparent_distance;
      n["defining_set_orbit_reps"] = index_list_to_json(node.matrix.defining_orbit_reps());
      n["depth"] = node.depth;
      n["involved_pairs"] = involved_pairs_to_json(node.involved_pairs);
      n["successors"] = node.successors;
      s["explored"].push_back(std::move(n));
    }
    s["eta"] = stage.eta;
    out["stages"].push_back(std::move(s));
  }
  return out;
}

}  // namespace abelian
