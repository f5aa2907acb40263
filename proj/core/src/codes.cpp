#include "abelian/codes.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "abelian/errors.hpp"

namespace abelian {

AbelianCode AbelianCode::from_defining_set(const Shape& shape, Bitset defining_set) {
  if (defining_set.size() != shape.size()) {
    throw ValidationError("defining set size does not match the index set");
  }
  std::size_t violator = 0;
  if (!is_orbit_closed(shape, 1, defining_set, &violator)) {
    throw ValidationError("defining set is not a union of q-orbits: missing the image of " +
                          to_string(shape.index(violator)));
  }
  return AbelianCode(shape, std::move(defining_set));
}

OrbitHypermatrix AbelianCode::hypermatrix() const {
  return OrbitHypermatrix::afford(shape_, 1, defining_set_);
}

std::vector<Index> AbelianCode::orbit_representatives() const {
  return hypermatrix().defining_orbit_reps();
}

AbelianCode AbelianCode::remapped(const RootClass& root_class) const {
  return AbelianCode(shape_, scale_set(shape_, root_class.multiplier, defining_set_));
}

AbelianCode code_from_orbits(const Shape& shape, const std::vector<Index>& orbit_reps) {
  Bitset d(shape.size());
  for (const auto& rep : orbit_reps) {
    if (!shape.contains(rep)) throw ValidationError("orbit representative " + to_string(rep) + " is outside the index set");
    for (auto member : q_orbit(shape, rep).members) d.set(member);
  }
  return AbelianCode::from_defining_set(shape, std::move(d));
}

namespace {

void require_nonzero(const AbelianCode& code) {
  if (code.is_zero()) throw ValidationError("the zero code has no apparent distance");
}

}  // namespace

std::uint64_t apparent_distance_alpha(const AbelianCode& code) {
  require_nonzero(code);
  return mad(code.hypermatrix()).value;
}

CodeApDistResult apparent_distance_code(const AbelianCode& code, MadEngine& engine) {
  require_nonzero(code);
  CodeApDistResult result;
  for (auto& root_class : root_class_representatives(code.shape())) {
    auto m = OrbitHypermatrix::afford(code.shape(), 1,
                                      scale_set(code.shape(), root_class.multiplier, code.defining_set()));
    auto value = engine.mad(m).value;
    result.value = std::max(result.value, value);
    result.per_class.push_back({std::move(root_class), value});
  }
  for (const auto& entry : result.per_class) {
    if (entry.value == result.value) result.optimized_roots.push_back(entry.root_class);
  }
  return result;
}

CodeApDistResult apparent_distance_code(const AbelianCode& code) {
  MadEngine engine;
  return apparent_distance_code(code, engine);
}

std::vector<std::uint32_t> zero_hypercolumn_runs(const OrbitHypermatrix& m) {
  std::vector<std::uint32_t> runs;
  for (std::size_t axis = 0; axis < m.dims(); ++axis) {
    const auto r = m.shape().length(axis);
    std::uint32_t best = 0;
    std::uint32_t current = 0;
    // Two passes around the cycle catch runs that wrap past level r - 1.
    for (std::uint32_t step = 0; step < 2 * r; ++step) {
      if (m.hypercolumn_is_zero(axis, step % r)) {
        current = std::min(current + 1, r);
        best = std::max(best, current);
      } else {
        current = 0;
      }
    }
    runs.push_back(best);
  }
  return runs;
}

std::uint64_t bch_bound(const AbelianCode& code) {
  require_nonzero(code);
  std::uint64_t bound = 1;
  for (auto run : zero_hypercolumn_runs(code.hypermatrix())) {
    if (run > 0) bound *= run + 1;
  }
  return bound;
}

void validate_bch_spec(const Shape& shape, const BchSpec& spec) {
  if (spec.directions.empty()) throw ValidationError("BCH spec needs at least one direction");
  std::vector<bool> seen(shape.dims(), false);
  for (const auto& dir : spec.directions) {
    if (dir.axis >= shape.dims()) {
      throw ValidationError("BCH direction " + std::to_string(dir.axis + 1) + " is out of range");
    }
    if (seen[dir.axis]) throw ValidationError("BCH direction " + std::to_string(dir.axis + 1) + " listed twice");
    seen[dir.axis] = true;
    const auto r = shape.length(dir.axis);
    if (dir.designed < 2 || dir.designed > r) {
      throw ValidationError("designed distance " + std::to_string(dir.designed) + " for direction " +
                            std::to_string(dir.axis + 1) + " must lie in [2, " + std::to_string(r) + "]");
    }
  }
}

AbelianCode bch_code(const Shape& shape, const BchSpec& spec) {
  validate_bch_spec(shape, spec);
  Bitset zeros(shape.size());
  for (std::size_t i = 0; i < shape.size(); ++i) {
    for (const auto& dir : spec.directions) {
      const auto r = shape.length(dir.axis);
      const auto offset = (shape.coordinate(i, dir.axis) + r - dir.offset % r) % r;
      if (offset + 2 <= dir.designed) {
        zeros.set(i);
        break;
      }
    }
  }
  return AbelianCode::from_defining_set(shape, orbit_closure(shape, 1, zeros));
}

DimensionBound bch_dimension_bound(const Shape& shape, const BchSpec& spec) {
  validate_bch_spec(shape, spec);
  std::uint64_t m = 1;
  for (auto r : shape.lengths()) m = std::lcm(m, mult_order(shape.q() % r, r));
  std::int64_t removed = 0;
  for (const auto& dir : spec.directions) {
    std::int64_t others = 1;
    for (std::size_t j = 0; j < shape.dims(); ++j) {
      if (j != dir.axis) others *= shape.length(j);
    }
    removed += static_cast<std::int64_t>(dir.designed - 1) * others;
  }
  const auto value = static_cast<std::int64_t>(shape.size()) - static_cast<std::int64_t>(m) * removed;
  return {value, value <= 0};
}

RsParameters rs_exact(const Shape& shape, const BchSpec& spec) {
  validate_bch_spec(shape, spec);
  if (spec.directions.size() != 1) throw ValidationError("closed form needs exactly one BCH direction");
  const auto& dir = spec.directions.front();
  const auto r = shape.length(dir.axis);
  if (r + 1 != shape.q()) {
    throw ValidationError("closed form needs r_k = q - 1 in direction " + std::to_string(dir.axis + 1));
  }
  return {dir.designed, (r - dir.designed + 1) * (shape.size() / r)};
}

bool is_column_constant(const OrbitHypermatrix& m, std::size_t axis) {
  if (axis >= m.dims()) throw ValidationError("direction " + std::to_string(axis + 1) + " is out of range");
  for (std::uint32_t level = 0; level < m.shape().length(axis); ++level) {
    const auto positions = m.hypercolumn_positions(axis, level);
    const bool first = m.support().test(positions.front());
    for (auto pos : positions) {
      if (m.support().test(pos) != first) return false;
    }
  }
  return true;
}

AbelianCode multiply_dimension(const AbelianCode& cyclic, std::uint32_t n) {
  if (cyclic.shape().dims() != 1) throw ValidationError("dimension multiplication needs a cyclic code");
  if (n == 0) throw ValidationError("multiplier n must be positive");
  require_nonzero(cyclic);
  const auto r = cyclic.shape().length(0);
  const Shape product(cyclic.shape().q(), {n, r});  // validates gcd(q, n r) = 1

  const auto ap = apparent_distance_code(cyclic);
  if (ap.value <= 1) throw ValidationError("dimension multiplication needs d*(C) > 1");
  const bool identity_optimal = ap.per_class.front().value == ap.value;
  const auto base = identity_optimal ? cyclic : cyclic.remapped(ap.optimized_roots.front());

  Bitset d(product.size());
  for (auto j : base.defining_set().positions()) {
    for (std::uint32_t i = 0; i < n; ++i) d.set(static_cast<std::size_t>(i) * r + j);
  }
  return AbelianCode::from_defining_set(product, std::move(d));
}

namespace {

// Root-class action on orbit positions of the t = 1 partition.
struct OrbitAction {
  OrbitPartition partition;
  std::vector<std::vector<std::size_t>> images;  // one permutation per non-identity class

  explicit OrbitAction(const Shape& shape) : partition(shape, 1) {
    for (const auto& root_class : root_class_representatives(shape)) {
      std::vector<std::uint64_t> factors(root_class.multiplier.begin(), root_class.multiplier.end());
      const auto map = shape.scaling_map(factors);
      std::vector<std::size_t> perm(partition.size());
      bool identity = true;
      for (std::size_t o = 0; o < partition.size(); ++o) {
        perm[o] = partition.orbit_of(map[partition.orbits()[o].rep()]);
        identity = identity && perm[o] == o;
      }
      if (!identity) images.push_back(std::move(perm));
    }
  }

  std::vector<std::size_t> apply(const std::vector<std::size_t>& perm,
                                 const std::vector<std::size_t>& chosen) const {
    std::vector<std::size_t> image;
    image.reserve(chosen.size());
    for (auto o : chosen) image.push_back(perm[o]);
    std::sort(image.begin(), image.end());
    return image;
  }

  bool is_canonical(const std::vector<std::size_t>& chosen) const {
    for (const auto& perm : images) {
      if (apply(perm, chosen) < chosen) return false;
    }
    return true;
  }

  std::vector<std::size_t> canonical(const std::vector<std::size_t>& chosen) const {
    auto best = chosen;
    for (const auto& perm : images) best = std::min(best, apply(perm, chosen));
    return best;
  }
};

}  // namespace

AbelianCode canonical_code(const AbelianCode& code) {
  const OrbitAction action(code.shape());
  const auto chosen = action.partition.decompose(code.defining_set());
  const auto best = action.canonical(chosen);
  return AbelianCode::from_defining_set(code.shape(), action.partition.union_of(best));
}

HdSearchResult hd_search(const Shape& shape, std::uint64_t target, std::size_t budget) {
  if (target < 2) throw ValidationError("target apparent distance must be at least 2");
  const OrbitAction action(shape);
  const auto& orbits = action.partition.orbits();
  const std::size_t count = orbits.size();

  // suffix[o] = total size of orbits o, o + 1, ...; bounds the mass still reachable.
  std::vector<std::size_t> suffix(count + 1, 0);
  for (std::size_t o = count; o-- > 0;) suffix[o] = suffix[o + 1] + orbits[o].size();

  HdSearchResult result;
  MadEngine engine;
  std::vector<std::size_t> chosen;

  auto consider = [&]() {
    if (!action.is_canonical(chosen)) return;
    if (result.evaluated == budget) {
      throw BudgetExceeded("search budget of " + std::to_string(budget) + " evaluations exhausted");
    }
    ++result.evaluated;
    auto code = AbelianCode::from_defining_set(shape, action.partition.union_of(chosen));
    const auto value = apparent_distance_code(code, engine).value;
    if (value >= target) result.codes.push_back({std::move(code), value});
  };

  // Visits every orbit union of exactly `mass` points, orbits in increasing position.
  auto visit = [&](auto&& self, std::size_t from, std::size_t mass) -> void {
    if (mass == 0) {
      consider();
      return;
    }
    for (std::size_t o = from; o < count && suffix[o] >= mass; ++o) {
      if (orbits[o].size() > mass) continue;
      chosen.push_back(o);
      self(self, o + 1, mass - orbits[o].size());
      chosen.pop_back();
    }
  };

  // A larger defining set never lowers d*, so the first mass with a hit is optimal.
  for (std::size_t mass = 0; mass < shape.size(); ++mass) {
    visit(visit, 0, mass);
    if (!result.codes.empty()) {
      result.dimension = shape.size() - mass;
      break;
    }
  }
  return result;
}

}  // namespace abelian
