#include "abelian/hypermatrix.hpp"

#include <algorithm>

#include "abelian/errors.hpp"

namespace abelian {

namespace {

struct Layout {
  std::size_t outer;   // product of lengths before the axis
  std::size_t length;  // r_k
  std::size_t inner;   // stride of the axis
};

Layout layout(const std::vector<std::uint32_t>& lengths, std::size_t axis) {
  Layout l{1, lengths[axis], 1};
  for (std::size_t j = 0; j < axis; ++j) l.outer *= lengths[j];
  for (std::size_t j = axis + 1; j < lengths.size(); ++j) l.inner *= lengths[j];
  return l;
}

Bitset slice(const Layout& l, const Bitset& support, std::size_t level) {
  Bitset out(l.outer * l.inner);
  for (std::size_t o = 0; o < l.outer; ++o) {
    const std::size_t base = (o * l.length + level) * l.inner;
    for (std::size_t i = 0; i < l.inner; ++i) {
      if (support.test(base + i)) out.set(o * l.inner + i);
    }
  }
  return out;
}

bool slice_is_zero(const Layout& l, const Bitset& support, std::size_t level) {
  for (std::size_t o = 0; o < l.outer; ++o) {
    const std::size_t base = (o * l.length + level) * l.inner;
    for (std::size_t i = 0; i < l.inner; ++i) {
      if (support.test(base + i)) return false;
    }
  }
  return true;
}

// Zero hypercolumns cyclically after `level`, given per-level zero flags.
std::size_t zero_run_after(const std::vector<bool>& zero, std::size_t level) {
  const std::size_t r = zero.size();
  std::size_t run = 0;
  for (std::size_t j = 1; j < r && zero[(level + j) % r]; ++j) ++run;
  return run;
}

struct MemoKey {
  std::vector<std::uint32_t> lengths;
  Bitset support;
  friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const noexcept {
    std::size_t h = k.support.hash();
    for (auto r : k.lengths) h ^= r + 0x9e3779b9 + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace

// ---------------------------------------------------------------------------

OrbitHypermatrix OrbitHypermatrix::afford(const Shape& shape, std::uint64_t step,
                                          const Bitset& defining_set) {
  if (step == 0) throw ValidationError("hypermatrix step must be positive");
  if (defining_set.size() != shape.size()) {
    throw ValidationError("defining set size does not match the shape");
  }
  std::size_t violator = 0;
  if (!is_orbit_closed(shape, step, defining_set, &violator)) {
    throw ValidationError("defining set is not a union of q^t-orbits: index " +
                          to_string(shape.index(violator)) + " is in D but its orbit is not");
  }
  return OrbitHypermatrix(shape, step, defining_set.complement());
}

OrbitHypermatrix OrbitHypermatrix::afford(const Shape& shape, std::uint64_t step,
                                          const std::vector<Index>& defining_set) {
  Bitset d(shape.size());
  for (const auto& i : defining_set) d.set(shape.linear(i));
  return afford(shape, step, d);
}

OrbitHypermatrix OrbitHypermatrix::from_orbit_reps(const Shape& shape, std::uint64_t step,
                                                   const std::vector<Index>& reps) {
  if (step == 0) throw ValidationError("hypermatrix step must be positive");
  Bitset d(shape.size());
  for (const auto& i : reps) d.set(shape.linear(i));
  return OrbitHypermatrix(shape, step, orbit_closure(shape, step, d).complement());
}

OrbitHypermatrix OrbitHypermatrix::from_support(const Shape& shape, std::uint64_t step,
                                                Bitset support) {
  return afford(shape, step, support.complement());
}

OrbitHypermatrix OrbitHypermatrix::ones(const Shape& shape, std::uint64_t step) {
  return OrbitHypermatrix(shape, step, Bitset(shape.size(), true));
}

OrbitHypermatrix OrbitHypermatrix::zero(const Shape& shape, std::uint64_t step) {
  return OrbitHypermatrix(shape, step, Bitset(shape.size(), false));
}

std::vector<Index> OrbitHypermatrix::defining_orbit_reps() const {
  const auto map = shape_.power_map(step_);
  std::vector<Index> reps;
  for (auto lin : defining_set().positions()) {
    bool smallest = true;
    for (auto next = map[lin]; next != lin; next = map[next]) {
      if (next < lin) {
        smallest = false;
        break;
      }
    }
    if (smallest) reps.push_back(shape_.index(lin));
  }
  return reps;
}

std::vector<std::size_t> OrbitHypermatrix::hypercolumn_positions(std::size_t axis,
                                                                 std::uint32_t level) const {
  if (axis >= dims() || level >= shape_.length(axis)) {
    throw ValidationError("hypercolumn (" + std::to_string(axis + 1) + "," +
                          std::to_string(level) + ") out of range");
  }
  const auto l = layout(shape_.lengths(), axis);
  std::vector<std::size_t> out;
  out.reserve(l.outer * l.inner);
  for (std::size_t o = 0; o < l.outer; ++o) {
    const std::size_t base = (o * l.length + level) * l.inner;
    for (std::size_t i = 0; i < l.inner; ++i) out.push_back(base + i);
  }
  return out;
}

bool OrbitHypermatrix::hypercolumn_is_zero(std::size_t axis, std::uint32_t level) const {
  if (axis >= dims() || level >= shape_.length(axis)) {
    throw ValidationError("hypercolumn out of range");
  }
  return slice_is_zero(layout(shape_.lengths(), axis), support_, level);
}

OrbitHypermatrix OrbitHypermatrix::with_zeros(const Bitset& closed_extra) const {
  Bitset support = support_;
  support.subtract(closed_extra);
  return OrbitHypermatrix(shape_, step_, std::move(support));
}

std::uint64_t hypercolumn_step(const Shape& shape, std::uint64_t step, std::size_t axis,
                               std::uint32_t level) {
  const std::uint64_t r = shape.length(axis);
  const std::uint64_t factor = pow_mod(shape.q(), step, r);
  std::uint64_t coset_size = 1;
  for (std::uint64_t x = level * factor % r; x != level; x = x * factor % r) ++coset_size;
  return step * coset_size;
}

HypercolumnView hypercolumn(const OrbitHypermatrix& m, std::size_t axis, std::uint32_t level) {
  const auto positions = m.hypercolumn_positions(axis, level);
  Bitset sub(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (m.support().test(positions[i])) sub.set(i);
  }
  const auto sub_step = hypercolumn_step(m.shape(), m.step(), axis, level);
  return HypercolumnView{axis, level,
                         OrbitHypermatrix::from_support(m.shape().without_axis(axis), sub_step,
                                                        std::move(sub))};
}

std::size_t omega(const OrbitHypermatrix& m, std::size_t axis, std::uint32_t level) {
  if (m.hypercolumn_is_zero(axis, level)) {
    throw ValidationError("omega is defined only for nonzero hypercolumns");
  }
  const auto l = layout(m.shape().lengths(), axis);
  std::vector<bool> zero(l.length);
  for (std::size_t b = 0; b < l.length; ++b) zero[b] = slice_is_zero(l, m.support(), b);
  return zero_run_after(zero, level);
}

bool leq(const OrbitHypermatrix& m, const OrbitHypermatrix& n) {
  if (!(m.shape() == n.shape()) || m.step() != n.step()) {
    throw ValidationError("leq: hypermatrices have different shapes or steps");
  }
  return m.support().is_subset_of(n.support());
}

// ---------------------------------------------------------------------------

struct ApparentDistanceCache::Impl {
  std::unordered_map<MemoKey, std::uint64_t, MemoKeyHash> memo;

  std::uint64_t value(const std::vector<std::uint32_t>& lengths, const Bitset& support) {
    if (support.none()) return 0;
    if (lengths.empty()) return 1;
    const bool memoize = lengths.size() >= 2;
    MemoKey key;
    if (memoize) {
      key = MemoKey{lengths, support};
      if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    std::uint64_t best = 0;
    for (std::size_t axis = 0; axis < lengths.size(); ++axis) {
      best = std::max(best, direction_value(lengths, support, axis, nullptr));
    }
    if (memoize) memo.emplace(std::move(key), best);
    return best;
  }

  // d*_k; optionally records every level's product (0 for zero hypercolumns).
  std::uint64_t direction_value(const std::vector<std::uint32_t>& lengths, const Bitset& support,
                                std::size_t axis, std::vector<std::uint64_t>* products) {
    const auto l = layout(lengths, axis);
    std::vector<bool> zero(l.length);
    for (std::size_t b = 0; b < l.length; ++b) zero[b] = slice_is_zero(l, support, b);
    std::vector<std::uint32_t> sub_lengths = lengths;
    sub_lengths.erase(sub_lengths.begin() + static_cast<std::ptrdiff_t>(axis));
    std::uint64_t best = 0;
    if (products) products->assign(l.length, 0);
    for (std::size_t b = 0; b < l.length; ++b) {
      if (zero[b]) continue;
      const auto product = (zero_run_after(zero, b) + 1) * value(sub_lengths, slice(l, support, b));
      if (products) (*products)[b] = product;
      best = std::max(best, product);
    }
    return best;
  }
};

ApparentDistanceCache::ApparentDistanceCache() : impl_(std::make_unique<Impl>()) {}
ApparentDistanceCache::~ApparentDistanceCache() = default;
ApparentDistanceCache::ApparentDistanceCache(ApparentDistanceCache&&) noexcept = default;
ApparentDistanceCache& ApparentDistanceCache::operator=(ApparentDistanceCache&&) noexcept = default;

std::size_t ApparentDistanceCache::size() const noexcept { return impl_->memo.size(); }

std::uint64_t ApparentDistanceCache::value(const OrbitHypermatrix& m) {
  return impl_->value(m.shape().lengths(), m.support());
}

ApDistResult ApparentDistanceCache::evaluate(const OrbitHypermatrix& m) {
  ApDistResult result;
  const auto& lengths = m.shape().lengths();
  if (lengths.empty()) {
    result.value = m.is_zero() ? 0 : 1;
    return result;
  }
  std::vector<std::vector<std::uint64_t>> products(lengths.size());
  for (std::size_t axis = 0; axis < lengths.size(); ++axis) {
    const auto dk = m.is_zero() ? 0 : impl_->direction_value(lengths, m.support(), axis, &products[axis]);
    result.per_direction.push_back(dk);
    result.value = std::max(result.value, dk);
  }
  if (result.value == 0) return result;
  for (std::size_t axis = 0; axis < lengths.size(); ++axis) {
    for (std::size_t b = 0; b < products[axis].size(); ++b) {
      if (products[axis][b] == result.value) {
        result.involved_pairs.push_back(InvolvedPair{axis, static_cast<std::uint32_t>(b)});
      }
    }
  }
  return result;
}

ApDistResult apparent_distance(const OrbitHypermatrix& m) {
  ApparentDistanceCache cache;
  return cache.evaluate(m);
}

}  // namespace abelian
