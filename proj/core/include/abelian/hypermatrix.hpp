#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "abelian/algebra.hpp"
#include "abelian/bitset.hpp"

namespace abelian {

/// 0/1 hypermatrix over I whose zero set is a union of q^t-orbits.
///
/// Entry i is 1 iff i is in the support. The complement of the support is the
/// defining set D(M). Construction always checks orbit closure.
class OrbitHypermatrix {
 public:
  /// M(D): the hypermatrix afforded by a q^t-closed defining set.
  static OrbitHypermatrix afford(const Shape& shape, std::uint64_t step, const Bitset& defining_set);
  static OrbitHypermatrix afford(const Shape& shape, std::uint64_t step,
                                 const std::vector<Index>& defining_set);
  /// Defining set given as the union of the q^t-orbits of the listed indices.
  static OrbitHypermatrix from_orbit_reps(const Shape& shape, std::uint64_t step,
                                          const std::vector<Index>& reps);
  static OrbitHypermatrix from_support(const Shape& shape, std::uint64_t step, Bitset support);
  static OrbitHypermatrix ones(const Shape& shape, std::uint64_t step = 1);
  static OrbitHypermatrix zero(const Shape& shape, std::uint64_t step = 1);

  const Shape& shape() const noexcept { return shape_; }
  std::uint64_t step() const noexcept { return step_; }
  std::size_t dims() const noexcept { return shape_.dims(); }
  const Bitset& support() const noexcept { return support_; }
  Bitset defining_set() const { return support_.complement(); }
  bool is_zero() const noexcept { return support_.none(); }
  bool entry(const Index& index) const { return support_.test(shape_.linear(index)); }

  /// Smallest member of each q^t-orbit in the defining set, in increasing order.
  std::vector<Index> defining_orbit_reps() const;

  /// Parent linear indices of I(k, b), listed in the hypercolumn's own linear order.
  std::vector<std::size_t> hypercolumn_positions(std::size_t axis, std::uint32_t level) const;
  bool hypercolumn_is_zero(std::size_t axis, std::uint32_t level) const;

  /// Hypermatrix with the defining set enlarged by the given closed set.
  OrbitHypermatrix with_zeros(const Bitset& closed_extra) const;

  friend bool operator==(const OrbitHypermatrix& a, const OrbitHypermatrix& b) {
    return a.step_ == b.step_ && a.shape_ == b.shape_ && a.support_ == b.support_;
  }

 private:
  OrbitHypermatrix(Shape shape, std::uint64_t step, Bitset support)
      : shape_(std::move(shape)), step_(step), support_(std::move(support)) {}

  Shape shape_;
  std::uint64_t step_;
  Bitset support_;
};

/// Step t' = t |C_{q^t}(b)| for which the hypercolumn at level b of `axis` is closed.
std::uint64_t hypercolumn_step(const Shape& shape, std::uint64_t step, std::size_t axis,
                               std::uint32_t level);

/// H_M(k, b) seen as an (s-1)-dimensional q^{t'}-orbit hypermatrix.
struct HypercolumnView {
  std::size_t axis;
  std::uint32_t level;
  OrbitHypermatrix matrix;
};

HypercolumnView hypercolumn(const OrbitHypermatrix& m, std::size_t axis, std::uint32_t level);

/// Number of zero hypercolumns cyclically following level b in direction `axis`.
/// Throws ValidationError if H_M(axis, level) is itself zero.
std::size_t omega(const OrbitHypermatrix& m, std::size_t axis, std::uint32_t level);

/// Involved pair (k, b). `axis` is 0-based; serialized output uses k = axis + 1.
struct InvolvedPair {
  std::size_t axis;
  std::uint32_t level;
  friend auto operator<=>(const InvolvedPair&, const InvolvedPair&) = default;
};

struct ApDistResult {
  std::uint64_t value = 0;
  std::vector<std::uint64_t> per_direction;
  std::vector<InvolvedPair> involved_pairs;
};

/// Memo table for apparent distances, keyed by (lengths, support). Not thread-safe;
/// confine one instance to one computation.
class ApparentDistanceCache {
 public:
  ApparentDistanceCache();
  ~ApparentDistanceCache();
  ApparentDistanceCache(ApparentDistanceCache&&) noexcept;
  ApparentDistanceCache& operator=(ApparentDistanceCache&&) noexcept;

  std::uint64_t value(const OrbitHypermatrix& m);
  ApDistResult evaluate(const OrbitHypermatrix& m);
  std::size_t size() const noexcept;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

ApDistResult apparent_distance(const OrbitHypermatrix& m);

/// M <= N iff supp(M) is contained in supp(N). Shapes and steps must agree.
bool leq(const OrbitHypermatrix& m, const OrbitHypermatrix& n);

}  // namespace abelian
