#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "abelian/bitset.hpp"

namespace abelian {

/// Element of I = Z_{r_1} x ... x Z_{r_s}, one canonical residue per variable.
using Index = std::vector<std::uint32_t>;

std::string to_string(const Index& index);

// Number theory helpers (small moduli, trial division only).
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus);
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
/// Returns the prime p with q = p^k, or 0 when q is not a prime power.
std::uint64_t prime_power_base(std::uint64_t q);

/// Multiplicative order of a modulo b. Throws ValidationError unless gcd(a, b) = 1.
std::uint64_t mult_order(std::uint64_t a, std::uint64_t b);

/// The index set I together with the field size q. Indices are linearized
/// row-major (last variable fastest), so linear order equals lexicographic order.
/// A shape with no variables is allowed internally; it has a single index.
class Shape {
 public:
  Shape(std::uint64_t q, std::vector<std::uint32_t> lengths);

  std::uint64_t q() const noexcept { return q_; }
  std::uint64_t characteristic() const noexcept { return p_; }
  const std::vector<std::uint32_t>& lengths() const noexcept { return lengths_; }
  std::uint32_t length(std::size_t axis) const { return lengths_.at(axis); }
  std::size_t dims() const noexcept { return lengths_.size(); }
  std::size_t size() const noexcept { return size_; }
  std::size_t stride(std::size_t axis) const { return strides_.at(axis); }

  bool contains(const Index& index) const noexcept;
  std::size_t linear(const Index& index) const;
  Index index(std::size_t linear) const;
  std::uint32_t coordinate(std::size_t linear, std::size_t axis) const noexcept {
    return static_cast<std::uint32_t>((linear / strides_[axis]) % lengths_[axis]);
  }

  Shape without_axis(std::size_t axis) const;

  /// Permutation-like map i -> (f_1 i_1, ..., f_s i_s) on linear indices.
  std::vector<std::size_t> scaling_map(std::span<const std::uint64_t> factors) const;
  /// Map i -> q^t i componentwise.
  std::vector<std::size_t> power_map(std::uint64_t step) const;

  /// lcm of the lengths (1 when s = 0).
  std::uint64_t lcm_length() const;

  friend bool operator==(const Shape& a, const Shape& b) {
    return a.q_ == b.q_ && a.lengths_ == b.lengths_;
  }

 private:
  std::uint64_t q_;
  std::uint64_t p_;
  std::vector<std::uint32_t> lengths_;
  std::vector<std::size_t> strides_;
  std::size_t size_;
};

/// A q^t-orbit: members kept as sorted linear indices, representative = smallest.
struct Orbit {
  Shape shape;
  std::uint64_t step;
  std::vector<std::size_t> members;

  std::size_t rep() const { return members.front(); }
  Index rep_index() const { return shape.index(members.front()); }
  std::size_t size() const noexcept { return members.size(); }
  std::vector<Index> member_indices() const;
  bool contains(std::size_t linear) const;
};

Orbit q_orbit(const Shape& shape, const Index& a, std::uint64_t step = 1);
/// Univariate case: the q^t-cyclotomic coset of b modulo r.
Orbit cyclotomic_coset(std::uint32_t b, std::uint32_t r, std::uint64_t q, std::uint64_t step = 1);

class OrbitPartition {
 public:
  OrbitPartition(const Shape& shape, std::uint64_t step);

  const Shape& shape() const noexcept { return shape_; }
  std::uint64_t step() const noexcept { return step_; }
  const std::vector<Orbit>& orbits() const noexcept { return orbits_; }
  std::size_t size() const noexcept { return orbits_.size(); }
  /// Position in orbits() of the orbit containing the given linear index.
  std::size_t orbit_of(std::size_t linear) const { return orbit_of_.at(linear); }
  const Orbit& orbit_containing(const Index& index) const;

  /// Union of the orbits selected by position.
  Bitset union_of(std::span<const std::size_t> positions) const;
  /// Positions of the orbits making up a closed set (in increasing order).
  std::vector<std::size_t> decompose(const Bitset& closed_set) const;

 private:
  Shape shape_;
  std::uint64_t step_;
  std::vector<Orbit> orbits_;
  std::vector<std::size_t> orbit_of_;
};

OrbitPartition orbit_partition(const Shape& shape, std::uint64_t step = 1);

/// Smallest q^t-closed superset of the given set.
Bitset orbit_closure(const Shape& shape, std::uint64_t step, const Bitset& set);
/// True iff the set is a union of q^t-orbits. On failure optionally reports an
/// index i of the set with q^t i outside the set.
bool is_orbit_closed(const Shape& shape, std::uint64_t step, const Bitset& set,
                     std::size_t* violator = nullptr);

/// A unit multiplier a (gcd(a_j, r_j) = 1 for all j) standing for its class
/// {a q^i}. Multiplying a defining set by a realizes a change of root.
struct RootClass {
  Index multiplier;
  friend bool operator==(const RootClass&, const RootClass&) = default;
};

/// One representative (the lexicographically smallest member) per class of
/// unit multipliers under a ~ q a. The identity multiplier comes first.
std::vector<RootClass> root_class_representatives(const Shape& shape);
/// The coarse count prod phi(r_i) / gcd{O_{r_i}(q)}; only an upper bound on the class count.
std::uint64_t root_class_count_bound(const Shape& shape);

bool is_unit_multiplier(const Shape& shape, const Index& multiplier);
/// {a i : i in set} for a unit multiplier a.
Bitset scale_set(const Shape& shape, const Index& multiplier, const Bitset& set);

}  // namespace abelian
