#pragma once

#include <cstdint>
#include <vector>

#include "abelian/algebra.hpp"
#include "abelian/hypermatrix.hpp"
#include "abelian/mad.hpp"

namespace abelian {

/// Abelian code in A_q(r_1, ..., r_s) given by its defining set (a union of
/// q-orbits) with respect to the fixed standard root.
class AbelianCode {
 public:
  static AbelianCode from_defining_set(const Shape& shape, Bitset defining_set);

  const Shape& shape() const noexcept { return shape_; }
  const Bitset& defining_set() const noexcept { return defining_set_; }
  std::size_t length() const noexcept { return shape_.size(); }
  std::size_t dimension() const noexcept { return shape_.size() - defining_set_.count(); }
  bool is_zero() const noexcept { return defining_set_.all(); }
  bool is_full() const noexcept { return defining_set_.none(); }

  OrbitHypermatrix hypermatrix() const;
  std::vector<Index> orbit_representatives() const;
  /// The code whose defining set is a * D.
  AbelianCode remapped(const RootClass& root_class) const;

  friend bool operator==(const AbelianCode& a, const AbelianCode& b) {
    return a.shape_ == b.shape_ && a.defining_set_ == b.defining_set_;
  }

 private:
  AbelianCode(Shape shape, Bitset defining_set)
      : shape_(std::move(shape)), defining_set_(std::move(defining_set)) {}

  Shape shape_;
  Bitset defining_set_;
};

/// D = union of the q-orbits of the given representatives.
AbelianCode code_from_orbits(const Shape& shape, const std::vector<Index>& orbit_reps);

/// d*_alpha(C) = mad(M(D)) for the standard root. Rejects the zero code.
std::uint64_t apparent_distance_alpha(const AbelianCode& code);

struct ClassDistance {
  RootClass root_class;
  std::uint64_t value;
};

struct CodeApDistResult {
  std::uint64_t value = 0;
  std::vector<ClassDistance> per_class;
  std::vector<RootClass> optimized_roots;
};

/// d*(C): maximum of mad(M(a D)) over root-class representatives a.
CodeApDistResult apparent_distance_code(const AbelianCode& code);
CodeApDistResult apparent_distance_code(const AbelianCode& code, MadEngine& engine);

/// Longest cyclic run of zero hypercolumns in each direction.
std::vector<std::uint32_t> zero_hypercolumn_runs(const OrbitHypermatrix& m);
/// prod (lambda_k + 1) over directions with a zero run of length lambda_k >= 1.
std::uint64_t bch_bound(const AbelianCode& code);

/// One direction k of a BCH parameter set: designed distance delta_k and offset b_k.
struct BchDirection {
  std::size_t axis;  // 0-based; serialized as k = axis + 1
  std::uint32_t designed;
  std::uint64_t offset;
};

/// The set gamma together with delta and b.
struct BchSpec {
  std::vector<BchDirection> directions;
};

void validate_bch_spec(const Shape& shape, const BchSpec& spec);
/// Defining set: the q-orbits of every index whose k-th coordinate lies in
/// {b_k, ..., b_k + delta_k - 2} (mod r_k), for each k in gamma.
AbelianCode bch_code(const Shape& shape, const BchSpec& spec);

struct DimensionBound {
  std::int64_t value;
  bool vacuous;  // value <= 0
};

/// prod r_j - m * sum_{k in gamma} (delta_k - 1) prod_{j != k} r_j with m = lcm O_{r_k}(q).
DimensionBound bch_dimension_bound(const Shape& shape, const BchSpec& spec);

struct RsParameters {
  std::uint64_t apparent_distance;
  std::uint64_t dimension;
};

/// Closed form for a one-direction BCH code with r_k = q - 1.
RsParameters rs_exact(const Shape& shape, const BchSpec& spec);

/// True iff every hypercolumn in the given direction is all-zero or all-one.
bool is_column_constant(const OrbitHypermatrix& m, std::size_t axis);

/// C_n in A_q(n, r) with defining set Z_n x D, where D is remapped first by an
/// optimizing root class when the identity class is not optimal.
AbelianCode multiply_dimension(const AbelianCode& cyclic, std::uint32_t n);

struct HdCandidate {
  AbelianCode code;
  std::uint64_t apparent_distance;
};

struct HdSearchResult {
  std::size_t dimension = 0;          // 0 with empty codes when nothing reaches the target
  std::vector<HdCandidate> codes;     // one canonical code per root-class equivalence class
  std::size_t evaluated = 0;
};

/// Maximum-dimension codes with d*(C) >= target. Enumerates orbit unions by
/// increasing size of the defining set, evaluating only one representative per
/// root-class orbit. Throws BudgetExceeded after `budget` evaluations.
HdSearchResult hd_search(const Shape& shape, std::uint64_t target, std::size_t budget);

/// Canonical form of a code under the root-class action (smallest orbit-rep list).
AbelianCode canonical_code(const AbelianCode& code);

}  // namespace abelian
