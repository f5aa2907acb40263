#pragma once

#include <cstdint>
#include <vector>

#include "abelian/algebra.hpp"

namespace abelian {

/// Element of F_{p^m} in polynomial basis, packed as the base-p number
/// c_0 + c_1 p + ... + c_{m-1} p^{m-1}.
struct FieldElement {
  std::uint64_t code = 0;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// F_{p^m} = F_p[x]/(f) for a monic irreducible f of degree m.
class Field {
 public:
  /// Field with the lexicographically smallest monic irreducible modulus of the given degree.
  Field(std::uint64_t characteristic, unsigned degree);
  /// Field with an explicit modulus, lowest coefficient first; must be monic and irreducible.
  Field(std::uint64_t characteristic, std::vector<std::uint32_t> modulus);

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return degree_; }
  std::uint64_t order() const noexcept { return order_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  /// Image of an integer under Z -> F_p -> F_{p^m}.
  FieldElement from_int(std::int64_t value) const noexcept;
  FieldElement from_coefficients(const std::vector<std::uint32_t>& coeffs) const;
  std::vector<std::uint32_t> coefficients(FieldElement a) const;
  /// True iff a lies in the prime subfield.
  bool in_prime_field(FieldElement a) const noexcept { return a.code < p_; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t exp) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t element_order(FieldElement a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  void init();

  std::uint64_t p_;
  unsigned degree_;
  std::uint64_t order_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::uint64_t binary_modulus_ = 0;  // p = 2 fast path: modulus bits without x^m
};

bool is_irreducible(std::uint64_t p, const std::vector<std::uint32_t>& poly);

/// F_{q^v} with v = O_{lcm r}(q) and a fixed tuple of roots alpha_j of exact order r_j.
struct SplittingField {
  Field field;
  FieldElement generator;             // smallest primitive element by packed code
  std::vector<FieldElement> roots;    // alpha_j = generator^((|F|-1)/r_j)
};

/// Requires prime q. Throws ValidationError otherwise.
SplittingField splitting_field(const Shape& shape);

}  // namespace abelian
