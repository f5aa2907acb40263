#pragma once

// Brute-force references. Everything here is deliberately naive and shares no
// code with the mad engine beyond the apparent distance of single hypermatrices.

#include <cstdint>
#include <map>
#include <vector>

#include "abelian/algebra.hpp"
#include "abelian/codes.hpp"
#include "abelian/field.hpp"
#include "abelian/hypermatrix.hpp"

namespace abelian {

/// f = sum a_i X^i in F[X_1..X_s]/(X_j^{r_j} - 1); coefficients keyed by linear index,
/// zero coefficients never stored.
struct AmbientPolynomial {
  Shape shape;
  Field field;
  std::map<std::size_t, FieldElement> coefficients;

  AmbientPolynomial(Shape shape_, Field field_) : shape(std::move(shape_)), field(std::move(field_)) {}

  /// Adds c X^index (exponents reduced mod r).
  void add_term(const Index& index, FieldElement c);
  FieldElement coefficient(std::size_t linear) const;
  Bitset support() const;
  bool is_zero() const noexcept { return coefficients.empty(); }
  friend bool operator==(const AmbientPolynomial& a, const AmbientPolynomial& b) {
    return a.shape == b.shape && a.field == b.field && a.coefficients == b.coefficients;
  }
};

/// The recursive definition over shifts X^h f, leading coefficients and k-th degrees.
std::uint64_t apparent_distance_poly(const AmbientPolynomial& f);

/// M(f) as an orbit hypermatrix with t = O_{lcm r}(q); q^t fixes every index,
/// so any support pattern qualifies.
OrbitHypermatrix support_hypermatrix(const AmbientPolynomial& f);

/// phi(f)_j = f(alpha^j). f must live over the prime field or over the splitting field.
AmbientPolynomial fourier_transform(const AmbientPolynomial& f, const SplittingField& sf);
/// f_i = |I|^{-1} sum_j F_j alpha^{-i.j}, over the splitting field.
AmbientPolynomial inverse_fourier_transform(const AmbientPolynomial& transform, const SplittingField& sf);
/// Rewrites a polynomial whose coefficients lie in F_p over the prime field.
/// Throws InternalError when some coefficient is not rational.
AmbientPolynomial restrict_to_prime_field(const AmbientPolynomial& f);

/// Product in the ambient algebra (exponents added mod r).
AmbientPolynomial multiply(const AmbientPolynomial& f, const AmbientPolynomial& g);
/// Coordinatewise product, used on transforms.
AmbientPolynomial pointwise(const AmbientPolynomial& f, const AmbientPolynomial& g);

/// Idempotent e with phi(e) the indicator of I minus D. Requires prime q.
AmbientPolynomial generating_idempotent(const AbelianCode& code);

/// min d*(P) over every nonzero orbit union P <= M. Throws BudgetExceeded when M
/// has more than `max_orbits` support orbits.
std::uint64_t mad_bruteforce(const OrbitHypermatrix& m, std::size_t max_orbits = 20);

struct GeneratorMatrix {
  std::uint64_t p = 0;
  std::size_t length = 0;
  std::vector<std::vector<std::uint32_t>> rows;
  std::size_t k() const noexcept { return rows.size(); }
};

/// Basis of {c : c(alpha^j) = 0 for j in D} over F_p. Checks that the rank equals
/// |I| - |D| and that the common zero set of the rows is exactly D.
GeneratorMatrix generator_matrix(const AbelianCode& code);

inline constexpr std::uint64_t kDefaultSpanBudget = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kExtendedSpanBudget = std::uint64_t{1} << 28;

/// Minimum Hamming weight over the nonzero codewords, by a Gray-code walk of the
/// span. Throws BudgetExceeded when q^k exceeds the budget.
std::uint64_t min_distance_bruteforce(const AbelianCode& code, std::uint64_t budget = kDefaultSpanBudget);
std::uint64_t min_distance_bruteforce(const GeneratorMatrix& g, std::uint64_t budget = kDefaultSpanBudget);

}  // namespace abelian
