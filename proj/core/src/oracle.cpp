#include "abelian/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "abelian/errors.hpp"

namespace abelian {

void AmbientPolynomial::add_term(const Index& index, FieldElement c) {
  if (index.size() != shape.dims()) throw ValidationError("term has the wrong number of variables");
  Index reduced(index.size());
  for (std::size_t j = 0; j < index.size(); ++j) reduced[j] = index[j] % shape.length(j);
  const auto pos = shape.linear(reduced);
  const auto sum = field.add(coefficient(pos), c);
  if (sum == field.zero()) {
    coefficients.erase(pos);
  } else {
    coefficients[pos] = sum;
  }
}

FieldElement AmbientPolynomial::coefficient(std::size_t linear) const {
  const auto it = coefficients.find(linear);
  return it == coefficients.end() ? field.zero() : it->second;
}

Bitset AmbientPolynomial::support() const {
  Bitset s(shape.size());
  for (const auto& [pos, c] : coefficients) s.set(pos);
  return s;
}

OrbitHypermatrix support_hypermatrix(const AmbientPolynomial& f) {
  const auto lcm = f.shape.lcm_length();
  const auto t = lcm == 1 ? 1 : mult_order(f.shape.q() % lcm, lcm);
  return OrbitHypermatrix::from_support(f.shape, t, f.support());
}

namespace {

// Only exponents matter for the recursion: shifting by X^h permutes terms and
// slicing at a degree keeps coefficients as they are.
using Terms = std::vector<Index>;

std::uint64_t polynomial_bound(const std::vector<std::uint32_t>& lengths, const Terms& terms) {
  if (terms.empty()) return 0;
  if (lengths.size() == 1) {
    const auto r = lengths[0];
    std::uint64_t best = 0;
    for (std::uint32_t h = 0; h < r; ++h) {
      std::uint32_t degree = 0;
      for (const auto& t : terms) degree = std::max(degree, (t[0] + h) % r);
      best = std::max<std::uint64_t>(best, r - degree);
    }
    return best;
  }

  std::vector<std::uint32_t> sub_lengths;
  std::uint64_t best = 0;
  Index h(lengths.size(), 0);
  while (true) {
    Terms shifted = terms;
    for (auto& t : shifted) {
      for (std::size_t j = 0; j < t.size(); ++j) t[j] = (t[j] + h[j]) % lengths[j];
    }
    for (std::size_t k = 0; k < lengths.size(); ++k) {
      std::uint32_t degree = 0;
      for (const auto& t : shifted) degree = std::max(degree, t[k]);
      Terms leading;
      for (const auto& t : shifted) {
        if (t[k] != degree) continue;
        Index rest;
        for (std::size_t j = 0; j < t.size(); ++j) {
          if (j != k) rest.push_back(t[j]);
        }
        leading.push_back(std::move(rest));
      }
      sub_lengths = lengths;
      sub_lengths.erase(sub_lengths.begin() + static_cast<std::ptrdiff_t>(k));
      best = std::max(best, polynomial_bound(sub_lengths, leading) * (lengths[k] - degree));
    }
    // next h in lexicographic order
    std::size_t j = lengths.size();
    while (j > 0 && ++h[j - 1] == lengths[j - 1]) h[--j] = 0;
    if (j == 0) break;
  }
  return best;
}

// alpha_k^e for 0 <= e < r_k.
std::vector<std::vector<FieldElement>> root_powers(const Shape& shape, const SplittingField& sf) {
  std::vector<std::vector<FieldElement>> powers(shape.dims());
  for (std::size_t k = 0; k < shape.dims(); ++k) {
    auto x = sf.field.one();
    for (std::uint32_t e = 0; e < shape.length(k); ++e) {
      powers[k].push_back(x);
      x = sf.field.mul(x, sf.roots[k]);
    }
  }
  return powers;
}

// alpha^{sign * i.j}
FieldElement character(const Shape& shape, const std::vector<std::vector<FieldElement>>& powers,
                       const Field& field, std::size_t i, std::size_t j, bool inverse) {
  auto value = field.one();
  for (std::size_t k = 0; k < shape.dims(); ++k) {
    const std::uint64_t r = shape.length(k);
    auto e = (static_cast<std::uint64_t>(shape.coordinate(i, k)) * shape.coordinate(j, k)) % r;
    if (inverse) e = (r - e) % r;
    value = field.mul(value, powers[k][e]);
  }
  return value;
}

void require_same_shape(const AmbientPolynomial& f, const AmbientPolynomial& g) {
  if (!(f.shape == g.shape) || !(f.field == g.field)) {
    throw ValidationError("polynomials live in different ambient algebras");
  }
}

}  // namespace

std::uint64_t apparent_distance_poly(const AmbientPolynomial& f) {
  Terms terms;
  for (const auto& [pos, c] : f.coefficients) terms.push_back(f.shape.index(pos));
  if (f.shape.dims() == 0) return terms.empty() ? 0 : 1;
  return polynomial_bound(f.shape.lengths(), terms);
}

AmbientPolynomial fourier_transform(const AmbientPolynomial& f, const SplittingField& sf) {
  const bool prime_coefficients =
      f.field.degree() == 1 && f.field.characteristic() == sf.field.characteristic();
  if (!prime_coefficients && !(f.field == sf.field)) {
    throw ValidationError("coefficients must lie in the prime field or the splitting field");
  }
  const auto powers = root_powers(f.shape, sf);
  AmbientPolynomial out(f.shape, sf.field);
  for (std::size_t j = 0; j < f.shape.size(); ++j) {
    auto value = sf.field.zero();
    for (const auto& [i, c] : f.coefficients) {
      value = sf.field.add(value, sf.field.mul(c, character(f.shape, powers, sf.field, i, j, false)));
    }
    if (value != sf.field.zero()) out.coefficients[j] = value;
  }
  return out;
}

AmbientPolynomial inverse_fourier_transform(const AmbientPolynomial& transform, const SplittingField& sf) {
  if (!(transform.field == sf.field)) throw ValidationError("transform must live over the splitting field");
  const auto& shape = transform.shape;
  const auto scale = sf.field.inv(sf.field.from_int(static_cast<std::int64_t>(shape.size())));
  const auto powers = root_powers(shape, sf);
  AmbientPolynomial out(shape, sf.field);
  for (std::size_t i = 0; i < shape.size(); ++i) {
    auto value = sf.field.zero();
    for (const auto& [j, c] : transform.coefficients) {
      value = sf.field.add(value, sf.field.mul(c, character(shape, powers, sf.field, i, j, true)));
    }
    value = sf.field.mul(value, scale);
    if (value != sf.field.zero()) out.coefficients[i] = value;
  }
  return out;
}

AmbientPolynomial restrict_to_prime_field(const AmbientPolynomial& f) {
  AmbientPolynomial out(f.shape, Field(f.field.characteristic(), 1U));
  for (const auto& [pos, c] : f.coefficients) {
    if (!f.field.in_prime_field(c)) {
      throw InternalError("coefficient at " + to_string(f.shape.index(pos)) + " is not in the prime field");
    }
    out.coefficients[pos] = c;
  }
  return out;
}

AmbientPolynomial multiply(const AmbientPolynomial& f, const AmbientPolynomial& g) {
  require_same_shape(f, g);
  AmbientPolynomial out(f.shape, f.field);
  for (const auto& [i, a] : f.coefficients) {
    const auto ii = f.shape.index(i);
    for (const auto& [j, b] : g.coefficients) {
      auto jj = f.shape.index(j);
      for (std::size_t k = 0; k < jj.size(); ++k) jj[k] += ii[k];
      out.add_term(jj, f.field.mul(a, b));
    }
  }
  return out;
}

AmbientPolynomial pointwise(const AmbientPolynomial& f, const AmbientPolynomial& g) {
  require_same_shape(f, g);
  AmbientPolynomial out(f.shape, f.field);
  for (const auto& [i, a] : f.coefficients) {
    const auto b = g.coefficient(i);
    if (b != f.field.zero()) {
      const auto c = f.field.mul(a, b);
      if (c != f.field.zero()) out.coefficients[i] = c;
    }
  }
  return out;
}

AmbientPolynomial generating_idempotent(const AbelianCode& code) {
  const auto sf = splitting_field(code.shape());
  AmbientPolynomial indicator(code.shape(), sf.field);
  for (std::size_t j = 0; j < code.length(); ++j) {
    if (!code.defining_set().test(j)) indicator.coefficients[j] = sf.field.one();
  }
  return restrict_to_prime_field(inverse_fourier_transform(indicator, sf));
}

std::uint64_t mad_bruteforce(const OrbitHypermatrix& m, std::size_t max_orbits) {
  if (m.is_zero()) throw ValidationError("mad of the zero hypermatrix is undefined");
  const OrbitPartition partition(m.shape(), m.step());
  const auto orbits = partition.decompose(m.support());
  if (orbits.size() > max_orbits || orbits.size() >= 63) {
    throw BudgetExceeded("hypermatrix has " + std::to_string(orbits.size()) +
                         " support orbits; exhaustive limit is " + std::to_string(max_orbits));
  }
  ApparentDistanceCache cache;
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t subsets = std::uint64_t{1} << orbits.size();
  std::vector<std::size_t> chosen;
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    chosen.clear();
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      if ((mask >> o) & 1U) chosen.push_back(orbits[o]);
    }
    auto p = OrbitHypermatrix::from_support(m.shape(), m.step(), partition.union_of(chosen));
    best = std::min(best, cache.value(p));
    if (best == 1) break;
  }
  return best;
}

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(pow_mod(a, p - 2, p));
}

// Null space over F_p of the row-reduced system.
std::vector<std::vector<std::uint32_t>> null_space(std::vector<std::vector<std::uint32_t>> a,
                                                   std::size_t columns, std::uint32_t p) {
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(columns, false);
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[sel], a[row]);
    const auto inv = inverse_mod(a[row][col], p);
    for (auto& x : a[row]) x = static_cast<std::uint32_t>((std::uint64_t{x} * inv) % p);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      const std::uint64_t factor = a[r][col];
      for (std::size_t c = 0; c < columns; ++c) {
        a[r][c] = static_cast<std::uint32_t>((a[r][c] + (p - factor) * a[row][c]) % p);
      }
    }
    pivot_of_row.push_back(col);
    is_pivot[col] = true;
    ++row;
  }
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(columns, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_of_row.size(); ++r) {
      v[pivot_of_row[r]] = (p - a[r][free]) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

GeneratorMatrix generator_matrix(const AbelianCode& code) {
  const auto& shape = code.shape();
  if (!is_prime(shape.q())) throw ValidationError("generator matrices need a prime q");
  if (code.is_zero()) throw ValidationError("the zero code has no generator matrix");
  const auto p = static_cast<std::uint32_t>(shape.q());
  const auto sf = splitting_field(shape);
  const auto powers = root_powers(shape, sf);
  const auto v = sf.field.degree();
  const OrbitPartition partition(shape, 1);

  // Rational c vanishes at alpha^j iff it vanishes on the whole q-orbit of j.
  std::vector<std::vector<std::uint32_t>> constraints;
  for (auto o : partition.decompose(code.defining_set())) {
    const auto j = partition.orbits()[o].rep();
    std::vector<std::vector<std::uint32_t>> rows(v, std::vector<std::uint32_t>(shape.size(), 0));
    for (std::size_t i = 0; i < shape.size(); ++i) {
      const auto coeffs = sf.field.coefficients(character(shape, powers, sf.field, i, j, false));
      for (std::size_t c = 0; c < coeffs.size() && c < v; ++c) rows[c][i] = coeffs[c];
    }
    for (auto& r : rows) constraints.push_back(std::move(r));
  }

  GeneratorMatrix g;
  g.p = p;
  g.length = shape.size();
  g.rows = null_space(std::move(constraints), shape.size(), p);
  if (g.k() != code.dimension()) {
    throw InternalError("generator matrix has rank " + std::to_string(g.k()) + ", expected " +
                        std::to_string(code.dimension()));
  }

  for (std::size_t j = 0; j < shape.size(); ++j) {
    const bool in_d = code.defining_set().test(j);
    bool nonzero_somewhere = false;
    for (const auto& row : g.rows) {
      auto value = sf.field.zero();
      for (std::size_t i = 0; i < shape.size(); ++i) {
        if (row[i] == 0) continue;
        value = sf.field.add(value, sf.field.mul(sf.field.from_int(row[i]),
                                                 character(shape, powers, sf.field, i, j, false)));
      }
      if (value != sf.field.zero()) {
        nonzero_somewhere = true;
        break;
      }
    }
    if (in_d == nonzero_somewhere) {
      throw InternalError("zero set of the generator matrix differs from D at " + to_string(shape.index(j)));
    }
  }
  return g;
}

namespace {

std::uint64_t span_size(std::uint64_t p, std::size_t k, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > budget / p) {
      throw BudgetExceeded(std::to_string(p) + "^" + std::to_string(k) +
                           " codewords exceed the enumeration budget of " + std::to_string(budget));
    }
    total *= p;
  }
  if (total > budget) {
    throw BudgetExceeded(std::to_string(p) + "^" + std::to_string(k) +
                         " codewords exceed the enumeration budget of " + std::to_string(budget));
  }
  return total;
}

std::uint64_t binary_min_weight(const GeneratorMatrix& g, std::uint64_t total) {
  const std::size_t words = (g.length + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(g.k(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t r = 0; r < g.k(); ++r) {
    for (std::size_t i = 0; i < g.length; ++i) {
      if (g.rows[r][i] & 1U) rows[r][i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  std::uint64_t best = g.length;
  if (words == 1) {
    std::vector<std::uint64_t> flat(g.k());
    for (std::size_t r = 0; r < g.k(); ++r) flat[r] = rows[r][0];
    std::uint64_t word = 0;
    for (std::uint64_t n = 1; n < total; ++n) {
      word ^= flat[static_cast<std::size_t>(std::countr_zero(n))];
      best = std::min<std::uint64_t>(best, static_cast<std::uint64_t>(std::popcount(word)));
    }
    return best;
  }
  std::vector<std::uint64_t> word(words, 0);
  for (std::uint64_t n = 1; n < total; ++n) {
    const auto& row = rows[static_cast<std::size_t>(std::countr_zero(n))];
    std::uint64_t weight = 0;
    for (std::size_t w = 0; w < words; ++w) {
      word[w] ^= row[w];
      weight += static_cast<std::uint64_t>(std::popcount(word[w]));
    }
    best = std::min(best, weight);
  }
  return best;
}

// Modular p-ary Gray code: moving from counter n to n + 1 adds row j to the
// codeword, where j counts the trailing digits of n equal to p - 1.
std::uint64_t qary_min_weight(const GeneratorMatrix& g, std::uint64_t total) {
  const auto p = static_cast<std::uint32_t>(g.p);
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> nonzero(g.k());
  for (std::size_t r = 0; r < g.k(); ++r) {
    for (std::size_t i = 0; i < g.length; ++i) {
      if (g.rows[r][i] != 0) nonzero[r].emplace_back(i, g.rows[r][i]);
    }
  }
  std::vector<std::uint32_t> digits(g.k(), 0);
  std::vector<std::uint32_t> word(g.length, 0);
  std::uint64_t weight = 0;
  std::uint64_t best = g.length;
  for (std::uint64_t n = 1; n < total; ++n) {
    std::size_t j = 0;
    while (digits[j] == p - 1) digits[j++] = 0;
    ++digits[j];
    for (const auto& [i, c] : nonzero[j]) {
      const auto before = word[i];
      word[i] = (before + c) % p;
      weight = weight + (word[i] != 0) - (before != 0);
    }
    best = std::min(best, weight);
  }
  return best;
}

}  // namespace

std::uint64_t min_distance_bruteforce(const GeneratorMatrix& g, std::uint64_t budget) {
  if (g.k() == 0) throw ValidationError("the zero code has no minimum distance");
  const auto total = span_size(g.p, g.k(), budget);
  return g.p == 2 ? binary_min_weight(g, total) : qary_min_weight(g, total);
}

std::uint64_t min_distance_bruteforce(const AbelianCode& code, std::uint64_t budget) {
  if (code.is_zero()) throw ValidationError("the zero code has no minimum distance");
  if (!is_prime(code.shape().q())) throw ValidationError("minimum distance oracle needs a prime q");
  span_size(code.shape().q(), code.dimension(), budget);  // fail before the linear algebra
  return min_distance_bruteforce(generator_matrix(code), budget);
}

}  // namespace abelian
