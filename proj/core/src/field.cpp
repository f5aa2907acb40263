#include "abelian/field.hpp"

#include <limits>

#include "abelian/errors.hpp"

namespace abelian {

namespace {

using Poly = std::vector<std::uint32_t>;  // lowest coefficient first, over Z_p

void normalize(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  normalize(a);
  const std::uint64_t lead_inv = pow_mod(m.back(), p - 2, p);
  while (a.size() >= m.size()) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - factor * m[i] % p) % p);
    }
    normalize(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(out), m, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    auto r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^i) mod m computed by repeated p-th powering.
Poly frobenius(const Poly& x_power, const Poly& m, std::uint64_t p) {
  Poly result{1};
  Poly base = x_power;
  for (std::uint64_t e = p; e > 0; e >>= 1) {
    if (e & 1U) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
  }
  return result;
}

}  // namespace

bool is_irreducible(std::uint64_t p, const std::vector<std::uint32_t>& poly) {
  Poly f = poly;
  normalize(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  // Ben-Or: f is irreducible iff gcd(x^(p^i) - x, f) = 1 for 1 <= i <= n/2.
  Poly x_power = poly_mod(Poly{0, 1}, f, p);
  for (std::size_t i = 1; i <= n / 2; ++i) {
    x_power = frobenius(x_power, f, p);
    Poly diff = x_power;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
    normalize(diff);
    if (diff.empty()) return false;
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

Field::Field(std::uint64_t characteristic, unsigned degree) : p_(characteristic), degree_(degree) {
  if (!is_prime(p_)) throw ValidationError("field characteristic must be prime");
  if (degree_ == 0) throw ValidationError("field degree must be positive");
  // Search monic polynomials of the given degree in order of their packed
  // lower coefficients; the first irreducible one is used.
  std::uint64_t bound = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    if (bound > std::numeric_limits<std::uint64_t>::max() / p_) {
      throw ValidationError("field too large");
    }
    bound *= p_;
  }
  for (std::uint64_t code = 0; code < bound; ++code) {
    Poly candidate(degree_ + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < degree_; ++i) {
      candidate[i] = static_cast<std::uint32_t>(c % p_);
      c /= p_;
    }
    candidate[degree_] = 1;
    if (is_irreducible(p_, candidate)) {
      modulus_ = std::move(candidate);
      init();
      return;
    }
  }
  throw InternalError("no irreducible polynomial found");
}

Field::Field(std::uint64_t characteristic, std::vector<std::uint32_t> modulus)
    : p_(characteristic), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw ValidationError("field characteristic must be prime");
  normalize(modulus_);
  if (modulus_.size() < 2 || modulus_.back() != 1) {
    throw ValidationError("field modulus must be monic of positive degree");
  }
  for (auto c : modulus_) {
    if (c >= p_) throw ValidationError("field modulus coefficient out of range");
  }
  if (!is_irreducible(p_, modulus_)) throw ValidationError("field modulus is reducible");
  degree_ = static_cast<unsigned>(modulus_.size() - 1);
  init();
}

void Field::init() {
  order_ = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    if (order_ > (std::uint64_t{1} << 62) / p_) throw ValidationError("field too large");
    order_ *= p_;
  }
  if (p_ == 2) {
    for (unsigned i = 0; i < degree_; ++i) {
      if (modulus_[i]) binary_modulus_ |= std::uint64_t{1} << i;
    }
  }
}

FieldElement Field::from_int(std::int64_t value) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  return {static_cast<std::uint64_t>(((value % p) + p) % p)};
}

FieldElement Field::from_coefficients(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() > degree_) throw ValidationError("too many coefficients for field element");
  std::uint64_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw ValidationError("coefficient out of range");
    code = code * p_ + coeffs[i];
  }
  return {code};
}

std::vector<std::uint32_t> Field::coefficients(FieldElement a) const {
  std::vector<std::uint32_t> out(degree_, 0);
  for (unsigned i = 0; i < degree_; ++i) {
    out[i] = static_cast<std::uint32_t>(a.code % p_);
    a.code /= p_;
  }
  return out;
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  if (p_ == 2) return {a.code ^ b.code};
  std::uint64_t out = 0, scale = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    out += ((a.code % p_ + b.code % p_) % p_) * scale;
    a.code /= p_;
    b.code /= p_;
    scale *= p_;
  }
  return {out};
}

FieldElement Field::neg(FieldElement a) const {
  if (p_ == 2) return a;
  std::uint64_t out = 0, scale = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    out += ((p_ - a.code % p_) % p_) * scale;
    a.code /= p_;
    scale *= p_;
  }
  return {out};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  if (p_ == 2) {
    const std::uint64_t top = std::uint64_t{1} << degree_;
    std::uint64_t acc = 0, x = a.code, y = b.code;
    while (y != 0) {
      if (y & 1U) acc ^= x;
      y >>= 1;
      x <<= 1;
      if (x & top) x ^= top | binary_modulus_;
    }
    return {acc};
  }
  const auto ca = coefficients(a);
  const auto cb = coefficients(b);
  Poly product(2 * degree_ - 1, 0);
  for (unsigned i = 0; i < degree_; ++i) {
    if (!ca[i]) continue;
    for (unsigned j = 0; j < degree_; ++j) {
      product[i + j] =
          static_cast<std::uint32_t>((product[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_);
    }
  }
  return from_coefficients(poly_mod(std::move(product), modulus_, p_));
}

FieldElement Field::pow(FieldElement a, std::uint64_t exp) const {
  FieldElement result = one();
  while (exp > 0) {
    if (exp & 1U) result = mul(result, a);
    a = mul(a, a);
    exp >>= 1;
  }
  return result;
}

FieldElement Field::inv(FieldElement a) const {
  if (a.code == 0) throw ValidationError("inverse of zero field element");
  return pow(a, order_ - 2);
}

std::uint64_t Field::element_order(FieldElement a) const {
  if (a.code == 0) throw ValidationError("zero has no multiplicative order");
  std::uint64_t n = order_ - 1;
  for (auto prime : prime_factors(order_ - 1)) {
    while (n % prime == 0 && pow(a, n / prime) == one()) n /= prime;
  }
  return n;
}

SplittingField splitting_field(const Shape& shape) {
  if (!is_prime(shape.q())) {
    throw ValidationError("the oracle field tower supports prime q only (got q = " +
                          std::to_string(shape.q()) + ")");
  }
  const auto v = mult_order(shape.q(), shape.lcm_length());
  Field field(shape.q(), static_cast<unsigned>(v));
  const std::uint64_t group = field.order() - 1;
  FieldElement generator{0};
  for (std::uint64_t code = 1; code < field.order(); ++code) {
    if (field.element_order(FieldElement{code}) == group) {
      generator = FieldElement{code};
      break;
    }
  }
  if (generator.code == 0) throw InternalError("no primitive element found");
  std::vector<FieldElement> roots;
  for (auto r : shape.lengths()) roots.push_back(field.pow(generator, group / r));
  return SplittingField{std::move(field), generator, std::move(roots)};
}

}  // namespace abelian
