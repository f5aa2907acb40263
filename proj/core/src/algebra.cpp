#include "abelian/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "abelian/errors.hpp"

namespace abelian {

std::string to_string(const Index& index) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (i) out << ',';
    out << index[i];
  }
  out << ')';
  return out.str();
}

__extension__ using Wide = unsigned __int128;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus) {
  if (modulus == 1) return 0;
  Wide result = 1;
  Wide b = base % modulus;
  while (exp > 0) {
    if (exp & 1U) result = (result * b) % modulus;
    b = (b * b) % modulus;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (auto p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::uint64_t prime_power_base(std::uint64_t q) {
  if (q < 2) return 0;
  auto factors = prime_factors(q);
  return factors.size() == 1 ? factors.front() : 0;
}

std::uint64_t mult_order(std::uint64_t a, std::uint64_t b) {
  if (b == 0) throw ValidationError("mult_order: modulus must be positive");
  if (std::gcd(a, b) != 1) {
    throw ValidationError("mult_order: " + std::to_string(a) + " is not a unit modulo " +
                          std::to_string(b));
  }
  if (b == 1) return 1;
  // The order divides phi(b); test divisors in increasing order.
  const std::uint64_t phi = euler_phi(b);
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d * d <= phi; ++d) {
    if (phi % d == 0) {
      divisors.push_back(d);
      if (d != phi / d) divisors.push_back(phi / d);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  for (auto d : divisors) {
    if (pow_mod(a, d, b) == 1) return d;
  }
  throw InternalError("mult_order: no order found");
}

// ---------------------------------------------------------------------------

Shape::Shape(std::uint64_t q, std::vector<std::uint32_t> lengths)
    : q_(q), p_(prime_power_base(q)), lengths_(std::move(lengths)) {
  if (p_ == 0) throw ValidationError("q = " + std::to_string(q) + " is not a prime power");
  for (auto r : lengths_) {
    if (r == 0) throw ValidationError("every length r_j must be positive");
    if (r % p_ == 0) {
      throw ValidationError("length " + std::to_string(r) + " is not coprime to q = " +
                            std::to_string(q));
    }
  }
  strides_.assign(lengths_.size(), 1);
  size_ = 1;
  for (std::size_t k = lengths_.size(); k-- > 0;) {
    strides_[k] = size_;
    size_ *= lengths_[k];
  }
}

bool Shape::contains(const Index& index) const noexcept {
  if (index.size() != lengths_.size()) return false;
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (index[k] >= lengths_[k]) return false;
  }
  return true;
}

std::size_t Shape::linear(const Index& index) const {
  if (!contains(index)) throw ValidationError("index " + to_string(index) + " out of range");
  std::size_t lin = 0;
  for (std::size_t k = 0; k < index.size(); ++k) lin += index[k] * strides_[k];
  return lin;
}

Index Shape::index(std::size_t linear) const {
  Index out(lengths_.size());
  for (std::size_t k = 0; k < lengths_.size(); ++k) out[k] = coordinate(linear, k);
  return out;
}

Shape Shape::without_axis(std::size_t axis) const {
  auto lengths = lengths_;
  lengths.erase(lengths.begin() + static_cast<std::ptrdiff_t>(axis));
  return Shape(q_, std::move(lengths));
}

std::vector<std::size_t> Shape::scaling_map(std::span<const std::uint64_t> factors) const {
  std::vector<std::size_t> map(size_);
  for (std::size_t lin = 0; lin < size_; ++lin) {
    std::size_t image = 0;
    for (std::size_t k = 0; k < lengths_.size(); ++k) {
      const std::uint64_t c = coordinate(lin, k);
      image += static_cast<std::size_t>((c * (factors[k] % lengths_[k])) % lengths_[k]) *
               strides_[k];
    }
    map[lin] = image;
  }
  return map;
}

std::vector<std::size_t> Shape::power_map(std::uint64_t step) const {
  std::vector<std::uint64_t> factors(lengths_.size());
  for (std::size_t k = 0; k < lengths_.size(); ++k) {
    factors[k] = pow_mod(q_, step, lengths_[k]);
  }
  return scaling_map(factors);
}

std::uint64_t Shape::lcm_length() const {
  std::uint64_t l = 1;
  for (auto r : lengths_) l = std::lcm(l, static_cast<std::uint64_t>(r));
  return l;
}

// ---------------------------------------------------------------------------

std::vector<Index> Orbit::member_indices() const {
  std::vector<Index> out;
  out.reserve(members.size());
  for (auto m : members) out.push_back(shape.index(m));
  return out;
}

bool Orbit::contains(std::size_t linear) const {
  return std::binary_search(members.begin(), members.end(), linear);
}

namespace {

std::vector<std::size_t> orbit_members(const std::vector<std::size_t>& map, std::size_t start) {
  std::vector<std::size_t> members{start};
  for (auto next = map[start]; next != start; next = map[next]) members.push_back(next);
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

Orbit q_orbit(const Shape& shape, const Index& a, std::uint64_t step) {
  const auto start = shape.linear(a);
  const auto map = shape.power_map(step);
  return Orbit{shape, step, orbit_members(map, start)};
}

Orbit cyclotomic_coset(std::uint32_t b, std::uint32_t r, std::uint64_t q, std::uint64_t step) {
  if (step == 0) throw ValidationError("cyclotomic_coset: step must be positive");
  Shape shape(q, {r});
  if (b >= r) throw ValidationError("cyclotomic_coset: residue out of range");
  return q_orbit(shape, Index{b}, step);
}

OrbitPartition::OrbitPartition(const Shape& shape, std::uint64_t step)
    : shape_(shape), step_(step), orbit_of_(shape.size(), shape.size()) {
  const auto map = shape.power_map(step);
  // Scanning in linear order visits each orbit first at its smallest member,
  // so orbits come out sorted by representative.
  for (std::size_t lin = 0; lin < shape.size(); ++lin) {
    if (orbit_of_[lin] != shape.size()) continue;
    auto members = orbit_members(map, lin);
    for (auto m : members) orbit_of_[m] = orbits_.size();
    orbits_.push_back(Orbit{shape, step, std::move(members)});
  }
}

const Orbit& OrbitPartition::orbit_containing(const Index& index) const {
  return orbits_[orbit_of_.at(shape_.linear(index))];
}

Bitset OrbitPartition::union_of(std::span<const std::size_t> positions) const {
  Bitset out(shape_.size());
  for (auto pos : positions) {
    for (auto m : orbits_.at(pos).members) out.set(m);
  }
  return out;
}

std::vector<std::size_t> OrbitPartition::decompose(const Bitset& closed_set) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < orbits_.size(); ++i) {
    if (closed_set.test(orbits_[i].rep())) out.push_back(i);
  }
  return out;
}

OrbitPartition orbit_partition(const Shape& shape, std::uint64_t step) {
  if (step == 0) throw ValidationError("orbit_partition: step must be positive");
  return OrbitPartition(shape, step);
}

Bitset orbit_closure(const Shape& shape, std::uint64_t step, const Bitset& set) {
  const auto map = shape.power_map(step);
  Bitset out = set;
  for (auto lin : set.positions()) {
    for (auto next = map[lin]; !out.test(next); next = map[next]) out.set(next);
  }
  return out;
}

bool is_orbit_closed(const Shape& shape, std::uint64_t step, const Bitset& set,
                     std::size_t* violator) {
  const auto map = shape.power_map(step);
  for (auto lin : set.positions()) {
    if (!set.test(map[lin])) {
      if (violator) *violator = lin;
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

bool is_unit_multiplier(const Shape& shape, const Index& multiplier) {
  if (multiplier.size() != shape.dims()) return false;
  for (std::size_t k = 0; k < shape.dims(); ++k) {
    const auto r = shape.length(k);
    if (std::gcd<std::uint64_t, std::uint64_t>(multiplier[k] % r, r) != 1) return false;
  }
  return true;
}

Bitset scale_set(const Shape& shape, const Index& multiplier, const Bitset& set) {
  if (!is_unit_multiplier(shape, multiplier)) {
    throw ValidationError("multiplier " + to_string(multiplier) + " is not a unit");
  }
  std::vector<std::uint64_t> factors(multiplier.begin(), multiplier.end());
  const auto map = shape.scaling_map(factors);
  Bitset out(shape.size());
  for (auto lin : set.positions()) out.set(map[lin]);
  return out;
}

std::vector<RootClass> root_class_representatives(const Shape& shape) {
  // Units form the subset U of I; q acts on it by componentwise multiplication.
  const auto map = shape.power_map(1);
  std::vector<bool> seen(shape.size(), false);
  std::vector<RootClass> out;
  for (std::size_t lin = 0; lin < shape.size(); ++lin) {
    if (seen[lin]) continue;
    auto index = shape.index(lin);
    if (!is_unit_multiplier(shape, index)) continue;
    for (auto next = lin; !seen[next]; next = map[next]) seen[next] = true;
    out.push_back(RootClass{std::move(index)});
  }
  return out;
}

std::uint64_t root_class_count_bound(const Shape& shape) {
  std::uint64_t phi_product = 1;
  std::uint64_t g = 0;
  for (auto r : shape.lengths()) {
    phi_product *= euler_phi(r);
    g = std::gcd(g, mult_order(shape.q() % r, r));
  }
  return g == 0 ? phi_product : phi_product / g;
}

}  // namespace abelian
