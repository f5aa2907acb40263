#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace abelian {

// Fixed-size dynamic bitset. Equality, ordering and hashing look only at the
// bits, so two sets of the same size compare by content.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size, bool value = false);

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t pos) const noexcept { return (words_[pos >> 6] >> (pos & 63)) & 1U; }
  void set(std::size_t pos) noexcept { words_[pos >> 6] |= std::uint64_t{1} << (pos & 63); }
  void reset(std::size_t pos) noexcept { words_[pos >> 6] &= ~(std::uint64_t{1} << (pos & 63)); }
  void assign(std::size_t pos, bool value) noexcept { value ? set(pos) : reset(pos); }

  std::size_t count() const noexcept;
  bool none() const noexcept;
  bool any() const noexcept { return !none(); }
  bool all() const noexcept { return count() == size_; }

  /// True iff every set bit of *this is also set in other (sizes must agree).
  bool is_subset_of(const Bitset& other) const noexcept;

  Bitset& operator|=(const Bitset& other) noexcept;
  Bitset& operator&=(const Bitset& other) noexcept;
  /// Set difference: clears every bit that is set in other.
  Bitset& subtract(const Bitset& other) noexcept;
  Bitset complement() const;

  /// Positions of set bits in increasing order.
  std::vector<std::size_t> positions() const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }
  std::size_t hash() const noexcept;

  friend bool operator==(const Bitset&, const Bitset&) = default;
  friend bool operator<(const Bitset& a, const Bitset& b) noexcept;

 private:
  void trim() noexcept;

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

inline Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
inline Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

}  // namespace abelian

template <>
struct std::hash<abelian::Bitset> {
  std::size_t operator()(const abelian::Bitset& b) const noexcept { return b.hash(); }
};
