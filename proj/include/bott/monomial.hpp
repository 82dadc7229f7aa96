#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace bott {

/// Largest supported tower height; monomials are bitsets over 64 slots.
inline constexpr int kMaxHeight = 64;

/// A square-free monomial x_{i_1} ... x_{i_k}, stored as a bitset where bit
/// (j - 1) marks the presence of x_j. The empty monomial is the unit 1.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(std::uint64_t bits) : bits_(bits) {}

  /// The single generator x_j (1-based).
  static constexpr Monomial generator(int j) { return Monomial(std::uint64_t{1} << (j - 1)); }

  /// Build from 1-based indices. Throws InputError on an index outside
  /// 1..kMaxHeight or a repeated index.
  static Monomial from_indices(std::span<const int> indices);

  /// The full monomial x_1 x_2 ... x_n.
  static constexpr Monomial top(int n) {
    return Monomial(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int j) const { return (bits_ >> (j - 1)) & 1U; }

  /// Largest index present, or 0 for the unit monomial.
  constexpr int highest() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

  constexpr Monomial with(int j) const { return Monomial(bits_ | (std::uint64_t{1} << (j - 1))); }
  constexpr Monomial without(int j) const { return Monomial(bits_ & ~(std::uint64_t{1} << (j - 1))); }

  /// Sorted 1-based indices.
  std::vector<int> indices() const;

  friend constexpr Monomial operator|(Monomial a, Monomial b) { return Monomial(a.bits_ | b.bits_); }
  friend constexpr Monomial operator&(Monomial a, Monomial b) { return Monomial(a.bits_ & b.bits_); }
  friend constexpr bool operator==(Monomial a, Monomial b) = default;

  /// Normal-form term order: by size, then lexicographically on the sorted
  /// index lists ({1,2} < {1,3} < {2,3}).
  friend constexpr bool operator<(Monomial a, Monomial b) {
    if (a.size() != b.size()) return a.size() < b.size();
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return false;
    // Equal sizes: the first position where the sorted lists differ holds the
    // smallest index in the symmetric difference.
    return (a.bits_ & (diff & -diff)) != 0;
  }

 private:
  std::uint64_t bits_ = 0;
};

struct MonomialHash {
  std::size_t operator()(Monomial m) const noexcept { return std::hash<std::uint64_t>{}(m.bits()); }
};

}  // namespace bott
