#ifndef TOPAL_SUBSET_HPP_
#define TOPAL_SUBSET_HPP_

#include <bit>
#include <cstdint>
#include <functional>

namespace topal {

/// Hard cap on the number of points of a space. Open-set families and
/// definable families are materialized over the powerset, so this is
/// deliberately small.
inline constexpr int kMaxPoints = 16;

/// A subset of a finite point space, one bit per point index.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  static constexpr Subset singleton(int point) { return Subset(std::uint32_t{1} << point); }
  static constexpr Subset full(int num_points) {
    return Subset(num_points >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << num_points) - 1);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int point) const { return (bits_ >> point) & 1u; }
  constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }
  int count() const { return std::popcount(bits_); }

  /// Complement relative to `universe`.
  constexpr Subset minus(Subset other) const { return Subset(bits_ & ~other.bits_); }

  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }
  constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }

  constexpr auto operator<=>(const Subset&) const = default;

  /// Calls `fn(point)` for every member, in increasing index order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) fn(std::countr_zero(b));
  }

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace topal

template <>
struct std::hash<topal::Subset> {
  std::size_t operator()(topal::Subset s) const noexcept { return std::hash<std::uint32_t>{}(s.bits()); }
};

#endif  // TOPAL_SUBSET_HPP_
