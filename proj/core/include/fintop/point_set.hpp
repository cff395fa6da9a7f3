#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace fintop {

/// Largest carrier a materialized space or group may have.
inline constexpr int kMaxPoints = 16;

/// A subset of a carrier {0, ..., n-1} with n <= 16, stored as a bit mask.
class PointSet {
 public:
  using Bits = std::uint16_t;

  constexpr PointSet() noexcept = default;
  constexpr PointSet(std::initializer_list<int> points) noexcept {
    for (int p : points) bits_ |= bit(p);
  }

  static constexpr PointSet from_bits(std::uint32_t bits) noexcept {
    PointSet s;
    s.bits_ = static_cast<Bits>(bits);
    return s;
  }
  static constexpr PointSet full(int n) noexcept {
    return from_bits((std::uint32_t{1} << n) - 1);
  }
  static constexpr PointSet single(int x) noexcept { return from_bits(bit(x)); }

  constexpr Bits bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int x) const noexcept { return (bits_ & bit(x)) != 0; }
  int size() const noexcept { return std::popcount(bits_); }
  /// Smallest member; undefined on the empty set.
  int first() const noexcept { return std::countr_zero(bits_); }

  constexpr void insert(int x) noexcept { bits_ |= bit(x); }
  constexpr void erase(int x) noexcept { bits_ &= static_cast<Bits>(~bit(x)); }

  constexpr bool subset_of(PointSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(PointSet o) const noexcept { return (bits_ & o.bits_) != 0; }
  constexpr PointSet complement(int n) const noexcept {
    return from_bits(full(n).bits_ & static_cast<Bits>(~bits_));
  }

  constexpr PointSet& operator|=(PointSet o) noexcept { bits_ |= o.bits_; return *this; }
  constexpr PointSet& operator&=(PointSet o) noexcept { bits_ &= o.bits_; return *this; }
  constexpr PointSet& operator-=(PointSet o) noexcept {
    bits_ &= static_cast<Bits>(~o.bits_);
    return *this;
  }
  friend constexpr PointSet operator|(PointSet a, PointSet b) noexcept { return a |= b; }
  friend constexpr PointSet operator&(PointSet a, PointSet b) noexcept { return a &= b; }
  friend constexpr PointSet operator-(PointSet a, PointSet b) noexcept { return a -= b; }
  friend constexpr bool operator==(PointSet, PointSet) noexcept = default;
  friend constexpr auto operator<=>(PointSet a, PointSet b) noexcept { return a.bits_ <=> b.bits_; }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() noexcept = default;
    constexpr explicit iterator(Bits rest) noexcept : rest_(rest) {}
    int operator*() const noexcept { return std::countr_zero(rest_); }
    iterator& operator++() noexcept {
      rest_ = static_cast<Bits>(rest_ & (rest_ - 1));
      return *this;
    }
    iterator operator++(int) noexcept {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator, iterator) noexcept = default;

   private:
    Bits rest_ = 0;
  };

  iterator begin() const noexcept { return iterator(bits_); }
  iterator end() const noexcept { return iterator(0); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int x : *this) out.push_back(x);
    return out;
  }

 private:
  static constexpr Bits bit(int x) noexcept { return static_cast<Bits>(Bits{1} << x); }

  Bits bits_ = 0;
};

/// Renders as "{0,2,3}".
std::string to_string(PointSet s);

/// Number of subsets of an n-point carrier, as a loop bound.
constexpr std::uint32_t subset_count(int n) noexcept { return std::uint32_t{1} << n; }

}  // namespace fintop
