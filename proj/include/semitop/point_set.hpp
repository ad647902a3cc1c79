#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace semitop {

/// Dense index of a point inside one SemiTopology.
using Point = std::size_t;

/// Largest supported universe; PointSet is a 64-bit mask.
inline constexpr std::size_t kMaxPoints = 64;

/// A subset of a finite universe {0, ..., n-1}, n <= 64.
///
/// PointSet does not know the size of its universe; complements and
/// full sets are taken relative to a SemiTopology.
class PointSet {
  public:
    constexpr PointSet() = default;
    constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}
    PointSet(std::initializer_list<Point> points) {
        for (Point p : points) insert(p);
    }

    static constexpr PointSet full(std::size_t n) {
        return PointSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    static constexpr PointSet singleton(Point p) { return PointSet(std::uint64_t{1} << p); }

    static PointSet from_points(const std::vector<Point>& points) {
        PointSet s;
        for (Point p : points) s.insert(p);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(Point p) const { return p < 64 && ((bits_ >> p) & 1U) != 0; }

    constexpr void insert(Point p) { bits_ |= std::uint64_t{1} << p; }
    constexpr void erase(Point p) { bits_ &= ~(std::uint64_t{1} << p); }

    constexpr bool subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool strict_subset_of(PointSet other) const { return subset_of(other) && bits_ != other.bits_; }
    /// X ⋔ Y: nonempty intersection.
    constexpr bool meets(PointSet other) const { return (bits_ & other.bits_) != 0; }

    /// Relative complement inside `universe`.
    constexpr PointSet complement_in(PointSet universe) const { return PointSet(universe.bits_ & ~bits_); }

    constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
    constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
    constexpr PointSet operator-(PointSet o) const { return PointSet(bits_ & ~o.bits_); }
    constexpr PointSet& operator|=(PointSet o) { bits_ |= o.bits_; return *this; }
    constexpr PointSet& operator&=(PointSet o) { bits_ &= o.bits_; return *this; }
    constexpr PointSet& operator-=(PointSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const PointSet&) const = default;

    /// Smallest member; undefined on the empty set.
    constexpr Point first() const { return static_cast<Point>(std::countr_zero(bits_)); }

    std::vector<Point> members() const {
        std::vector<Point> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<Point>(std::countr_zero(b)));
        return out;
    }

    class iterator {
      public:
        using value_type = Point;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr Point operator*() const { return static_cast<Point>(std::countr_zero(rest_)); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { iterator t = *this; ++*this; return t; }
        constexpr bool operator==(const iterator&) const = default;

      private:
        std::uint64_t rest_ = 0;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

  private:
    std::uint64_t bits_ = 0;
};

/// Canonical order: by cardinality, then lexicographically on the sorted
/// member indices.
constexpr bool canonical_less(PointSet a, PointSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    // The lowest differing index decides: whoever owns it sorts first.
    std::uint64_t low = diff & (~diff + 1);
    return (a.bits() & low) != 0;
}

struct CanonicalLess {
    constexpr bool operator()(PointSet a, PointSet b) const { return canonical_less(a, b); }
};

}  // namespace semitop

template <>
struct std::hash<semitop::PointSet> {
    std::size_t operator()(semitop::PointSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
