#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "semitop/point_set.hpp"

namespace semitop {

inline constexpr std::size_t kDefaultOpensCap = 1'048'576;

/// Every union of generators, plus ∅ and the whole space.
///
/// When `truncated()` is set the enumeration stopped at the cap and the
/// list is a strict subset of the true family; exact consumers must reject it.
class OpenFamily {
  public:
    OpenFamily() = default;
    OpenFamily(std::vector<PointSet> opens, bool truncated);

    /// Sorted in canonical order.
    const std::vector<PointSet>& opens() const { return opens_; }
    bool truncated() const { return truncated_; }
    std::size_t size() const { return opens_.size(); }
    bool contains(PointSet s) const;

    /// Throws FamilyTruncated when the family is not exact.
    void require_exact(const char* who) const;

  private:
    std::vector<PointSet> opens_;
    std::vector<std::uint64_t> sorted_bits_;
    bool truncated_ = false;
};

/// A finite semitopology presented by a generating basis.
///
/// The open sets are the unions of generator subfamilies together with ∅ and
/// the full set P, which are always adjoined. Generators are canonicalized
/// on construction: empty generators and duplicates are dropped, first
/// occurrence wins. Immutable once built.
class SemiTopology {
  public:
    /// Points labelled "0", ..., "n-1".
    SemiTopology(std::size_t n, std::vector<PointSet> basis);
    SemiTopology(std::vector<std::string> labels, std::vector<PointSet> basis);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Point p) const { return labels_.at(p); }
    const std::vector<PointSet>& basis() const { return basis_; }
    PointSet universe() const { return universe_; }

    /// Generators that contain p (the implicit generator P is not listed).
    const std::vector<PointSet>& generators_at(Point p) const { return at_.at(p); }

    bool is_open(PointSet s) const;
    PointSet interior(PointSet s) const;
    PointSet closure(PointSet s) const;
    bool is_closed(PointSet s) const;
    /// is_closed computed through openness of the complement.
    bool is_closed_via_complement(PointSet s) const;
    PointSet complement(PointSet s) const { return s.complement_in(universe_); }

    OpenFamily enumerate_opens(std::size_t cap = kDefaultOpensCap) const;

    /// Subspace on T. Points keep their labels and are renumbered in
    /// increasing order of their original index.
    SemiTopology subspace(PointSet t) const;

    bool operator==(const SemiTopology& other) const {
        return labels_ == other.labels_ && basis_ == other.basis_;
    }

  private:
    void finish();

    std::vector<std::string> labels_;
    std::vector<PointSet> basis_;
    PointSet universe_;
    std::vector<std::vector<PointSet>> at_;
};

std::string format_set(const SemiTopology& space, PointSet s);

}  // namespace semitop
