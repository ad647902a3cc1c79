#pragma once

#include <optional>
#include <vector>

#include "semitop/semitopology.hpp"

namespace semitop {

struct ClassificationRow {
    PointSet intertwined;  // ∗p
    PointSet community;    // K(p) = interior(∗p)
    bool regular = false;
    bool weakly_regular = false;
    bool quasiregular = false;
    bool unconflicted = false;
    bool hypertransitive = false;
    /// False when the open family was truncated (or the check was skipped).
    bool hypertransitive_known = false;
};

struct Classification {
    std::vector<ClassificationRow> rows;
    bool family_truncated = false;
};

struct ClassifyOptions {
    bool hypertransitivity = true;
    std::size_t cap = kDefaultOpensCap;
};

PointSet community(const SemiTopology& space, Point p);

Classification classify_all(const SemiTopology& space, const ClassifyOptions& options = {});
ClassificationRow classify(const SemiTopology& space, Point p, const ClassifyOptions& options = {});

/// Hypertransitivity through the regular-open reduction: for all regular
/// opens R', R'' with p ∈ closure(R') ∩ closure(R''), R' ⋔ R''.
bool is_hypertransitive(const SemiTopology& space, Point p, const std::vector<PointSet>& regular_opens);
/// Throws FamilyTruncated if the enumeration hits `cap`.
bool is_hypertransitive(const SemiTopology& space, Point p, std::size_t cap = kDefaultOpensCap);

bool is_closed_neighbourhood(const SemiTopology& space, PointSet c, Point p);
/// All closed C with p ∈ interior(C), canonical order.
std::vector<PointSet> closed_neighbourhoods_of(const SemiTopology& space, Point p, const OpenFamily& family);
/// All closed sets with nonempty interior, canonical order.
std::vector<PointSet> closed_neighbourhoods(const SemiTopology& space, const OpenFamily& family);
/// ⊆-minimal closed neighbourhoods, found among closures of generators.
std::vector<PointSet> minimal_closed_neighbourhoods(const SemiTopology& space);

bool is_regular_open(const SemiTopology& space, PointSet s);
bool is_regular_closed(const SemiTopology& space, PointSet s);
std::vector<PointSet> regular_opens(const SemiTopology& space, const OpenFamily& family);
std::vector<PointSet> regular_closeds(const SemiTopology& space, const OpenFamily& family);

/// S ∖ interior(S).
PointSet boundary(const SemiTopology& space, PointSet s);
/// boundary(S) ∩ boundary(S').
PointSet kiss(const SemiTopology& space, PointSet s, PointSet t);

/// p ≤⋒ q when ∗p ⊆ ∗q.
bool intertwined_preorder_leq(const SemiTopology& space, Point p, Point q);

/// Some regular point when one exists; always present for quasiregular spaces.
std::optional<Point> find_regular_point(const SemiTopology& space);

/// ∀p: ∗p = {p}.
bool is_hausdorff(const SemiTopology& space);

}  // namespace semitop
