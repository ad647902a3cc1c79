#include "semitop/relations.hpp"

#include <algorithm>

#include "semitop/classification.hpp"
#include "semitop/error.hpp"

namespace semitop {

namespace {

std::vector<PointSet> generators_meeting(const SemiTopology& space, PointSet t) {
    std::vector<PointSet> out;
    for (PointSet g : space.basis()) {
        if (g.meets(t)) out.push_back(g);
    }
    return out;
}

}  // namespace

// If opens O ⋔ T ⋔ O' are disjoint, pick t ∈ O ∩ T and t' ∈ O' ∩ T and
// generators G ∋ t inside O and G' ∋ t' inside O'; they are disjoint too.
// The implicit generator P meets every nonempty set, so it never witnesses
// a failure and can be skipped.
bool is_transitive(const SemiTopology& space, PointSet t) {
    auto meeting = generators_meeting(space, t);
    for (std::size_t i = 0; i < meeting.size(); ++i) {
        for (std::size_t j = i + 1; j < meeting.size(); ++j) {
            if (!meeting[i].meets(meeting[j])) return false;
        }
    }
    return true;
}

// Same reduction as is_transitive: shrinking O and O' to generators around
// points of T only shrinks O ∩ O' ∩ T. Pairs involving P reduce to G ∩ T ≠ ∅.
bool is_strongly_transitive(const SemiTopology& space, PointSet t) {
    auto meeting = generators_meeting(space, t);
    for (std::size_t i = 0; i < meeting.size(); ++i) {
        for (std::size_t j = i + 1; j < meeting.size(); ++j) {
            if (!between_in(meeting[i], t, meeting[j])) return false;
        }
    }
    return true;
}

bool is_topen(const SemiTopology& space, PointSet t) {
    return !t.empty() && space.is_open(t) && is_transitive(space, t);
}

bool is_strong_topen(const SemiTopology& space, PointSet t) {
    return !t.empty() && space.is_open(t) && is_strongly_transitive(space, t);
}

// A nonempty open inside T contains a nonempty generator inside T, unless it
// is P itself, and P meets everything nonempty.
bool is_hyperconnected(const SemiTopology& space, PointSet t) {
    std::vector<PointSet> inside;
    for (PointSet g : space.basis()) {
        if (g.subset_of(t)) inside.push_back(g);
    }
    for (std::size_t i = 0; i < inside.size(); ++i) {
        for (std::size_t j = i + 1; j < inside.size(); ++j) {
            if (!inside[i].meets(inside[j])) return false;
        }
    }
    return true;
}

bool intertwined(const SemiTopology& space, Point p, Point q) {
    for (PointSet g : space.generators_at(p)) {
        for (PointSet h : space.generators_at(q)) {
            if (!g.meets(h)) return false;
        }
    }
    return true;
}

PointSet intertwined_of(const SemiTopology& space, Point p) {
    PointSet out;
    for (Point q = 0; q < space.size(); ++q) {
        if (intertwined(space, p, q)) out.insert(q);
    }
    return out;
}

std::vector<PointSet> intertwined_all(const SemiTopology& space) {
    const auto& basis = space.basis();
    // far[i]: points having a neighbourhood generator disjoint from basis[i].
    std::vector<PointSet> far(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (!basis[i].meets(basis[j])) far[i] |= basis[j];
        }
    }
    std::vector<PointSet> star(space.size(), space.universe());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (Point p : basis[i]) star[p] -= far[i];
    }
    return star;
}

bool is_intertwined_space(const SemiTopology& space) {
    auto star = intertwined_all(space);
    return std::all_of(star.begin(), star.end(), [&](PointSet s) { return s == space.universe(); });
}

// K(p) is the greatest topen neighbourhood of any regular p, so the maximal
// topens are exactly the distinct communities of regular points.
TopenPartition maximal_topen_partition(const SemiTopology& space) {
    auto rows = classify_all(space, ClassifyOptions{.hypertransitivity = false});
    TopenPartition out;
    PointSet covered;
    for (Point p = 0; p < space.size(); ++p) {
        const auto& row = rows.rows[p];
        if (!row.regular) continue;
        if (std::find(out.topens.begin(), out.topens.end(), row.community) == out.topens.end()) {
            out.topens.push_back(row.community);
        }
        covered |= row.community;
    }
    std::sort(out.topens.begin(), out.topens.end(), CanonicalLess{});
    out.residue = space.universe() - covered;
    return out;
}

PointSet maximal_topen_containing(const SemiTopology& space, PointSet t) {
    if (!is_topen(space, t)) {
        throw Error(ErrorKind::NotTopen, "maximal_topen_containing: " + format_set(space, t) + " is not topen");
    }
    return community(space, t.first());
}

bool is_meet_irreducible_empty(const SemiTopology& space, PointSet t) {
    SemiTopology sub = space.subspace(t);
    const auto& basis = sub.basis();
    // Nonempty subspace opens are unions of nonempty generators or T itself.
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (!basis[i].meets(basis[j])) return false;
        }
    }
    return true;
}

}  // namespace semitop
