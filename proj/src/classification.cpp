#include "semitop/classification.hpp"

#include <algorithm>

#include "semitop/error.hpp"
#include "semitop/relations.hpp"

namespace semitop {

namespace {

std::vector<PointSet> sorted_unique(std::vector<PointSet> sets) {
    std::sort(sets.begin(), sets.end(), CanonicalLess{});
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return sets;
}

}  // namespace

PointSet community(const SemiTopology& space, Point p) { return space.interior(intertwined_of(space, p)); }

Classification classify_all(const SemiTopology& space, const ClassifyOptions& options) {
    Classification out;
    auto star = intertwined_all(space);
    out.rows.resize(space.size());
    for (Point p = 0; p < space.size(); ++p) {
        auto& row = out.rows[p];
        row.intertwined = star[p];
        row.community = space.interior(star[p]);
        row.weakly_regular = row.community.contains(p);
        row.quasiregular = !row.community.empty();
        row.regular = row.weakly_regular && is_transitive(space, row.community);
        // q ⋒ p ⋒ r ⇒ q ⋒ r for all q, r ∈ ∗p, i.e. ∗p ⊆ ∗q whenever q ∈ ∗p.
        row.unconflicted = std::all_of(star[p].begin(), star[p].end(), [&](Point q) { return star[p].subset_of(star[q]); });
    }
    if (!options.hypertransitivity) return out;

    OpenFamily family = space.enumerate_opens(options.cap);
    if (family.truncated()) {
        out.family_truncated = true;
        return out;
    }
    auto ro = regular_opens(space, family);
    for (Point p = 0; p < space.size(); ++p) {
        out.rows[p].hypertransitive = is_hypertransitive(space, p, ro);
        out.rows[p].hypertransitive_known = true;
    }
    return out;
}

ClassificationRow classify(const SemiTopology& space, Point p, const ClassifyOptions& options) {
    if (p >= space.size()) throw Error(ErrorKind::BadParams, "classify: point out of range");
    return classify_all(space, options).rows[p];
}

bool is_hypertransitive(const SemiTopology& space, Point p, const std::vector<PointSet>& regular_opens) {
    std::vector<PointSet> touching;
    for (PointSet r : regular_opens) {
        if (space.closure(r).contains(p)) touching.push_back(r);
    }
    for (std::size_t i = 0; i < touching.size(); ++i) {
        for (std::size_t j = i + 1; j < touching.size(); ++j) {
            if (!touching[i].meets(touching[j])) return false;
        }
    }
    return true;
}

bool is_hypertransitive(const SemiTopology& space, Point p, std::size_t cap) {
    OpenFamily family = space.enumerate_opens(cap);
    family.require_exact("is_hypertransitive");
    return is_hypertransitive(space, p, regular_opens(space, family));
}

bool is_closed_neighbourhood(const SemiTopology& space, PointSet c, Point p) {
    return space.is_closed(c) && space.interior(c).contains(p);
}

std::vector<PointSet> closed_neighbourhoods_of(const SemiTopology& space, Point p, const OpenFamily& family) {
    family.require_exact("closed_neighbourhoods_of");
    std::vector<PointSet> out;
    for (PointSet o : family.opens()) {
        PointSet c = space.complement(o);
        if (space.interior(c).contains(p)) out.push_back(c);
    }
    return sorted_unique(std::move(out));
}

std::vector<PointSet> closed_neighbourhoods(const SemiTopology& space, const OpenFamily& family) {
    family.require_exact("closed_neighbourhoods");
    std::vector<PointSet> out;
    for (PointSet o : family.opens()) {
        PointSet c = space.complement(o);
        if (!space.interior(c).empty()) out.push_back(c);
    }
    return sorted_unique(std::move(out));
}

// A closed neighbourhood C has a nonempty interior, which contains some
// generator G (or is P). C is closed, so closure(G) ⊆ C, and closure(G) is
// itself a closed neighbourhood. Minimal ones are therefore closures of
// generators.
std::vector<PointSet> minimal_closed_neighbourhoods(const SemiTopology& space) {
    std::vector<PointSet> candidates{space.universe()};
    for (PointSet g : space.basis()) candidates.push_back(space.closure(g));
    candidates = sorted_unique(std::move(candidates));
    if (space.size() == 0) return {};
    std::vector<PointSet> out;
    for (PointSet c : candidates) {
        bool minimal = std::none_of(candidates.begin(), candidates.end(), [&](PointSet d) { return d.strict_subset_of(c); });
        if (minimal) out.push_back(c);
    }
    return out;
}

bool is_regular_open(const SemiTopology& space, PointSet s) { return space.interior(space.closure(s)) == s; }

bool is_regular_closed(const SemiTopology& space, PointSet s) { return space.closure(space.interior(s)) == s; }

std::vector<PointSet> regular_opens(const SemiTopology& space, const OpenFamily& family) {
    family.require_exact("regular_opens");
    std::vector<PointSet> out;
    out.reserve(family.size());
    for (PointSet o : family.opens()) out.push_back(space.interior(space.closure(o)));
    return sorted_unique(std::move(out));
}

std::vector<PointSet> regular_closeds(const SemiTopology& space, const OpenFamily& family) {
    family.require_exact("regular_closeds");
    std::vector<PointSet> out;
    out.reserve(family.size());
    for (PointSet o : family.opens()) out.push_back(space.closure(space.interior(space.complement(o))));
    return sorted_unique(std::move(out));
}

PointSet boundary(const SemiTopology& space, PointSet s) { return s - space.interior(s); }

PointSet kiss(const SemiTopology& space, PointSet s, PointSet t) { return boundary(space, s) & boundary(space, t); }

bool intertwined_preorder_leq(const SemiTopology& space, Point p, Point q) {
    return intertwined_of(space, p).subset_of(intertwined_of(space, q));
}

// From each start p, walk down ≤⋒ to a minimal q'. In a quasiregular space
// any q ∈ K(q') is regular: ∗q ⊆ ∗q' forces equality by minimality, and the
// same holds for every point of K(q).
std::optional<Point> find_regular_point(const SemiTopology& space) {
    auto star = intertwined_all(space);
    auto is_regular = [&](Point q) {
        PointSet k = space.interior(star[q]);
        return k.contains(q) && is_transitive(space, k);
    };
    for (Point start = 0; start < space.size(); ++start) {
        Point cur = start;
        for (bool moved = true; moved;) {
            moved = false;
            for (Point q = 0; q < space.size(); ++q) {
                if (star[q].strict_subset_of(star[cur])) {
                    cur = q;
                    moved = true;
                    break;
                }
            }
        }
        PointSet k = space.interior(star[cur]);
        for (Point q : k) {
            if (is_regular(q)) return q;
        }
    }
    return std::nullopt;
}

bool is_hausdorff(const SemiTopology& space) {
    auto star = intertwined_all(space);
    for (Point p = 0; p < space.size(); ++p) {
        if (star[p] != PointSet::singleton(p)) return false;
    }
    return true;
}

}  // namespace semitop
