#pragma once

#include <vector>

#include "semitop/semitopology.hpp"

namespace semitop {

/// Maximal topens in canonical order, plus the points lying in none.
struct TopenPartition {
    std::vector<PointSet> topens;
    PointSet residue;
};

/// X ⋔ Y.
inline bool between(PointSet x, PointSet y) { return x.meets(y); }
/// X ⋔_Y Z: X ∩ Y ∩ Z is nonempty.
inline bool between_in(PointSet x, PointSet y, PointSet z) { return !(x & y & z).empty(); }

bool is_transitive(const SemiTopology& space, PointSet t);
bool is_strongly_transitive(const SemiTopology& space, PointSet t);
bool is_topen(const SemiTopology& space, PointSet t);
bool is_strong_topen(const SemiTopology& space, PointSet t);
bool is_hyperconnected(const SemiTopology& space, PointSet t);

bool intertwined(const SemiTopology& space, Point p, Point q);
/// ∗p: every point intertwined with p.
PointSet intertwined_of(const SemiTopology& space, Point p);
/// ∗p for every p, computed with one pass over generator pairs.
std::vector<PointSet> intertwined_all(const SemiTopology& space);

bool is_intertwined_space(const SemiTopology& space);

TopenPartition maximal_topen_partition(const SemiTopology& space);
/// The unique maximal topen containing topen T; throws NotTopen otherwise.
PointSet maximal_topen_containing(const SemiTopology& space, PointSet t);

/// In the subspace on T, no two nonempty opens are disjoint.
bool is_meet_irreducible_empty(const SemiTopology& space, PointSet t);

}  // namespace semitop
