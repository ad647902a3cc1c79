#include "semitop/oracle.hpp"

#include <algorithm>

#include "semitop/error.hpp"

namespace semitop::oracle {

namespace {

std::vector<PointSet> canonical(std::vector<PointSet> v) {
    std::sort(v.begin(), v.end(), CanonicalLess{});
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<PointSet> neighbourhoods(const OracleSpace& s, Point p) {
    std::vector<PointSet> out;
    for (PointSet o : s.opens) {
        if (o.contains(p)) out.push_back(o);
    }
    return out;
}

std::vector<PointSet> closed_sets(const OracleSpace& s) {
    std::vector<PointSet> out;
    out.reserve(s.opens.size());
    for (PointSet o : s.opens) out.push_back(o.complement_in(s.universe));
    return out;
}

}  // namespace

bool OracleSpace::is_open(PointSet x) const { return std::find(opens.begin(), opens.end(), x) != opens.end(); }

OracleSpace brute_force(const SemiTopology& space, std::size_t max_points) {
    const std::size_t n = space.size();
    if (n > max_points) {
        throw Error(ErrorKind::FamilyTruncated, "oracle: " + std::to_string(n) + " points exceeds the brute-force limit of " +
                                                    std::to_string(max_points));
    }
    OracleSpace out;
    out.n = n;
    out.universe = PointSet::full(n);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
        PointSet x(bits);
        PointSet reachable;
        for (PointSet g : space.basis()) {
            if (g.subset_of(x)) reachable |= g;
        }
        if (reachable == x || x == out.universe) out.opens.push_back(x);
    }
    return out;
}

OracleSpace from_family(const SemiTopology& space, const OpenFamily& family) {
    family.require_exact("oracle");
    return OracleSpace{space.size(), PointSet::full(space.size()), family.opens()};
}

PointSet interior(const OracleSpace& s, PointSet x) {
    PointSet out;
    for (PointSet o : s.opens) {
        if (o.subset_of(x)) out |= o;
    }
    return out;
}

PointSet closure(const OracleSpace& s, PointSet x) {
    PointSet out;
    for (Point p = 0; p < s.n; ++p) {
        bool all = true;
        for (PointSet o : s.opens) {
            if (o.contains(p) && !o.meets(x)) {
                all = false;
                break;
            }
        }
        if (all) out.insert(p);
    }
    return out;
}

bool is_closed(const OracleSpace& s, PointSet x) { return s.is_open(x.complement_in(s.universe)); }

bool intertwined(const OracleSpace& s, Point p, Point q) {
    for (PointSet o : s.opens) {
        if (!o.contains(p)) continue;
        for (PointSet o2 : s.opens) {
            if (o2.contains(q) && !o.meets(o2)) return false;
        }
    }
    return true;
}

PointSet intertwined_of(const OracleSpace& s, Point p) {
    PointSet out;
    for (Point q = 0; q < s.n; ++q) {
        if (intertwined(s, p, q)) out.insert(q);
    }
    return out;
}

bool is_transitive(const OracleSpace& s, PointSet t) {
    for (PointSet o : s.opens) {
        if (!o.meets(t)) continue;
        for (PointSet o2 : s.opens) {
            if (o2.meets(t) && !o.meets(o2)) return false;
        }
    }
    return true;
}

bool is_strongly_transitive(const OracleSpace& s, PointSet t) {
    for (PointSet o : s.opens) {
        if (!o.meets(t)) continue;
        for (PointSet o2 : s.opens) {
            if (o2.meets(t) && (o & o2 & t).empty()) return false;
        }
    }
    return true;
}

bool is_topen(const OracleSpace& s, PointSet t) { return !t.empty() && s.is_open(t) && is_transitive(s, t); }

bool is_hyperconnected(const OracleSpace& s, PointSet t) {
    for (PointSet o : s.opens) {
        if (o.empty() || !o.subset_of(t)) continue;
        for (PointSet o2 : s.opens) {
            if (!o2.empty() && o2.subset_of(t) && !o.meets(o2)) return false;
        }
    }
    return true;
}

PointSet community(const OracleSpace& s, Point p) { return interior(s, intertwined_of(s, p)); }

bool is_regular(const OracleSpace& s, Point p) {
    PointSet k = community(s, p);
    return k.contains(p) && is_topen(s, k);
}

bool is_weakly_regular(const OracleSpace& s, Point p) { return community(s, p).contains(p); }

bool is_quasiregular(const OracleSpace& s, Point p) { return !community(s, p).empty(); }

bool is_unconflicted(const OracleSpace& s, Point p) {
    for (Point q = 0; q < s.n; ++q) {
        if (!intertwined(s, q, p)) continue;
        for (Point r = 0; r < s.n; ++r) {
            if (intertwined(s, p, r) && !intertwined(s, q, r)) return false;
        }
    }
    return true;
}

bool is_hypertransitive(const OracleSpace& s, Point p) {
    auto nbhd = neighbourhoods(s, p);
    std::vector<PointSet> touching;
    for (PointSet o : s.opens) {
        if (std::all_of(nbhd.begin(), nbhd.end(), [&](PointSet u) { return o.meets(u); })) touching.push_back(o);
    }
    for (PointSet a : touching) {
        for (PointSet b : touching) {
            if (!a.meets(b)) return false;
        }
    }
    return true;
}

std::vector<PointSet> closed_neighbourhoods_of(const OracleSpace& s, Point p) {
    std::vector<PointSet> out;
    for (PointSet c : closed_sets(s)) {
        if (interior(s, c).contains(p)) out.push_back(c);
    }
    return canonical(std::move(out));
}

std::vector<PointSet> minimal_closed_neighbourhoods(const OracleSpace& s) {
    std::vector<PointSet> nbhds;
    for (PointSet c : closed_sets(s)) {
        if (!interior(s, c).empty()) nbhds.push_back(c);
    }
    std::vector<PointSet> out;
    for (PointSet c : nbhds) {
        bool minimal = true;
        for (PointSet d : nbhds) {
            if (d.strict_subset_of(c)) minimal = false;
        }
        if (minimal) out.push_back(c);
    }
    return canonical(std::move(out));
}

std::vector<PointSet> regular_opens(const OracleSpace& s) {
    std::vector<PointSet> out;
    for (PointSet o : s.opens) {
        if (interior(s, closure(s, o)) == o) out.push_back(o);
    }
    return canonical(std::move(out));
}

std::vector<PointSet> regular_closeds(const OracleSpace& s) {
    std::vector<PointSet> out;
    for (PointSet c : closed_sets(s)) {
        if (closure(s, interior(s, c)) == c) out.push_back(c);
    }
    return canonical(std::move(out));
}

bool continuous_at(const OracleSpace& s, const ValueAssignment& f, Point p) {
    for (PointSet o : s.opens) {
        if (!o.contains(p)) continue;
        bool constant = std::all_of(o.begin(), o.end(), [&](Point q) { return f[q] == f[p]; });
        if (constant) return true;
    }
    return false;
}

}  // namespace semitop::oracle
