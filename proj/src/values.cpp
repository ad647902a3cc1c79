#include "semitop/values.hpp"

#include <algorithm>

#include "semitop/error.hpp"
#include "semitop/relations.hpp"

namespace semitop {

ValueAssignment::ValueAssignment(std::vector<ValueId> values, std::vector<std::string> labels)
    : values_(std::move(values)), labels_(std::move(labels)) {
    if (labels_.empty()) throw Error(ErrorKind::BadParams, "value assignment needs at least one value label");
    for (ValueId v : values_) {
        if (v >= labels_.size()) throw Error(ErrorKind::BadParams, "value id out of range of the label table");
    }
}

ValueAssignment ValueAssignment::constant(std::size_t n, std::string label) {
    return ValueAssignment(std::vector<ValueId>(n, 0), {std::move(label)});
}

PointSet ValueAssignment::preimage(ValueId v) const {
    PointSet out;
    for (Point p = 0; p < values_.size(); ++p) {
        if (values_[p] == v) out.insert(p);
    }
    return out;
}

namespace {

bool constant_on(const ValueAssignment& f, PointSet s) {
    if (s.empty()) return true;
    ValueId v = f[s.first()];
    return std::all_of(s.begin(), s.end(), [&](Point q) { return f[q] == v; });
}

void require_total(const SemiTopology& space, const ValueAssignment& f) {
    if (f.size() != space.size()) throw Error(ErrorKind::BadParams, "value assignment is not total over the universe");
}

}  // namespace

// With a discrete codomain, continuity at p is local constancy: some open
// neighbourhood of p is mapped to f(p). Any open neighbourhood contains a
// generator neighbourhood of p, or is P.
bool continuous_at(const SemiTopology& space, const ValueAssignment& f, Point p) {
    require_total(space, f);
    const auto& gens = space.generators_at(p);
    if (std::any_of(gens.begin(), gens.end(), [&](PointSet g) { return constant_on(f, g); })) return true;
    return constant_on(f, space.universe());
}

bool continuous_on(const SemiTopology& space, const ValueAssignment& f, PointSet s) {
    return std::all_of(s.begin(), s.end(), [&](Point p) { return continuous_at(space, f, p); });
}

bool is_continuous(const SemiTopology& space, const ValueAssignment& f) {
    return continuous_on(space, f, space.universe());
}

bool is_continuous_by_preimages(const SemiTopology& space, const ValueAssignment& f) {
    require_total(space, f);
    for (ValueId v = 0; v < f.labels().size(); ++v) {
        if (!space.is_open(f.preimage(v))) return false;
    }
    return true;
}

bool is_continuous_by_closed_preimages(const SemiTopology& space, const ValueAssignment& f) {
    require_total(space, f);
    const std::size_t m = f.labels().size();
    if (m > 16) throw Error(ErrorKind::BadParams, "closed-preimage check supports at most 16 values");
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        PointSet pre;
        for (ValueId v = 0; v < m; ++v) {
            if ((mask >> v) & 1U) pre |= f.preimage(v);
        }
        if (!space.is_closed(pre)) return false;
    }
    return true;
}

std::optional<std::pair<Point, Point>> find_split(const SemiTopology& space, const ValueAssignment& f, PointSet t) {
    std::vector<Point> cont;
    for (Point p : t) {
        if (continuous_at(space, f, p)) cont.push_back(p);
    }
    for (std::size_t i = 0; i < cont.size(); ++i) {
        for (std::size_t j = i + 1; j < cont.size(); ++j) {
            if (f[cont[i]] != f[cont[j]]) return std::make_pair(cont[i], cont[j]);
        }
    }
    return std::nullopt;
}

std::optional<ValueAssignment> build_splitting_assignment(const SemiTopology& space, PointSet t) {
    std::vector<PointSet> meeting;
    for (PointSet g : space.basis()) {
        if (g.meets(t)) meeting.push_back(g);
    }
    for (std::size_t i = 0; i < meeting.size(); ++i) {
        for (std::size_t j = i + 1; j < meeting.size(); ++j) {
            if (meeting[i].meets(meeting[j])) continue;
            // Paint one side of the disjoint pair v, everything else v'.
            std::vector<ValueId> values(space.size(), 1);
            for (Point p : meeting[i]) values[p] = 0;
            return ValueAssignment(std::move(values), {"v", "v'"});
        }
    }
    return std::nullopt;
}

PropagationResult propagate(const SemiTopology& space, PointSet seed, ValueId value) {
    if (seed.empty()) throw Error(ErrorKind::SeedEmpty, "propagate: seed is empty");
    if (!seed.subset_of(space.universe()) || !space.is_open(seed)) {
        throw Error(ErrorKind::SeedNotOpen, "propagate: seed " + format_set(space, seed) + " is not open");
    }
    auto step = [&](PointSet c) {
        PointSet next = c;
        for (Point p = 0; p < space.size(); ++p) {
            const auto& gens = space.generators_at(p);
            if (std::all_of(gens.begin(), gens.end(), [&](PointSet g) { return g.meets(c); })) next.insert(p);
        }
        return next;
    };

    PropagationResult out;
    out.seed = seed;
    out.value = value;
    out.trace.push_back(seed);
    PointSet cur = step(seed);
    out.rounds = 1;
    out.trace.push_back(cur);
    for (PointSet next = step(cur); next != cur; next = step(cur)) {
        cur = next;
        ++out.rounds;
        out.trace.push_back(cur);
    }
    out.committed_grade2 = seed;
    out.committed_grade1 = cur - seed;
    return out;
}

std::vector<PointSet> topen_reached_by(const SemiTopology& space, PointSet seed) {
    if (!space.is_open(seed)) {
        throw Error(ErrorKind::SeedNotOpen, "topen_reached_by: seed " + format_set(space, seed) + " is not open");
    }
    std::vector<PointSet> out;
    for (PointSet t : maximal_topen_partition(space).topens) {
        if (t.meets(seed)) out.push_back(t);
    }
    return out;
}

}  // namespace semitop
