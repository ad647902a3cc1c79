#include "semitop/semitopology.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "semitop/error.hpp"

namespace semitop {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::BadParams: return "BadParams";
        case ErrorKind::FamilyTruncated: return "FamilyTruncated";
        case ErrorKind::NotTopen: return "NotTopen";
        case ErrorKind::SeedNotOpen: return "SeedNotOpen";
        case ErrorKind::SeedEmpty: return "SeedEmpty";
        case ErrorKind::UnknownFixture: return "UnknownFixture";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::SchemaError: return "SchemaError";
        case ErrorKind::Usage: return "Usage";
    }
    return "Unknown";
}

OpenFamily::OpenFamily(std::vector<PointSet> opens, bool truncated) : opens_(std::move(opens)), truncated_(truncated) {
    std::sort(opens_.begin(), opens_.end(), CanonicalLess{});
    opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
    sorted_bits_.reserve(opens_.size());
    for (PointSet o : opens_) sorted_bits_.push_back(o.bits());
    std::sort(sorted_bits_.begin(), sorted_bits_.end());
}

bool OpenFamily::contains(PointSet s) const {
    return std::binary_search(sorted_bits_.begin(), sorted_bits_.end(), s.bits());
}

void OpenFamily::require_exact(const char* who) const {
    if (truncated_) {
        throw Error(ErrorKind::FamilyTruncated,
                    std::string(who) + ": open family was truncated at " + std::to_string(opens_.size()) + " sets");
    }
}

namespace {

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

}  // namespace

SemiTopology::SemiTopology(std::size_t n, std::vector<PointSet> basis)
    : SemiTopology(default_labels(n), std::move(basis)) {}

SemiTopology::SemiTopology(std::vector<std::string> labels, std::vector<PointSet> basis)
    : labels_(std::move(labels)), basis_(std::move(basis)) {
    finish();
}

void SemiTopology::finish() {
    if (labels_.size() > kMaxPoints) {
        throw Error(ErrorKind::BadParams, "at most " + std::to_string(kMaxPoints) + " points are supported, got " +
                                              std::to_string(labels_.size()));
    }
    {
        std::unordered_set<std::string> seen;
        for (const auto& l : labels_) {
            if (!seen.insert(l).second) throw Error(ErrorKind::BadParams, "duplicate point label '" + l + "'");
        }
    }
    universe_ = PointSet::full(labels_.size());

    std::vector<PointSet> kept;
    std::unordered_set<PointSet> seen;
    for (PointSet g : basis_) {
        if (!g.subset_of(universe_)) throw Error(ErrorKind::BadParams, "generator references a point outside the universe");
        if (g.empty() || !seen.insert(g).second) continue;
        kept.push_back(g);
    }
    basis_ = std::move(kept);

    at_.assign(labels_.size(), {});
    for (PointSet g : basis_) {
        for (Point p : g) at_[p].push_back(g);
    }
}

// An open set is a union of generators, so every point of an open S lies in a
// generator inside S. Testing generators alone is therefore exact.
bool SemiTopology::is_open(PointSet s) const { return interior(s) == s; }

PointSet SemiTopology::interior(PointSet s) const {
    if (s == universe_) return universe_;
    PointSet out;
    for (PointSet g : basis_) {
        if (g.subset_of(s)) out |= g;
    }
    return out;
}

// Every open neighbourhood of p contains a generator neighbourhood of p (or
// is P), so "all generators at p meet S" is the same as "all opens at p meet S".
// The implicit generator P meets S exactly when S is nonempty.
PointSet SemiTopology::closure(PointSet s) const {
    if (s.empty()) return {};
    PointSet out;
    for (Point p = 0; p < size(); ++p) {
        bool all = std::all_of(at_[p].begin(), at_[p].end(), [&](PointSet g) { return g.meets(s); });
        if (all) out.insert(p);
    }
    return out;
}

bool SemiTopology::is_closed(PointSet s) const { return closure(s) == s; }

bool SemiTopology::is_closed_via_complement(PointSet s) const { return is_open(complement(s)); }

OpenFamily SemiTopology::enumerate_opens(std::size_t cap) const {
    std::unordered_set<PointSet> seen;
    std::deque<PointSet> todo;
    std::vector<PointSet> out;
    bool truncated = false;

    auto add = [&](PointSet s) {
        if (seen.count(s) != 0) return true;
        if (out.size() >= cap) {
            truncated = true;
            return false;
        }
        seen.insert(s);
        out.push_back(s);
        todo.push_back(s);
        return true;
    };

    bool ok = add(PointSet{}) && add(universe_);
    for (PointSet g : basis_) {
        if (!ok) break;
        ok = add(g);
    }
    while (ok && !todo.empty()) {
        PointSet s = todo.front();
        todo.pop_front();
        for (PointSet g : basis_) {
            if (g.subset_of(s)) continue;
            if (!add(s | g)) {
                ok = false;
                break;
            }
        }
    }
    return OpenFamily(std::move(out), truncated);
}

SemiTopology SemiTopology::subspace(PointSet t) const {
    t &= universe_;
    std::vector<Point> keep = t.members();
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    for (Point p : keep) labels.push_back(labels_[p]);

    auto restrict = [&](PointSet s) {
        PointSet r;
        for (std::size_t i = 0; i < keep.size(); ++i) {
            if (s.contains(keep[i])) r.insert(i);
        }
        return r;
    };
    std::vector<PointSet> basis;
    basis.reserve(basis_.size());
    for (PointSet g : basis_) basis.push_back(restrict(g));
    return SemiTopology(std::move(labels), std::move(basis));
}

std::string format_set(const SemiTopology& space, PointSet s) {
    std::string out = "{";
    bool first = true;
    for (Point p : s) {
        if (!first) out += ',';
        first = false;
        out += space.label(p);
    }
    out += '}';
    return out;
}

}  // namespace semitop
