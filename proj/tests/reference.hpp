#pragma once

// Test-side brute force. Builds the open family by saturating under pairwise
// union and reads every notion straight off its definition. Works on raw
// bitmasks so it shares nothing with the library beyond the basis it is given.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "semitop/semitopology.hpp"

namespace ref {

using Mask = std::uint64_t;

inline bool meets(Mask a, Mask b) { return (a & b) != 0; }
inline bool sub(Mask a, Mask b) { return (a & ~b) == 0; }

struct Space {
    std::size_t n = 0;
    Mask full = 0;
    std::vector<Mask> opens;
    std::set<Mask> lookup;

    explicit Space(const semitop::SemiTopology& s) : n(s.size()) {
        full = n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
        lookup = {0, full};
        for (auto g : s.basis()) lookup.insert(g.bits());
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<Mask> cur(lookup.begin(), lookup.end());
            for (Mask a : cur)
                for (Mask b : cur)
                    if (lookup.insert(a | b).second) grew = true;
        }
        opens.assign(lookup.begin(), lookup.end());
    }

    bool open(Mask x) const { return lookup.count(x) != 0; }
    bool closed(Mask x) const { return open(full & ~x); }
    bool has(Mask x, std::size_t p) const { return (x >> p) & 1; }

    Mask interior(Mask x) const {
        Mask out = 0;
        for (Mask o : opens)
            if (sub(o, x)) out |= o;
        return out;
    }

    Mask closure(Mask x) const {
        Mask out = 0;
        for (std::size_t p = 0; p < n; ++p) {
            bool all = true;
            for (Mask o : opens)
                if (has(o, p) && !meets(o, x)) all = false;
            if (all) out |= Mask{1} << p;
        }
        return out;
    }

    bool intertwined(std::size_t p, std::size_t q) const {
        for (Mask a : opens)
            for (Mask b : opens)
                if (has(a, p) && has(b, q) && !meets(a, b)) return false;
        return true;
    }

    Mask star(std::size_t p) const {
        Mask out = 0;
        for (std::size_t q = 0; q < n; ++q)
            if (intertwined(p, q)) out |= Mask{1} << q;
        return out;
    }

    Mask community(std::size_t p) const { return interior(star(p)); }

    bool transitive(Mask t) const {
        for (Mask a : opens)
            for (Mask b : opens)
                if (meets(a, t) && meets(b, t) && !meets(a, b)) return false;
        return true;
    }

    bool strongly_transitive(Mask t) const {
        for (Mask a : opens)
            for (Mask b : opens)
                if (meets(a, t) && meets(b, t) && (a & b & t) == 0) return false;
        return true;
    }

    bool topen(Mask t) const { return t != 0 && open(t) && transitive(t); }

    bool regular(std::size_t p) const {
        Mask k = community(p);
        return has(k, p) && topen(k);
    }
    bool weakly_regular(std::size_t p) const { return has(community(p), p); }
    bool quasiregular(std::size_t p) const { return community(p) != 0; }

    bool unconflicted(std::size_t p) const {
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t r = 0; r < n; ++r)
                if (intertwined(q, p) && intertwined(p, r) && !intertwined(q, r)) return false;
        return true;
    }

    bool hypertransitive(std::size_t p) const {
        std::vector<Mask> touching;
        for (Mask o : opens) {
            bool all = true;
            for (Mask u : opens)
                if (has(u, p) && !meets(o, u)) all = false;
            if (all) touching.push_back(o);
        }
        for (Mask a : touching)
            for (Mask b : touching)
                if (!meets(a, b)) return false;
        return true;
    }

    std::vector<Mask> topens() const {
        std::vector<Mask> out;
        for (Mask o : opens)
            if (topen(o)) out.push_back(o);
        return out;
    }

    std::vector<Mask> maximal_topens() const {
        auto all = topens();
        std::vector<Mask> out;
        for (Mask t : all) {
            bool maximal = std::none_of(all.begin(), all.end(), [&](Mask u) { return u != t && sub(t, u); });
            if (maximal) out.push_back(t);
        }
        return out;
    }

    std::vector<Mask> closed_neighbourhoods_of(std::size_t p) const {
        std::vector<Mask> out;
        for (Mask o : opens) {
            Mask c = full & ~o;
            if (has(interior(c), p)) out.push_back(c);
        }
        return out;
    }

    std::vector<Mask> minimal_closed_neighbourhoods() const {
        std::vector<Mask> cands;
        for (Mask o : opens) {
            Mask c = full & ~o;
            if (interior(c) != 0) cands.push_back(c);
        }
        std::vector<Mask> out;
        for (Mask c : cands)
            if (std::none_of(cands.begin(), cands.end(), [&](Mask d) { return d != c && sub(d, c); })) out.push_back(c);
        return out;
    }

    std::vector<Mask> regular_opens() const {
        std::vector<Mask> out;
        for (Mask o : opens)
            if (interior(closure(o)) == o) out.push_back(o);
        return out;
    }

    std::vector<Mask> regular_closeds() const {
        std::vector<Mask> out;
        for (Mask o : opens) {
            Mask c = full & ~o;
            if (closure(interior(c)) == c) out.push_back(c);
        }
        return out;
    }

    template <typename F>
    bool continuous_at(const F& f, std::size_t p) const {
        for (Mask o : opens) {
            if (!has(o, p)) continue;
            bool constant = true;
            for (std::size_t q = 0; q < n; ++q)
                if (has(o, q) && f[q] != f[p]) constant = false;
            if (constant) return true;
        }
        return false;
    }
};

inline std::vector<Mask> sorted(std::vector<Mask> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

template <typename Sets>
std::vector<Mask> masks(const Sets& sets) {
    std::vector<Mask> out;
    for (auto s : sets) out.push_back(s.bits());
    return sorted(std::move(out));
}

}  // namespace ref
