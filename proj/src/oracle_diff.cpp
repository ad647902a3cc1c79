#include <algorithm>
#include <random>
#include <sstream>

#include "semitop/classification.hpp"
#include "semitop/oracle.hpp"
#include "semitop/relations.hpp"

namespace semitop::oracle {

namespace {

std::string show(const SemiTopology& space, PointSet s) { return format_set(space, s); }
std::string show(const SemiTopology&, bool b) { return b ? "true" : "false"; }
std::string show(const SemiTopology& space, const std::vector<PointSet>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) out += ' ';
        out += format_set(space, v[i]);
    }
    return out + "]";
}

class Recorder {
  public:
    Recorder(const SemiTopology& space, std::string instance) : space_(space), instance_(std::move(instance)) {}

    template <typename T>
    void check(const std::string& predicate, const std::string& argument, const T& fast, const T& slow) {
        OracleReport& r = slot(predicate);
        if (!r.agree || fast == slow) return;
        r.agree = false;
        r.fast = predicate + argument + " = " + show(space_, fast);
        r.oracle = predicate + argument + " = " + show(space_, slow);
    }

    std::vector<OracleReport> take() { return std::move(reports_); }

  private:
    OracleReport& slot(const std::string& predicate) {
        for (auto& r : reports_) {
            if (r.predicate == predicate) return r;
        }
        reports_.push_back(OracleReport{predicate, instance_, "agree", "agree", true});
        return reports_.back();
    }

    const SemiTopology& space_;
    std::string instance_;
    std::vector<OracleReport> reports_;
};

std::vector<PointSet> subsets_to_try(const SemiTopology& space, std::uint64_t seed) {
    const std::size_t n = space.size();
    std::vector<PointSet> out;
    if (n <= 10) {
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.emplace_back(b);
        return out;
    }
    out.push_back({});
    out.push_back(space.universe());
    for (Point p = 0; p < n; ++p) out.push_back(PointSet::singleton(p));
    for (PointSet g : space.basis()) out.push_back(g);
    for (PointSet s : intertwined_all(space)) {
        out.push_back(s);
        out.push_back(space.interior(s));
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 1024; ++i) out.emplace_back(rng() & space.universe().bits());
    return out;
}

}  // namespace

std::string describe(const SemiTopology& space) {
    std::ostringstream os;
    os << "n=" << space.size() << " basis=[";
    for (std::size_t i = 0; i < space.basis().size(); ++i) {
        if (i != 0) os << ' ';
        os << format_set(space, space.basis()[i]);
    }
    os << ']';
    return os.str();
}

std::vector<OracleReport> diff(const SemiTopology& space, const DiffOptions& options) {
    OpenFamily family = space.enumerate_opens(options.cap);
    family.require_exact("oracle diff");
    OracleSpace slow = brute_force(space);
    Recorder rec(space, describe(space));
    const std::size_t n = space.size();

    rec.check("enumerate_opens", "", family.opens(), [&] {
        auto v = slow.opens;
        std::sort(v.begin(), v.end(), CanonicalLess{});
        return v;
    }());

    for (PointSet s : subsets_to_try(space, options.seed)) {
        const std::string arg = "(" + format_set(space, s) + ")";
        rec.check("is_open", arg, space.is_open(s), slow.is_open(s));
        rec.check("interior", arg, space.interior(s), interior(slow, s));
        rec.check("closure", arg, space.closure(s), closure(slow, s));
        rec.check("is_closed", arg, space.is_closed(s), is_closed(slow, s));
        rec.check("is_closed_via_complement", arg, space.is_closed_via_complement(s), is_closed(slow, s));
        rec.check("is_transitive", arg, is_transitive(space, s), is_transitive(slow, s));
        rec.check("is_strongly_transitive", arg, is_strongly_transitive(space, s), is_strongly_transitive(slow, s));
        rec.check("is_topen", arg, is_topen(space, s), is_topen(slow, s));
        rec.check("is_hyperconnected", arg, is_hyperconnected(space, s), is_hyperconnected(slow, s));
        rec.check("is_regular_open", arg, is_regular_open(space, s),
                  slow.is_open(s) && interior(slow, closure(slow, s)) == s);
        rec.check("is_regular_closed", arg, is_regular_closed(space, s),
                  is_closed(slow, s) && closure(slow, interior(slow, s)) == s);
    }

    Classification cls = classify_all(space, ClassifyOptions{.hypertransitivity = true, .cap = options.cap});
    for (Point p = 0; p < n; ++p) {
        const std::string arg = "(" + space.label(p) + ")";
        const auto& row = cls.rows[p];
        for (Point q = 0; q < n; ++q) {
            rec.check("intertwined", "(" + space.label(p) + "," + space.label(q) + ")", intertwined(space, p, q),
                      oracle::intertwined(slow, p, q));
        }
        rec.check("intertwined_of", arg, row.intertwined, intertwined_of(slow, p));
        rec.check("community", arg, row.community, community(slow, p));
        rec.check("regular", arg, row.regular, is_regular(slow, p));
        rec.check("weakly_regular", arg, row.weakly_regular, is_weakly_regular(slow, p));
        rec.check("quasiregular", arg, row.quasiregular, is_quasiregular(slow, p));
        rec.check("unconflicted", arg, row.unconflicted, is_unconflicted(slow, p));
        rec.check("hypertransitive", arg, row.hypertransitive_known && row.hypertransitive, is_hypertransitive(slow, p));
        rec.check("closed_neighbourhoods_of", arg, closed_neighbourhoods_of(space, p, family),
                  oracle::closed_neighbourhoods_of(slow, p));
    }
    rec.check("minimal_closed_neighbourhoods", "()", minimal_closed_neighbourhoods(space),
              oracle::minimal_closed_neighbourhoods(slow));
    rec.check("regular_opens", "()", regular_opens(space, family), oracle::regular_opens(slow));
    rec.check("regular_closeds", "()", regular_closeds(space, family), oracle::regular_closeds(slow));

    std::mt19937_64 rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
    for (int a = 0; a < options.assignments; ++a) {
        const std::size_t values = 1 + rng() % 3;
        std::vector<ValueId> raw(n);
        for (auto& v : raw) v = rng() % values;
        std::vector<std::string> labels;
        for (std::size_t v = 0; v < values; ++v) labels.push_back(std::string(1, static_cast<char>('A' + v)));
        ValueAssignment f(std::move(raw), std::move(labels));
        for (Point p = 0; p < n; ++p) {
            rec.check("continuous_at", "(f" + std::to_string(a) + "," + space.label(p) + ")", continuous_at(space, f, p),
                      oracle::continuous_at(slow, f, p));
        }
    }
    return rec.take();
}

}  // namespace semitop::oracle
