#include "semitop/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "semitop/classification.hpp"
#include "semitop/error.hpp"
#include "semitop/gallery.hpp"
#include "semitop/io.hpp"
#include "semitop/oracle.hpp"
#include "semitop/relations.hpp"
#include "semitop/theorems.hpp"
#include "semitop/values.hpp"

namespace semitop {

namespace {

using json = nlohmann::ordered_json;

json labels_of(const SemiTopology& space, PointSet s) {
    json out = json::array();
    for (Point p : s) out.push_back(space.label(p));
    return out;
}

const char* flag(bool b) { return b ? "true" : "false"; }

// A path to a document, or failing that the name of a gallery fixture.
io::Document resolve(const std::string& input, std::ostream& err) {
    if (!std::filesystem::exists(input)) {
        auto names = gallery::fixture_names();
        if (std::find(names.begin(), names.end(), input) != names.end()) {
            return io::Document{gallery::build(input), std::nullopt, {}};
        }
    }
    io::Document doc = io::load(input);
    for (const auto& w : doc.warnings) err << "warning: " << input << ": " << w << "\n";
    return doc;
}

int exit_code(ErrorKind kind) { return kind == ErrorKind::FamilyTruncated ? 1 : 2; }

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct Settings {
    std::string input;
    std::string set;
    std::string seed_set;
    std::string value = "A";
    std::string fixture;
    std::vector<int> params;
    std::string output;
    std::string reproducer;
    int n = 8;
    int k = 10;
    int iters = 100;
    std::uint64_t seed = 0;
    bool json = false;
};

int cmd_classify(const Settings& s, std::ostream& out, std::ostream& err) {
    io::Document doc = resolve(s.input, err);
    const SemiTopology& space = doc.space;
    Classification cls = classify_all(space, ClassifyOptions{.hypertransitivity = true, .cap = io::opens_cap_from_env()});
    if (s.json) {
        json rows = json::array();
        for (Point p = 0; p < space.size(); ++p) {
            const auto& r = cls.rows[p];
            json row = json::object();
            row["point"] = space.label(p);
            row["intertwined"] = labels_of(space, r.intertwined);
            row["community"] = labels_of(space, r.community);
            row["regular"] = r.regular;
            row["weakly_regular"] = r.weakly_regular;
            row["quasiregular"] = r.quasiregular;
            row["unconflicted"] = r.unconflicted;
            row["hypertransitive"] = r.hypertransitive_known ? json(r.hypertransitive) : json(nullptr);
            rows.push_back(std::move(row));
        }
        json doc_out = json::object();
        doc_out["points"] = std::move(rows);
        doc_out["family_truncated"] = cls.family_truncated;
        out << doc_out.dump(2) << "\n";
        return 0;
    }
    for (Point p = 0; p < space.size(); ++p) {
        const auto& r = cls.rows[p];
        out << space.label(p) << "  *=" << format_set(space, r.intertwined) << "  K=" << format_set(space, r.community)
            << "  regular=" << flag(r.regular) << " weakly_regular=" << flag(r.weakly_regular)
            << " quasiregular=" << flag(r.quasiregular) << " unconflicted=" << flag(r.unconflicted)
            << " hypertransitive=" << (r.hypertransitive_known ? flag(r.hypertransitive) : "unknown") << "\n";
    }
    if (cls.family_truncated) out << "note: open family truncated; hypertransitivity not computed\n";
    return 0;
}

int cmd_partition(const Settings& s, std::ostream& out, std::ostream& err) {
    io::Document doc = resolve(s.input, err);
    TopenPartition part = maximal_topen_partition(doc.space);
    if (s.json) {
        json t = json::array();
        for (PointSet o : part.topens) t.push_back(labels_of(doc.space, o));
        json o = json::object();
        o["topens"] = std::move(t);
        o["residue"] = labels_of(doc.space, part.residue);
        out << o.dump(2) << "\n";
        return 0;
    }
    for (PointSet o : part.topens) out << "topen " << format_set(doc.space, o) << "\n";
    out << "residue " << format_set(doc.space, part.residue) << "\n";
    return 0;
}

int cmd_set_op(const Settings& s, bool closure, std::ostream& out, std::ostream& err) {
    io::Document doc = resolve(s.input, err);
    PointSet in = io::parse_label_set(doc.space, s.set);
    PointSet r = closure ? doc.space.closure(in) : doc.space.interior(in);
    if (s.json) {
        out << labels_of(doc.space, r).dump() << "\n";
    } else {
        out << format_set(doc.space, r) << "\n";
    }
    return 0;
}

int cmd_propagate(const Settings& s, std::ostream& out, std::ostream& err) {
    io::Document doc = resolve(s.input, err);
    PointSet seed = io::parse_label_set(doc.space, s.seed_set);
    ValueId value = 0;
    if (doc.assignment) {
        const auto& labels = doc.assignment->labels();
        auto it = std::find(labels.begin(), labels.end(), s.value);
        if (it != labels.end()) value = static_cast<ValueId>(it - labels.begin());
    }
    PropagationResult r = propagate(doc.space, seed, value);
    if (s.json) {
        json o = json::object();
        o["seed"] = labels_of(doc.space, r.seed);
        o["value"] = s.value;
        o["grade2"] = labels_of(doc.space, r.committed_grade2);
        o["grade1"] = labels_of(doc.space, r.committed_grade1);
        o["rounds"] = r.rounds;
        out << o.dump(2) << "\n";
        return 0;
    }
    out << "seed " << format_set(doc.space, r.seed) << " (open)\n";
    out << "value " << s.value << "\n";
    out << "grade2 " << format_set(doc.space, r.committed_grade2) << "\n";
    out << "grade1 " << format_set(doc.space, r.committed_grade1) << "\n";
    out << "rounds " << r.rounds << "\n";
    return 0;
}

int cmd_check(const Settings& s, std::ostream& out, std::ostream& err) {
    io::Document doc = resolve(s.input, err);
    CheckOptions options;
    options.cap = io::opens_cap_from_env();
    options.seed = s.seed;
    auto results = check_theorems(doc.space, options);
    if (s.json) {
        json rows = json::array();
        for (const auto& r : results) {
            json row = json::object();
            row["name"] = r.name;
            row["status"] = r.skipped ? "skip" : r.passed ? "pass" : "fail";
            if (!r.detail.empty()) row["detail"] = r.detail;
            rows.push_back(std::move(row));
        }
        out << rows.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            out << (r.skipped ? "SKIP " : r.passed ? "PASS " : "FAIL ") << r.name;
            if (!r.detail.empty()) out << ": " << r.detail;
            out << "\n";
        }
    }
    return all_passed(results) ? 0 : 1;
}

int cmd_gallery(const Settings& s, std::ostream& out) {
    if (s.fixture.empty()) {
        for (const auto& f : gallery::fixtures()) {
            out << f.name;
            if (!f.default_params.empty()) {
                out << " (";
                for (std::size_t i = 0; i < f.default_params.size(); ++i) out << (i ? "," : "") << f.default_params[i];
                out << ")";
            }
            out << "  " << f.description << "\n";
        }
        return 0;
    }
    SemiTopology space = gallery::build(s.fixture, s.params);
    if (s.output.empty()) {
        out << io::dump(space);
    } else {
        io::save(s.output, space);
    }
    return 0;
}

int cmd_export_dot(const Settings& s, std::ostream& out, std::ostream& err) {
    io::Document doc = resolve(s.input, err);
    std::string dot = io::to_dot(doc.space);
    if (s.output.empty()) {
        out << dot;
    } else {
        std::ofstream f(s.output, std::ios::binary);
        if (!f) throw Error(ErrorKind::Usage, s.output + ": cannot write file");
        f << dot;
    }
    return 0;
}

int cmd_oracle_diff(const Settings& s, std::ostream& out) {
    if (s.n < 1 || s.n > 16 || s.k < 0 || s.iters < 0) throw Error(ErrorKind::Usage, "need 1 ≤ n ≤ 16, k ≥ 0, iters ≥ 0");
    std::mt19937_64 rng(s.seed);
    for (int i = 0; i < s.iters; ++i) {
        const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(s.n));
        const int k = static_cast<int>(rng() % static_cast<std::uint64_t>(s.k + 1));
        const std::uint64_t seed = mix(s.seed ^ mix(static_cast<std::uint64_t>(i)));
        SemiTopology space = gallery::random_semitopology(n, k, seed);
        oracle::DiffOptions options;
        options.seed = seed;
        options.cap = io::opens_cap_from_env();
        for (const auto& r : oracle::diff(space, options)) {
            if (r.agree) continue;
            out << "disagreement on instance " << i << " (" << r.instance << ")\n";
            out << "  fast:   " << r.fast << "\n";
            out << "  oracle: " << r.oracle << "\n";
            if (s.reproducer.empty()) {
                out << io::dump(space);
            } else {
                io::save(s.reproducer, space);
                out << "reproducer written to " << s.reproducer << "\n";
            }
            return 1;
        }
    }
    out << "oracle-diff: " << s.iters << " instances, fast path and oracle agree\n";
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite semitopology toolkit"};
    app.require_subcommand(1);
    Settings s;

    auto input = [&](CLI::App* sub) {
        sub->add_option("input", s.input, "Document path or gallery fixture name")->required();
        sub->add_flag("--json", s.json, "Machine-readable output");
    };

    auto* classify = app.add_subcommand("classify", "Per-point intertwined set, community and flags");
    input(classify);
    auto* partition = app.add_subcommand("partition", "Maximal topens and the irregular residue");
    input(partition);
    auto* closure = app.add_subcommand("closure", "Closure of a set of points");
    input(closure);
    closure->add_option("--set", s.set, "Comma-separated labels")->required();
    auto* interior = app.add_subcommand("interior", "Interior of a set of points");
    input(interior);
    interior->add_option("--set", s.set, "Comma-separated labels")->required();
    auto* propagate_cmd = app.add_subcommand("propagate", "Closure propagation from an open seed");
    input(propagate_cmd);
    propagate_cmd->add_option("--seed", s.seed_set, "Comma-separated labels of an open set")->required();
    propagate_cmd->add_option("--value", s.value, "Value agreed by the seed");
    auto* check = app.add_subcommand("check", "Run every structural law on the space");
    input(check);
    check->add_option("--rng-seed", s.seed, "Seed for sampled subsets and assignments");
    auto* gallery_cmd = app.add_subcommand("gallery", "List fixtures, or write one as a document");
    gallery_cmd->add_option("name", s.fixture, "Fixture name");
    gallery_cmd->add_option("--param", s.params, "Fixture parameters");
    gallery_cmd->add_option("-o,--output", s.output, "Write the document here instead of stdout");
    gallery_cmd->add_flag("--json", s.json, "Machine-readable errors");
    auto* dot = app.add_subcommand("export-dot", "Graphviz rendering");
    input(dot);
    dot->add_option("-o,--output", s.output, "Write the graph here instead of stdout");
    auto* diff = app.add_subcommand("oracle-diff", "Fuzz the fast paths against the brute-force oracle");
    diff->add_option("--n", s.n, "Maximum number of points");
    diff->add_option("--k", s.k, "Maximum number of generators");
    diff->add_option("--iters", s.iters, "Number of random instances");
    diff->add_option("--seed", s.seed, "Random seed");
    diff->add_option("--reproducer", s.reproducer, "Write the failing instance here");
    diff->add_flag("--json", s.json, "Machine-readable errors");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) return cmd_classify(s, out, err);
        if (partition->parsed()) return cmd_partition(s, out, err);
        if (closure->parsed()) return cmd_set_op(s, true, out, err);
        if (interior->parsed()) return cmd_set_op(s, false, out, err);
        if (propagate_cmd->parsed()) return cmd_propagate(s, out, err);
        if (check->parsed()) return cmd_check(s, out, err);
        if (gallery_cmd->parsed()) return cmd_gallery(s, out);
        if (dot->parsed()) return cmd_export_dot(s, out, err);
        if (diff->parsed()) return cmd_oracle_diff(s, out);
    } catch (const Error& e) {
        if (s.json) {
            json o = json::object();
            o["error"] = json::object({{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}});
            out << o.dump() << "\n";
        } else {
            err << "error: " << e.what() << "\n";
        }
        return exit_code(e.kind());
    }
    return 2;
}

}  // namespace semitop
