#include "semitop/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "semitop/classification.hpp"
#include "semitop/error.hpp"
#include "semitop/relations.hpp"

namespace semitop::io {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void schema(const std::string& source, const std::string& field, const std::string& msg) {
    throw Error(ErrorKind::SchemaError, source + ": " + field + ": " + msg);
}

std::string location(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

Document parse(std::string_view text, const std::string& source) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, source + ": " + location(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
    }
    if (!doc.is_object()) schema(source, "document", "expected an object");
    for (const auto& [key, _] : doc.items()) {
        if (key != "points" && key != "basis" && key != "assignment") schema(source, key, "unknown field");
    }
    if (!doc.contains("points") || !doc["points"].is_array()) schema(source, "points", "expected a list of labels");
    if (!doc.contains("basis") || !doc["basis"].is_array()) schema(source, "basis", "expected a list of lists of labels");

    std::vector<std::string> labels;
    std::unordered_map<std::string, Point> index;
    const json& points = doc["points"];
    for (std::size_t i = 0; i < points.size(); ++i) {
        const std::string field = "points[" + std::to_string(i) + "]";
        if (!points[i].is_string()) schema(source, field, "expected a string label");
        std::string l = points[i].get<std::string>();
        if (!index.emplace(l, i).second) schema(source, field, "duplicate point \"" + l + "\"");
        labels.push_back(std::move(l));
    }
    if (labels.size() > kMaxPoints) schema(source, "points", "at most " + std::to_string(kMaxPoints) + " points");

    Document out{SemiTopology(0, {}), std::nullopt, {}};
    std::vector<PointSet> basis;
    const json& gens = doc["basis"];
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string field = "basis[" + std::to_string(i) + "]";
        if (!gens[i].is_array()) schema(source, field, "expected a list of labels");
        PointSet g;
        for (std::size_t j = 0; j < gens[i].size(); ++j) {
            const json& e = gens[i][j];
            const std::string sub = field + "[" + std::to_string(j) + "]";
            if (!e.is_string()) schema(source, sub, "expected a string label");
            auto it = index.find(e.get<std::string>());
            if (it == index.end()) schema(source, sub, "unknown label \"" + e.get<std::string>() + "\"");
            g.insert(it->second);
        }
        if (g.empty()) {
            out.warnings.push_back(field + ": empty generator dropped");
        } else if (std::find(basis.begin(), basis.end(), g) != basis.end()) {
            out.warnings.push_back(field + ": duplicate generator dropped");
        }
        basis.push_back(g);
    }
    out.space = SemiTopology(labels, basis);

    if (doc.contains("assignment")) {
        const json& a = doc["assignment"];
        if (!a.is_object()) schema(source, "assignment", "expected a map from label to value");
        std::vector<std::optional<std::string>> raw(labels.size());
        for (const auto& [key, v] : a.items()) {
            auto it = index.find(key);
            if (it == index.end()) schema(source, "assignment", "unknown label \"" + key + "\"");
            if (!v.is_string()) schema(source, "assignment." + key, "expected a string value");
            raw[it->second] = v.get<std::string>();
        }
        std::vector<std::string> values;
        std::vector<ValueId> ids;
        for (Point p = 0; p < raw.size(); ++p) {
            if (!raw[p]) schema(source, "assignment", "missing value for \"" + labels[p] + "\"");
            auto it = std::find(values.begin(), values.end(), *raw[p]);
            ids.push_back(static_cast<ValueId>(it - values.begin()));
            if (it == values.end()) values.push_back(*raw[p]);
        }
        if (values.empty()) values.push_back("A");
        out.assignment = ValueAssignment(std::move(ids), std::move(values));
    }
    return out;
}

Document load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

std::string dump(const SemiTopology& space, const std::optional<ValueAssignment>& assignment) {
    json doc = json::object();
    doc["points"] = space.labels();
    json basis = json::array();
    for (PointSet g : space.basis()) {
        json entry = json::array();
        for (Point p : g) entry.push_back(space.label(p));
        basis.push_back(std::move(entry));
    }
    doc["basis"] = std::move(basis);
    if (assignment) {
        json a = json::object();
        for (Point p = 0; p < space.size(); ++p) a[space.label(p)] = assignment->labels().at((*assignment)[p]);
        doc["assignment"] = std::move(a);
    }
    return doc.dump(2) + "\n";
}

void save(const std::string& path, const SemiTopology& space, const std::optional<ValueAssignment>& assignment) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Usage, path + ": cannot write file");
    out << dump(space, assignment);
}

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

const char* colour(const ClassificationRow& r) {
    if (r.regular) return "palegreen";
    if (r.weakly_regular) return "khaki";
    if (r.quasiregular) return "lightblue";
    if (!r.unconflicted) return "salmon";
    return "white";
}

}  // namespace

std::string to_dot(const SemiTopology& space) {
    Classification cls = classify_all(space, ClassifyOptions{.hypertransitivity = false, .cap = opens_cap_from_env()});
    TopenPartition part = maximal_topen_partition(space);
    std::ostringstream os;
    os << "graph semitopology {\n";
    os << "  node [fontname=\"Helvetica\"];\n";

    auto point_node = [&](Point p) {
        os << "p" << p << " [label=" << quote(space.label(p)) << ", shape=circle, style=filled, fillcolor="
           << colour(cls.rows[p]) << "];\n";
    };
    for (std::size_t t = 0; t < part.topens.size(); ++t) {
        os << "  subgraph cluster_topen" << t << " {\n";
        os << "    style=dashed;\n";
        os << "    label=" << quote("topen " + format_set(space, part.topens[t])) << ";\n";
        for (Point p : part.topens[t]) {
            os << "    ";
            point_node(p);
        }
        os << "  }\n";
    }
    for (Point p : part.residue) {
        os << "  ";
        point_node(p);
    }
    for (std::size_t i = 0; i < space.basis().size(); ++i) {
        PointSet g = space.basis()[i];
        os << "  g" << i << " [label=" << quote(format_set(space, g)) << ", shape=box];\n";
        for (Point p : g) os << "  g" << i << " -- p" << p << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::size_t opens_cap_from_env() {
    const char* raw = std::getenv("SEMITOP_OPENS_CAP");
    if (raw == nullptr || *raw == '\0') return kDefaultOpensCap;
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (*end != '\0' || v == 0) return kDefaultOpensCap;
    return static_cast<std::size_t>(v);
}

PointSet parse_label_set(const SemiTopology& space, std::string_view text) {
    PointSet out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view item = text.substr(start, end - start);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (!item.empty()) {
            const auto& labels = space.labels();
            auto it = std::find(labels.begin(), labels.end(), item);
            if (it == labels.end()) throw Error(ErrorKind::Usage, "unknown point \"" + std::string(item) + "\"");
            out.insert(static_cast<Point>(it - labels.begin()));
        }
        start = end + 1;
    }
    return out;
}

}  // namespace semitop::io
