#include <algorithm>
#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "semitop/classification.hpp"
#include "semitop/cli.hpp"
#include "semitop/error.hpp"
#include "semitop/gallery.hpp"
#include "semitop/io.hpp"
#include "semitop/oracle.hpp"
#include "semitop/relations.hpp"
#include "semitop/theorems.hpp"
#include "semitop/values.hpp"

namespace py = pybind11;
using namespace semitop;

// Point sets cross the boundary as frozensets of point indices.
namespace pybind11::detail {
template <>
struct type_caster<PointSet> {
    PYBIND11_TYPE_CASTER(PointSet, const_name("frozenset[int]"));

    bool load(handle src, bool) {
        if (!src || PyUnicode_Check(src.ptr()) || !py::isinstance<py::iterable>(src)) return false;
        PointSet out;
        for (auto item : py::reinterpret_borrow<py::iterable>(src)) {
            if (!py::isinstance<py::int_>(item)) return false;
            auto p = item.cast<long long>();
            if (p < 0 || p >= 64) throw py::value_error("point index out of range: " + std::to_string(p));
            out.insert(static_cast<Point>(p));
        }
        value = out;
        return true;
    }

    static handle cast(PointSet s, return_value_policy, handle) {
        py::list items;
        for (Point p : s) items.append(p);
        return py::frozenset(items).release();
    }
};
}  // namespace pybind11::detail

namespace {

ValueAssignment to_assignment(const SemiTopology& space, const std::vector<std::string>& values) {
    if (values.size() != space.size()) throw Error(ErrorKind::BadParams, "assignment must give one value per point");
    std::vector<std::string> labels;
    std::vector<ValueId> ids;
    for (const auto& v : values) {
        auto it = std::find(labels.begin(), labels.end(), v);
        ids.push_back(static_cast<ValueId>(it - labels.begin()));
        if (it == labels.end()) labels.push_back(v);
    }
    return ValueAssignment(std::move(ids), std::move(labels));
}

std::vector<std::string> from_assignment(const ValueAssignment& f) {
    std::vector<std::string> out;
    for (ValueId v : f.values()) out.push_back(f.labels().at(v));
    return out;
}

py::dict document_dict(const io::Document& d) {
    py::dict out;
    out["space"] = d.space;
    if (d.assignment)
        out["assignment"] = from_assignment(*d.assignment);
    else
        out["assignment"] = py::none();
    out["warnings"] = d.warnings;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite semitopologies";

    static py::exception<Error> error_type(m, "SemitopError");
    py::register_exception_translator([](std::exception_ptr e) {
        try {
            if (e) std::rethrow_exception(e);
        } catch (const Error& err) {
            py::object instance = py::handle(error_type.ptr())(err.what());
            instance.attr("kind") = std::string(to_string(err.kind()));
            PyErr_SetObject(error_type.ptr(), instance.ptr());
        }
    });

    py::class_<OpenFamily>(m, "OpenFamily")
        .def_property_readonly("opens", &OpenFamily::opens)
        .def_property_readonly("truncated", &OpenFamily::truncated)
        .def("__len__", &OpenFamily::size)
        .def("__contains__", &OpenFamily::contains);

    py::class_<SemiTopology>(m, "SemiTopology")
        .def(py::init<std::size_t, std::vector<PointSet>>(), py::arg("n"), py::arg("basis"))
        .def(py::init<std::vector<std::string>, std::vector<PointSet>>(), py::arg("labels"), py::arg("basis"))
        .def("__len__", &SemiTopology::size)
        .def_property_readonly("labels", &SemiTopology::labels)
        .def_property_readonly("basis", &SemiTopology::basis)
        .def_property_readonly("universe", &SemiTopology::universe)
        .def("is_open", &SemiTopology::is_open)
        .def("is_closed", &SemiTopology::is_closed)
        .def("interior", &SemiTopology::interior)
        .def("closure", &SemiTopology::closure)
        .def("enumerate_opens", &SemiTopology::enumerate_opens, py::arg("cap") = kDefaultOpensCap)
        .def("subspace", &SemiTopology::subspace)
        .def("format", [](const SemiTopology& s, PointSet x) { return format_set(s, x); })
        .def("__eq__", &SemiTopology::operator==)
        .def("__repr__", [](const SemiTopology& s) { return "<SemiTopology " + oracle::describe(s) + ">"; });

    m.def("interior", [](const SemiTopology& s, PointSet x) { return s.interior(x); });
    m.def("closure", [](const SemiTopology& s, PointSet x) { return s.closure(x); });
    m.def("is_transitive", &is_transitive);
    m.def("is_topen", &is_topen);
    m.def("intertwined", &intertwined);
    m.def("intertwined_of", &intertwined_of);
    m.def("minimal_closed_neighbourhoods", &minimal_closed_neighbourhoods);

    py::class_<ClassificationRow>(m, "ClassificationRow")
        .def_readonly("intertwined", &ClassificationRow::intertwined)
        .def_readonly("community", &ClassificationRow::community)
        .def_readonly("regular", &ClassificationRow::regular)
        .def_readonly("weakly_regular", &ClassificationRow::weakly_regular)
        .def_readonly("quasiregular", &ClassificationRow::quasiregular)
        .def_readonly("unconflicted", &ClassificationRow::unconflicted)
        .def_property_readonly("hypertransitive", [](const ClassificationRow& r) -> py::object {
            if (!r.hypertransitive_known) return py::none();
            return py::bool_(r.hypertransitive);
        });
    py::class_<Classification>(m, "Classification")
        .def_readonly("rows", &Classification::rows)
        .def_readonly("family_truncated", &Classification::family_truncated)
        .def("__len__", [](const Classification& c) { return c.rows.size(); })
        .def("__getitem__", [](const Classification& c, std::size_t p) { return c.rows.at(p); });

    m.def(
        "classify",
        [](const SemiTopology& s, std::size_t cap) {
            ClassifyOptions options;
            options.cap = cap;
            return classify_all(s, options);
        },
        py::arg("space"), py::arg("cap") = kDefaultOpensCap);

    m.def("partition", [](const SemiTopology& s) {
        auto part = maximal_topen_partition(s);
        return py::make_tuple(part.topens, part.residue);
    });

    py::class_<PropagationResult>(m, "Propagation")
        .def_readonly("seed", &PropagationResult::seed)
        .def_readonly("value", &PropagationResult::value)
        .def_readonly("grade2", &PropagationResult::committed_grade2)
        .def_readonly("grade1", &PropagationResult::committed_grade1)
        .def_readonly("rounds", &PropagationResult::rounds)
        .def_readonly("trace", &PropagationResult::trace);
    m.def("propagate", &propagate, py::arg("space"), py::arg("seed"), py::arg("value") = 0);

    m.def("is_continuous", [](const SemiTopology& s, const std::vector<std::string>& f) {
        return is_continuous(s, to_assignment(s, f));
    });
    m.def("build_splitting_assignment", [](const SemiTopology& s, PointSet t) -> py::object {
        auto f = build_splitting_assignment(s, t);
        if (!f) return py::none();
        return py::cast(from_assignment(*f));
    });

    m.def("fixture_names", &gallery::fixture_names);
    m.def("gallery", &gallery::build, py::arg("name"), py::arg("params") = std::vector<int>{});
    m.def("random_semitopology", &gallery::random_semitopology, py::arg("n"), py::arg("k"), py::arg("seed"));

    m.def("loads", [](const std::string& text) { return document_dict(io::parse(text)); });
    m.def("load", [](const std::string& path) { return document_dict(io::load(path)); });
    m.def(
        "dump",
        [](const SemiTopology& s, std::optional<std::vector<std::string>> f) {
            std::optional<ValueAssignment> a;
            if (f) a = to_assignment(s, *f);
            return io::dump(s, a);
        },
        py::arg("space"), py::arg("assignment") = py::none());
    m.def("to_dot", &io::to_dot);

    py::class_<TheoremResult>(m, "TheoremResult")
        .def_readonly("name", &TheoremResult::name)
        .def_readonly("passed", &TheoremResult::passed)
        .def_readonly("skipped", &TheoremResult::skipped)
        .def_readonly("detail", &TheoremResult::detail)
        .def("__repr__", [](const TheoremResult& r) {
            return std::string(r.skipped ? "SKIP " : r.passed ? "PASS " : "FAIL ") + r.name;
        });
    m.def(
        "check",
        [](const SemiTopology& s, std::uint64_t seed) {
            CheckOptions options;
            options.seed = seed;
            return check_theorems(s, options);
        },
        py::arg("space"), py::arg("seed") = 0);

    m.def(
        "oracle_diff",
        [](const SemiTopology& s, std::uint64_t seed) {
            oracle::DiffOptions options;
            options.seed = seed;
            py::list out;
            for (const auto& r : oracle::diff(s, options)) {
                py::dict d;
                d["predicate"] = r.predicate;
                d["instance"] = r.instance;
                d["fast"] = r.fast;
                d["oracle"] = r.oracle;
                d["agree"] = r.agree;
                out.append(d);
            }
            return out;
        },
        py::arg("space"), py::arg("seed") = 0);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::vector<std::string> full{"semitop"};
        full.insert(full.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : full) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
