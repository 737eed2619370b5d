#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "acfg/enumerate.hpp"
#include "acfg/graph.hpp"
#include "acfg/instances.hpp"
#include "acfg/partition.hpp"
#include "acfg/search.hpp"
#include "acfg/stability.hpp"
#include "acfg/valuation.hpp"

namespace py = pybind11;
using namespace acfg;

namespace {

Model model_arg(const std::string& s) {
    auto m = parse_model(s);
    if (!m) throw std::invalid_argument("unknown model: " + s);
    return *m;
}

Notion notion_arg(const std::string& s) {
    auto n = parse_notion(s);
    if (!n) throw std::invalid_argument("unknown notion: " + s);
    return *n;
}

std::vector<std::vector<int>> blocks_as_lists(const CoalitionStructure& gamma) {
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<size_t>(gamma.block_count()));
    for (const auto& b : gamma.blocks()) out.push_back(b.members());
    return out;
}

CoalitionStructure structure_from_lists(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<PlayerSet> sets;
    sets.reserve(blocks.size());
    for (const auto& b : blocks) sets.push_back(PlayerSet::of(n, b));
    return CoalitionStructure(n, std::move(sets));
}

// Bigint -> arbitrary-precision python int, via the decimal string.
py::object big_to_py(const Bigint& v) {
    return py::module_::import("builtins").attr("int")(v.to_string());
}

int pref_to_int(Pref p) {
    switch (p) {
        case Pref::FirstPreferred: return 1;
        case Pref::SecondPreferred: return -1;
        default: return 0;
    }
}

}  // namespace

PYBIND11_MODULE(_acfg, mod) {
    mod.doc() = "Altruistic coalition formation games: valuation, stability, search.";
    mod.attr("__version__") = "0.1.0";

    py::class_<FriendGraph>(mod, "Graph",
                            "Simple undirected friendship graph on players 0..n-1.")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("n", &FriendGraph::n)
        .def_property_readonly("edge_count", &FriendGraph::edge_count)
        .def("add_edge", &FriendGraph::add_edge, py::arg("u"), py::arg("v"))
        .def("adjacent", &FriendGraph::adjacent, py::arg("u"), py::arg("v"))
        .def("neighbors",
             [](const FriendGraph& g, int i) { return g.neighbors(i); },
             py::arg("i"))
        .def("edges", &FriendGraph::edges)
        .def("__repr__", [](const FriendGraph& g) {
            return "Graph(n=" + std::to_string(g.n()) +
                   ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<CoalitionStructure>(mod, "Structure",
                                   "Partition of the players into coalitions.")
        .def(py::init(&structure_from_lists), py::arg("n"), py::arg("blocks"))
        .def_property_readonly("n", &CoalitionStructure::n)
        .def_property_readonly("block_count", &CoalitionStructure::block_count)
        .def("blocks", &blocks_as_lists)
        .def("coalition_of",
             [](const CoalitionStructure& gamma, int i) { return gamma.coalition_of(i).members(); },
             py::arg("i"))
        .def_static("singletons", &CoalitionStructure::singletons, py::arg("n"))
        .def_static("grand", &CoalitionStructure::grand, py::arg("n"))
        .def("__eq__", [](const CoalitionStructure& a, const CoalitionStructure& b) { return a == b; })
        .def("__str__", &format_partition)
        .def("__repr__",
             [](const CoalitionStructure& gamma) { return "Structure(" + format_partition(gamma) + ")"; });

    mod.def("parse_graph", &parse_graph, py::arg("text"),
            "Parse the \"n m\" + edge-lines text format (1-based).");
    mod.def("format_graph", &format_graph, py::arg("graph"));
    mod.def("parse_structure",
            [](const std::string& line, int n) { return parse_partition(line, n); },
            py::arg("line"), py::arg("n"),
            "Parse \"1 2 | 3\" notation (1-based members).");
    mod.def("format_structure", &format_partition, py::arg("structure"));

    mod.def("value",
            [](const FriendGraph& g, int i, const CoalitionStructure& gamma) {
                return value(g, i, gamma);
            },
            py::arg("graph"), py::arg("i"), py::arg("structure"),
            "Friend-oriented value of i's own coalition.");
    mod.def("utility",
            [](const FriendGraph& g, const std::string& m, int i,
               const CoalitionStructure& gamma) { return big_to_py(utility(g, model_arg(m), i, gamma)); },
            py::arg("graph"), py::arg("model"), py::arg("i"), py::arg("structure"),
            "Exact scalar utility (python int; the weight is n cubed).");
    mod.def("compare",
            [](const FriendGraph& g, const std::string& m, int i, const CoalitionStructure& gamma,
               const CoalitionStructure& delta) {
                return pref_to_int(compare(g, model_arg(m), i, gamma, delta));
            },
            py::arg("graph"), py::arg("model"), py::arg("i"), py::arg("first"), py::arg("second"),
            "1 if i prefers the first structure, -1 the second, 0 indifferent.");
    mod.def("count_prefers",
            [](const FriendGraph& g, const std::string& m, const CoalitionStructure& gamma,
               const CoalitionStructure& delta) { return count_prefers(g, model_arg(m), gamma, delta); },
            py::arg("graph"), py::arg("model"), py::arg("first"), py::arg("second"));

    mod.def("verify",
            [](const FriendGraph& g, const std::string& m, const std::string& s,
               const CoalitionStructure& gamma, int threads) {
                Verdict v = verify(g, model_arg(m), notion_arg(s), gamma, threads);
                py::dict out;
                out["stable"] = v.stable;
                out["witness"] = v.witness ? py::object(py::str(format_witness(*v.witness)))
                                           : py::object(py::none());
                return out;
            },
            py::arg("graph"), py::arg("model"), py::arg("notion"), py::arg("structure"),
            py::arg("threads") = 1);

    mod.def("exists_stable",
            [](const FriendGraph& g, const std::string& m, const std::string& s, int threads,
               std::optional<int> limit) {
                ExistenceResult r = exists_stable(g, model_arg(m), notion_arg(s), threads, limit);
                py::dict out;
                out["found"] = r.found;
                out["structure"] =
                    r.structure ? py::object(py::cast(*r.structure)) : py::object(py::none());
                out["partitions_examined"] = r.partitions_examined;
                return out;
            },
            py::arg("graph"), py::arg("model"), py::arg("notion"), py::arg("threads") = 1,
            py::arg("limit") = py::none());

    mod.def("nash_construct", &nash_construct, py::arg("graph"),
            "A Nash stable structure (stable under every model).");
    mod.def("components_structure", &components_structure, py::arg("graph"),
            "Connected components as a structure (strictly core stable under sumSF/minSF).");
    mod.def("check_ir_characterization",
            [](const FriendGraph& g, const std::string& m, const CoalitionStructure& gamma) {
                return check_ir_characterization(g, model_arg(m), gamma);
            },
            py::arg("graph"), py::arg("model"), py::arg("structure"));

    mod.def("bell", [](int n) { return big_to_py(bell(n)); }, py::arg("n"),
            "Number of partitions of an n-element set.");

    mod.def("random_graph", &random_graph, py::arg("n"), py::arg("p"), py::arg("seed"));

    mod.def("builtin_names", [] { return builtin_names(); });
    mod.def("builtin",
            [](const std::string& name) {
                BuiltinFixture f = builtin(name);
                py::dict out;
                out["name"] = f.name;
                out["graph"] = f.graph;
                py::dict structures;
                for (const auto& [key, gamma] : f.structures) structures[py::str(key)] = gamma;
                out["structures"] = structures;
                return out;
            },
            py::arg("name"), "Named example graph plus its distinguished structures.");
}
