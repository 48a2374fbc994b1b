#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "surfwit/arrangement.hpp"
#include "surfwit/faces.hpp"
#include "surfwit/graph_io.hpp"
#include "surfwit/witness.hpp"

namespace py = pybind11;
using namespace surfwit;

namespace {

using DartPair = std::pair<int, int>;

DartPair to_pair(Dart d) { return {d.edge(), d.end()}; }

std::vector<DartPair> to_pairs(std::span<const Dart> ds) {
    std::vector<DartPair> out;
    for (const Dart d : ds) out.push_back(to_pair(d));
    return out;
}

EmbeddedGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges,
                         const std::vector<std::vector<DartPair>>& rotation) {
    std::vector<Edge> es;
    for (const auto& [u, v] : edges) es.push_back({u, v});
    std::vector<std::vector<Dart>> rot;
    for (const auto& r : rotation) {
        auto& row = rot.emplace_back();
        for (const auto& [e, end] : r) row.push_back(Dart::of(e, end));
    }
    return EmbeddedGraph(n, std::move(es), std::move(rot));
}

py::dict face_dict(const Face& f) {
    py::dict d;
    d["genus"] = f.genus;
    d["degeneracy"] = f.degeneracy;
    std::vector<std::vector<DartPair>> walks;
    for (const auto& w : f.walks) walks.push_back(to_pairs(w.darts));
    d["walks"] = walks;
    d["host_faces"] = f.host_faces;
    return d;
}

py::dict witness_dict(const WitnessResult& w) {
    py::dict d;
    d["colors"] = w.colors;
    d["size"] = w.size;
    d["genus"] = w.achieved_genus;
    std::vector<std::string> trace;
    for (const auto& s : w.trace) trace.push_back(format_step(s));
    d["trace"] = trace;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Embedded graphs, cluster genus and small non-embeddability witnesses";
    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    py::class_<EmbeddedGraph>(m, "EmbeddedGraph")
        .def(py::init(&make_graph), py::arg("vertex_count"), py::arg("edges"), py::arg("rotation"),
             "Graph from (u, v) edges and per-vertex rotations of (edge, end) darts.")
        .def_property_readonly("vertex_count", &EmbeddedGraph::vertex_count)
        .def_property_readonly("edge_count", &EmbeddedGraph::edge_count)
        .def("genus", &genus_sum, "Sum of the genera of the components.")
        .def("facial_walks", [](const EmbeddedGraph& g) {
            std::vector<std::vector<DartPair>> out;
            for (const auto& w : trace_facial_walks(g)) out.push_back(to_pairs(w.darts));
            return out;
        })
        .def("subgraph_genus", [](const EmbeddedGraph& g, std::vector<int> edges) { return subgraph_genus_sum(g, edges); },
             py::arg("edges"))
        .def("faces", [](const EmbeddedGraph& g, std::vector<int> keep, std::optional<int> lone) {
                 py::list out;
                 for (const Face& f : face_structure(g, keep, lone)) out.append(face_dict(f));
                 return out;
             },
             py::arg("keep_edges"), py::arg("lone_vertex") = py::none())
        .def("__eq__", [](const EmbeddedGraph& a, const EmbeddedGraph& b) { return a == b; });

    py::class_<Cluster>(m, "Cluster")
        .def(py::init([](const EmbeddedGraph& g, std::vector<int> colors, std::vector<int> anchor_colors,
                         std::optional<int> anchor_vertex) {
                 return Cluster(g, std::move(colors), AnchorSpec{std::move(anchor_colors), anchor_vertex});
             }),
             py::arg("graph"), py::arg("edge_colors"), py::arg("anchor_colors") = std::vector<int>{},
             py::arg("anchor_vertex") = py::none())
        .def_property_readonly("graph", &Cluster::host)
        .def_property_readonly("colors", &Cluster::colors)
        .def_property_readonly("member_colors", &Cluster::member_colors)
        .def_property_readonly("edge_colors",
                               [](const Cluster& c) { return std::vector<int>(c.edge_color().begin(), c.edge_color().end()); })
        .def("union_genus", &Cluster::union_genus)
        .def("anchor_genus", &Cluster::anchor_genus)
        .def("genus_with_anchor", [](const Cluster& c, std::vector<int> colors) { return c.genus_with_anchor(colors); })
        .def("validate", [](const Cluster& c) {
            const auto r = validate_cluster(c);
            return py::make_tuple(r.ok, r.message);
        })
        .def("serialize", &serialize_cluster);

    py::class_<Arrangement>(m, "Arrangement")
        .def(py::init<Cluster>())
        .def_property_readonly("cluster", &Arrangement::cluster)
        .def_property_readonly("circles", &Arrangement::circles)
        .def("genus", &Arrangement::genus)
        .def("genus_of", [](const Arrangement& a, std::vector<int> cs) { return a.genus_of(cs); })
        .def("is_strong", [](const Arrangement& a) { return is_strong(a); })
        .def("embeddable_into", [](const Arrangement& a, int g) { return embeddable_into(a, g); })
        .def("every_subset_embeddable", [](const Arrangement& a, int size, int g) { return every_subset_embeddable(a, size, g); })
        .def("serialize", [](const Arrangement& a) { return serialize_arrangement(a); })
        .def("__len__", &Arrangement::size);

    m.def("parse_cluster", [](const std::string& text) { return parse_graph_string(text).cluster(); });
    m.def("read_cluster", [](const std::string& path) { return read_graph_file(path).cluster(); });
    m.def("parse_arrangement", &parse_arrangement);
    m.def("read_arrangement", &read_arrangement);

    m.def("witness", [](const Cluster& c, int g, bool strong) { return witness_dict(main_theorem_witness(c, g, {strong})); },
          py::arg("cluster"), py::arg("g"), py::arg("strong") = false,
          "Constructive witness of genus > g with at most 4g+5 members (4g+4 strong).");
    m.def("helly_witness", [](const Arrangement& a, int g) { return witness_dict(helly_witness(a, g)); });
    m.def("brute_force_witness",
          [](const Cluster& c, int g, int max_size, bool require_anchor) -> std::optional<py::tuple> {
              py::gil_scoped_release release;
              const auto r = brute_force_witness(c, g, max_size, {require_anchor, 0});
              py::gil_scoped_acquire acquire;
              if (!r) return std::nullopt;
              return py::make_tuple(r->colors, r->size);
          },
          py::arg("cluster"), py::arg("g"), py::arg("max_size"), py::arg("require_anchor") = true);

    m.def("generate_random",
          [](int circles, int genus, std::uint64_t seed, bool strong) {
              return generate_random(circles, genus, seed, GenerateOptions{strong});
          },
          py::arg("circles"), py::arg("genus"), py::arg("seed"), py::arg("strong") = false);
    m.def("search_tight_example",
          [](std::uint64_t seed, int budget, bool strong) {
              const SearchResult r = strong ? search_strong_tight_example(seed, budget) : search_tight_example(seed, budget);
              return py::make_tuple(r.found, r.arrangement, r.attempts, r.best_score);
          },
          py::arg("seed"), py::arg("budget") = 200000, py::arg("strong") = false);
}
