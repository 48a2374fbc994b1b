#pragma once

// Small hand-built embedded graphs and clusters shared by the unit tests.

#include <string>
#include <vector>

#include "surfwit/cluster.hpp"
#include "surfwit/embedded_graph.hpp"
#include "surfwit/graph_io.hpp"

namespace fixture {

using surfwit::Dart;
using surfwit::Edge;
using surfwit::EmbeddedGraph;

inline Dart d(int e, int end) { return Dart::of(e, end); }

/// One vertex with loops 0 and 1: interleaved gives the torus, nested the sphere.
inline EmbeddedGraph torus_bouquet() { return EmbeddedGraph(1, {{0, 0}, {0, 0}}, {{d(0, 0), d(1, 0), d(0, 1), d(1, 1)}}); }
inline EmbeddedGraph planar_bouquet() { return EmbeddedGraph(1, {{0, 0}, {0, 0}}, {{d(0, 0), d(0, 1), d(1, 0), d(1, 1)}}); }

/// Loops a b a' b' c d c' d' at one vertex: the genus-2 bouquet.
inline EmbeddedGraph genus2_bouquet() {
    return EmbeddedGraph(1, {{0, 0}, {0, 0}, {0, 0}, {0, 0}},
                         {{d(0, 0), d(1, 0), d(0, 1), d(1, 1), d(2, 0), d(3, 0), d(2, 1), d(3, 1)}});
}

inline EmbeddedGraph triangle() {
    return EmbeddedGraph(3, {{0, 1}, {1, 2}, {2, 0}},
                         {{d(0, 0), d(2, 1)}, {d(1, 0), d(0, 1)}, {d(2, 0), d(1, 1)}});
}

/// Two vertices, three parallel edges, planar.
inline EmbeddedGraph theta() {
    return EmbeddedGraph(2, {{0, 1}, {0, 1}, {0, 1}},
                         {{d(0, 0), d(1, 0), d(2, 0)}, {d(2, 1), d(1, 1), d(0, 1)}});
}

/// Two vertices, two parallel edges.
inline EmbeddedGraph digon() { return EmbeddedGraph(2, {{0, 1}, {0, 1}}, {{d(0, 0), d(1, 0)}, {d(0, 1), d(1, 1)}}); }

/// K3,3 with a fixed rotation; non-planar, so any rotation has genus >= 1.
inline EmbeddedGraph k33_torus() {
    // Parts {0,1,2} and {3,4,5}; edge 3*i+j joins i and 3+j.
    std::vector<Edge> edges;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) edges.push_back({i, 3 + j});
    }
    std::vector<std::vector<Dart>> rot(6);
    for (int i = 0; i < 3; ++i) rot[static_cast<std::size_t>(i)] = {d(3 * i, 0), d(3 * i + 1, 0), d(3 * i + 2, 0)};
    for (int j = 0; j < 3; ++j) rot[static_cast<std::size_t>(3 + j)] = {d(j, 1), d(3 + j, 1), d(6 + j, 1)};
    return EmbeddedGraph(6, edges, rot);
}

inline surfwit::GraphFile parse(const std::string& text) { return surfwit::parse_graph_string(text); }

/// Torus bouquet with loop 0 in the anchor (colour 1) and loop 1 as member 2.
inline surfwit::Cluster torus_loops_cluster() {
    return surfwit::Cluster(torus_bouquet(), {1, 2}, surfwit::AnchorSpec::of_color(1));
}

std::string corpus_path(const std::string& name);

}  // namespace fixture
