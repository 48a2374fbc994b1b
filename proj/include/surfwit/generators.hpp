#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "surfwit/cluster.hpp"
#include "surfwit/embedded_graph.hpp"

namespace surfwit {

using Rng = std::mt19937_64;

/// Uniform integer in [0, n). Spelled out so sequences are identical across
/// standard libraries.
inline int pick(Rng& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }
inline bool coin(Rng& rng, int percent) { return pick(rng, 100) < percent; }

/// Random rotation at every vertex.
std::vector<std::vector<Dart>> random_rotation(Rng& rng, int vertex_count, std::span<const Edge> edges);

/// Random local search on the rotation system (swapping two darts at one
/// vertex) toward genus `target`. Returns the best graph met; its genus is
/// `target` when the search succeeded. Requires a connected graph.
EmbeddedGraph steer_genus(Rng& rng, const EmbeddedGraph& g, int target, int steps);

/// Connected multigraph on `vertices` vertices with `edges` edges (loops and
/// parallel edges allowed), rotation steered toward `target_genus`.
EmbeddedGraph random_embedded_graph(Rng& rng, int vertices, int edges, int target_genus);

/// Random connected edge set grown from a random vertex; may be empty, in
/// which case `lone` receives the chosen vertex.
std::vector<int> random_connected_edges(Rng& rng, const EmbeddedGraph& g, int max_edges, int& lone);

struct ClusterShape {
    int members = 4;           // non-anchor colours
    int max_member_edges = 4;  // each member is a walk of 1..max edges
    int anchor_edges = 3;      // 0 gives a single-vertex anchor
    int new_vertex_percent = 50;
};

/// Random valid cluster: the anchor (colour 0, or vertex 0 when
/// anchor_edges is 0) is grown first, then each member is a random walk that
/// starts on the anchor. Colours of members are 1..members. The rotation is
/// steered toward `target_genus`.
Cluster random_cluster(Rng& rng, const ClusterShape& shape, int target_genus);

}  // namespace surfwit
