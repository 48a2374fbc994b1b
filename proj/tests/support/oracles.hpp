#pragma once

// Reference computations written independently of the library's algorithms.
// They work directly on rotation tables and edge masks so that tests compare
// two separate implementations.

#include <cstdint>
#include <optional>
#include <vector>

#include "surfwit/cluster.hpp"
#include "surfwit/embedded_graph.hpp"

namespace oracle {

using surfwit::EmbeddedGraph;

/// Orbits of d -> sigma(twin(d)) over darts whose edge is kept.
int face_count(const EmbeddedGraph& g, const std::vector<char>& keep_edge);

/// Sum over components of (2 - V + E - F) / 2, isolated vertices ignored.
int genus(const EmbeddedGraph& g, const std::vector<char>& keep_edge);
int genus(const EmbeddedGraph& g);

/// Colour the faces so that crossing an edge flips colour exactly on the
/// edges of `chain`; solvable iff the chain bounds. Host must be connected.
bool null_homologous(const EmbeddedGraph& g, const std::vector<char>& chain);

/// Regions of the surface left by a connected subgraph (keep_edge, plus the
/// lone vertex when no edge is kept): host faces are glued when they share a
/// deleted edge or a corner at a deleted vertex.
int region_count(const EmbeddedGraph& g, const std::vector<char>& keep_edge, std::optional<int> lone);

/// Minimum number of units (anchor counted once) whose union has genus > g;
/// enumerates bitmasks by popcount then numerically. With `require_anchor`
/// the anchor unit is always in.
std::optional<int> min_witness_size(const surfwit::Cluster& c, int g, int max_size, bool require_anchor);

std::vector<char> mask_of(const EmbeddedGraph& g, const std::vector<int>& edges);

}  // namespace oracle
