#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "surfwit/embedded_graph.hpp"

namespace surfwit {

/// A face of a subgraph S drawn inside a cellular host: a genus-`genus`
/// surface with `walks.size()` punctures. Walks are given in host darts.
struct Face {
    std::vector<int> walk_ids;        // indices into FaceAnalysis::walks
    std::vector<FacialWalk> walks;
    int genus = 0;
    int degeneracy = 0;               // walks.size() - 1
    std::vector<int> host_faces;      // ascending host face indices

    bool degenerate() const { return degeneracy >= 1; }
};

/// Everything known about how a subgraph cuts up a cellular host.
struct FaceAnalysis {
    std::vector<Face> faces;                // ordered by least host face
    std::vector<FacialWalk> walks;          // walks of S, in host darts
    std::vector<int> face_of_walk;
    std::vector<int> face_of_host_face;
    std::vector<int> face_of_edge;          // -1 for edges of S
    std::vector<int> face_of_vertex;        // -1 for vertices of S
    std::vector<int> walk_of_dart;          // -1 for darts outside S
    std::vector<char> in_subgraph_vertex;
    std::vector<char> in_subgraph_edge;
    int subgraph_genus = 0;
    int host_genus = 0;

    /// The walk of S bounding the corner that host dart `d` sits in; `d`
    /// must leave a vertex of S. For an edgeless S this is walk 0.
    int corner_walk(const EmbeddedGraph& host, Dart d) const;
};

/// Faces of the subgraph formed by `keep_edges` (plus `lone_vertex`, needed
/// when keep_edges is empty). The host must be connected and the subgraph
/// connected; each face is the union of host faces glued across deleted
/// edges and deleted vertices, with genus solved from the region's Euler
/// characteristic.
FaceAnalysis analyze_faces(const EmbeddedGraph& host, std::span<const int> keep_edges,
                           std::optional<int> lone_vertex = std::nullopt);

std::vector<Face> face_structure(const EmbeddedGraph& host, std::span<const int> keep_edges,
                                 std::optional<int> lone_vertex = std::nullopt);

struct EulerCheck {
    bool ok = false;
    int host_genus = 0;
    int subgraph_genus = 0;
    int face_sum = 0;  // sum of genus + degeneracy over faces
    std::string describe() const;
};

/// host genus == gen(S) + sum over faces of (genus + degeneracy).
EulerCheck euler_identity_check(const EmbeddedGraph& host, std::span<const int> keep_edges,
                                std::optional<int> lone_vertex = std::nullopt);

std::optional<Face> find_degenerate_face(std::span<const Face> faces);
std::optional<Face> find_positive_genus_face(std::span<const Face> faces);

/// True when the subgraph has some face with degeneracy >= 1.
bool has_degenerate_face(const EmbeddedGraph& host, std::span<const int> keep_edges);

}  // namespace surfwit
