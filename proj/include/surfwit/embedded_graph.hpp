#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfwit {

/// Raised for precondition violations and malformed input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One oriented end of an edge. Encoded as 2*edge + end; end 0 leaves
/// edge.u, end 1 leaves edge.v. A loop has both darts at the same vertex.
struct Dart {
    int index = 0;

    static constexpr Dart of(int edge, int end) { return Dart{2 * edge + end}; }
    constexpr int edge() const { return index >> 1; }
    constexpr int end() const { return index & 1; }
    constexpr Dart twin() const { return Dart{index ^ 1}; }

    friend constexpr auto operator<=>(const Dart&, const Dart&) = default;
};

/// "<edge>.<end>", the spelling used in graph files.
std::string to_string(Dart d);

struct Edge {
    int u = 0;
    int v = 0;

    constexpr int endpoint(int end) const { return end == 0 ? u : v; }
    constexpr bool is_loop() const { return u == v; }
    friend constexpr bool operator==(const Edge&, const Edge&) = default;
};

struct ValidationReport {
    bool ok = true;
    std::string message;

    explicit operator bool() const { return ok; }
    static ValidationReport pass() { return {}; }
    static ValidationReport fail(std::string why) { return {false, std::move(why)}; }
};

/// Checks that `rotation` lists every dart exactly once, at the vertex the
/// dart leaves. Reports the first violation found in vertex order.
ValidationReport validate_rotation_system(int vertex_count, std::span<const Edge> edges,
                                          const std::vector<std::vector<Dart>>& rotation);

/// Multigraph with loops plus a rotation system: the cyclic order of darts
/// around each vertex. Immutable after construction; editing operations
/// return new graphs.
class EmbeddedGraph {
public:
    EmbeddedGraph() = default;

    /// Throws Error when the rotation system is invalid.
    EmbeddedGraph(int vertex_count, std::vector<Edge> edges,
                  std::vector<std::vector<Dart>> rotation);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int dart_count() const { return 2 * edge_count(); }

    const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const Dart> rotation(int v) const { return rotation_[static_cast<std::size_t>(v)]; }
    const std::vector<std::vector<Dart>>& rotations() const { return rotation_; }
    int degree(int v) const { return static_cast<int>(rotation(v).size()); }

    int tail(Dart d) const { return edge(d.edge()).endpoint(d.end()); }
    int head(Dart d) const { return edge(d.edge()).endpoint(1 - d.end()); }

    /// Index of `d` inside rotation(tail(d)).
    int position(Dart d) const { return position_[static_cast<std::size_t>(d.index)]; }
    Dart next_around(Dart d) const;
    Dart prev_around(Dart d) const;

    /// Face-tracing rule: the dart after `d` on its facial walk is the
    /// rotation successor of twin(d) at the head of `d`.
    Dart face_successor(Dart d) const { return next_around(d.twin()); }

    /// Darts leaving `v`, sorted by dart id (BFS tie-breaking order).
    std::vector<Dart> darts_by_id(int v) const;

    /// Same edges and the same cyclic rotation at every vertex.
    friend bool operator==(const EmbeddedGraph& a, const EmbeddedGraph& b);

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Dart>> rotation_;
    std::vector<int> position_;
};

/// A closed dart sequence traced by EmbeddedGraph::face_successor, rotated
/// so that its least dart comes first (its canonical key).
struct FacialWalk {
    std::vector<Dart> darts;

    std::size_t length() const { return darts.size(); }
    friend bool operator==(const FacialWalk&, const FacialWalk&) = default;
};

/// All facial walks, sorted by canonical key. Isolated vertices contribute none.
std::vector<FacialWalk> trace_facial_walks(const EmbeddedGraph& g);

/// walk index for every dart, relative to `walks`.
std::vector<int> walk_index_of_darts(const EmbeddedGraph& g, std::span<const FacialWalk> walks);

/// Connected-component label per vertex; labels ordered by least vertex.
std::vector<int> component_labels(const EmbeddedGraph& g);
bool is_connected(const EmbeddedGraph& g);

/// (2 - |V| + |E| - |W|) / 2 for a connected graph. An edgeless single
/// vertex has genus 0. Throws Error("genus requires connected graph").
int graph_genus(const EmbeddedGraph& g);

/// Sum of graph_genus over connected components (isolated vertices add 0).
/// This is the least genus of a surface the whole embedding fits into.
int genus_sum(const EmbeddedGraph& g);

/// Subgraph together with the maps back into its host.
struct SubEmbedding {
    EmbeddedGraph graph;
    std::vector<int> edge_to_host;
    std::vector<int> vertex_to_host;

    Dart to_host(Dart d) const { return Dart::of(edge_to_host[d.edge()], d.end()); }
};

/// Keeps the listed edges, all vertices, and the induced rotation order.
SubEmbedding sub_embedding(const EmbeddedGraph& g, std::span<const int> keep_edges);

/// Like sub_embedding but drops vertices no kept edge touches, except
/// `lone_vertex` which is retained when given.
SubEmbedding induced_by_edges(const EmbeddedGraph& g, std::span<const int> keep_edges,
                              std::optional<int> lone_vertex = std::nullopt);

/// Genus of the subgraph formed by `edges` (plus `lone_vertex`). The
/// subgraph must be connected.
int subgraph_genus(const EmbeddedGraph& g, std::span<const int> edges,
                   std::optional<int> lone_vertex = std::nullopt);

/// Sum over components of the subgraph formed by `edges`.
int subgraph_genus_sum(const EmbeddedGraph& g, std::span<const int> edges);

/// Insertion point in a rotation: the new dart goes before rotation(vertex)[slot].
/// slot == degree appends.
struct Corner {
    int vertex = 0;
    int slot = 0;
};

/// Adds a path of `edge_count` edges from `from` to `to`; the edge_count - 1
/// interior vertices are new and have degree 2. New edges get ids
/// m..m+edge_count-1, new vertices n..n+edge_count-2. Both slots refer to the
/// rotation before insertion.
EmbeddedGraph add_path(const EmbeddedGraph& g, Corner from, Corner to, int edge_count);

/// G - e: removes edge `e` and every endpoint whose only edge was `e`.
SubEmbedding delete_edge_pruning(const EmbeddedGraph& g, int e);

/// Result of collapsing a face boundary to a single vertex. Vertex 0 is the
/// collapsed point u; remaining vertices are the interior vertices in
/// increasing host order. Edge k keeps the end bits of host edge
/// edge_to_host[k].
struct Contraction {
    EmbeddedGraph graph;
    std::vector<int> edge_to_host;
    std::vector<int> vertex_to_host;  // -1 for u

    Dart to_host(Dart d) const { return Dart::of(edge_to_host[d.edge()], d.end()); }
};

/// Caps off the face bounded by `boundary` (host darts of a facial walk of
/// the bounding subgraph) by collapsing the walk to one vertex u. The darts
/// of `interior_edges` that sit in the walk's corners become the rotation at
/// u, in the order the corners occur along the walk. When `boundary` is empty
/// the bounding subgraph is the single vertex `lone_vertex`, which becomes u.
Contraction contract_walk_to_point(const EmbeddedGraph& host, std::span<const Dart> boundary,
                                   std::span<const int> interior_edges,
                                   std::optional<int> lone_vertex = std::nullopt);

}  // namespace surfwit
