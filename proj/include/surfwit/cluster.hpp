#pragma once

#include <optional>
#include <span>
#include <vector>

#include "surfwit/embedded_graph.hpp"
#include "surfwit/homology.hpp"

namespace surfwit {

/// The anchor is the union of the edges of `colors`. When that union is
/// empty the anchor is the single vertex `vertex`.
struct AnchorSpec {
    std::vector<int> colors;
    std::optional<int> vertex;

    static AnchorSpec of_color(int c) { return {{c}, std::nullopt}; }
    static AnchorSpec of_vertex(int v) { return {{}, v}; }
    friend bool operator==(const AnchorSpec&, const AnchorSpec&) = default;
};

/// Edge-coloured embedded graph: colour classes are the members, one
/// designated group of colours (or a vertex) is the anchor.
class Cluster {
public:
    Cluster() = default;
    /// Throws Error when `edge_color` has the wrong length or the anchor
    /// vertex is out of range.
    Cluster(EmbeddedGraph host, std::vector<int> edge_color, AnchorSpec anchor);

    const EmbeddedGraph& host() const { return host_; }
    std::span<const int> edge_color() const { return edge_color_; }
    int color_of(int e) const { return edge_color_[static_cast<std::size_t>(e)]; }
    const AnchorSpec& anchor() const { return anchor_; }

    bool is_anchor_color(int c) const;
    /// Colours present on some edge, ascending.
    const std::vector<int>& colors() const { return colors_; }
    /// Colours that are not part of the anchor, ascending.
    const std::vector<int>& member_colors() const { return members_; }

    std::vector<int> anchor_edges() const;
    /// Vertex representing an edgeless anchor, if any.
    std::optional<int> anchor_lone_vertex() const;
    /// Edges whose colour is listed, ascending.
    std::vector<int> edges_of(std::span<const int> colors) const;
    /// Anchor edges plus the edges of `colors`, ascending.
    std::vector<int> edges_with_anchor(std::span<const int> colors) const;
    /// Vertices touched by the anchor (including an edgeless anchor's vertex).
    std::vector<char> anchor_vertex_mask() const;

    /// Genus of anchor plus the given members (summed over components).
    int genus_with_anchor(std::span<const int> colors) const;
    int anchor_genus() const;
    /// Genus of the whole host.
    int union_genus() const;

    Cluster with_anchor(AnchorSpec anchor) const;

private:
    EmbeddedGraph host_;
    std::vector<int> edge_color_;
    AnchorSpec anchor_;
    std::vector<int> colors_;
    std::vector<int> members_;
};

/// Members connected, anchor connected and meeting every member, no stray
/// isolated vertices. Reports the first violation in colour order.
ValidationReport validate_cluster(const Cluster& c);

/// Anchor becomes the union of `colors`, which must contain every current
/// anchor colour.
Cluster merge_into_anchor(const Cluster& c, std::span<const int> colors);

struct Decomposition {
    std::vector<Trail> trails;
    std::vector<int> colors;  // colour of each trail
    int rank = 0;
};

/// Maximal monochromatic trails of a circuit, starting at the first colour
/// change at or after the circuit's least dart.
Decomposition canonical_decomposition(const EmbeddedGraph& host, std::span<const int> edge_color,
                                      const Circuit& circuit);
Decomposition canonical_decomposition(const Cluster& c, const Circuit& circuit);
int rank(const Cluster& c, const Circuit& circuit);

}  // namespace surfwit
