#include "surfwit/cluster.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace surfwit {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Vertices touched by `edges`; connected iff one BFS from the first reaches all.
bool edges_connected(const EmbeddedGraph& g, std::span<const int> edges) {
    if (edges.empty()) {
        return true;
    }
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
    std::vector<char> touched(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int e : edges) {
        const Edge& ed = g.edge(e);
        adj[static_cast<std::size_t>(ed.u)].push_back(ed.v);
        adj[static_cast<std::size_t>(ed.v)].push_back(ed.u);
        touched[static_cast<std::size_t>(ed.u)] = touched[static_cast<std::size_t>(ed.v)] = 1;
    }
    std::vector<char> seen(touched.size(), 0);
    std::queue<int> todo;
    const int start = g.edge(edges.front()).u;
    seen[static_cast<std::size_t>(start)] = 1;
    todo.push(start);
    while (!todo.empty()) {
        const int v = todo.front();
        todo.pop();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                todo.push(w);
            }
        }
    }
    for (std::size_t v = 0; v < touched.size(); ++v) {
        if (touched[v] && !seen[v]) {
            return false;
        }
    }
    return true;
}

}  // namespace

Cluster::Cluster(EmbeddedGraph host, std::vector<int> edge_color, AnchorSpec anchor)
    : host_(std::move(host)), edge_color_(std::move(edge_color)), anchor_(std::move(anchor)) {
    if (static_cast<int>(edge_color_.size()) != host_.edge_count()) {
        throw Error("cluster needs one colour per edge");
    }
    anchor_.colors = sorted_unique(anchor_.colors);
    if (anchor_.vertex && (*anchor_.vertex < 0 || *anchor_.vertex >= host_.vertex_count())) {
        throw Error("anchor vertex " + std::to_string(*anchor_.vertex) + " out of range");
    }
    colors_ = sorted_unique(edge_color_);
    for (int c : colors_) {
        if (!is_anchor_color(c)) {
            members_.push_back(c);
        }
    }
}

bool Cluster::is_anchor_color(int c) const {
    return std::binary_search(anchor_.colors.begin(), anchor_.colors.end(), c);
}

std::vector<int> Cluster::edges_of(std::span<const int> colors) const {
    std::vector<int> out;
    for (int e = 0; e < host_.edge_count(); ++e) {
        if (std::find(colors.begin(), colors.end(), color_of(e)) != colors.end()) {
            out.push_back(e);
        }
    }
    return out;
}

std::vector<int> Cluster::anchor_edges() const { return edges_of(anchor_.colors); }

std::optional<int> Cluster::anchor_lone_vertex() const {
    if (anchor_edges().empty()) {
        return anchor_.vertex;
    }
    return std::nullopt;
}

std::vector<int> Cluster::edges_with_anchor(std::span<const int> colors) const {
    std::vector<int> out;
    for (int e = 0; e < host_.edge_count(); ++e) {
        const int c = color_of(e);
        if (is_anchor_color(c) || std::find(colors.begin(), colors.end(), c) != colors.end()) {
            out.push_back(e);
        }
    }
    return out;
}

std::vector<char> Cluster::anchor_vertex_mask() const {
    std::vector<char> mask(static_cast<std::size_t>(host_.vertex_count()), 0);
    for (int e : anchor_edges()) {
        mask[static_cast<std::size_t>(host_.edge(e).u)] = 1;
        mask[static_cast<std::size_t>(host_.edge(e).v)] = 1;
    }
    if (anchor_.vertex) {
        mask[static_cast<std::size_t>(*anchor_.vertex)] = 1;
    }
    return mask;
}

int Cluster::genus_with_anchor(std::span<const int> colors) const {
    return subgraph_genus_sum(host_, edges_with_anchor(colors));
}

int Cluster::anchor_genus() const { return genus_with_anchor({}); }

int Cluster::union_genus() const { return genus_sum(host_); }

Cluster Cluster::with_anchor(AnchorSpec anchor) const {
    return Cluster(host_, edge_color_, std::move(anchor));
}

ValidationReport validate_cluster(const Cluster& c) {
    const EmbeddedGraph& g = c.host();
    const std::vector<int> anchor_edges = c.anchor_edges();
    if (anchor_edges.empty() && !c.anchor().vertex) {
        return ValidationReport::fail("anchor is empty");
    }
    if (!edges_connected(g, anchor_edges)) {
        return ValidationReport::fail("anchor disconnected");
    }
    if (!anchor_edges.empty() && c.anchor().vertex) {
        const int a = *c.anchor().vertex;
        const bool on_anchor = std::any_of(anchor_edges.begin(), anchor_edges.end(), [&](int e) {
            return g.edge(e).u == a || g.edge(e).v == a;
        });
        if (!on_anchor) {
            return ValidationReport::fail("anchor vertex " + std::to_string(a) +
                                          " is not on the anchor edges");
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0 && c.anchor().vertex != v) {
            return ValidationReport::fail("vertex " + std::to_string(v) + " is isolated");
        }
    }
    const std::vector<char> on_anchor = c.anchor_vertex_mask();
    for (int color : c.member_colors()) {
        const int one[] = {color};
        const std::vector<int> edges = c.edges_of(one);
        if (!edges_connected(g, edges)) {
            return ValidationReport::fail("member " + std::to_string(color) + " disconnected");
        }
        const bool meets = std::any_of(edges.begin(), edges.end(), [&](int e) {
            return on_anchor[static_cast<std::size_t>(g.edge(e).u)] ||
                   on_anchor[static_cast<std::size_t>(g.edge(e).v)];
        });
        if (!meets) {
            return ValidationReport::fail("anchor misses member " + std::to_string(color));
        }
    }
    return ValidationReport::pass();
}

Cluster merge_into_anchor(const Cluster& c, std::span<const int> colors) {
    for (int a : c.anchor().colors) {
        if (std::find(colors.begin(), colors.end(), a) == colors.end()) {
            throw Error("anchor colour " + std::to_string(a) + " not in merged colours");
        }
    }
    AnchorSpec merged{std::vector<int>(colors.begin(), colors.end()), c.anchor().vertex};
    return c.with_anchor(std::move(merged));
}

Decomposition canonical_decomposition(const EmbeddedGraph& host, std::span<const int> edge_color,
                                      const Circuit& circuit) {
    Decomposition out;
    const std::size_t n = circuit.darts.size();
    if (n == 0) {
        return out;
    }
    auto color_at = [&](std::size_t i) {
        return edge_color[static_cast<std::size_t>(circuit.darts[i % n].edge())];
    };
    const std::size_t least = static_cast<std::size_t>(
        std::min_element(circuit.darts.begin(), circuit.darts.end()) - circuit.darts.begin());
    std::size_t start = least;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = (least + k) % n;
        if (color_at(i) != color_at(i + n - 1)) {
            start = i;
            break;
        }
    }
    Trail cur;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = (start + k) % n;
        const Dart d = circuit.darts[i];
        if (k == 0 || color_at(i) != color_at(i + n - 1)) {
            if (k != 0) {
                out.trails.push_back(std::move(cur));
            }
            cur = Trail{host.tail(d), host.tail(d), {}};
            out.colors.push_back(color_at(i));
        }
        cur.darts.push_back(d);
        cur.end = host.head(d);
    }
    out.trails.push_back(std::move(cur));
    out.rank = static_cast<int>(out.trails.size());
    return out;
}

Decomposition canonical_decomposition(const Cluster& c, const Circuit& circuit) {
    return canonical_decomposition(c.host(), c.edge_color(), circuit);
}

int rank(const Cluster& c, const Circuit& circuit) {
    return canonical_decomposition(c, circuit).rank;
}

}  // namespace surfwit
