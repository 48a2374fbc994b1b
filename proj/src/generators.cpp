#include "surfwit/generators.hpp"

#include <algorithm>
#include <cstdlib>

namespace surfwit {

std::vector<std::vector<Dart>> random_rotation(Rng& rng, int vertex_count, std::span<const Edge> edges) {
    std::vector<std::vector<Dart>> rot(static_cast<std::size_t>(vertex_count));
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        rot[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].u)].push_back(Dart::of(e, 0));
        rot[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].v)].push_back(Dart::of(e, 1));
    }
    for (auto& r : rot) {
        for (int i = static_cast<int>(r.size()) - 1; i > 0; --i) {
            std::swap(r[static_cast<std::size_t>(i)], r[static_cast<std::size_t>(pick(rng, i + 1))]);
        }
    }
    return rot;
}

EmbeddedGraph steer_genus(Rng& rng, const EmbeddedGraph& g, int target, int steps) {
    std::vector<int> movable;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) >= 3) movable.push_back(v);
    }
    int genus = graph_genus(g);
    if (movable.empty() || genus == target) {
        return g;
    }
    const std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    auto rot = g.rotations();
    EmbeddedGraph best = g;
    for (int s = 0; s < steps && genus != target; ++s) {
        const int v = movable[static_cast<std::size_t>(pick(rng, static_cast<int>(movable.size())))];
        auto& r = rot[static_cast<std::size_t>(v)];
        const int i = pick(rng, static_cast<int>(r.size()));
        int j = pick(rng, static_cast<int>(r.size()) - 1);
        if (j >= i) ++j;
        std::swap(r[static_cast<std::size_t>(i)], r[static_cast<std::size_t>(j)]);
        EmbeddedGraph cand(g.vertex_count(), edges, rot);
        const int cg = graph_genus(cand);
        if (std::abs(cg - target) <= std::abs(genus - target)) {
            genus = cg;
            best = std::move(cand);
        } else {
            std::swap(r[static_cast<std::size_t>(i)], r[static_cast<std::size_t>(j)]);
        }
    }
    return best;
}

EmbeddedGraph random_embedded_graph(Rng& rng, int vertices, int edges, int target_genus) {
    if (vertices < 1 || edges < vertices - 1) {
        throw Error("need at least vertices - 1 edges for a connected graph");
    }
    std::vector<Edge> list;
    for (int v = 1; v < vertices; ++v) {
        list.push_back({pick(rng, v), v});
    }
    while (static_cast<int>(list.size()) < edges) {
        list.push_back({pick(rng, vertices), pick(rng, vertices)});
    }
    // Shuffle edge ids so the tree is not always the low ids.
    for (int i = static_cast<int>(list.size()) - 1; i > 0; --i) {
        std::swap(list[static_cast<std::size_t>(i)], list[static_cast<std::size_t>(pick(rng, i + 1))]);
    }
    EmbeddedGraph g(vertices, list, random_rotation(rng, vertices, list));
    return steer_genus(rng, g, target_genus, 40 * edges + 200);
}

std::vector<int> random_connected_edges(Rng& rng, const EmbeddedGraph& g, int max_edges, int& lone) {
    const int want = max_edges <= 0 ? 0 : pick(rng, max_edges + 1);
    lone = pick(rng, g.vertex_count());
    std::vector<char> in_v(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<char> in_e(static_cast<std::size_t>(g.edge_count()), 0);
    in_v[static_cast<std::size_t>(lone)] = 1;
    std::vector<int> out;
    while (static_cast<int>(out.size()) < want) {
        std::vector<int> frontier;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (!in_e[static_cast<std::size_t>(e)] &&
                (in_v[static_cast<std::size_t>(g.edge(e).u)] || in_v[static_cast<std::size_t>(g.edge(e).v)])) {
                frontier.push_back(e);
            }
        }
        if (frontier.empty()) break;
        const int e = frontier[static_cast<std::size_t>(pick(rng, static_cast<int>(frontier.size())))];
        in_e[static_cast<std::size_t>(e)] = 1;
        in_v[static_cast<std::size_t>(g.edge(e).u)] = in_v[static_cast<std::size_t>(g.edge(e).v)] = 1;
        out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Cluster random_cluster(Rng& rng, const ClusterShape& shape, int target_genus) {
    std::vector<Edge> edges;
    std::vector<int> color;
    int n = 1;
    std::vector<int> anchor_vertices{0};

    // A random walk of `len` edges from `start`; each step goes to a fresh
    // vertex or to one already used by this walk or anywhere.
    auto walk = [&](int start, int len, int col, std::vector<int>& visited) {
        int at = start;
        for (int k = 0; k < len; ++k) {
            int to;
            if (coin(rng, shape.new_vertex_percent)) {
                to = n++;
            } else if (coin(rng, 50)) {
                to = visited[static_cast<std::size_t>(pick(rng, static_cast<int>(visited.size())))];
            } else {
                to = pick(rng, n);
            }
            edges.push_back({at, to});
            color.push_back(col);
            visited.push_back(to);
            // Occasionally branch from an earlier vertex of the same member.
            at = coin(rng, 25) ? visited[static_cast<std::size_t>(pick(rng, static_cast<int>(visited.size())))] : to;
        }
    };

    if (shape.anchor_edges > 0) {
        walk(0, shape.anchor_edges, 0, anchor_vertices);
        std::sort(anchor_vertices.begin(), anchor_vertices.end());
        anchor_vertices.erase(std::unique(anchor_vertices.begin(), anchor_vertices.end()), anchor_vertices.end());
    }
    const std::vector<int> anchor_pool = anchor_vertices;
    for (int m = 1; m <= shape.members; ++m) {
        const int start = anchor_pool[static_cast<std::size_t>(pick(rng, static_cast<int>(anchor_pool.size())))];
        std::vector<int> visited{start};
        walk(start, 1 + pick(rng, std::max(1, shape.max_member_edges)), m, visited);
    }
    // A walk may jump to a vertex id not yet touched by any edge only if it
    // was created, so every vertex below n has an edge.
    EmbeddedGraph g(n, edges, random_rotation(rng, n, edges));
    g = steer_genus(rng, g, target_genus, 40 * static_cast<int>(edges.size()) + 200);
    AnchorSpec anchor = shape.anchor_edges > 0 ? AnchorSpec::of_color(0) : AnchorSpec::of_vertex(0);
    return Cluster(std::move(g), std::move(color), std::move(anchor));
}

}  // namespace surfwit
