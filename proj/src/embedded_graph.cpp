#include "surfwit/embedded_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace surfwit {

std::string to_string(Dart d) {
    return std::to_string(d.edge()) + "." + std::to_string(d.end());
}

ValidationReport validate_rotation_system(int vertex_count, std::span<const Edge> edges,
                                          const std::vector<std::vector<Dart>>& rotation) {
    if (vertex_count < 0) {
        return ValidationReport::fail("negative vertex count");
    }
    if (static_cast<int>(rotation.size()) != vertex_count) {
        return ValidationReport::fail("rotation count " + std::to_string(rotation.size()) +
                                      " does not match vertex count " +
                                      std::to_string(vertex_count));
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const Edge& edge = edges[e];
        if (edge.u < 0 || edge.u >= vertex_count || edge.v < 0 || edge.v >= vertex_count) {
            return ValidationReport::fail("edge " + std::to_string(e) +
                                          " has an endpoint out of range");
        }
    }

    const int dart_count = 2 * static_cast<int>(edges.size());
    std::vector<int> seen_at(static_cast<std::size_t>(dart_count), -1);
    for (int v = 0; v < vertex_count; ++v) {
        for (Dart d : rotation[static_cast<std::size_t>(v)]) {
            if (d.index < 0 || d.index >= dart_count) {
                return ValidationReport::fail("unknown dart " + to_string(d) + " at vertex " +
                                              std::to_string(v));
            }
            auto& slot = seen_at[static_cast<std::size_t>(d.index)];
            if (slot != -1) {
                return ValidationReport::fail("duplicate dart " + to_string(d) + " at vertex " +
                                              std::to_string(v) + " (already at vertex " +
                                              std::to_string(slot) + ")");
            }
            const int expected = edges[static_cast<std::size_t>(d.edge())].endpoint(d.end());
            if (expected != v) {
                return ValidationReport::fail("dart " + to_string(d) + " listed at vertex " +
                                              std::to_string(v) + " but leaves vertex " +
                                              std::to_string(expected));
            }
            slot = v;
        }
    }
    for (int i = 0; i < dart_count; ++i) {
        if (seen_at[static_cast<std::size_t>(i)] == -1) {
            const Dart d{i};
            const int v = edges[static_cast<std::size_t>(d.edge())].endpoint(d.end());
            return ValidationReport::fail("missing dart " + to_string(d) + " at vertex " +
                                          std::to_string(v));
        }
    }
    return ValidationReport::pass();
}

EmbeddedGraph::EmbeddedGraph(int vertex_count, std::vector<Edge> edges,
                             std::vector<std::vector<Dart>> rotation)
    : vertex_count_(vertex_count), edges_(std::move(edges)), rotation_(std::move(rotation)) {
    if (auto report = validate_rotation_system(vertex_count_, edges_, rotation_); !report) {
        throw Error("invalid rotation system: " + report.message);
    }
    position_.assign(static_cast<std::size_t>(dart_count()), 0);
    for (const auto& around : rotation_) {
        for (std::size_t i = 0; i < around.size(); ++i) {
            position_[static_cast<std::size_t>(around[i].index)] = static_cast<int>(i);
        }
    }
}

Dart EmbeddedGraph::next_around(Dart d) const {
    const auto around = rotation(tail(d));
    const auto i = static_cast<std::size_t>(position(d)) + 1;
    return around[i == around.size() ? 0 : i];
}

Dart EmbeddedGraph::prev_around(Dart d) const {
    const auto around = rotation(tail(d));
    const auto i = static_cast<std::size_t>(position(d));
    return around[i == 0 ? around.size() - 1 : i - 1];
}

std::vector<Dart> EmbeddedGraph::darts_by_id(int v) const {
    std::vector<Dart> out(rotation(v).begin(), rotation(v).end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FacialWalk> trace_facial_walks(const EmbeddedGraph& g) {
    std::vector<FacialWalk> walks;
    std::vector<char> used(static_cast<std::size_t>(g.dart_count()), 0);
    // Visiting darts in increasing order makes each walk start at its least dart.
    for (int i = 0; i < g.dart_count(); ++i) {
        if (used[static_cast<std::size_t>(i)]) {
            continue;
        }
        FacialWalk walk;
        Dart d{i};
        do {
            used[static_cast<std::size_t>(d.index)] = 1;
            walk.darts.push_back(d);
            d = g.face_successor(d);
        } while (d.index != i);
        walks.push_back(std::move(walk));
    }
    return walks;
}

std::vector<int> walk_index_of_darts(const EmbeddedGraph& g, std::span<const FacialWalk> walks) {
    std::vector<int> index(static_cast<std::size_t>(g.dart_count()), -1);
    for (std::size_t w = 0; w < walks.size(); ++w) {
        for (Dart d : walks[w].darts) {
            index[static_cast<std::size_t>(d.index)] = static_cast<int>(w);
        }
    }
    return index;
}

std::vector<int> component_labels(const EmbeddedGraph& g) {
    std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
    int next = 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (label[static_cast<std::size_t>(s)] != -1) {
            continue;
        }
        std::queue<int> todo;
        todo.push(s);
        label[static_cast<std::size_t>(s)] = next;
        while (!todo.empty()) {
            const int v = todo.front();
            todo.pop();
            for (Dart d : g.rotation(v)) {
                const int w = g.head(d);
                if (label[static_cast<std::size_t>(w)] == -1) {
                    label[static_cast<std::size_t>(w)] = next;
                    todo.push(w);
                }
            }
        }
        ++next;
    }
    return label;
}

bool is_connected(const EmbeddedGraph& g) {
    const auto label = component_labels(g);
    return std::all_of(label.begin(), label.end(), [](int l) { return l == 0; });
}

int graph_genus(const EmbeddedGraph& g) {
    if (g.vertex_count() == 0 || !is_connected(g)) {
        throw Error("genus requires connected graph");
    }
    if (g.edge_count() == 0) {
        return 0;
    }
    const int walks = static_cast<int>(trace_facial_walks(g).size());
    const int twice = 2 - g.vertex_count() + g.edge_count() - walks;
    if (twice < 0 || twice % 2 != 0) {
        throw std::logic_error("Euler characteristic parity violated");
    }
    return twice / 2;
}

int genus_sum(const EmbeddedGraph& g) {
    const auto label = component_labels(g);
    const int components =
        label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    // Each component with edges contributes (2 - V_c + E_c - W_c) / 2;
    // isolated vertices contribute (2 - 1 + 0 - 1) / 2 = 0 with one
    // conceptual walk, which the sum below reproduces.
    const int walks = static_cast<int>(trace_facial_walks(g).size());
    int isolated = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) {
            ++isolated;
        }
    }
    const int twice = 2 * components - g.vertex_count() + g.edge_count() - (walks + isolated);
    if (twice < 0 || twice % 2 != 0) {
        throw std::logic_error("Euler characteristic parity violated");
    }
    return twice / 2;
}

namespace {

SubEmbedding restrict(const EmbeddedGraph& g, std::span<const int> keep_edges,
                      bool drop_untouched, std::optional<int> lone_vertex) {
    std::vector<int> new_edge(static_cast<std::size_t>(g.edge_count()), -1);
    SubEmbedding out;
    {
        std::vector<int> sorted(keep_edges.begin(), keep_edges.end());
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int e : sorted) {
            if (e < 0 || e >= g.edge_count()) {
                throw Error("edge " + std::to_string(e) + " not in graph");
            }
            new_edge[static_cast<std::size_t>(e)] = static_cast<int>(out.edge_to_host.size());
            out.edge_to_host.push_back(e);
        }
    }

    std::vector<int> new_vertex(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<char> touched(static_cast<std::size_t>(g.vertex_count()), drop_untouched ? 0 : 1);
    for (int e : out.edge_to_host) {
        touched[static_cast<std::size_t>(g.edge(e).u)] = 1;
        touched[static_cast<std::size_t>(g.edge(e).v)] = 1;
    }
    if (lone_vertex) {
        touched.at(static_cast<std::size_t>(*lone_vertex)) = 1;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (touched[static_cast<std::size_t>(v)]) {
            new_vertex[static_cast<std::size_t>(v)] = static_cast<int>(out.vertex_to_host.size());
            out.vertex_to_host.push_back(v);
        }
    }

    std::vector<Edge> edges;
    edges.reserve(out.edge_to_host.size());
    for (int e : out.edge_to_host) {
        edges.push_back({new_vertex[static_cast<std::size_t>(g.edge(e).u)],
                         new_vertex[static_cast<std::size_t>(g.edge(e).v)]});
    }
    std::vector<std::vector<Dart>> rotation(out.vertex_to_host.size());
    for (std::size_t nv = 0; nv < out.vertex_to_host.size(); ++nv) {
        for (Dart d : g.rotation(out.vertex_to_host[nv])) {
            const int ne = new_edge[static_cast<std::size_t>(d.edge())];
            if (ne != -1) {
                rotation[nv].push_back(Dart::of(ne, d.end()));
            }
        }
    }
    out.graph = EmbeddedGraph(static_cast<int>(out.vertex_to_host.size()), std::move(edges),
                              std::move(rotation));
    return out;
}

}  // namespace

SubEmbedding sub_embedding(const EmbeddedGraph& g, std::span<const int> keep_edges) {
    return restrict(g, keep_edges, false, std::nullopt);
}

SubEmbedding induced_by_edges(const EmbeddedGraph& g, std::span<const int> keep_edges,
                              std::optional<int> lone_vertex) {
    return restrict(g, keep_edges, true, lone_vertex);
}

int subgraph_genus(const EmbeddedGraph& g, std::span<const int> edges,
                   std::optional<int> lone_vertex) {
    return graph_genus(induced_by_edges(g, edges, lone_vertex).graph);
}

int subgraph_genus_sum(const EmbeddedGraph& g, std::span<const int> edges) {
    return genus_sum(induced_by_edges(g, edges).graph);
}

EmbeddedGraph add_path(const EmbeddedGraph& g, Corner from, Corner to, int edge_count) {
    if (edge_count < 1) {
        throw Error("path needs at least one edge");
    }
    for (const Corner& c : {from, to}) {
        if (c.vertex < 0 || c.vertex >= g.vertex_count()) {
            throw Error("path endpoint " + std::to_string(c.vertex) + " out of range");
        }
        if (c.slot < 0 || c.slot > g.degree(c.vertex)) {
            throw Error("rotation slot " + std::to_string(c.slot) + " out of range at vertex " +
                        std::to_string(c.vertex));
        }
    }

    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (int k = 0; k < edge_count; ++k) {
        const int a = k == 0 ? from.vertex : n + k - 1;
        const int b = k == edge_count - 1 ? to.vertex : n + k;
        edges.push_back({a, b});
    }

    const Dart first = Dart::of(m, 0);
    const Dart last = Dart::of(m + edge_count - 1, 1);
    std::vector<std::vector<Dart>> rotation = g.rotations();
    rotation.resize(static_cast<std::size_t>(n + edge_count - 1));

    auto splice = [&](int v, std::vector<std::pair<int, Dart>> inserts) {
        const auto& old = g.rotation(v);
        std::vector<Dart> merged;
        for (int i = 0; i <= static_cast<int>(old.size()); ++i) {
            for (const auto& [slot, dart] : inserts) {
                if (slot == i) {
                    merged.push_back(dart);
                }
            }
            if (i < static_cast<int>(old.size())) {
                merged.push_back(old[static_cast<std::size_t>(i)]);
            }
        }
        rotation[static_cast<std::size_t>(v)] = std::move(merged);
    };
    if (from.vertex == to.vertex) {
        splice(from.vertex, {{from.slot, first}, {to.slot, last}});
    } else {
        splice(from.vertex, {{from.slot, first}});
        splice(to.vertex, {{to.slot, last}});
    }
    for (int k = 0; k + 1 < edge_count; ++k) {
        rotation[static_cast<std::size_t>(n + k)] = {Dart::of(m + k, 1), Dart::of(m + k + 1, 0)};
    }
    return EmbeddedGraph(n + edge_count - 1, std::move(edges), std::move(rotation));
}

SubEmbedding delete_edge_pruning(const EmbeddedGraph& g, int e) {
    if (e < 0 || e >= g.edge_count()) {
        throw Error("edge " + std::to_string(e) + " not in graph");
    }
    std::vector<int> keep;
    keep.reserve(static_cast<std::size_t>(g.edge_count()));
    for (int f = 0; f < g.edge_count(); ++f) {
        if (f != e) {
            keep.push_back(f);
        }
    }
    const Edge& gone = g.edge(e);
    std::vector<char> drop(static_cast<std::size_t>(g.vertex_count()), 0);
    if (!gone.is_loop()) {
        for (int v : {gone.u, gone.v}) {
            if (g.degree(v) == 1) {
                drop[static_cast<std::size_t>(v)] = 1;
            }
        }
    }
    SubEmbedding all = sub_embedding(g, keep);
    std::vector<int> vertices;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!drop[static_cast<std::size_t>(v)]) {
            vertices.push_back(v);
        }
    }
    if (static_cast<int>(vertices.size()) == g.vertex_count()) {
        return all;
    }
    // Dropped vertices have no remaining edges, so renumbering is a relabel.
    std::vector<int> new_vertex(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        new_vertex[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const Edge& old : all.graph.edges()) {
        edges.push_back({new_vertex[static_cast<std::size_t>(old.u)],
                         new_vertex[static_cast<std::size_t>(old.v)]});
    }
    std::vector<std::vector<Dart>> rotation;
    for (int v : vertices) {
        const auto around = all.graph.rotation(v);
        rotation.emplace_back(around.begin(), around.end());
    }
    SubEmbedding out;
    out.graph = EmbeddedGraph(static_cast<int>(vertices.size()), std::move(edges),
                              std::move(rotation));
    out.edge_to_host = std::move(all.edge_to_host);
    out.vertex_to_host = std::move(vertices);
    return out;
}

Contraction contract_walk_to_point(const EmbeddedGraph& host, std::span<const Dart> boundary,
                                   std::span<const int> interior_edges,
                                   std::optional<int> lone_vertex) {
    if (boundary.empty() && !lone_vertex) {
        throw Error("contraction needs a boundary walk or a lone vertex");
    }
    std::vector<char> interior(static_cast<std::size_t>(host.edge_count()), 0);
    for (int e : interior_edges) {
        interior.at(static_cast<std::size_t>(e)) = 1;
    }
    std::vector<char> on_walk(static_cast<std::size_t>(host.vertex_count()), 0);
    for (Dart d : boundary) {
        on_walk[static_cast<std::size_t>(host.tail(d))] = 1;
        if (interior[static_cast<std::size_t>(d.edge())]) {
            throw Error("edge " + std::to_string(d.edge()) + " is both boundary and interior");
        }
    }
    if (boundary.empty()) {
        on_walk.at(static_cast<std::size_t>(*lone_vertex)) = 1;
    }

    Contraction out;
    std::vector<int> new_vertex(static_cast<std::size_t>(host.vertex_count()), -1);
    out.vertex_to_host.push_back(-1);
    std::vector<int> inner;
    for (int e = 0; e < host.edge_count(); ++e) {
        if (!interior[static_cast<std::size_t>(e)]) {
            continue;
        }
        for (int v : {host.edge(e).u, host.edge(e).v}) {
            if (!on_walk[static_cast<std::size_t>(v)]) {
                inner.push_back(v);
            }
        }
    }
    std::sort(inner.begin(), inner.end());
    inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
    for (int v : inner) {
        for (Dart d : host.rotation(v)) {
            if (!interior[static_cast<std::size_t>(d.edge())]) {
                throw Error("interior edge incident to vertex " + std::to_string(v) +
                            " which is neither on the walk nor interior");
            }
        }
        new_vertex[static_cast<std::size_t>(v)] = static_cast<int>(out.vertex_to_host.size());
        out.vertex_to_host.push_back(v);
    }

    std::vector<int> new_edge(static_cast<std::size_t>(host.edge_count()), -1);
    std::vector<Edge> edges;
    for (int e = 0; e < host.edge_count(); ++e) {
        if (!interior[static_cast<std::size_t>(e)]) {
            continue;
        }
        new_edge[static_cast<std::size_t>(e)] = static_cast<int>(out.edge_to_host.size());
        out.edge_to_host.push_back(e);
        const Edge& he = host.edge(e);
        auto map = [&](int v) { return on_walk[static_cast<std::size_t>(v)] ? 0 : new_vertex[static_cast<std::size_t>(v)]; };
        edges.push_back({map(he.u), map(he.v)});
    }
    auto lift = [&](Dart d) { return Dart::of(new_edge[static_cast<std::size_t>(d.edge())], d.end()); };

    std::vector<std::vector<Dart>> rotation(out.vertex_to_host.size());
    if (boundary.empty()) {
        for (Dart d : host.rotation(*lone_vertex)) {
            if (interior[static_cast<std::size_t>(d.edge())]) {
                rotation[0].push_back(lift(d));
            }
        }
    } else {
        // The corner after boundary[i] runs from twin(boundary[i]) to
        // boundary[i + 1] in rotation order at head(boundary[i]).
        for (std::size_t i = 0; i < boundary.size(); ++i) {
            const Dart stop = boundary[(i + 1) % boundary.size()];
            for (Dart d = host.next_around(boundary[i].twin()); d != stop; d = host.next_around(d)) {
                if (interior[static_cast<std::size_t>(d.edge())]) {
                    rotation[0].push_back(lift(d));
                }
            }
        }
    }
    for (std::size_t nv = 1; nv < out.vertex_to_host.size(); ++nv) {
        for (Dart d : host.rotation(out.vertex_to_host[nv])) {
            rotation[nv].push_back(lift(d));
        }
    }
    const int vertex_count = static_cast<int>(out.vertex_to_host.size());
    if (auto report = validate_rotation_system(vertex_count, edges, rotation); !report) {
        throw Error("interior edges do not all lie in the capped face: " + report.message);
    }
    out.graph = EmbeddedGraph(vertex_count, std::move(edges), std::move(rotation));
    return out;
}

}  // namespace surfwit

namespace surfwit {

bool operator==(const EmbeddedGraph& a, const EmbeddedGraph& b) {
    if (a.vertex_count_ != b.vertex_count_ || a.edges_ != b.edges_) return false;
    for (std::size_t v = 0; v < a.rotation_.size(); ++v) {
        const auto& x = a.rotation_[v];
        const auto& y = b.rotation_[v];
        if (x.size() != y.size()) return false;
        if (x.empty()) continue;
        const auto start = std::find(y.begin(), y.end(), x.front());
        if (start == y.end()) return false;
        std::vector<Dart> turned(start, y.end());
        turned.insert(turned.end(), y.begin(), start);
        if (turned != x) return false;
    }
    return true;
}

}  // namespace surfwit
