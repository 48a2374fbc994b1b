#include "surfwit/homology.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace surfwit {

Trail Trail::reversed() const {
    Trail out{end, start, {}};
    out.darts.reserve(darts.size());
    for (auto it = darts.rbegin(); it != darts.rend(); ++it) {
        out.darts.push_back(it->twin());
    }
    return out;
}

bool is_trail(const EmbeddedGraph& g, const Trail& t) {
    std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
    int at = t.start;
    for (Dart d : t.darts) {
        if (d.edge() < 0 || d.edge() >= g.edge_count() || g.tail(d) != at) {
            return false;
        }
        if (used[static_cast<std::size_t>(d.edge())]++) {
            return false;
        }
        at = g.head(d);
    }
    return at == t.end;
}

bool is_circuit(const EmbeddedGraph& g, const Circuit& c) {
    if (c.darts.empty()) {
        return false;
    }
    const int start = g.tail(c.darts.front());
    return is_trail(g, Trail{start, start, c.darts});
}

bool is_cycle(const EmbeddedGraph& g, const Circuit& c) {
    if (!is_circuit(g, c)) {
        return false;
    }
    std::vector<int> vs;
    for (Dart d : c.darts) {
        vs.push_back(g.tail(d));
    }
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

Trail concat(const Trail& t1, const Trail& t2) {
    if (t1.end != t2.start) {
        throw Error("trails do not meet");
    }
    Trail out{t1.start, t2.end, t1.darts};
    out.darts.insert(out.darts.end(), t2.darts.begin(), t2.darts.end());
    return out;
}

Circuit close(const Trail& t) {
    if (t.start != t.end) {
        throw Error("trail is not closed");
    }
    return Circuit{t.darts};
}

Gf2Vector edge_vector(const EmbeddedGraph& g, std::span<const Dart> darts) {
    Gf2Vector v(static_cast<std::size_t>(g.edge_count()));
    for (Dart d : darts) {
        v.flip(static_cast<std::size_t>(d.edge()));
    }
    return v;
}

int circuit_rank(const Circuit& c, std::span<const int> edge_color) {
    const std::size_t n = c.darts.size();
    if (n == 0) {
        return 0;
    }
    int changes = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const int a = edge_color[static_cast<std::size_t>(c.darts[i].edge())];
        const int b = edge_color[static_cast<std::size_t>(c.darts[(i + 1) % n].edge())];
        if (a != b) {
            ++changes;
        }
    }
    return changes == 0 ? 1 : changes;
}

std::string describe(const Circuit& c) {
    std::string out;
    for (Dart d : c.darts) {
        if (!out.empty()) out += ' ';
        out += to_string(d);
    }
    return out;
}

HomologyOracle::HomologyOracle(const EmbeddedGraph& host)
    : host_(&host), basis_(static_cast<std::size_t>(host.edge_count())) {
    if (!is_connected(host)) {
        throw Error("homology requires a connected host");
    }
    for (const FacialWalk& w : trace_facial_walks(host)) {
        basis_.insert(edge_vector(host, w.darts));
    }
}

std::vector<Gf2Vector> boundary_basis(const EmbeddedGraph& host) {
    return HomologyOracle(host).boundary_basis();
}

bool is_ns_circuit(const EmbeddedGraph& host, const Circuit& c) {
    return HomologyOracle(host).is_ns_circuit(c);
}

Circuit find_ns_cycle(const HomologyOracle& oracle) {
    const EmbeddedGraph& g = oracle.host();
    const int n = g.vertex_count();
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    std::vector<Dart> parent(static_cast<std::size_t>(n));  // dart into the vertex
    std::vector<char> tree_edge(static_cast<std::size_t>(g.edge_count()), 0);
    std::queue<int> todo;
    depth[0] = 0;
    todo.push(0);
    while (!todo.empty()) {
        const int v = todo.front();
        todo.pop();
        for (Dart d : g.darts_by_id(v)) {
            const int w = g.head(d);
            if (depth[static_cast<std::size_t>(w)] == -1) {
                depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
                parent[static_cast<std::size_t>(w)] = d;
                tree_edge[static_cast<std::size_t>(d.edge())] = 1;
                todo.push(w);
            }
        }
    }

    for (int e = 0; e < g.edge_count(); ++e) {
        if (tree_edge[static_cast<std::size_t>(e)]) {
            continue;
        }
        // cycle: dart e.0 from u to v, then the tree path back from v to u
        const Dart closing = Dart::of(e, 0);
        int a = g.head(closing);
        int b = g.tail(closing);
        std::vector<Dart> down_from_a;  // darts walking a -> lca
        std::vector<Dart> up_to_b;      // darts walking lca -> b, reversed
        while (a != b) {
            if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
                const Dart in = parent[static_cast<std::size_t>(a)];
                down_from_a.push_back(in.twin());
                a = g.tail(in);
            } else {
                const Dart in = parent[static_cast<std::size_t>(b)];
                up_to_b.push_back(in);
                b = g.tail(in);
            }
        }
        Circuit c{{closing}};
        c.darts.insert(c.darts.end(), down_from_a.begin(), down_from_a.end());
        c.darts.insert(c.darts.end(), up_to_b.rbegin(), up_to_b.rend());
        if (oracle.is_ns_circuit(c)) {
            return c;
        }
    }
    throw Error("no ns-cycle exists");
}

Circuit find_ns_cycle(const EmbeddedGraph& host) {
    return find_ns_cycle(HomologyOracle(host));
}

Circuit ns_subcycle(const HomologyOracle& oracle, const Circuit& c) {
    const EmbeddedGraph& g = oracle.host();
    if (!oracle.is_ns_circuit(c)) {
        throw Error("circuit is null-homologous");
    }
    Circuit cur = c;
    for (;;) {
        std::unordered_map<int, std::size_t> first_at;
        std::optional<std::pair<std::size_t, std::size_t>> split;
        for (std::size_t i = 0; i < cur.darts.size(); ++i) {
            const int v = g.tail(cur.darts[i]);
            auto [it, fresh] = first_at.emplace(v, i);
            if (!fresh) {
                split = {it->second, i};
                break;
            }
        }
        if (!split) {
            return cur;
        }
        const auto [i, j] = *split;
        Circuit inner{{cur.darts.begin() + static_cast<std::ptrdiff_t>(i),
                       cur.darts.begin() + static_cast<std::ptrdiff_t>(j)}};
        Circuit outer{{cur.darts.begin() + static_cast<std::ptrdiff_t>(j), cur.darts.end()}};
        outer.darts.insert(outer.darts.end(), cur.darts.begin(),
                           cur.darts.begin() + static_cast<std::ptrdiff_t>(i));
        // inner + outer = cur, so at least one of them is ns
        cur = oracle.is_ns_circuit(inner) ? std::move(inner) : std::move(outer);
    }
}

TrailChoice three_trail_select(const HomologyOracle& oracle, const Trail& t1, const Trail& t2,
                               const Trail& t3, std::span<const int> edge_color) {
    const EmbeddedGraph& g = oracle.host();
    if (t1.start != t2.start || t1.start != t3.start || t1.end != t2.end || t1.end != t3.end) {
        throw Error("trails must share start and end");
    }
    std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
    for (const Trail* t : {&t1, &t2, &t3}) {
        if (!is_trail(g, *t)) {
            throw Error("not a trail");
        }
        for (Dart d : t->darts) {
            if (used[static_cast<std::size_t>(d.edge())]++) {
                throw Error("trails are not edge-disjoint");
            }
        }
    }
    const Circuit base = close(concat(t1, t2.reversed()));
    if (!oracle.is_ns_circuit(base)) {
        throw Error("t1 t2^-1 is not an ns-circuit");
    }
    TrailChoice first;
    first.circuit = close(concat(t1, t3.reversed()));
    const Circuit second = close(concat(t3, t2.reversed()));
    first.first_ns = oracle.is_ns_circuit(first.circuit);
    first.second_ns = oracle.is_ns_circuit(second);
    if (!first.first_ns && !first.second_ns) {
        throw std::logic_error("3-trail condition violated");
    }
    bool take_second = !first.first_ns;
    if (first.first_ns && first.second_ns && !edge_color.empty()) {
        take_second = circuit_rank(second, edge_color) < circuit_rank(first.circuit, edge_color);
    }
    if (take_second) {
        first.circuit = second;
        first.picked_first = false;
    }
    return first;
}

}  // namespace surfwit
