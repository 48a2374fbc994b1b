#include "surfwit/witness.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <thread>

namespace surfwit {

namespace {

using EdgePred = std::function<bool(int)>;
using VertexPred = std::function<bool(int)>;

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void check(bool ok, const std::string& what) {
    if (!ok) {
        throw std::logic_error(what);
    }
}

// Multi-source BFS. Edges must satisfy allow_edge; the search continues
// only through vertices accepted by pass_through and stops at the first
// discovered target. Sources that are targets give a zero-length trail.
std::optional<Trail> bfs_path(const EmbeddedGraph& g, std::span<const int> sources,
                              const EdgePred& allow_edge, const VertexPred& pass_through,
                              const VertexPred& is_target) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<char> seen(n, 0);
    std::vector<Dart> parent(n, Dart{-1});
    std::queue<int> todo;
    for (int s : sources) {
        if (is_target(s)) {
            return Trail{s, s, {}};
        }
    }
    for (int s : sources) {
        if (!seen[static_cast<std::size_t>(s)]) {
            seen[static_cast<std::size_t>(s)] = 1;
            todo.push(s);
        }
    }
    auto unwind = [&](int w) {
        Trail t{w, w, {}};
        while (parent[static_cast<std::size_t>(w)].index != -1) {
            const Dart d = parent[static_cast<std::size_t>(w)];
            t.darts.push_back(d);
            w = g.tail(d);
        }
        std::reverse(t.darts.begin(), t.darts.end());
        t.start = w;
        return t;
    };
    while (!todo.empty()) {
        const int v = todo.front();
        todo.pop();
        for (Dart d : g.darts_by_id(v)) {
            if (!allow_edge(d.edge())) continue;
            const int w = g.head(d);
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            parent[static_cast<std::size_t>(w)] = d;
            if (is_target(w)) {
                return unwind(w);
            }
            if (pass_through(w)) {
                todo.push(w);
            }
        }
    }
    return std::nullopt;
}

std::vector<int> colors_of_darts(std::span<const int> color, std::span<const Dart> darts) {
    std::vector<int> out;
    for (Dart d : darts) out.push_back(color[static_cast<std::size_t>(d.edge())]);
    return sorted_unique(std::move(out));
}

// Forward slice of a cyclic dart sequence, from position `from` to `to`.
std::vector<Dart> cyclic_slice(const std::vector<Dart>& seq, std::size_t from, std::size_t to) {
    const std::size_t n = seq.size();
    std::vector<Dart> out;
    for (std::size_t i = from % n; i != to % n; i = (i + 1) % n) {
        out.push_back(seq[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rank reduction.

// A cycle rotated to begin at a colour boundary, with its run structure.
struct RunView {
    std::vector<Dart> seq;
    std::vector<std::size_t> start;  // run k occupies [start[k], start[k+1])
    std::vector<int> color;

    std::size_t runs() const { return start.size(); }
    std::size_t end_of(std::size_t k) const { return k + 1 < runs() ? start[k + 1] : seq.size(); }
};

RunView runs_from_zero(std::span<const int> edge_color, std::vector<Dart> seq) {
    RunView v;
    v.seq = std::move(seq);
    const std::size_t n = v.seq.size();
    auto col = [&](std::size_t i) { return edge_color[static_cast<std::size_t>(v.seq[i % n].edge())]; };
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0 || col(i) != col(i - 1)) {
            v.start.push_back(i);
            v.color.push_back(col(i));
        }
    }
    return v;
}

RunView run_view(const EmbeddedGraph& g, std::span<const int> edge_color, const Circuit& c) {
    const Decomposition dec = canonical_decomposition(g, edge_color, c);
    std::vector<Dart> seq;
    for (const Trail& t : dec.trails) {
        seq.insert(seq.end(), t.darts.begin(), t.darts.end());
    }
    return runs_from_zero(edge_color, std::move(seq));
}

// RunView relabelled so that run k comes first.
RunView rotate_runs(std::span<const int> edge_color, const RunView& v, std::size_t k) {
    std::vector<Dart> seq(v.seq.begin() + static_cast<std::ptrdiff_t>(v.start[k]), v.seq.end());
    seq.insert(seq.end(), v.seq.begin(), v.seq.begin() + static_cast<std::ptrdiff_t>(v.start[k]));
    return runs_from_zero(edge_color, std::move(seq));
}

class HornsEngine {
public:
    explicit HornsEngine(const Cluster& c)
        : g_(c.host()), color_(c.edge_color()), oracle_(c.host()) {
        if (!c.anchor().vertex || !c.anchor_edges().empty()) {
            throw Error("rank reduction needs a single-vertex anchor");
        }
        a_ = *c.anchor().vertex;
    }

    HornsResult run() {
        HornsResult out;
        out.seed = find_ns_cycle(oracle_);
        Circuit d = out.seed;
        int r = rank_of(d);
        while (r >= 4) {
            HornsRound round{r, 0, ""};
            d = shortcut(d, round.branch);
            round.rank_after = rank_of(d);
            check(round.rank_after < r, "rank did not decrease in " + round.branch);
            out.rounds.push_back(round);
            r = round.rank_after;
        }
        if (r == 3) {
            HornsRound round{3, 0, ""};
            d = rank_three(d, round.branch);
            round.rank_after = rank_of(d);
            check(round.rank_after <= 2, "rank-3 reduction ended at rank " +
                                             std::to_string(round.rank_after));
            out.rounds.push_back(round);
        }
        check(is_cycle(g_, d) && oracle_.is_ns_circuit(d), "reduction lost the ns-cycle");
        out.cycle = d;
        out.colors = colors_of_darts(color_, d.darts);
        return out;
    }

private:
    int rank_of(const Circuit& d) const { return circuit_rank(d, color_); }

    Circuit finish(const TrailChoice& choice) const { return ns_subcycle(oracle_, choice.circuit); }

    std::vector<char> edge_mask(std::span<const Dart> darts) const {
        std::vector<char> m(static_cast<std::size_t>(g_.edge_count()), 0);
        for (Dart d : darts) m[static_cast<std::size_t>(d.edge())] = 1;
        return m;
    }

    // Vertices of run k including both ends.
    std::vector<int> run_vertices(const RunView& v, std::size_t k) const {
        std::vector<int> out;
        for (std::size_t i = v.start[k]; i < v.end_of(k); ++i) out.push_back(g_.tail(v.seq[i]));
        out.push_back(g_.head(v.seq[v.end_of(k) - 1]));
        return sorted_unique(std::move(out));
    }

    // Position of a vertex on a cycle sequence.
    std::size_t position(const std::vector<Dart>& seq, int x) const {
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (g_.tail(seq[i]) == x) return i;
        }
        throw std::logic_error("vertex not on cycle");
    }

    bool has_color_at(int x, int col) const {
        for (Dart d : g_.rotation(x)) {
            if (color_[static_cast<std::size_t>(d.edge())] == col) return true;
        }
        return false;
    }

    // Path of colour `col` avoiding the edges in `used`, from `from` to the
    // first vertex in `targets`.
    Trail colored_path(std::vector<int> from, int col, const std::vector<char>& used,
                       const std::vector<int>& targets) const {
        std::vector<char> is_target(static_cast<std::size_t>(g_.vertex_count()), 0);
        for (int t : targets) is_target[static_cast<std::size_t>(t)] = 1;
        auto path = bfs_path(
            g_, from,
            [&](int e) { return color_[static_cast<std::size_t>(e)] == col && !used[static_cast<std::size_t>(e)]; },
            [](int) { return true; }, [&](int v) { return is_target[static_cast<std::size_t>(v)] != 0; });
        check(path.has_value(), "no colour-" + std::to_string(col) + " path (member disconnected?)");
        return *path;
    }

    // Rank >= 4: one short-circuit round.
    Circuit shortcut(const Circuit& d, std::string& branch) {
        const RunView v = run_view(g_, color_, d);
        const std::size_t r = v.runs();
        const auto in_d = edge_mask(v.seq);

        // Two runs of one colour joined by a path of that colour off D.
        std::vector<int> cols = sorted_unique(v.color);
        for (int col : cols) {
            std::vector<std::size_t> runs_of;
            for (std::size_t k = 0; k < r; ++k) {
                if (v.color[k] == col) runs_of.push_back(k);
            }
            if (runs_of.size() < 2) continue;
            std::vector<int> comp(static_cast<std::size_t>(g_.vertex_count()));
            std::iota(comp.begin(), comp.end(), 0);
            auto find = [&](int x) {
                while (comp[static_cast<std::size_t>(x)] != x) x = comp[static_cast<std::size_t>(x)];
                return x;
            };
            for (int e = 0; e < g_.edge_count(); ++e) {
                if (color_[static_cast<std::size_t>(e)] == col && !in_d[static_cast<std::size_t>(e)]) {
                    comp[static_cast<std::size_t>(find(g_.edge(e).u))] = find(g_.edge(e).v);
                }
            }
            for (std::size_t x = 0; x < runs_of.size(); ++x) {
                for (std::size_t y = x + 1; y < runs_of.size(); ++y) {
                    const auto vj = run_vertices(v, runs_of[x]);
                    const auto vk = run_vertices(v, runs_of[y]);
                    bool linked = false;
                    for (int p : vj) {
                        for (int q : vk) {
                            if (find(p) == find(q)) linked = true;
                        }
                    }
                    if (!linked) continue;
                    const Trail rpath = colored_path(vj, col, in_d, vk);
                    const std::size_t pu = position(v.seq, rpath.start);
                    const std::size_t pv = position(v.seq, rpath.end);
                    const Trail p{rpath.start, rpath.end, cyclic_slice(v.seq, pu, pv)};
                    const Trail q_inv{rpath.end, rpath.start, cyclic_slice(v.seq, pv, pu)};
                    branch = "shortcut-repeated";
                    return finish(three_trail_select(oracle_, p, q_inv.reversed(), rpath, color_));
                }
            }
        }

        // All runs distinct: connector of colours c0 then c2 from P_0 to P_2.
        const int c0 = v.color[0];
        const int c2 = v.color[2];
        const auto from = run_vertices(v, 0);
        const auto to = run_vertices(v, 2);
        std::vector<char> is_target(static_cast<std::size_t>(g_.vertex_count()), 0);
        for (int t : to) is_target[static_cast<std::size_t>(t)] = 1;
        const Trail u = two_phase_path(from, c0, c2, in_d, is_target);
        const std::size_t p0 = position(v.seq, u.start);
        const std::size_t p2 = position(v.seq, u.end);
        const Trail s{u.start, u.end, cyclic_slice(v.seq, p0, p2)};
        const Trail t_inv{u.end, u.start, cyclic_slice(v.seq, p2, p0)};
        branch = "shortcut-connector";
        return finish(three_trail_select(oracle_, s, t_inv.reversed(), u, color_));
    }

    // Shortest trail that uses colour c0 edges, then colour c2 edges, avoiding
    // `used`, from a source to a target vertex.
    Trail two_phase_path(const std::vector<int>& sources, int c0, int c2, const std::vector<char>& used,
                         const std::vector<char>& is_target) const {
        const int n = g_.vertex_count();
        auto id = [n](int v, int phase) { return static_cast<std::size_t>(phase * n + v); };
        std::vector<int> dist(static_cast<std::size_t>(2 * n), -1);
        std::vector<std::pair<int, Dart>> parent(static_cast<std::size_t>(2 * n), {-1, Dart{-1}});
        std::deque<std::pair<int, int>> dq;
        for (int s : sources) {
            dist[id(s, 0)] = 0;
            dq.emplace_back(s, 0);
        }
        std::optional<std::pair<int, int>> hit;
        while (!dq.empty()) {
            const auto [v, phase] = dq.front();
            dq.pop_front();
            if (is_target[static_cast<std::size_t>(v)]) {
                hit = std::make_pair(v, phase);
                break;
            }
            const int dv = dist[id(v, phase)];
            if (phase == 0 && (dist[id(v, 1)] == -1 || dist[id(v, 1)] > dv)) {
                dist[id(v, 1)] = dv;
                parent[id(v, 1)] = {static_cast<int>(id(v, 0)), Dart{-1}};
                dq.emplace_front(v, 1);
            }
            const int col = phase == 0 ? c0 : c2;
            for (Dart d : g_.darts_by_id(v)) {
                const int e = d.edge();
                if (color_[static_cast<std::size_t>(e)] != col || used[static_cast<std::size_t>(e)]) continue;
                const int w = g_.head(d);
                if (dist[id(w, phase)] != -1) continue;
                dist[id(w, phase)] = dv + 1;
                parent[id(w, phase)] = {static_cast<int>(id(v, phase)), d};
                dq.emplace_back(w, phase);
            }
        }
        check(hit.has_value(), "no two-colour connector (members disconnected?)");
        Trail t{hit->first, hit->first, {}};
        std::size_t cur = id(hit->first, hit->second);
        while (parent[cur].first != -1) {
            if (parent[cur].second.index != -1) t.darts.push_back(parent[cur].second);
            cur = static_cast<std::size_t>(parent[cur].first);
        }
        std::reverse(t.darts.begin(), t.darts.end());
        t.start = static_cast<int>(cur % static_cast<std::size_t>(n));
        return t;
    }

    // Circuit of rank 3 starting at a run boundary v, runs T1 T2 T3, where v
    // is not on T2 and has an edge of T2's colour: an ns-cycle of rank <= 2.
    Circuit statement3(const std::vector<Dart>& seq) {
        const RunView v = runs_from_zero(color_, seq);
        check(v.runs() == 3 && v.color[0] != v.color[2],
              "rank-3 step needs three runs starting at a boundary");
        const int start = g_.tail(seq.front());
        const int c2 = v.color[1];
        const auto t2_vertices = run_vertices(v, 1);
        check(!std::binary_search(t2_vertices.begin(), t2_vertices.end(), start),
              "rank-3 step: start vertex lies on the middle run");
        check(has_color_at(start, c2), "rank-3 step: no middle-colour edge at start vertex");
        const Trail u = colored_path({start}, c2, edge_mask(seq), t2_vertices);
        std::size_t p = v.start[1];
        while (g_.tail(seq[p % seq.size()]) != u.end) {
            ++p;
            check(p <= v.start[2], "rank-3 step: connector end not on middle run");
        }
        const Trail s{start, u.end, std::vector<Dart>(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(p))};
        const Trail t_inv{u.end, start, std::vector<Dart>(seq.begin() + static_cast<std::ptrdiff_t>(p), seq.end())};
        const TrailChoice choice = three_trail_select(oracle_, s, t_inv.reversed(), u, color_);
        check(rank_of(choice.circuit) <= 2, "rank-3 step produced rank > 2");
        return finish(choice);
    }

    Circuit rank_three(const Circuit& d, std::string& branch) {
        RunView v = run_view(g_, color_, d);
        const std::size_t n = v.seq.size();
        // Vertex lying in all three colour classes, preferring the anchor.
        std::optional<int> x;
        for (std::size_t i = 0; i < n && !x; ++i) {
            if (g_.tail(v.seq[i]) == a_) x = a_;
        }
        for (std::size_t i = 0; i < n && !x; ++i) {
            const int y = g_.tail(v.seq[i]);
            if (has_color_at(y, v.color[0]) && has_color_at(y, v.color[1]) && has_color_at(y, v.color[2])) {
                x = y;
            }
        }
        if (x) {
            const std::size_t px = position(v.seq, *x);
            for (std::size_t k = 0; k < 3; ++k) {
                if (v.start[k] == px) {
                    branch = "rank3-boundary";
                    return statement3(rotate_runs(color_, v, k).seq);
                }
            }
            // x interior to run k: relabel so that run is P3.
            std::size_t k = 0;
            while (!(v.start[k] < px && px < v.end_of(k))) ++k;
            v = rotate_runs(color_, v, (k + 1) % 3);
            const std::size_t pos_x = position(v.seq, *x);
            const Trail r = colored_path({*x}, v.color[0], edge_mask(v.seq), run_vertices(v, 0));
            const std::size_t pos_v1 = position(v.seq, r.end);
            const Trail p{*x, r.end, cyclic_slice(v.seq, pos_x, pos_v1)};
            const Trail q_inv{r.end, *x, cyclic_slice(v.seq, pos_v1, pos_x)};
            const TrailChoice choice = three_trail_select(oracle_, p, q_inv.reversed(), r, color_);
            if (rank_of(choice.circuit) <= 2) {
                branch = "rank3-interior";
                return finish(choice);
            }
            check(!choice.picked_first, "rank-3 interior: unexpected rank-3 candidate");
            branch = "rank3-interior-then-boundary";
            return statement3(choice.circuit.darts);
        }

        // No vertex of D lies in all three colour classes.
        std::vector<Trail> q(3);
        const auto in_d = edge_mask(v.seq);
        for (std::size_t i = 0; i < 3; ++i) {
            q[i] = colored_path({a_}, v.color[i], in_d, run_vertices(v, i)).reversed();
        }
        std::size_t shift = 0;
        while (shift < 3 && q[shift].start == q[(shift + 2) % 3].start) ++shift;
        check(shift < 3, "rank-3 off-cycle: all connectors end at one vertex");
        v = rotate_runs(color_, v, shift);
        const Trail& q1 = q[shift];
        const Trail& q3 = q[(shift + 2) % 3];
        const Trail u = concat(q3, q1.reversed());
        const std::size_t p3 = position(v.seq, u.start);
        const std::size_t p1 = position(v.seq, u.end);
        const Trail s{u.start, u.end, cyclic_slice(v.seq, p3, p1)};
        const Trail t_inv{u.end, u.start, cyclic_slice(v.seq, p1, p3)};
        const TrailChoice choice = three_trail_select(oracle_, s, t_inv.reversed(), u, color_);
        if (rank_of(choice.circuit) <= 2) {
            branch = "rank3-offcycle";
            return finish(choice);
        }
        check(!choice.picked_first, "rank-3 off-cycle: unexpected rank-3 candidate");
        // U T^-1 rotated to start at the anchor vertex.
        const std::vector<Dart>& darts = choice.circuit.darts;
        const std::size_t at = q3.darts.size();
        std::vector<Dart> seq(darts.begin() + static_cast<std::ptrdiff_t>(at), darts.end());
        seq.insert(seq.end(), darts.begin(), darts.begin() + static_cast<std::ptrdiff_t>(at));
        branch = "rank3-offcycle-then-boundary";
        return statement3(seq);
    }

    const EmbeddedGraph& g_;
    std::span<const int> color_;
    HomologyOracle oracle_;
    int a_ = 0;
};

// ---------------------------------------------------------------------------
// Paths across a face of the anchor.

// BFS through the interior of face `f`: starts with darts leaving anchor
// vertices in corners of `source_walks`, continues through interior vertices
// only, and ends with a dart entering an anchor vertex in a corner of a walk
// in `target_walks`.
std::optional<Trail> face_path(const EmbeddedGraph& g, const FaceAnalysis& fa, int f,
                               const EdgePred& allow_edge, const std::set<int>& source_walks,
                               const std::set<int>& target_walks) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<char> seen(n, 0);
    std::vector<Dart> parent(n, Dart{-1});
    std::vector<int> frontier;
    auto interior = [&](int v) { return fa.face_of_vertex[static_cast<std::size_t>(v)] == f; };
    auto unwind = [&](Dart last) {
        std::vector<Dart> rev{last};
        int w = g.tail(last);
        while (parent[static_cast<std::size_t>(w)].index != -1 && interior(w)) {
            const Dart d = parent[static_cast<std::size_t>(w)];
            rev.push_back(d);
            w = g.tail(d);
        }
        std::reverse(rev.begin(), rev.end());
        return Trail{g.tail(rev.front()), g.head(rev.back()), rev};
    };
    auto step = [&](Dart d, std::vector<int>& next) -> std::optional<Trail> {
        const int w = g.head(d);
        if (!interior(w)) {
            if (target_walks.count(fa.corner_walk(g, d.twin()))) {
                return unwind(d);
            }
            return std::nullopt;
        }
        if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = 1;
            parent[static_cast<std::size_t>(w)] = d;
            next.push_back(w);
        }
        return std::nullopt;
    };

    // Initial darts, in dart-id order.
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!allow_edge(e) || fa.face_of_edge[static_cast<std::size_t>(e)] != f) continue;
        for (int end = 0; end < 2; ++end) {
            const Dart d = Dart::of(e, end);
            if (interior(g.tail(d)) || !source_walks.count(fa.corner_walk(g, d))) continue;
            if (auto t = step(d, frontier)) return t;
        }
    }
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int v : frontier) {
            for (Dart d : g.darts_by_id(v)) {
                if (!allow_edge(d.edge())) continue;
                if (auto t = step(d, next)) return t;
            }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

std::vector<int> edges_of_trail(const Trail& t) {
    std::vector<int> out;
    for (Dart d : t.darts) out.push_back(d.edge());
    return out;
}

std::vector<int> merge_edges(std::vector<int> a, std::span<const int> b) {
    a.insert(a.end(), b.begin(), b.end());
    return sorted_unique(std::move(a));
}

bool subgraph_has_degenerate_face(const EmbeddedGraph& g, std::span<const int> edges,
                                  std::optional<int> lone) {
    const auto fa = analyze_faces(g, edges, lone);
    return find_degenerate_face(fa.faces).has_value();
}

}  // namespace

std::string format_step(const ProofStep& s) {
    std::string out = "step " + s.rule + " colors";
    for (int c : s.colors) out += " " + std::to_string(c);
    if (s.colors.empty()) out += " -";
    out += " gen " + std::to_string(s.genus_before) + "->" + std::to_string(s.genus_after);
    return out;
}

HornsResult prop_horns(const Cluster& c) {
    const ValidationReport report = validate_cluster(c);
    if (!report) {
        throw Error("invalid cluster: " + report.message);
    }
    HornsEngine engine(c);
    return engine.run();
}

TubeResult lemma_tube(const Cluster& c) {
    const EmbeddedGraph& g = c.host();
    const std::vector<int> anchor = c.anchor_edges();
    const std::optional<int> lone = c.anchor_lone_vertex();
    TubeResult out;
    out.genus_before = subgraph_genus(g, anchor, lone);
    if (out.genus_before >= c.union_genus()) {
        throw Error("nothing to witness");
    }
    const FaceAnalysis fa = analyze_faces(g, anchor, lone);
    int f = -1;
    for (std::size_t i = 0; i < fa.faces.size() && f < 0; ++i) {
        if (fa.faces[i].degenerate()) f = static_cast<int>(i);
    }
    if (f < 0) {
        throw Error("anchor has no degenerate face");
    }
    out.face = f;
    auto interior = [&](int v) { return fa.face_of_vertex[static_cast<std::size_t>(v)] == f; };

    // Monochromatic pieces of the face interior, glued at interior vertices.
    std::vector<int> inner;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (fa.face_of_edge[static_cast<std::size_t>(e)] == f) inner.push_back(e);
    }
    check(!inner.empty(), "degenerate face with no interior edges (host not cellular?)");
    std::vector<int> piece(static_cast<std::size_t>(g.edge_count()), -1);
    int pieces = 0;
    for (int e0 : inner) {
        if (piece[static_cast<std::size_t>(e0)] != -1) continue;
        const int col = c.color_of(e0);
        std::vector<int> stack{e0};
        piece[static_cast<std::size_t>(e0)] = pieces;
        while (!stack.empty()) {
            const int e = stack.back();
            stack.pop_back();
            for (int v : {g.edge(e).u, g.edge(e).v}) {
                if (!interior(v)) continue;
                for (Dart d : g.rotation(v)) {
                    const int e2 = d.edge();
                    if (piece[static_cast<std::size_t>(e2)] == -1 && c.color_of(e2) == col) {
                        piece[static_cast<std::size_t>(e2)] = pieces;
                        stack.push_back(e2);
                    }
                }
            }
        }
        ++pieces;
    }
    std::vector<std::set<int>> attaches(static_cast<std::size_t>(pieces));
    std::vector<int> piece_color(static_cast<std::size_t>(pieces));
    for (int e : inner) {
        const auto p = static_cast<std::size_t>(piece[static_cast<std::size_t>(e)]);
        piece_color[p] = c.color_of(e);
        for (int end = 0; end < 2; ++end) {
            const Dart d = Dart::of(e, end);
            if (!interior(g.tail(d))) attaches[p].insert(fa.corner_walk(g, d));
        }
    }

    std::optional<Trail> path;
    for (int p = 0; p < pieces && !path; ++p) {
        const auto& att = attaches[static_cast<std::size_t>(p)];
        check(!att.empty(), "piece without attachment (member misses anchor?)");
        if (att.size() < 2) continue;
        const int w1 = *att.begin();
        std::set<int> rest(std::next(att.begin()), att.end());
        path = face_path(g, fa, f, [&](int e) { return piece[static_cast<std::size_t>(e)] == p; }, {w1}, rest);
        check(path.has_value(), "piece attaches to two walks but no path joins them");
        out.single_piece = true;
        out.colors = {piece_color[static_cast<std::size_t>(p)]};
    }
    if (!path) {
        // Every piece has one type; find two of different type meeting inside F.
        std::optional<std::pair<int, int>> touching;
        for (int v = 0; v < g.vertex_count() && !touching; ++v) {
            if (!interior(v)) continue;
            std::vector<int> here;
            for (Dart d : g.rotation(v)) here.push_back(piece[static_cast<std::size_t>(d.edge())]);
            here = sorted_unique(std::move(here));
            for (std::size_t i = 0; i < here.size() && !touching; ++i) {
                for (std::size_t j = i + 1; j < here.size() && !touching; ++j) {
                    if (*attaches[static_cast<std::size_t>(here[i])].begin() !=
                        *attaches[static_cast<std::size_t>(here[j])].begin()) {
                        touching = std::make_pair(here[i], here[j]);
                    }
                }
            }
        }
        if (!touching) {
            throw std::logic_error("no two pieces of different type touch (host not cellular?)");
        }
        const auto [pk, pl] = *touching;
        const int wk = *attaches[static_cast<std::size_t>(pk)].begin();
        const int wl = *attaches[static_cast<std::size_t>(pl)].begin();
        path = face_path(g, fa, f, [&](int e) {
            const int p = piece[static_cast<std::size_t>(e)];
            return p == pk || p == pl;
        }, {wk}, {wl});
        check(path.has_value(), "touching pieces but no connecting path");
        out.colors = sorted_unique({piece_color[static_cast<std::size_t>(pk)], piece_color[static_cast<std::size_t>(pl)]});
    }
    out.path = *path;

    const auto with_path = merge_edges(anchor, edges_of_trail(out.path));
    const int path_genus = subgraph_genus(g, with_path);
    check(path_genus == out.genus_before + 1, "walk-joining path did not add exactly one to the genus");
    out.genus_after = c.genus_with_anchor(out.colors);
    check(out.genus_after > out.genus_before, "tube step did not raise the genus");
    return out;
}

Horns2Result lemma_horns2(const Cluster& c) {
    const EmbeddedGraph& g = c.host();
    const std::vector<int> anchor = c.anchor_edges();
    const std::optional<int> lone = c.anchor_lone_vertex();
    Horns2Result out;
    out.genus_before = subgraph_genus(g, anchor, lone);
    if (out.genus_before >= c.union_genus()) {
        throw Error("nothing to witness");
    }
    const FaceAnalysis fa = analyze_faces(g, anchor, lone);
    if (find_degenerate_face(fa.faces)) {
        throw Error("anchor has a degenerate face");
    }
    int f = -1;
    for (std::size_t i = 0; i < fa.faces.size() && f < 0; ++i) {
        if (fa.faces[i].genus >= 1) f = static_cast<int>(i);
    }
    check(f >= 0, "anchor below full genus but no face of positive genus");
    out.face = f;
    const Face& face = fa.faces[static_cast<std::size_t>(f)];
    std::vector<int> inner;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (fa.face_of_edge[static_cast<std::size_t>(e)] == f) inner.push_back(e);
    }

    // Cap the face and find a cheap ns-cycle there.
    const Contraction k = contract_walk_to_point(g, face.walks.front().darts, inner, lone);
    std::vector<int> k_color;
    for (int host_e : k.edge_to_host) k_color.push_back(c.color_of(host_e));
    const Cluster j(k.graph, k_color, AnchorSpec::of_vertex(0));
    out.horns = prop_horns(j);
    out.colors = out.horns.colors;

    // Lift back into the host.
    std::vector<Dart> cyc = out.horns.cycle.darts;
    std::vector<Dart> lifted;
    std::size_t at_u = cyc.size();
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        if (k.graph.tail(cyc[i]) == 0) at_u = i;
    }
    if (at_u < cyc.size()) {
        std::rotate(cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(at_u), cyc.end());
    }
    for (Dart d : cyc) lifted.push_back(k.to_host(d));
    std::vector<int> l_edges;
    for (Dart d : lifted) l_edges.push_back(d.edge());
    if (at_u < cyc.size()) {
        out.lift = g.tail(lifted.front()) != g.head(lifted.back()) ? LiftKind::FacePath : LiftKind::TouchingCycle;
    } else {
        out.lift = LiftKind::InteriorCycle;
        std::vector<int> on_d;
        for (Dart d : lifted) on_d.push_back(g.tail(d));
        on_d = sorted_unique(std::move(on_d));
        auto connector = bfs_path(
            g, on_d,
            [&](int e) {
                return std::binary_search(out.colors.begin(), out.colors.end(), c.color_of(e)) &&
                       std::find(l_edges.begin(), l_edges.end(), e) == l_edges.end();
            },
            [&](int v) { return fa.face_of_vertex[static_cast<std::size_t>(v)] == f &&
                                !std::binary_search(on_d.begin(), on_d.end(), v); },
            [&](int v) { return fa.in_subgraph_vertex[static_cast<std::size_t>(v)] != 0; });
        check(connector.has_value(), "no connector from the interior cycle to the boundary");
        for (Dart d : connector->darts) l_edges.push_back(d.edge());
    }
    l_edges = sorted_unique(std::move(l_edges));
    out.structure_edges = l_edges;

    std::vector<int> current = merge_edges(anchor, l_edges);
    check(subgraph_has_degenerate_face(g, current, lone), "anchor plus lifted structure has no degenerate face");

    // L_0 .. L_m: grow by the least edge of the chosen colours touching the
    // current vertex set.
    std::vector<std::vector<int>> sequence{current};
    std::vector<char> have(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<char> vert(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int e : current) {
        have[static_cast<std::size_t>(e)] = 1;
        vert[static_cast<std::size_t>(g.edge(e).u)] = vert[static_cast<std::size_t>(g.edge(e).v)] = 1;
    }
    if (lone) vert[static_cast<std::size_t>(*lone)] = 1;
    for (bool grew = true; grew;) {
        grew = false;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (have[static_cast<std::size_t>(e)] ||
                !std::binary_search(out.colors.begin(), out.colors.end(), c.color_of(e))) continue;
            if (!vert[static_cast<std::size_t>(g.edge(e).u)] && !vert[static_cast<std::size_t>(g.edge(e).v)]) continue;
            have[static_cast<std::size_t>(e)] = 1;
            vert[static_cast<std::size_t>(g.edge(e).u)] = vert[static_cast<std::size_t>(g.edge(e).v)] = 1;
            current.insert(std::lower_bound(current.begin(), current.end(), e), e);
            sequence.push_back(current);
            grew = true;
            break;
        }
    }
    out.sequence_length = static_cast<int>(sequence.size()) - 1;
    check(current == c.edges_with_anchor(out.colors), "edge-addition sequence did not reach the full members");

    out.genus_after = subgraph_genus(g, current);
    const bool genus_up = out.genus_after > out.genus_before;
    const bool last_degenerate = subgraph_has_degenerate_face(g, current, std::nullopt);
    if (!last_degenerate) {
        std::size_t jdx = 1;
        while (subgraph_has_degenerate_face(g, sequence[jdx], std::nullopt)) ++jdx;
        check(subgraph_genus(g, sequence[jdx]) > subgraph_genus(g, sequence[jdx - 1]),
              "edge rule violated: genus did not rise where degeneracy vanished");
        check(genus_up, "degeneracy vanished without a genus increase");
    }
    out.outcome = genus_up ? HornsOutcome::GenusUp : HornsOutcome::DegenerateFace;
    return out;
}

MainLemmaResult theorem_mainlemma(const Cluster& c) {
    MainLemmaResult out;
    out.genus_before = c.anchor_genus();
    const int full = c.union_genus();
    if (out.genus_before >= full) {
        throw Error("nothing to witness");
    }
    const FaceAnalysis fa = analyze_faces(c.host(), c.anchor_edges(), c.anchor_lone_vertex());
    if (find_degenerate_face(fa.faces)) {
        const TubeResult t = lemma_tube(c);
        out.colors = t.colors;
        out.steps.push_back({"tube", t.colors, t.genus_before, t.genus_after,
                             "face " + std::to_string(t.face)});
    } else {
        const Horns2Result h = lemma_horns2(c);
        out.colors = h.colors;
        out.steps.push_back({"horns2", h.colors, h.genus_before, h.genus_after,
                             std::string(h.outcome == HornsOutcome::GenusUp ? "genus-up" : "degenerate-face") +
                                 " face " + std::to_string(h.face)});
        if (h.outcome == HornsOutcome::DegenerateFace) {
            std::vector<int> merged = c.anchor().colors;
            merged.insert(merged.end(), h.colors.begin(), h.colors.end());
            const Cluster k = merge_into_anchor(c, sorted_unique(merged));
            const TubeResult t = lemma_tube(k);
            out.steps.push_back({"tube", t.colors, t.genus_before, t.genus_after,
                                 "face " + std::to_string(t.face)});
            out.colors.insert(out.colors.end(), t.colors.begin(), t.colors.end());
        }
    }
    out.colors = sorted_unique(out.colors);
    check(out.colors.size() <= 4, "main lemma used more than four members");
    out.genus_after = c.genus_with_anchor(out.colors);
    check(out.genus_after > out.genus_before, "main lemma did not raise the genus");
    return out;
}

int witness_size(const Cluster& c, std::span<const int> colors) {
    int members = 0;
    bool anchor = c.anchor().colors.empty();
    for (int col : sorted_unique({colors.begin(), colors.end()})) {
        if (c.is_anchor_color(col)) {
            anchor = true;
        } else {
            ++members;
        }
    }
    return members + (anchor ? 1 : 0);
}

std::vector<int> strong_base_case(const Cluster& c) {
    if (c.union_genus() <= 0) {
        throw Error("strong base case needs positive genus");
    }
    const auto hit = brute_force_witness(c, 0, 4, {.require_anchor = false, .threads = 1});
    if (!hit) {
        throw Error("strong precondition violated or theorem misapplied");
    }
    return hit->colors;
}

WitnessResult main_theorem_witness(const Cluster& c, int g, WitnessOptions options) {
    if (g < 0) {
        throw Error("target genus must be non-negative");
    }
    const ValidationReport report = validate_cluster(c);
    if (!report) {
        throw Error("invalid cluster: " + report.message);
    }
    const int full = c.union_genus();
    if (full <= g) {
        throw Error("union genus " + std::to_string(full) + " does not exceed " + std::to_string(g));
    }
    WitnessResult out;
    std::vector<int> w = c.anchor().colors;
    Cluster base = c;
    auto genus_of = [&](const std::vector<int>& cols) { return subgraph_genus_sum(c.host(), c.edges_of(cols)); };

    const int anchor_genus = c.anchor_genus();
    if (options.strong) {
        w = strong_base_case(c);
        base = c.with_anchor(AnchorSpec{w, std::nullopt});
        const ValidationReport r2 = validate_cluster(base);
        if (!r2) {
            throw Error("strong precondition violated or theorem misapplied: " + r2.message);
        }
        out.trace.push_back({"strong-base", w, 0, genus_of(w), ""});
    } else if (anchor_genus > 0) {
        out.trace.push_back({"anchor", w, anchor_genus, anchor_genus, ""});
    } else {
        const MainLemmaResult ml = theorem_mainlemma(c);
        out.trace.insert(out.trace.end(), ml.steps.begin(), ml.steps.end());
        w.insert(w.end(), ml.colors.begin(), ml.colors.end());
        w = sorted_unique(std::move(w));
        out.trace.push_back({"mainlemma", ml.colors, ml.genus_before, ml.genus_after, "base"});
    }

    for (int h = 0; h < g; ++h) {
        const int cur = genus_of(w);
        if (cur > h + 1) continue;
        check(cur == h + 1, "induction lost track of the witness genus");
        const Cluster k = merge_into_anchor(base, w);
        const MainLemmaResult ml = theorem_mainlemma(k);
        out.trace.insert(out.trace.end(), ml.steps.begin(), ml.steps.end());
        w.insert(w.end(), ml.colors.begin(), ml.colors.end());
        w = sorted_unique(std::move(w));
        out.trace.push_back({"mainlemma", ml.colors, ml.genus_before, ml.genus_after,
                             "level " + std::to_string(h + 1)});
    }

    out.colors = w;
    out.size = witness_size(c, w);
    out.achieved_genus = genus_of(w);
    check(out.achieved_genus > g, "witness genus does not exceed the target");
    const int bound = options.strong ? 4 * g + 4 : 4 * g + 5;
    check(out.size <= bound, "witness exceeds the size bound");
    return out;
}

std::optional<BruteForceResult> brute_force_witness(const Cluster& c, int g, int max_size,
                                                    BruteForceOptions options) {
    // Units: index 0 is the anchor (possibly several colours), then members.
    std::vector<std::vector<int>> units;
    units.push_back(c.anchor().colors);
    for (int m : c.member_colors()) units.push_back({m});
    const int first_free = options.require_anchor ? 1 : 0;
    const int free_units = static_cast<int>(units.size()) - first_free;

    const EmbeddedGraph& host = c.host();
    std::vector<std::vector<int>> unit_edges;
    for (const auto& u : units) unit_edges.push_back(c.edges_of(u));

    auto evaluate = [&](const std::vector<int>& pick) {
        std::vector<int> edges;
        if (options.require_anchor) edges = unit_edges[0];
        for (int u : pick) edges.insert(edges.end(), unit_edges[static_cast<std::size_t>(u)].begin(),
                                        unit_edges[static_cast<std::size_t>(u)].end());
        return subgraph_genus_sum(host, edges) > g;
    };

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    for (int size = 1; size <= max_size; ++size) {
        const int choose = size - (options.require_anchor ? 1 : 0);
        if (choose < 0 || choose > free_units) continue;
        // All combinations of `choose` free units, lexicographic.
        std::vector<std::vector<int>> combos;
        std::vector<int> idx(static_cast<std::size_t>(choose));
        std::iota(idx.begin(), idx.end(), first_free);
        const int top = static_cast<int>(units.size());
        while (true) {
            combos.push_back(idx);
            int i = choose - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == top - choose + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < choose; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
        std::atomic<std::size_t> best{combos.size()};
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < combos.size(); i = next++) {
                if (i >= best.load()) break;
                if (evaluate(combos[i])) {
                    std::size_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                }
            }
        };
        const unsigned n_threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, combos.size() / 16)));
        if (n_threads <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        if (best.load() < combos.size()) {
            BruteForceResult r;
            std::vector<int> cols = options.require_anchor ? units[0] : std::vector<int>{};
            for (int u : combos[best.load()]) {
                cols.insert(cols.end(), units[static_cast<std::size_t>(u)].begin(), units[static_cast<std::size_t>(u)].end());
            }
            r.colors = sorted_unique(std::move(cols));
            r.size = size;
            return r;
        }
    }
    return std::nullopt;
}

}  // namespace surfwit
