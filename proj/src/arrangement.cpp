#include "surfwit/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

#include "surfwit/generators.hpp"
#include "surfwit/graph_io.hpp"

namespace surfwit {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

Cluster checked(Cluster c) {
    if (auto r = validate_arrangement(c); !r) {
        throw Error(r.message);
    }
    return c;
}

// Each colour class: connected, every touched vertex of degree 2 within the
// class (a loop counts twice).
bool is_cycle_class(const EmbeddedGraph& g, std::span<const int> edges) {
    std::vector<int> deg(idx(g.vertex_count()), 0);
    std::vector<int> parent(idx(g.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[idx(x)] != x) x = parent[idx(x)] = parent[idx(parent[idx(x)])];
        return x;
    };
    for (int e : edges) {
        ++deg[idx(g.edge(e).u)];
        ++deg[idx(g.edge(e).v)];
        parent[idx(find(g.edge(e).u))] = find(g.edge(e).v);
    }
    int root = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (deg[idx(v)] == 0) continue;
        if (deg[idx(v)] != 2) return false;
        if (root < 0) root = find(v);
        if (find(v) != root) return false;
    }
    return root >= 0;
}

// ---------------------------------------------------------------------------
// Mutable arrangement graph used by the generators.

struct Draft {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<int> color;
    std::vector<std::vector<Dart>> rot;

    EmbeddedGraph graph() const { return EmbeddedGraph(n, edges, rot); }
    Cluster cluster() const { return Cluster(graph(), color, AnchorSpec::of_color(0)); }
};

struct Point {
    double x = 0;
    double y = 0;
};

struct Circle {
    Point c;
    double r = 1;
};

// Random circles in general position; circle 0 is the unit circle and meets
// every other one. With `all_pairs` every pair meets.
std::vector<Circle> draw_circles(Rng& rng, int count, bool all_pairs) {
    auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<Circle> out{Circle{{0, 0}, 1}};
    const double spread = all_pairs ? 0.6 : 1.4;
    while (static_cast<int>(out.size()) < count) {
        Circle k{{spread * (2 * unit() - 1), spread * (2 * unit() - 1)}, 0.5 + unit()};
        bool ok = true;
        for (std::size_t j = 0; j < out.size() && ok; ++j) {
            const double d = std::hypot(k.c.x - out[j].c.x, k.c.y - out[j].c.y);
            const bool meet = d > std::abs(k.r - out[j].r) + 0.05 && d < k.r + out[j].r - 0.05;
            const bool apart = d > k.r + out[j].r + 0.05 || d < std::abs(k.r - out[j].r) - 0.05;
            if (j == 0 || all_pairs) {
                ok = meet;
            } else {
                ok = meet || apart;
            }
        }
        if (ok) out.push_back(k);
    }
    return out;
}

// Combinatorial arrangement: each circle's cyclic vertex sequence and, at
// each vertex, the cyclic order of ports (circle, leaving forward or not).
struct Port {
    int circle = 0;
    bool forward = true;
    friend bool operator==(const Port&, const Port&) = default;
};

struct Layout {
    int n = 0;
    std::vector<std::vector<int>> seq;
    std::vector<std::vector<Port>> ports;

    Draft draft() const {
        Draft d;
        d.n = n;
        // first_edge[c][t]: edge from seq[c][t] to its successor.
        std::vector<std::vector<int>> edge_at(seq.size());
        for (std::size_t c = 0; c < seq.size(); ++c) {
            const auto& s = seq[c];
            for (std::size_t t = 0; t < s.size(); ++t) {
                edge_at[c].push_back(static_cast<int>(d.edges.size()));
                d.edges.push_back({s[t], s[(t + 1) % s.size()]});
                d.color.push_back(static_cast<int>(c));
            }
        }
        d.rot.resize(idx(n));
        for (int v = 0; v < n; ++v) {
            for (const Port& p : ports[idx(v)]) {
                const auto& s = seq[idx(p.circle)];
                const auto t = static_cast<std::size_t>(std::find(s.begin(), s.end(), v) - s.begin());
                const std::size_t len = s.size();
                d.rot[idx(v)].push_back(p.forward ? Dart::of(edge_at[idx(p.circle)][t], 0)
                                                  : Dart::of(edge_at[idx(p.circle)][(t + len - 1) % len], 1));
            }
        }
        return d;
    }
};

// Plane arrangement of generic circles: one vertex per crossing, ports
// ordered by tangent direction. Genus 0 by construction.
Layout plane_layout(const std::vector<Circle>& circles) {
    struct Hit {
        int vertex;
        double angle;
    };
    const int k = static_cast<int>(circles.size());
    std::vector<std::vector<Hit>> on(idx(k));
    int n = 0;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            const Circle& a = circles[idx(i)];
            const Circle& b = circles[idx(j)];
            const double dx = b.c.x - a.c.x;
            const double dy = b.c.y - a.c.y;
            const double d = std::hypot(dx, dy);
            if (d >= a.r + b.r || d <= std::abs(a.r - b.r)) continue;
            const double along = (a.r * a.r - b.r * b.r + d * d) / (2 * d);
            const double h = std::sqrt(std::max(0.0, a.r * a.r - along * along));
            const Point m{a.c.x + along * dx / d, a.c.y + along * dy / d};
            for (int s : {1, -1}) {
                const Point p{m.x - s * h * dy / d, m.y + s * h * dx / d};
                on[idx(i)].push_back({n, std::atan2(p.y - a.c.y, p.x - a.c.x)});
                on[idx(j)].push_back({n, std::atan2(p.y - b.c.y, p.x - b.c.x)});
                ++n;
            }
        }
    }
    Layout l;
    l.n = n;
    l.seq.resize(idx(k));
    struct Out {
        Port port;
        double dir;
    };
    std::vector<std::vector<Out>> around(idx(n));
    for (int i = 0; i < k; ++i) {
        auto& hits = on[idx(i)];
        std::sort(hits.begin(), hits.end(), [](const Hit& x, const Hit& y) { return x.angle < y.angle; });
        for (const Hit& h : hits) {
            l.seq[idx(i)].push_back(h.vertex);
            // Counter-clockwise tangent: the forward arc leaves along it.
            const double fwd = h.angle + std::numbers::pi / 2;
            around[idx(h.vertex)].push_back({{i, true}, std::remainder(fwd, 2 * std::numbers::pi)});
            around[idx(h.vertex)].push_back({{i, false}, std::remainder(fwd + std::numbers::pi, 2 * std::numbers::pi)});
        }
    }
    l.ports.resize(idx(n));
    for (int v = 0; v < n; ++v) {
        auto& a = around[idx(v)];
        std::sort(a.begin(), a.end(), [](const Out& x, const Out& y) { return x.dir < y.dir; });
        for (const auto& o : a) l.ports[idx(v)].push_back(o.port);
    }
    return l;
}

// Contracts edge e (two distinct ends) keeping an orientable embedding of
// the same genus. Refused when another circle also joins the two ends.
bool contract_arc(Draft& d, int e) {
    const int u = d.edges[idx(e)].u;
    const int w = d.edges[idx(e)].v;
    if (u == w) return false;
    const int col = d.color[idx(e)];
    // Circles other than e's through both ends would revisit the merged
    // vertex. A two-arc circle of e's colour turns into a loop.
    std::vector<int> at_u(d.color.size(), 0);
    for (const Dart x : d.rot[idx(u)]) at_u[idx(d.color[idx(x.edge())])] = 1;
    for (const Dart x : d.rot[idx(w)]) {
        const int c = d.color[idx(x.edge())];
        if (c != col && at_u[idx(c)]) return false;
    }
    // Splice w's rotation (after e's dart) in place of e's dart at u.
    auto& ru = d.rot[idx(u)];
    const auto& rw = d.rot[idx(w)];
    const auto pu = std::find(ru.begin(), ru.end(), Dart::of(e, 0));
    const auto pw = std::find(rw.begin(), rw.end(), Dart::of(e, 1));
    std::vector<Dart> merged(ru.begin(), pu);
    for (std::size_t s = 1; s < rw.size(); ++s) {
        merged.push_back(rw[(idx(static_cast<int>(pw - rw.begin())) + s) % rw.size()]);
    }
    merged.insert(merged.end(), pu + 1, ru.end());
    ru = std::move(merged);
    d.rot[idx(w)].clear();
    for (auto& x : d.edges) {
        if (x.u == w) x.u = u;
        if (x.v == w) x.v = u;
    }
    // Drop edge e and vertex w, renumbering both.
    d.edges.erase(d.edges.begin() + e);
    d.color.erase(d.color.begin() + e);
    d.rot.erase(d.rot.begin() + w);
    for (auto& x : d.edges) {
        if (x.u > w) --x.u;
        if (x.v > w) --x.v;
    }
    for (auto& r : d.rot) {
        for (auto& x : r) {
            if (x.edge() > e) x = Dart::of(x.edge() - 1, x.end());
        }
    }
    --d.n;
    return true;
}

// Swaps the two darts of one circle at v: mirrors a crossing or a touch.
bool flip_at(Draft& d, int v, int which) {
    auto& r = d.rot[idx(v)];
    std::vector<int> cols;
    for (const Dart x : r) cols.push_back(d.color[idx(x.edge())]);
    std::vector<int> distinct = cols;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const int c = distinct[idx(which % static_cast<int>(distinct.size()))];
    std::vector<std::size_t> slots;
    for (std::size_t s = 0; s < r.size(); ++s) {
        if (cols[s] == c) slots.push_back(s);
    }
    if (slots.size() != 2) return false;
    std::swap(r[slots[0]], r[slots[1]]);
    return true;
}

int draft_genus(const Draft& d) { return genus_sum(d.graph()); }

int subset_genus(const Draft& d, std::span<const int> circles) {
    std::vector<int> keep;
    for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
        if (std::find(circles.begin(), circles.end(), d.color[idx(e)]) != circles.end()) keep.push_back(e);
    }
    return subgraph_genus_sum(d.graph(), keep);
}

template <class F>
void for_each_subset(int n, int k, F&& f) {
    std::vector<int> s(idx(k));
    std::iota(s.begin(), s.end(), 0);
    while (true) {
        f(std::span<const int>(s));
        int i = k - 1;
        while (i >= 0 && s[idx(i)] == n - k + i) --i;
        if (i < 0) return;
        ++s[idx(i)];
        for (int j = i + 1; j < k; ++j) s[idx(j)] = s[idx(j - 1)] + 1;
    }
}

// Score 0 means: whole genus meets `want`, every `sub`-subset planar.
int tight_score(const Draft& d, int circles, int sub, bool at_least) {
    const int g = draft_genus(d);
    int score = at_least ? 4 * std::max(0, 1 - g) : 4 * std::abs(g - 1);
    for_each_subset(circles, sub, [&](std::span<const int> s) { score += subset_genus(d, s); });
    return score;
}

}  // namespace

// ---------------------------------------------------------------------------

Arrangement::Arrangement(Cluster c) : cluster_(checked(std::move(c))) {}

int Arrangement::genus_of(std::span<const int> circles) const {
    return subgraph_genus_sum(graph(), cluster_.edges_of(circles));
}

ValidationReport validate_arrangement(const Cluster& c) {
    const auto& anchor = c.anchor();
    if (anchor.colors.size() != 1) {
        return ValidationReport::fail("anchor must be a single circle");
    }
    const EmbeddedGraph& g = c.host();
    for (int col : c.colors()) {
        const int one[] = {col};
        if (!is_cycle_class(g, c.edges_of(one))) {
            return ValidationReport::fail("member not a cycle: circle " + std::to_string(col));
        }
    }
    const int a = anchor.colors.front();
    if (std::find(c.colors().begin(), c.colors().end(), a) == c.colors().end()) {
        return ValidationReport::fail("anchor must be a single circle");
    }
    std::vector<std::vector<int>> circles_at(idx(g.vertex_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        for (int v : {g.edge(e).u, g.edge(e).v}) {
            auto& l = circles_at[idx(v)];
            if (std::find(l.begin(), l.end(), c.color_of(e)) == l.end()) l.push_back(c.color_of(e));
        }
    }
    for (int col : c.member_colors()) {
        bool meets = false;
        for (const auto& l : circles_at) {
            const bool has_a = std::find(l.begin(), l.end(), a) != l.end();
            const bool has_c = std::find(l.begin(), l.end(), col) != l.end();
            meets = meets || (has_a && has_c);
        }
        if (!meets) return ValidationReport::fail("anchor misses circle " + std::to_string(col));
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (circles_at[idx(v)].size() < 2) {
            return ValidationReport::fail("vertex " + std::to_string(v) + " lies on fewer than two circles");
        }
    }
    return ValidationReport::pass();
}

Arrangement parse_arrangement(const std::string& text) {
    return Arrangement(parse_graph_string(text).cluster());
}

Arrangement read_arrangement(const std::string& path) {
    return Arrangement(read_graph_file(path).cluster());
}

std::string serialize_arrangement(const Arrangement& a) { return serialize_cluster(a.cluster()); }

bool is_strong(const Arrangement& a) {
    const EmbeddedGraph& g = a.graph();
    const Cluster& c = a.cluster();
    std::map<std::pair<int, int>, int> shared;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto r = g.rotation(v);
        if (r.size() != 4) return false;
        std::vector<int> cols;
        for (const Dart x : r) cols.push_back(c.color_of(x.edge()));
        // Interleaved: a b a b around the vertex.
        if (cols[0] == cols[1] || cols[0] != cols[2] || cols[1] != cols[3]) return false;
        ++shared[{std::min(cols[0], cols[1]), std::max(cols[0], cols[1])}];
    }
    const auto& cs = a.circles();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            const auto it = shared.find({cs[i], cs[j]});
            if (it == shared.end() || it->second != 2) return false;
        }
    }
    return true;
}

bool embeddable_into(const Arrangement& a, int g) { return a.genus() <= g; }

WitnessResult helly_witness(const Arrangement& a, int g) {
    if (embeddable_into(a, g)) {
        throw Error("arrangement already embeddable into genus " + std::to_string(g));
    }
    return main_theorem_witness(a.cluster(), g, WitnessOptions{is_strong(a)});
}

Arrangement generate_random(int circles, int target_genus, std::uint64_t seed, GenerateOptions options) {
    if (circles < 2) throw Error("need at least two circles");
    if (target_genus < 0) throw Error("target genus must be non-negative");
    Rng rng(seed);
    const int goal = pick(rng, target_genus + 1);
    for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
        Draft d = plane_layout(draw_circles(rng, circles, options.strong)).draft();
        if (!options.strong) {
            // Contractions create triple points, touching points and loops.
            const int merges = pick(rng, 1 + static_cast<int>(d.edges.size()) / 4);
            for (int m = 0; m < merges; ++m) {
                contract_arc(d, pick(rng, static_cast<int>(d.edges.size())));
            }
        }
        int genus = draft_genus(d);
        for (int step = 0; step < 60 * static_cast<int>(d.edges.size()) && genus != goal; ++step) {
            Draft cand = d;
            const int v = pick(rng, cand.n);
            bool moved;
            if (options.strong || coin(rng, 50)) {
                moved = flip_at(cand, v, pick(rng, 4));
            } else {
                auto& r = cand.rot[idx(v)];
                const int i = pick(rng, static_cast<int>(r.size()));
                int j = pick(rng, static_cast<int>(r.size()) - 1);
                if (j >= i) ++j;
                std::swap(r[idx(i)], r[idx(j)]);
                moved = true;
            }
            if (!moved) continue;
            const int cg = draft_genus(cand);
            if (std::abs(cg - goal) <= std::abs(genus - goal)) {
                d = std::move(cand);
                genus = cg;
            }
        }
        if (genus != goal) continue;
        Cluster c = d.cluster();
        if (validate_arrangement(c) && validate_cluster(c)) {
            return Arrangement(std::move(c));
        }
    }
    throw Error("generation budget exhausted");
}

namespace {

// New vertex where the listed circles meet, at random spots along them.
void add_vertex(Rng& rng, Layout& l, std::span<const int> circles) {
    const int v = l.n++;
    std::vector<Port> ports;
    for (int c : circles) {
        auto& s = l.seq[idx(c)];
        s.insert(s.begin() + pick(rng, static_cast<int>(s.size()) + 1), v);
        ports.push_back({c, true});
        ports.push_back({c, false});
    }
    for (int i = static_cast<int>(ports.size()) - 1; i > 0; --i) {
        std::swap(ports[idx(i)], ports[idx(pick(rng, i + 1))]);
    }
    l.ports.push_back(std::move(ports));
}

// Drops a vertex on exactly two circles if every circle keeps a vertex and
// still meets circle 0.
bool remove_vertex(Layout& l, int v) {
    if (l.ports[idx(v)].size() != 4) return false;
    Layout t = l;
    for (auto& s : t.seq) std::erase(s, v);
    t.ports.erase(t.ports.begin() + v);
    --t.n;
    for (auto& s : t.seq) {
        if (s.empty()) return false;
        for (int& x : s) {
            if (x > v) --x;
        }
    }
    const auto& anchor = t.seq[0];
    for (std::size_t c = 1; c < t.seq.size(); ++c) {
        bool meets = false;
        for (int x : t.seq[c]) meets = meets || std::find(anchor.begin(), anchor.end(), x) != anchor.end();
        if (!meets) return false;
    }
    l = std::move(t);
    return true;
}

// Random local change: reorder ports at a vertex (strong: mirror one
// crossing), swap two neighbouring vertices along a circle, or (general
// only) add or remove a meeting point.
void mutate(Rng& rng, Layout& l, bool strong) {
    const int kind = pick(rng, strong ? 2 : 4);
    const int k = static_cast<int>(l.seq.size());
    if (kind == 2) {
        const int i = pick(rng, k);
        int j = pick(rng, k - 1);
        if (j >= i) ++j;
        std::vector<int> at{i, j};
        if (coin(rng, 20)) {
            const int m = pick(rng, k);
            if (m != i && m != j) at.push_back(m);
        }
        add_vertex(rng, l, at);
        return;
    }
    if (kind == 3) {
        remove_vertex(l, pick(rng, l.n));
        return;
    }
    if (kind == 0) {
        auto& c = l.seq[idx(pick(rng, k))];
        if (c.size() >= 3) {
            const int t = pick(rng, static_cast<int>(c.size()));
            std::swap(c[idx(t)], c[idx((t + 1) % static_cast<int>(c.size()))]);
        }
        return;
    }
    auto& r = l.ports[idx(pick(rng, l.n))];
    if (strong) {
        const int circle = r[idx(pick(rng, static_cast<int>(r.size())))].circle;
        const auto a = std::find(r.begin(), r.end(), Port{circle, true});
        const auto b = std::find(r.begin(), r.end(), Port{circle, false});
        std::iter_swap(a, b);
    } else {
        const int i = pick(rng, static_cast<int>(r.size()));
        int j = pick(rng, static_cast<int>(r.size()) - 1);
        if (j >= i) ++j;
        std::swap(r[idx(i)], r[idx(j)]);
    }
}

// Hill climbing over layouts seeded from random plane circles; score 0 ends
// the search.
SearchResult tight_search(std::uint64_t seed, int budget, int circles, int sub, bool strong) {
    Rng rng(seed);
    SearchResult out;
    out.best_score = -1;
    const int steps_per_layout = 2000;
    while (out.attempts < budget) {
        Layout l = plane_layout(draw_circles(rng, circles, strong || coin(rng, 50)));
        int score = tight_score(l.draft(), circles, sub, strong);
        for (int s = 0; s < steps_per_layout && score > 0 && out.attempts < budget; ++s, ++out.attempts) {
            Layout cand = l;
            mutate(rng, cand, strong);
            const int cs = tight_score(cand.draft(), circles, sub, strong);
            // Occasional uphill step to leave plateaus.
            if (cs <= score || (cs == score + 1 && coin(rng, 3))) {
                l = std::move(cand);
                score = cs;
            }
        }
        if (out.best_score < 0 || score < out.best_score) {
            out.best_score = score;
            out.arrangement = Arrangement(l.draft().cluster());
        }
        if (score == 0) {
            out.found = true;
            return out;
        }
        ++out.attempts;
    }
    return out;
}

}  // namespace

SearchResult search_tight_example(std::uint64_t seed, int budget) {
    return tight_search(seed, budget, 5, 4, false);
}

SearchResult search_strong_tight_example(std::uint64_t seed, int budget) {
    return tight_search(seed, budget, 4, 3, true);
}

bool every_subset_embeddable(const Arrangement& a, int size, int g) {
    if (a.genus() <= g) return false;
    const auto& cs = a.circles();
    const int n = static_cast<int>(cs.size());
    if (size >= n) return false;
    bool all = true;
    for_each_subset(n, size, [&](std::span<const int> s) {
        std::vector<int> pickset;
        for (int i : s) pickset.push_back(cs[idx(i)]);
        all = all && a.genus_of(pickset) <= g;
    });
    return all;
}

}  // namespace surfwit
