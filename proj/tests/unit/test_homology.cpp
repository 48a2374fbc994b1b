#include <doctest.h>

#include <algorithm>
#include <set>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "../support/trails.hpp"
#include "surfwit/generators.hpp"
#include "surfwit/homology.hpp"

using namespace surfwit;
using fixture::d;

namespace {

std::vector<char> chain(const EmbeddedGraph& g, const std::vector<Dart>& darts) {
    std::vector<char> c(static_cast<std::size_t>(g.edge_count()), 0);
    for (const Dart x : darts) c[static_cast<std::size_t>(x.edge())] ^= 1;
    return c;
}

std::set<int> edges_of(const Circuit& c) {
    std::set<int> s;
    for (const Dart x : c.darts) s.insert(x.edge());
    return s;
}

// Torus bouquet plus a loop c that bounds its own face.
EmbeddedGraph torus_with_petal() {
    return EmbeddedGraph(1, {{0, 0}, {0, 0}, {0, 0}}, {{d(0, 0), d(1, 0), d(0, 1), d(1, 1), d(2, 0), d(2, 1)}});
}

}  // namespace

TEST_CASE("boundary basis dimensions") {
    CHECK(boundary_basis(fixture::triangle()).size() == 1);
    CHECK(boundary_basis(fixture::torus_bouquet()).size() == 0);
    CHECK(boundary_basis(fixture::theta()).size() == 2);
    for (const EmbeddedGraph& g : {fixture::k33_torus(), fixture::genus2_bouquet(), fixture::digon()}) {
        CHECK(boundary_basis(g).size() == trace_facial_walks(g).size() - 1);
    }
}

TEST_CASE("homology needs a connected host") {
    const EmbeddedGraph two(2, {{0, 0}, {1, 1}}, {{d(0, 0), d(0, 1)}, {d(1, 0), d(1, 1)}});
    CHECK_THROWS_AS(HomologyOracle{two}, Error);
}

TEST_CASE("is_ns_circuit: face boundaries, torus loop, sums of boundaries") {
    const EmbeddedGraph t = fixture::theta();
    for (const auto& w : trace_facial_walks(t)) {
        CHECK_FALSE(is_ns_circuit(t, Circuit{w.darts}));
    }
    // Edges 0 and 2 together: the sum of two face boundaries.
    CHECK_FALSE(is_ns_circuit(t, Circuit{{d(0, 0), d(2, 1)}}));

    const EmbeddedGraph torus = fixture::torus_bouquet();
    CHECK(is_ns_circuit(torus, Circuit{{d(0, 0)}}));
    CHECK(is_ns_circuit(torus, Circuit{{d(1, 0)}}));
    CHECK_FALSE(is_ns_circuit(torus, Circuit{trace_facial_walks(torus)[0].darts}));

    const EmbeddedGraph p = torus_with_petal();
    CHECK_FALSE(is_ns_circuit(p, Circuit{{d(2, 0)}}));
}

TEST_CASE("find_ns_cycle") {
    const Circuit c = find_ns_cycle(fixture::torus_bouquet());
    REQUIRE(c.length() == 1);
    CHECK(c.darts[0].edge() <= 1);

    const Circuit c2 = find_ns_cycle(fixture::genus2_bouquet());
    CHECK(c2.length() == 1);
    CHECK(is_ns_circuit(fixture::genus2_bouquet(), c2));

    CHECK_THROWS_WITH_AS(find_ns_cycle(fixture::theta()), "no ns-cycle exists", Error);
    CHECK_THROWS_AS(find_ns_cycle(fixture::triangle()), Error);
}

TEST_CASE("ns_subcycle: cycles come back unchanged, figure eight keeps the ns petal") {
    const EmbeddedGraph torus = fixture::torus_bouquet();
    const HomologyOracle ot(torus);
    const Circuit loop{{d(1, 0)}};
    CHECK(ns_subcycle(ot, loop).darts == loop.darts);

    const EmbeddedGraph p = torus_with_petal();
    const HomologyOracle op(p);
    const Circuit eight{{d(0, 0), d(2, 0)}};
    REQUIRE(is_circuit(p, eight));
    const Circuit petal = ns_subcycle(op, eight);
    CHECK(edges_of(petal) == std::set<int>{0});

    CHECK_THROWS_AS(ns_subcycle(op, Circuit{{d(2, 0)}}), Error);
}

TEST_CASE("three_trail_select: preconditions") {
    const EmbeddedGraph th = fixture::theta();
    const HomologyOracle o(th);
    const Trail a{0, 1, {d(0, 0)}};
    const Trail b{0, 1, {d(1, 0)}};
    const Trail c{0, 1, {d(2, 0)}};
    // Planar: a b^-1 bounds a face.
    CHECK_THROWS_AS(three_trail_select(o, a, b, c), Error);
    CHECK_THROWS_AS(three_trail_select(o, a, a, c), Error);
    const Trail wrong{1, 0, {d(2, 1)}};
    CHECK_THROWS_AS(three_trail_select(o, a, b, wrong), Error);
}

TEST_CASE("three_trail_select: both outcomes on the torus") {
    // Closed trails at the single vertex: loop a, loop b and the empty trail.
    const EmbeddedGraph torus = fixture::torus_bouquet();
    const HomologyOracle o(torus);
    const Trail a{0, 0, {d(0, 0)}};
    const Trail b{0, 0, {d(1, 0)}};
    const Trail none{0, 0, {}};
    // t1 = a, t2 = b, t3 = empty: a is ns and b^-1 is ns; equal rank, ties to t1 t3^-1.
    const TrailChoice ch = three_trail_select(o, a, b, none);
    CHECK(ch.picked_first);
    CHECK(ch.first_ns);
    CHECK(ch.second_ns);

    // t1 = a, t2 = empty, t3 = b: a b^-1 is ns, b is ns.
    const TrailChoice ch2 = three_trail_select(o, a, none, b);
    CHECK(o.is_ns_circuit(ch2.circuit));
}

TEST_CASE("property: null-homology agrees with the dual colouring oracle") {
    Rng rng(17);
    int ns = 0;
    int null = 0;
    for (int it = 0; it < 800; ++it) {
        const EmbeddedGraph g = random_embedded_graph(rng, 1 + pick(rng, 6), 5 + pick(rng, 11), pick(rng, 4));
        const HomologyOracle o(g);
        const auto c = trails::random_circuit(rng, g);
        if (!c) continue;
        REQUIRE(is_circuit(g, *c));
        const bool lib = o.is_ns_circuit(*c);
        CHECK(lib == !oracle::null_homologous(g, chain(g, c->darts)));
        (lib ? ns : null) += 1;
        if (is_cycle(g, *c)) {
            // A simple cycle separates iff it bounds.
            const bool separates = oracle::region_count(g, chain(g, c->darts), std::nullopt) >= 2;
            CHECK(lib == !separates);
        }
    }
    CHECK(ns > 50);
    CHECK(null > 50);
}

TEST_CASE("property: find_ns_cycle and ns_subcycle") {
    Rng rng(23);
    for (int it = 0; it < 400; ++it) {
        const EmbeddedGraph g = random_embedded_graph(rng, 1 + pick(rng, 6), 5 + pick(rng, 11), 1 + pick(rng, 3));
        if (graph_genus(g) == 0) continue;
        const HomologyOracle o(g);
        const Circuit seed = find_ns_cycle(o);
        CHECK(is_cycle(g, seed));
        CHECK_FALSE(oracle::null_homologous(g, chain(g, seed.darts)));

        const auto c = trails::random_circuit(rng, g);
        if (!c || !o.is_ns_circuit(*c)) continue;
        std::vector<int> colour(static_cast<std::size_t>(g.edge_count()));
        for (auto& x : colour) x = pick(rng, 3);
        const Circuit sub = ns_subcycle(o, *c);
        CHECK(is_cycle(g, sub));
        CHECK(o.is_ns_circuit(sub));
        const auto inner = edges_of(sub);
        const auto outer = edges_of(*c);
        CHECK(std::includes(outer.begin(), outer.end(), inner.begin(), inner.end()));
        CHECK(circuit_rank(sub, colour) <= circuit_rank(*c, colour));
    }
}

TEST_CASE("property: three_trail_select picks an ns candidate, additivity holds") {
    Rng rng(31);
    int first_only = 0;
    int second_only = 0;
    int both = 0;
    for (int it = 0; it < 6000; ++it) {
        const EmbeddedGraph g = random_embedded_graph(rng, 1 + pick(rng, 5), 5 + pick(rng, 10), 1 + pick(rng, 2));
        const auto tr = trails::random_triple(rng, g);
        if (!tr) continue;
        const HomologyOracle o(g);
        const Circuit c12 = close(concat(tr->t1, tr->t2.reversed()));
        const Circuit c13 = close(concat(tr->t1, tr->t3.reversed()));
        const Circuit c32 = close(concat(tr->t3, tr->t2.reversed()));
        Gf2Vector sum = edge_vector(g, c13);
        sum += edge_vector(g, c32);
        CHECK(sum == edge_vector(g, c12));
        if (!o.is_ns_circuit(c12)) continue;
        std::vector<int> colour(static_cast<std::size_t>(g.edge_count()));
        for (auto& x : colour) x = pick(rng, 3);
        const TrailChoice ch = three_trail_select(o, tr->t1, tr->t2, tr->t3, colour);
        CHECK(o.is_ns_circuit(ch.circuit));
        CHECK(ch.first_ns == o.is_ns_circuit(c13));
        CHECK(ch.second_ns == o.is_ns_circuit(c32));
        if (ch.first_ns && ch.second_ns) {
            ++both;
            const int r1 = circuit_rank(c13, colour);
            const int r2 = circuit_rank(c32, colour);
            CHECK(ch.picked_first == (r1 <= r2));
        } else if (ch.first_ns) {
            ++first_only;
            CHECK(ch.picked_first);
        } else {
            ++second_only;
            CHECK_FALSE(ch.picked_first);
        }
    }
    CHECK(first_only > 10);
    CHECK(second_only > 10);
    CHECK(both > 10);
}
