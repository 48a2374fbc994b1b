#include <doctest.h>

#include <algorithm>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "surfwit/arrangement.hpp"
#include "surfwit/faces.hpp"
#include "surfwit/generators.hpp"
#include "surfwit/witness.hpp"

using namespace surfwit;
using fixture::d;

namespace {

int genus_with(const Cluster& c, const std::vector<int>& colors) {
    std::vector<char> keep(static_cast<std::size_t>(c.host().edge_count()), 0);
    for (int e = 0; e < c.host().edge_count(); ++e) {
        const int col = c.color_of(e);
        keep[static_cast<std::size_t>(e)] =
            c.is_anchor_color(col) || std::find(colors.begin(), colors.end(), col) != colors.end();
    }
    return oracle::genus(c.host(), keep);
}

// Torus bouquet whose loop b is split at a new vertex into colours 1 and 2;
// loop a is the anchor (colour 0).
Cluster split_chord() {
    const EmbeddedGraph g(2, {{0, 0}, {0, 1}, {1, 0}}, {{d(0, 0), d(1, 0), d(0, 1), d(2, 1)}, {d(1, 1), d(2, 0)}});
    return Cluster(g, {0, 1, 2}, AnchorSpec::of_color(0));
}

// Genus-2 bouquet: loops 0,1 (one handle) are the anchor, loops 2,3 are member 1.
Cluster handle_anchor() { return Cluster(fixture::genus2_bouquet(), {0, 0, 1, 1}, AnchorSpec::of_color(0)); }

Cluster random_vertex_cluster(Rng& rng) {
    ClusterShape shape;
    shape.anchor_edges = 0;
    shape.members = 2 + pick(rng, 7);
    shape.max_member_edges = 2 + pick(rng, 4);
    return random_cluster(rng, shape, 1 + pick(rng, 3));
}

}  // namespace

TEST_CASE("prop_horns: torus bouquet is solved by the seed") {
    const Cluster c(fixture::torus_bouquet(), {1, 2}, AnchorSpec::of_vertex(0));
    const HornsResult r = prop_horns(c);
    CHECK(r.cycle.length() == 1);
    CHECK(r.colors.size() == 1);
    CHECK(r.rounds.empty());
    CHECK(is_ns_circuit(c.host(), r.cycle));
}

TEST_CASE("prop_horns: errors") {
    const Cluster planar(fixture::planar_bouquet(), {1, 2}, AnchorSpec::of_vertex(0));
    CHECK_THROWS_AS(prop_horns(planar), Error);
    CHECK_THROWS_AS(prop_horns(fixture::torus_loops_cluster()), Error);
}

TEST_CASE("prop_horns: an instance whose seed needs several colours") {
    Rng rng(77);
    bool found = false;
    for (int it = 0; it < 5000 && !found; ++it) {
        const Cluster c = random_vertex_cluster(rng);
        if (c.union_genus() == 0) continue;
        const HornsResult r = prop_horns(c);
        if (circuit_rank(r.seed, c.edge_color()) >= 3 && !r.rounds.empty()) {
            found = true;
            CHECK(is_ns_circuit(c.host(), r.cycle));
            CHECK(circuit_rank(r.cycle, c.edge_color()) <= 2);
            CHECK(r.colors.size() <= 2);
        }
    }
    CHECK(found);
}

TEST_CASE("property: prop_horns returns a short ns-cycle, rounds lower the rank") {
    Rng rng(78);
    int runs = 0;
    for (int it = 0; it < 300; ++it) {
        const Cluster c = random_vertex_cluster(rng);
        if (c.union_genus() == 0) continue;
        ++runs;
        const HornsResult r = prop_horns(c);
        CHECK(is_cycle(c.host(), r.cycle));
        std::vector<char> chain(static_cast<std::size_t>(c.host().edge_count()), 0);
        for (const Dart x : r.cycle.darts) chain[static_cast<std::size_t>(x.edge())] ^= 1;
        CHECK_FALSE(oracle::null_homologous(c.host(), chain));
        CHECK(circuit_rank(r.cycle, c.edge_color()) <= 2);
        for (const HornsRound& round : r.rounds) CHECK(round.rank_after < round.rank_before);
    }
    CHECK(runs > 100);
}

TEST_CASE("lemma_tube: a single chord joining the two walks") {
    const Cluster c(fixture::torus_bouquet(), {0, 1}, AnchorSpec::of_color(0));
    const TubeResult r = lemma_tube(c);
    CHECK(r.colors == std::vector<int>{1});
    CHECK(r.single_piece);
    CHECK(r.genus_before == 0);
    CHECK(r.genus_after == 1);
}

TEST_CASE("lemma_tube: two touching pieces on different walks") {
    const Cluster c = split_chord();
    REQUIRE(validate_cluster(c).ok);
    REQUIRE(c.union_genus() == 1);
    const TubeResult r = lemma_tube(c);
    CHECK(r.colors == std::vector<int>{1, 2});
    CHECK_FALSE(r.single_piece);
    CHECK(r.genus_after == 1);
    CHECK(genus_with(c, r.colors) == 1);
}

TEST_CASE("lemma_tube: needs a degenerate face") {
    CHECK_THROWS_AS(lemma_tube(handle_anchor()), Error);
    const Cluster full(fixture::torus_bouquet(), {0, 0}, AnchorSpec::of_color(0));
    CHECK_THROWS_AS(lemma_tube(full), Error);
}

TEST_CASE("property: lemma_tube raises the genus") {
    Rng rng(80);
    int runs = 0;
    for (int it = 0; it < 3000 && runs < 300; ++it) {
        ClusterShape shape;
        shape.members = 2 + pick(rng, 6);
        shape.anchor_edges = 1 + pick(rng, 4);
        const Cluster c = random_cluster(rng, shape, 1 + pick(rng, 3));
        if (c.anchor_genus() >= c.union_genus() || !has_degenerate_face(c.host(), c.anchor_edges())) continue;
        ++runs;
        const TubeResult r = lemma_tube(c);
        CHECK(r.colors.size() <= 2);
        CHECK(r.genus_after > r.genus_before);
        CHECK(genus_with(c, r.colors) == r.genus_after);
        CHECK(r.genus_before == c.anchor_genus());
    }
    CHECK(runs == 300);
}

TEST_CASE("lemma_horns2: one member filling the second handle") {
    const Cluster c = handle_anchor();
    REQUIRE(c.anchor_genus() == 1);
    const Horns2Result r = lemma_horns2(c);
    CHECK(r.colors == std::vector<int>{1});
    CHECK(r.outcome == HornsOutcome::GenusUp);
    CHECK(r.genus_after == 2);
}

TEST_CASE("lemma_horns2: rejects anchors with a degenerate face") {
    const Cluster c(fixture::torus_bouquet(), {0, 1}, AnchorSpec::of_color(0));
    CHECK_THROWS_AS(lemma_horns2(c), Error);
}

TEST_CASE("property: lemma_horns2 outcome is genus-up or a degenerate face") {
    Rng rng(81);
    int runs = 0;
    int genus_up = 0;
    for (int it = 0; it < 6000 && runs < 300; ++it) {
        ClusterShape shape;
        shape.members = 2 + pick(rng, 6);
        shape.anchor_edges = pick(rng, 4);
        const Cluster c = random_cluster(rng, shape, 1 + pick(rng, 3));
        const auto anchor = c.anchor_edges();
        if (c.anchor_genus() >= c.union_genus()) continue;
        if (!anchor.empty() && has_degenerate_face(c.host(), anchor)) continue;
        ++runs;
        const Horns2Result r = lemma_horns2(c);
        CHECK(r.colors.size() <= 2);
        std::vector<int> edges = c.edges_with_anchor(r.colors);
        const bool up = genus_with(c, r.colors) > c.anchor_genus();
        const bool degenerate = has_degenerate_face(c.host(), edges);
        CHECK((up || degenerate));
        if (r.outcome == HornsOutcome::GenusUp) {
            CHECK(up);
            ++genus_up;
        } else {
            CHECK(degenerate);
        }
        CHECK(r.horns.colors.size() <= 2);
    }
    CHECK(runs == 300);
    CHECK(genus_up > 0);
}

TEST_CASE("theorem_mainlemma: at most four colours and a genus gain") {
    const Cluster tube(fixture::torus_bouquet(), {0, 1}, AnchorSpec::of_color(0));
    CHECK(theorem_mainlemma(tube).colors.size() == 1);
    CHECK(theorem_mainlemma(handle_anchor()).colors == std::vector<int>{1});
    const Cluster full(fixture::torus_bouquet(), {0, 0}, AnchorSpec::of_color(0));
    CHECK_THROWS_WITH_AS(theorem_mainlemma(full), "nothing to witness", Error);

    Rng rng(82);
    int runs = 0;
    int via_horns_and_tube = 0;
    for (int it = 0; it < 3000 && runs < 300; ++it) {
        ClusterShape shape;
        shape.members = 2 + pick(rng, 7);
        shape.anchor_edges = pick(rng, 4);
        const Cluster c = random_cluster(rng, shape, 1 + pick(rng, 3));
        if (c.anchor_genus() >= c.union_genus()) continue;
        ++runs;
        const MainLemmaResult r = theorem_mainlemma(c);
        CHECK(r.colors.size() <= 4);
        CHECK(std::is_sorted(r.colors.begin(), r.colors.end()));
        CHECK(genus_with(c, r.colors) > c.anchor_genus());
        CHECK(r.genus_after == genus_with(c, r.colors));
        const bool horns = std::any_of(r.steps.begin(), r.steps.end(), [](const ProofStep& s) { return s.rule == "horns2"; });
        const bool tube_step = std::any_of(r.steps.begin(), r.steps.end(), [](const ProofStep& s) { return s.rule == "tube"; });
        if (horns && tube_step) ++via_horns_and_tube;
    }
    CHECK(runs == 300);
    CHECK(via_horns_and_tube > 0);
}

TEST_CASE("main_theorem_witness: base cases and errors") {
    const Cluster full(fixture::torus_bouquet(), {0, 1}, AnchorSpec::of_color(0));
    const Cluster anchored = merge_into_anchor(full, std::vector<int>{0, 1});
    const WitnessResult w = main_theorem_witness(anchored, 0);
    CHECK(w.size == 1);
    CHECK(w.achieved_genus == 1);

    const WitnessResult w2 = main_theorem_witness(full, 0);
    CHECK(w2.size <= 5);
    CHECK(w2.achieved_genus >= 1);

    CHECK_THROWS_AS(main_theorem_witness(full, 1), Error);
    CHECK(format_step(ProofStep{"tube", {1, 2}, 0, 1, ""}) == "step tube colors 1 2 gen 0->1");
}

TEST_CASE("main_theorem_witness: g = 1 on genus-2 hosts") {
    Rng rng(83);
    int runs = 0;
    for (int it = 0; it < 4000 && runs < 100; ++it) {
        ClusterShape shape;
        shape.members = 4 + pick(rng, 6);
        shape.anchor_edges = pick(rng, 4);
        const Cluster c = random_cluster(rng, shape, 2);
        if (c.union_genus() < 2) continue;
        ++runs;
        const WitnessResult w = main_theorem_witness(c, 1);
        CHECK(w.size <= 9);
        CHECK(w.achieved_genus >= 2);
        CHECK(genus_with(c, w.colors) == w.achieved_genus);
        CHECK(w.size == witness_size(c, w.colors));
    }
    CHECK(runs == 100);
}

TEST_CASE("strong_base_case") {
    const Arrangement strong = read_arrangement(fixture::corpus_path("strong4.graph"));
    REQUIRE(is_strong(strong));
    const std::vector<int> four = strong_base_case(strong.cluster());
    CHECK(four.size() == 4);
    const Arrangement two = read_arrangement(fixture::corpus_path("two_circles.graph"));
    CHECK_THROWS_AS(strong_base_case(two.cluster()), Error);

    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const Arrangement a = generate_random(4 + static_cast<int>(seed % 3), 2, seed, GenerateOptions{true});
        if (a.genus() == 0) continue;
        const std::vector<int> w = strong_base_case(a.cluster());
        CHECK(w.size() <= 4);
        CHECK(a.genus_of(w) > 0);
    }
}

TEST_CASE("brute_force_witness agrees with the independent enumeration") {
    Rng rng(84);
    for (int it = 0; it < 150; ++it) {
        ClusterShape shape;
        shape.members = 2 + pick(rng, 6);
        shape.anchor_edges = pick(rng, 4);
        const Cluster c = random_cluster(rng, shape, pick(rng, 3));
        const int g = pick(rng, 2);
        for (bool anchor : {true, false}) {
            const auto lib = brute_force_witness(c, g, 9, BruteForceOptions{anchor, 2});
            const auto ref = oracle::min_witness_size(c, g, 9, anchor);
            REQUIRE(lib.has_value() == ref.has_value());
            if (!lib) {
                CHECK(c.union_genus() <= g);
                continue;
            }
            CHECK(lib->size == *ref);
            CHECK(genus_with(c, lib->colors) > g);
            if (c.union_genus() > g && anchor) {
                const WitnessResult w = main_theorem_witness(c, g);
                CHECK(w.size >= lib->size);
                CHECK(lib->size <= 4 * g + 5);
            }
        }
    }
}
