#include <doctest.h>

#include <algorithm>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "surfwit/faces.hpp"
#include "surfwit/generators.hpp"

using namespace surfwit;

TEST_CASE("faces: keeping every edge leaves only discs") {
    const EmbeddedGraph g = fixture::k33_torus();
    std::vector<int> all(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) all[static_cast<std::size_t>(e)] = e;
    const auto faces = face_structure(g, all);
    CHECK(faces.size() == trace_facial_walks(g).size());
    for (const Face& f : faces) {
        CHECK(f.genus == 0);
        CHECK(f.degeneracy == 0);
        CHECK(f.host_faces.size() == 1);
    }
}

TEST_CASE("faces: torus bouquet keeping loop a gives one annulus") {
    const std::vector<int> a{0};
    const auto faces = face_structure(fixture::torus_bouquet(), a);
    REQUIRE(faces.size() == 1);
    CHECK(faces[0].genus == 0);
    CHECK(faces[0].degeneracy == 1);
    CHECK(faces[0].walks.size() == 2);
}

TEST_CASE("faces: torus bouquet keeping only the vertex gives a punctured torus") {
    const auto faces = face_structure(fixture::torus_bouquet(), {}, 0);
    REQUIRE(faces.size() == 1);
    CHECK(faces[0].genus == 1);
    CHECK(faces[0].degeneracy == 0);
}

TEST_CASE("faces: empty subgraph needs a vertex") {
    CHECK_THROWS_AS(face_structure(fixture::torus_bouquet(), {}), Error);
}

TEST_CASE("faces: disconnected subgraph is rejected") {
    const EmbeddedGraph g = fixture::k33_torus();
    // Edges 0 (0-3) and 4 (1-4) share no vertex.
    const std::vector<int> apart{0, 4};
    CHECK_THROWS_AS(face_structure(g, apart), Error);
}

TEST_CASE("euler identity: the three small cases") {
    const EmbeddedGraph t = fixture::torus_bouquet();
    const std::vector<int> all{0, 1};
    const EulerCheck cellular = euler_identity_check(t, all);
    CHECK(cellular.ok);
    CHECK(cellular.face_sum == 0);
    CHECK(cellular.subgraph_genus == 1);

    const std::vector<int> a{0};
    const EulerCheck loop = euler_identity_check(t, a);
    CHECK(loop.ok);
    CHECK(loop.host_genus == 1);
    CHECK(loop.subgraph_genus == 0);
    CHECK(loop.face_sum == 1);

    const EulerCheck vertex = euler_identity_check(t, {}, 0);
    CHECK(vertex.ok);
    CHECK(vertex.face_sum == 1);
}

namespace {

Face make_face(int genus, int degeneracy) {
    Face f;
    f.genus = genus;
    f.degeneracy = degeneracy;
    f.walks.resize(static_cast<std::size_t>(degeneracy + 1));
    return f;
}

}  // namespace

TEST_CASE("find_degenerate_face and find_positive_genus_face") {
    const std::vector<Face> cellular{make_face(0, 0), make_face(0, 0)};
    CHECK_FALSE(find_degenerate_face(cellular));
    CHECK_FALSE(find_positive_genus_face(cellular));

    const std::vector<int> a{0};
    const auto loop_faces = face_structure(fixture::torus_bouquet(), a);
    const auto deg = find_degenerate_face(loop_faces);
    REQUIRE(deg);
    CHECK(deg->degeneracy == 1);

    const auto vertex_faces = face_structure(fixture::torus_bouquet(), {}, 0);
    const auto pos = find_positive_genus_face(vertex_faces);
    REQUIRE(pos);
    CHECK(pos->genus == 1);

    std::vector<Face> two{make_face(0, 0), make_face(0, 2), make_face(0, 1)};
    two[1].host_faces = {1};
    two[2].host_faces = {2};
    CHECK(find_degenerate_face(two)->host_faces == std::vector<int>{1});
    std::vector<Face> gtwo{make_face(0, 0), make_face(2, 0), make_face(1, 0)};
    gtwo[1].host_faces = {7};
    CHECK(find_positive_genus_face(gtwo)->host_faces == std::vector<int>{7});
}

TEST_CASE("faces: an instance with a genus-1 disc face and a genus-0 annulus") {
    // Searched with a fixed seed: a genus-2 host and a connected subgraph
    // having one face of genus 1, degeneracy 0 and one of genus 0,
    // degeneracy 1.
    Rng rng(2024);
    bool found = false;
    for (int it = 0; it < 20000 && !found; ++it) {
        const EmbeddedGraph g = random_embedded_graph(rng, 3 + pick(rng, 4), 8 + pick(rng, 6), 2);
        if (graph_genus(g) != 2) continue;
        int lone = 0;
        const auto sub = random_connected_edges(rng, g, g.edge_count() / 2, lone);
        if (sub.empty()) continue;
        const auto faces = face_structure(g, sub);
        const bool handle = std::any_of(faces.begin(), faces.end(), [](const Face& f) { return f.genus == 1 && f.degeneracy == 0; });
        const bool annulus = std::any_of(faces.begin(), faces.end(), [](const Face& f) { return f.genus == 0 && f.degeneracy == 1; });
        if (handle && annulus) {
            found = true;
            CHECK(euler_identity_check(g, sub).ok);
            CHECK(subgraph_genus(g, sub) == 0);
        }
    }
    CHECK(found);
}

TEST_CASE("property: face structure against the oracles") {
    Rng rng(99);
    int non_cellular = 0;
    for (int it = 0; it < 1500; ++it) {
        const int v = 1 + pick(rng, 10);
        const int e = std::max(v - 1, 1) + pick(rng, 30 - std::max(v - 1, 1));
        const EmbeddedGraph g = random_embedded_graph(rng, v, e, pick(rng, 4));
        int lone = 0;
        const auto sub = random_connected_edges(rng, g, e, lone);
        const std::optional<int> lv = sub.empty() ? std::optional<int>(lone) : std::nullopt;
        const FaceAnalysis fa = analyze_faces(g, sub, lv);
        const auto mask = oracle::mask_of(g, sub);

        // Euler identity, exact.
        int sum = 0;
        for (const Face& f : fa.faces) {
            sum += f.genus + f.degeneracy;
            CHECK(f.genus >= 0);
            CHECK(f.degeneracy == static_cast<int>(f.walks.size()) - 1);
            CHECK_FALSE(f.host_faces.empty());
        }
        const int host = graph_genus(g);
        const int sg = sub.empty() ? 0 : oracle::genus(g, mask);
        CHECK(host == sg + sum);
        CHECK(euler_identity_check(g, sub, lv).ok);

        // Regions and walks counted independently.
        CHECK(static_cast<int>(fa.faces.size()) == oracle::region_count(g, mask, lv));
        std::size_t walks = 0;
        for (const Face& f : fa.faces) walks += f.walks.size();
        const int expected_walks = sub.empty() ? 1 : oracle::face_count(g, mask);
        CHECK(static_cast<int>(walks) == expected_walks);

        // Host faces are partitioned.
        std::vector<int> seen(trace_facial_walks(g).size(), 0);
        for (const Face& f : fa.faces) {
            for (int h : f.host_faces) ++seen[static_cast<std::size_t>(h)];
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));

        if (sg < host) {
            ++non_cellular;
            CHECK(std::any_of(fa.faces.begin(), fa.faces.end(),
                              [](const Face& f) { return f.genus >= 1 || f.degeneracy >= 1; }));
        }
    }
    CHECK(non_cellular > 100);
}
