#include <doctest.h>

#include <algorithm>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "surfwit/arrangement.hpp"

using namespace surfwit;

namespace {

// Two loops at one vertex that touch without crossing.
const char* kTangent = "V 1\nE 2\nanchor 0\nedge 0 0 0 0\nedge 1 0 0 1\nrot 0 0.0 0.1 1.0 1.1\n";

// Three circles through the same two points.
const char* kTriple =
    "V 2\nE 6\nanchor 0\n"
    "edge 0 0 1 0\nedge 1 1 0 0\nedge 2 0 1 1\nedge 3 1 0 1\nedge 4 0 1 2\nedge 5 1 0 2\n"
    "rot 0 0.0 2.0 4.0 1.1 3.1 5.1\nrot 1 0.1 2.1 4.1 1.0 3.0 5.0\n";

// Circle 1 is two loops, one at each end of the anchor.
const char* kSplitMember =
    "V 2\nE 4\nanchor 0\nedge 0 0 1 0\nedge 1 1 0 0\nedge 2 0 0 1\nedge 3 1 1 1\n"
    "rot 0 0.0 2.0 1.1 2.1\nrot 1 0.1 3.0 1.0 3.1\n";

std::string message_of(const char* text) { return validate_arrangement(parse_graph_string(text).cluster()).message; }

int oracle_genus(const Arrangement& a, const std::vector<int>& circles) {
    std::vector<char> keep(static_cast<std::size_t>(a.graph().edge_count()), 0);
    for (int e = 0; e < a.graph().edge_count(); ++e) {
        const int col = a.cluster().color_of(e);
        keep[static_cast<std::size_t>(e)] = std::find(circles.begin(), circles.end(), col) != circles.end();
    }
    return oracle::genus(a.graph(), keep);
}

bool oracle_subsets_embeddable(const Arrangement& a, int size, int g) {
    const auto& cs = a.circles();
    const int n = static_cast<int>(cs.size());
    if (oracle_genus(a, cs) <= g || size >= n) return false;
    for (unsigned m = 0; m < (1u << n); ++m) {
        if (__builtin_popcount(m) != size) continue;
        std::vector<int> sub;
        for (int i = 0; i < n; ++i) {
            if (m >> i & 1u) sub.push_back(cs[static_cast<std::size_t>(i)]);
        }
        if (oracle_genus(a, sub) > g) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("two circles crossing twice") {
    const Arrangement a = read_arrangement(fixture::corpus_path("two_circles.graph"));
    CHECK(a.size() == 2);
    CHECK(a.genus() == 0);
    CHECK(is_strong(a));
    CHECK(embeddable_into(a, 0));
    CHECK_THROWS_WITH_AS(helly_witness(a, 0), "arrangement already embeddable into genus 0", Error);
}

TEST_CASE("validate_arrangement messages") {
    CHECK(message_of(kSplitMember) == "member not a cycle: circle 1");
    const Cluster two_anchor(parse_graph_string(kTriple).graph, {0, 0, 1, 1, 2, 2}, AnchorSpec{{0, 1}, std::nullopt});
    CHECK(validate_arrangement(two_anchor).message == "anchor must be a single circle");
    CHECK_THROWS_AS(parse_arrangement(kSplitMember), Error);
    // A vertex of degree 2 lying on one circle only.
    const char* lonely =
        "V 3\nE 5\nanchor 0\nedge 0 0 1 0\nedge 1 1 2 0\nedge 2 2 0 0\nedge 3 0 1 1\nedge 4 1 0 1\n"
        "rot 0 0.0 3.0 2.1 4.1\nrot 1 0.1 4.0 1.0 3.1\nrot 2 1.1 2.0\n";
    CHECK(message_of(lonely) == "vertex 2 lies on fewer than two circles");
}

TEST_CASE("strong: tangency and triple points are excluded") {
    const Arrangement tangent = parse_arrangement(kTangent);
    CHECK(tangent.genus() == 0);
    CHECK_FALSE(is_strong(tangent));
    const Arrangement triple = parse_arrangement(kTriple);
    CHECK_FALSE(is_strong(triple));
    CHECK(is_strong(read_arrangement(fixture::corpus_path("strong4.graph"))));
}

TEST_CASE("serialize_arrangement round trip") {
    const Arrangement a = read_arrangement(fixture::corpus_path("tight5.graph"));
    const Arrangement b = parse_arrangement(serialize_arrangement(a));
    CHECK(b.graph() == a.graph());
    CHECK(serialize_arrangement(b) == serialize_arrangement(a));
}

TEST_CASE("tight examples from the corpus") {
    const Arrangement five = read_arrangement(fixture::corpus_path("tight5.graph"));
    CHECK(five.size() == 5);
    CHECK_FALSE(embeddable_into(five, 0));
    CHECK(embeddable_into(five, 1));
    CHECK(every_subset_embeddable(five, 4, 0));
    const WitnessResult w = helly_witness(five, 0);
    CHECK(w.size == 5);
    CHECK(five.genus_of(w.colors) >= 1);

    const Arrangement four = read_arrangement(fixture::corpus_path("strong4.graph"));
    CHECK(four.size() == 4);
    CHECK(four.genus() >= 1);
    CHECK(every_subset_embeddable(four, 3, 0));
    const WitnessResult ws = helly_witness(four, 0);
    CHECK(ws.size == 4);
}

TEST_CASE("generate_random: deterministic, valid, goal coverage") {
    CHECK(serialize_arrangement(generate_random(5, 2, 11)) == serialize_arrangement(generate_random(5, 2, 11)));
    CHECK_THROWS_AS(generate_random(1, 0, 1), Error);
    CHECK_THROWS_AS(generate_random(3, -1, 1), Error);

    for (bool strong : {false, true}) {
        std::vector<int> hist(3, 0);
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            const Arrangement a = generate_random(4 + static_cast<int>(seed % 3), 2, seed, GenerateOptions{strong});
            CHECK(validate_arrangement(a.cluster()).ok);
            CHECK(a.genus() == oracle_genus(a, a.circles()));
            REQUIRE(a.genus() <= 2);
            ++hist[static_cast<std::size_t>(a.genus())];
            if (strong) CHECK(is_strong(a));
        }
        for (int h : hist) CHECK(h > 10);
    }
}

TEST_CASE("search_tight_example and search_strong_tight_example") {
    const SearchResult r = search_tight_example(5);
    REQUIRE(r.found);
    CHECK(r.best_score == 0);
    CHECK(r.arrangement->size() == 5);
    CHECK(r.arrangement->genus() == 1);
    CHECK(oracle_subsets_embeddable(*r.arrangement, 4, 0));

    const SearchResult s = search_strong_tight_example(2);
    REQUIRE(s.found);
    CHECK(is_strong(*s.arrangement));
    CHECK(oracle_subsets_embeddable(*s.arrangement, 3, 0));

    const SearchResult tiny = search_tight_example(5, 3);
    CHECK_FALSE(tiny.found);
    CHECK(tiny.best_score > 0);
    CHECK(tiny.arrangement.has_value());
}

TEST_CASE("property: subset embeddability and witness sizes against the oracles") {
    int positive = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const bool strong = seed % 2 == 0;
        const Arrangement a = generate_random(3 + static_cast<int>(seed % 4), 2, seed, GenerateOptions{strong});
        for (int g = 0; g <= 1; ++g) {
            CHECK(embeddable_into(a, g) == (oracle_genus(a, a.circles()) <= g));
            for (int k = 1; k < a.size(); ++k) {
                CHECK(every_subset_embeddable(a, k, g) == oracle_subsets_embeddable(a, k, g));
            }
            if (embeddable_into(a, g)) continue;
            ++positive;
            const WitnessResult w = helly_witness(a, g);
            CHECK(w.size <= 4 * g + (strong ? 4 : 5));
            CHECK(oracle_genus(a, w.colors) > g);
            const auto best = oracle::min_witness_size(a.cluster(), g, a.size(), false);
            REQUIRE(best);
            CHECK(*best <= w.size);
        }
    }
    CHECK(positive > 20);
}
