#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surfwit/cluster.hpp"
#include "surfwit/witness.hpp"

namespace surfwit {

/// A cluster whose members are cycles (pseudocircles), anchored at one
/// circle that meets all the others.
class Arrangement {
public:
    /// Throws Error naming the violated condition.
    explicit Arrangement(Cluster c);

    const Cluster& cluster() const { return cluster_; }
    const EmbeddedGraph& graph() const { return cluster_.host(); }
    int anchor_circle() const { return cluster_.anchor().colors.front(); }
    const std::vector<int>& circles() const { return cluster_.colors(); }
    int size() const { return static_cast<int>(circles().size()); }

    /// Genus of the subarrangement formed by `circles`.
    int genus_of(std::span<const int> circles) const;
    int genus() const { return genus_sum(graph()); }

private:
    Cluster cluster_;
};

/// Checks the arrangement conditions: single anchor circle, every colour
/// class a cycle, the anchor meeting every circle, every vertex on at least
/// two circles.
ValidationReport validate_arrangement(const Cluster& c);

Arrangement parse_arrangement(const std::string& text);
Arrangement read_arrangement(const std::string& path);
std::string serialize_arrangement(const Arrangement& a);

/// Degree-4 vertices on exactly two circles, all crossings, and every pair
/// of circles meeting exactly twice.
bool is_strong(const Arrangement& a);

bool embeddable_into(const Arrangement& a, int g);

/// Subarrangement of genus > g with at most 4g+5 circles (4g+4 if strong).
WitnessResult helly_witness(const Arrangement& a, int g);

struct GenerateOptions {
    bool strong = false;
    int max_attempts = 400;
};

/// Deterministic per seed. Draws an intersection pattern around an anchor
/// circle, random rotations, then steers the genus toward a goal drawn
/// uniformly from [0, target_genus]. Throws Error("generation budget
/// exhausted") if no valid draw reaches the goal.
Arrangement generate_random(int circles, int target_genus, std::uint64_t seed, GenerateOptions options = {});

struct SearchResult {
    bool found = false;
    std::optional<Arrangement> arrangement;  // best candidate seen
    int attempts = 0;
    int best_score = 0;  // 0 when found
};

/// Local search for five circles with genus 1 whose 4-subsets all have
/// genus 0. Reports the best candidate when the budget runs out.
SearchResult search_tight_example(std::uint64_t seed, int budget = 200000);

/// Local search for a strong arrangement of four circles with positive
/// genus whose 3-subsets are all planar.
SearchResult search_strong_tight_example(std::uint64_t seed, int budget = 200000);

/// True when every subarrangement of `size` circles has genus <= g while the
/// whole arrangement has genus > g.
bool every_subset_embeddable(const Arrangement& a, int size, int g);

}  // namespace surfwit
