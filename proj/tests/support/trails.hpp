#pragma once

// Random trails for homology tests.

#include <optional>
#include <vector>

#include "surfwit/generators.hpp"
#include "surfwit/homology.hpp"

namespace trails {

/// Random walk from `s` over edges not yet `used`, stopping at `t` (with
/// probability one half each visit after the first step). Marks the edges it
/// takes. Fails when it gets stuck or runs too long.
std::optional<surfwit::Trail> random_trail(surfwit::Rng& rng, const surfwit::EmbeddedGraph& g, int s, int t,
                                           std::vector<char>& used);

struct Triple {
    surfwit::Trail t1, t2, t3;
};

/// Three pairwise edge-disjoint trails with common ends, or nothing.
std::optional<Triple> random_triple(surfwit::Rng& rng, const surfwit::EmbeddedGraph& g);

/// A random circuit (closed trail) or nothing.
std::optional<surfwit::Circuit> random_circuit(surfwit::Rng& rng, const surfwit::EmbeddedGraph& g);

}  // namespace trails
