#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surfwit/cluster.hpp"
#include "surfwit/faces.hpp"
#include "surfwit/homology.hpp"

namespace surfwit {

/// One entry of a witness trace.
struct ProofStep {
    std::string rule;
    std::vector<int> colors;
    int genus_before = 0;
    int genus_after = 0;
    std::string detail;
};

std::string format_step(const ProofStep& s);

// ---------------------------------------------------------------------------
// Rank reduction for clusters anchored at a single vertex.

struct HornsRound {
    int rank_before = 0;
    int rank_after = 0;
    std::string branch;
};

struct HornsResult {
    Circuit cycle;               // an ns-cycle of rank <= 2
    std::vector<int> colors;     // its colours, ascending
    Circuit seed;                // the cycle the reduction started from
    std::vector<HornsRound> rounds;
};

/// Finds an ns-cycle using at most two colours. The anchor must be a single
/// vertex and the host must have positive genus. Every round is checked to
/// lower the rank; a failed check throws std::logic_error.
HornsResult prop_horns(const Cluster& c);

// ---------------------------------------------------------------------------
// Anchor with a degenerate face.

struct TubeResult {
    std::vector<int> colors;     // 1 or 2 member colours
    int face = -1;               // index of the anchor face used
    bool single_piece = false;   // one piece joined two walks
    Trail path;                  // the walk-joining path, host darts
    int genus_before = 0;
    int genus_after = 0;         // genus of anchor + colors
};

/// Adds at most two members to an anchor that has a degenerate face and
/// raises its genus. Throws Error when no anchor face is degenerate or the
/// anchor already has the full genus.
TubeResult lemma_tube(const Cluster& c);

// ---------------------------------------------------------------------------
// Anchor whose faces are all non-degenerate.

enum class HornsOutcome { GenusUp, DegenerateFace };

enum class LiftKind {
    FacePath,        // path through the face between two boundary vertices
    TouchingCycle,   // cycle meeting the boundary in one vertex
    InteriorCycle,   // cycle inside the face plus a connector path
};

struct Horns2Result {
    std::vector<int> colors;          // 1 or 2 member colours
    HornsOutcome outcome = HornsOutcome::GenusUp;
    LiftKind lift = LiftKind::FacePath;
    int face = -1;
    std::vector<int> structure_edges; // edges of the lifted structure L
    HornsResult horns;                // result on the contracted face
    int genus_before = 0;
    int genus_after = 0;              // genus of anchor + colors
    int sequence_length = 0;          // number of edge additions L_0 .. L_m
};

/// Adds at most two members so that either the genus rises or the result has
/// a degenerate face. Requires every anchor face to be non-degenerate.
Horns2Result lemma_horns2(const Cluster& c);

// ---------------------------------------------------------------------------

struct MainLemmaResult {
    std::vector<int> colors;          // at most 4 member colours, ascending
    int genus_before = 0;
    int genus_after = 0;
    std::vector<ProofStep> steps;
};

/// At most four members whose addition raises the anchor's genus. Throws
/// Error("nothing to witness") when the anchor already has the full genus.
MainLemmaResult theorem_mainlemma(const Cluster& c);

struct WitnessOptions {
    bool strong = false;
};

struct WitnessResult {
    std::vector<int> colors;     // every colour whose edges form the witness
    int size = 0;                // members counted, the anchor as one
    int achieved_genus = 0;
    std::vector<ProofStep> trace;
};

/// Members (anchor included) whose union has genus > g, at most 4g+5 of them
/// (4g+4 with the strong base case). Throws Error when the whole union has
/// genus <= g.
WitnessResult main_theorem_witness(const Cluster& c, int g, WitnessOptions options = {});

/// Smallest set of at most four members (by size, then lexicographically)
/// with positive genus.
std::vector<int> strong_base_case(const Cluster& c);

struct BruteForceOptions {
    bool require_anchor = true;
    unsigned threads = 0;        // 0: hardware concurrency
};

struct BruteForceResult {
    std::vector<int> colors;
    int size = 0;
};

/// Minimum-size set of members with genus > g, searching sizes 1..max_size
/// in order and lexicographically within a size. The anchor counts as one
/// member; with require_anchor it is always included.
std::optional<BruteForceResult> brute_force_witness(const Cluster& c, int g, int max_size,
                                                    BruteForceOptions options = {});

/// Members counted the way witness sizes are: anchor as one, plus the
/// non-anchor colours listed.
int witness_size(const Cluster& c, std::span<const int> colors);

}  // namespace surfwit
