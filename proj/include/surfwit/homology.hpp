#pragma once

#include <span>
#include <string>
#include <vector>

#include "surfwit/embedded_graph.hpp"
#include "surfwit/gf2.hpp"

namespace surfwit {

/// Walk with no repeated edge from `start` to `end`. Zero-length trails
/// (a single vertex) have start == end and no darts.
struct Trail {
    int start = 0;
    int end = 0;
    std::vector<Dart> darts;

    Trail reversed() const;
    bool empty() const { return darts.empty(); }
};

/// Closed trail, read cyclically.
struct Circuit {
    std::vector<Dart> darts;

    std::size_t length() const { return darts.size(); }
};

/// Checks consecutive darts meet head-to-tail and no edge repeats.
bool is_trail(const EmbeddedGraph& g, const Trail& t);
bool is_circuit(const EmbeddedGraph& g, const Circuit& c);
/// Circuit whose vertices (dart tails) are pairwise distinct.
bool is_cycle(const EmbeddedGraph& g, const Circuit& c);

/// t1 followed by t2; t1.end must equal t2.start.
Trail concat(const Trail& t1, const Trail& t2);
/// Closes a trail whose start equals its end.
Circuit close(const Trail& t);

Gf2Vector edge_vector(const EmbeddedGraph& g, std::span<const Dart> darts);
inline Gf2Vector edge_vector(const EmbeddedGraph& g, const Circuit& c) { return edge_vector(g, c.darts); }

/// Number of maximal single-colour runs around a circuit (1 when
/// monochromatic). Colours are looked up per edge id.
int circuit_rank(const Circuit& c, std::span<const int> edge_color);

std::string describe(const Circuit& c);

/// Z2 homology of a cellularly embedded connected host: a 1-cycle is
/// null-homologous iff it lies in the span of the face boundaries.
class HomologyOracle {
public:
    explicit HomologyOracle(const EmbeddedGraph& host);

    const EmbeddedGraph& host() const { return *host_; }
    /// Row-reduced basis of the face-boundary space; dimension |faces| - 1.
    std::vector<Gf2Vector> boundary_basis() const { return basis_.rows(); }
    std::size_t boundary_dimension() const { return basis_.dimension(); }

    bool is_null_homologous(const Gf2Vector& v) const { return basis_.contains(v); }
    bool is_ns(const Gf2Vector& v) const { return !is_null_homologous(v); }
    bool is_ns_circuit(const Circuit& c) const { return is_ns(edge_vector(*host_, c)); }

private:
    const EmbeddedGraph* host_;
    Gf2Basis basis_;
};

std::vector<Gf2Vector> boundary_basis(const EmbeddedGraph& host);
bool is_ns_circuit(const EmbeddedGraph& host, const Circuit& c);

/// First non-null-homologous fundamental cycle of the BFS tree from vertex 0
/// (least edge id first). Throws Error("no ns-cycle exists") on genus 0.
Circuit find_ns_cycle(const EmbeddedGraph& host);
Circuit find_ns_cycle(const HomologyOracle& oracle);

/// Repeatedly splits an ns-circuit at a repeated vertex, keeping an ns
/// part, until the remainder is a cycle. Throws Error if `c` is not ns.
Circuit ns_subcycle(const HomologyOracle& oracle, const Circuit& c);

struct TrailChoice {
    Circuit circuit;
    bool picked_first = true;  // true: t1 t3^-1, false: t3 t2^-1
    bool first_ns = false;
    bool second_ns = false;
};

/// Given edge-disjoint trails with common ends and t1 t2^-1 ns, returns an
/// ns candidate among t1 t3^-1 and t3 t2^-1. When both are ns the lower rank
/// wins (ranks need `edge_color`), ties go to t1 t3^-1.
TrailChoice three_trail_select(const HomologyOracle& oracle, const Trail& t1, const Trail& t2,
                               const Trail& t3, std::span<const int> edge_color = {});

}  // namespace surfwit
