#pragma once

#include "tsc/builders.hpp"
#include "tsc/gf2.hpp"
#include "tsc/hypergraph.hpp"
#include "tsc/pauli.hpp"

namespace tsc {

struct HomologyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Homology classes of hypercycles are read off through the triangle-sharing
// pairing against the recorded probe hypercycles: two loop operators commute
// iff they share an even number of triangles, so the pairing is intrinsic and
// constant on classes. A cycle is trivial iff it pairs to zero with every probe.
std::vector<std::vector<int>> probe_edge_sets(const FaceRegistry& reg);

BitVec homology_class(const Hypergraph& h, const std::vector<std::vector<int>>& probes,
                      const std::vector<int>& cycle_edges);
bool is_trivial(const Hypergraph& h, const std::vector<std::vector<int>>& probes,
                const std::vector<int>& cycle_edges);

struct HomologyDecomposition {
    std::vector<BitVec> cycle_basis;     // over edge indices
    std::vector<BitVec> boundary_basis;  // pairing-kernel inside the cycle space
    int h1_dim = 0;
};
HomologyDecomposition boundary_space(const Hypergraph& h,
                                     const std::vector<std::vector<int>>& probes);

struct ClassWitness {
    BitVec coords;            // over probes
    long long triangles = 0;  // |M  intersect  E3|
    std::vector<int> edges;   // a witness hypercycle
};

struct MinTrianglesResult {
    bool proven = true;       // false when the search budget ran out
    long long l = -1;         // minimum over all nontrivial classes
    std::vector<ClassWitness> classes;
};

// Exact minimum number of rank-3 edges in a homologically nontrivial
// hypercycle, by enumerating the triangle-pattern space (rank-2-only cycles
// carry no weight and factor out).
MinTrianglesResult min_triangles_nontrivial(const Hypergraph& h,
                                            const std::vector<std::vector<int>>& probes,
                                            long long budget = (1ll << 24));

// Shortest homologically nontrivial cycle in the dual of the source map,
// counted in edges.
long long shortest_noncontractible_dual_cycle(const CombinatorialMap& source);

struct BombinBounds {
    long long d_t = -1;  // triangle upper bound
    long long d_l = -1;  // dual-girth lower bound
    bool proven = true;
};
BombinBounds bombin_bounds(const BuildResult& build);

}  // namespace tsc
