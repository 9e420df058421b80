#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsc/gf2.hpp"
#include "tsc/hypergraph.hpp"

namespace tsc {

struct PauliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Phase-free n-qubit Pauli operator in symplectic form.
struct PauliVector {
    int n = 0;
    BitVec x, z;

    PauliVector() = default;
    explicit PauliVector(int qubits) : n(qubits), x(qubits), z(qubits) {}

    bool identity() const { return x.zero() && z.zero(); }
    int weight() const {
        int c = 0;
        for (size_t k = 0; k < x.w.size(); ++k)
            c += std::popcount(x.w[k] | z.w[k]);
        return c;
    }
    PauliVector& operator*=(const PauliVector& o) {
        x ^= o.x;
        z ^= o.z;
        return *this;
    }
    BitVec packed() const {  // [x | z] of length 2n
        BitVec v(2 * n);
        for (int i = 0; i < n; ++i) {
            if (x.get(i)) v.set(i);
            if (z.get(i)) v.set(n + i);
        }
        return v;
    }
    static PauliVector unpack(const BitVec& v, int n) {
        PauliVector p(n);
        for (int i = 0; i < n; ++i) {
            if (v.get(i)) p.x.set(i);
            if (v.get(n + i)) p.z.set(i);
        }
        return p;
    }
    std::string to_string() const;
    bool operator==(const PauliVector& o) const { return x == o.x && z == o.z; }
};

bool commutes(const PauliVector& a, const PauliVector& b);

// Link/triangle operators: R -> XX, G -> YY, B -> ZZ on rank-2 edges,
// ZZZ on rank-3 edges.
PauliVector edge_operator(const Hypergraph& h, int edge);

// A Pauli link of the derived ordinary graph: every rank-2 edge keeps its
// operator, every triangle contributes its three ZZ pairs.
struct Link {
    PauliVector op;
    int a, b;        // endpoints
    int from_edge;   // hypergraph edge id this link came from
};
std::vector<Link> gauge_links(const Hypergraph& h);

struct GroupAnalysis {
    int n = 0;
    long long dim_gauge = 0, s = 0, r = 0, k = 0;
    GF2Space gauge;        // span of link operators (packed 2n-bit rows)
    GF2Space centralizer;  // C(G)
    GF2Space stabilizer;   // S = G  intersect  C(G)
};

GroupAnalysis analyze_code(const Hypergraph& h);

PauliVector loop_operator(const Hypergraph& h, const std::vector<int>& cycle_edges);

// Basis of the hypercycle space (bit vectors over edge indices).
std::vector<BitVec> cycle_space(const Hypergraph& h);

// dim W(cycle space) == dim C(G)?
struct GloopCheck {
    bool ok;
    long long dim_image, dim_centralizer;
};
GloopCheck verify_gloop_identity(const Hypergraph& h);

// Ordering of link operators multiplying to `target` such that each factor
// commutes with the product of all preceding ones.
struct SyndromeOrder {
    bool feasible = false;
    bool exhausted_budget = false;    // search gave up, feasibility unknown
    std::vector<Link> order;
};
SyndromeOrder syndrome_order(const PauliVector& target, const std::vector<Link>& pool,
                             long long node_budget = 8'000'000);

// Measurement pool for a registry cycle: links of its own edges plus every
// other link supported inside the cycle's vertex support.
std::vector<Link> cycle_link_pool(const Hypergraph& h, const std::vector<int>& cycle_edges);

// Exact minimum weight over N(S) \ G by increasing-weight enumeration.
std::optional<int> brute_min_dressed_weight(const GroupAnalysis& a, int weight_cap);

}  // namespace tsc
