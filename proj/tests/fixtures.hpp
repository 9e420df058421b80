#pragma once

#include "tsc/hypergraph.hpp"
#include "tsc/pauli.hpp"

// Small hand-built hypergraphs and operator pools used across the tests.
namespace fixtures {

using tsc::Color;
using tsc::Hypergraph;

// two triangles joined by a twisted 6-cycle of links; valid (H1)..(H5)
inline Hypergraph prism6() {
    Hypergraph h;
    h.vertex_count = 6;
    h.e3 = {{0, 1, 2}, {3, 4, 5}};
    h.e2 = {{0, 3, Color::R}, {0, 4, Color::G}, {1, 4, Color::R},
            {1, 5, Color::G}, {2, 5, Color::R}, {2, 3, Color::G}};
    return h;
}

// four triangles on three 4-rings of links
inline Hypergraph ring12() {
    Hypergraph h;
    h.vertex_count = 12;
    h.e3 = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}};
    auto ring = [&](int a, int b, int c, int d) {
        h.e2.push_back({a, b, Color::R});
        h.e2.push_back({b, c, Color::G});
        h.e2.push_back({c, d, Color::R});
        h.e2.push_back({d, a, Color::G});
    };
    ring(0, 3, 6, 9);
    ring(1, 4, 7, 10);
    ring(2, 5, 8, 11);
    return h;
}

// K4 with a Tait coloring; all rank 2, encodes nothing
inline Hypergraph k4() {
    Hypergraph h;
    h.vertex_count = 4;
    h.e2 = {{0, 1, Color::R}, {2, 3, Color::R}, {0, 2, Color::G},
            {1, 3, Color::G}, {0, 3, Color::B}, {1, 2, Color::B}};
    return h;
}

inline std::vector<std::pair<int, int>> petersen_edges() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) e.push_back({i, (i + 1) % 5});        // outer C5
    for (int i = 0; i < 5; ++i) e.push_back({5 + i, 5 + (i + 2) % 5});  // pentagram
    for (int i = 0; i < 5; ++i) e.push_back({i, 5 + i});              // spokes
    return e;
}

// The measurement pools of the reference green-face example on {10,8,4}:
// 8 triangles around an octagon. Case (a) has no extra vertices, (b) one,
// (c) two. Qubits renumbered to 0-based.
inline std::vector<tsc::Link> syndrome_pool_a() {
    using tsc::Link;
    using tsc::PauliVector;
    auto link = [](int n, char t, int a, int b) {
        PauliVector p(n);
        if (t == 'X' || t == 'Y') { p.x.set(a); p.x.set(b); }
        if (t == 'Z' || t == 'Y') { p.z.set(a); p.z.set(b); }
        return Link{p, a, b, -1};
    };
    int n = 24;
    std::vector<tsc::Link> pool;
    for (auto [a, b] : {std::pair{0, 1}, {3, 4}, {6, 7}, {9, 10}, {12, 13},
                        {15, 16}, {18, 19}, {21, 22}})
        pool.push_back(link(n, 'Z', a, b));
    for (auto [a, b] : {std::pair{0, 22}, {4, 6}, {10, 12}, {16, 18}})
        pool.push_back(link(n, 'X', a, b));
    for (auto [a, b] : {std::pair{1, 3}, {7, 9}, {13, 15}, {19, 21}})
        pool.push_back(link(n, 'Y', a, b));
    for (auto [a, b] : {std::pair{2, 23}, {5, 8}, {11, 14}, {17, 20}})
        pool.push_back(link(n, 'X', a, b));
    return pool;
}

// one new vertex (qubit 24) splits the crossing edge (22,0): 21 links
inline std::vector<tsc::Link> syndrome_pool_b() {
    using tsc::PauliVector;
    auto pool = syndrome_pool_a();
    for (auto& l : pool) {
        PauliVector p(25);
        for (int i = 0; i < 24; ++i) {
            if (l.op.x.get(i)) p.x.set(i);
            if (l.op.z.get(i)) p.z.set(i);
        }
        l.op = p;
    }
    // replace X(0,22) by X(22,24), Y(24,0)
    std::vector<tsc::Link> out;
    for (auto& l : pool) {
        if ((l.a == 0 && l.b == 22) || (l.a == 22 && l.b == 0)) continue;
        out.push_back(l);
    }
    auto link = [](int n, char t, int a, int b) {
        PauliVector p(n);
        if (t == 'X' || t == 'Y') { p.x.set(a); p.x.set(b); }
        if (t == 'Z' || t == 'Y') { p.z.set(a); p.z.set(b); }
        return tsc::Link{p, a, b, -1};
    };
    out.push_back(link(25, 'X', 22, 24));
    out.push_back(link(25, 'Y', 24, 0));
    return out;
}

// two new vertices (24 on (22,0), 25 on (4,6)): 22 links
inline std::vector<tsc::Link> syndrome_pool_c() {
    using tsc::PauliVector;
    auto pool = syndrome_pool_b();
    for (auto& l : pool) {
        PauliVector p(26);
        for (int i = 0; i < 25; ++i) {
            if (l.op.x.get(i)) p.x.set(i);
            if (l.op.z.get(i)) p.z.set(i);
        }
        l.op = p;
    }
    std::vector<tsc::Link> out;
    for (auto& l : pool) {
        if ((l.a == 4 && l.b == 6) || (l.a == 6 && l.b == 4)) continue;
        out.push_back(l);
    }
    auto link = [](int n, char t, int a, int b) {
        PauliVector p(n);
        if (t == 'X' || t == 'Y') { p.x.set(a); p.x.set(b); }
        if (t == 'Z' || t == 'Y') { p.z.set(a); p.z.set(b); }
        return tsc::Link{p, a, b, -1};
    };
    out.push_back(link(26, 'Y', 4, 25));
    out.push_back(link(26, 'X', 25, 6));
    return out;
}

inline tsc::PauliVector pool_product(const std::vector<tsc::Link>& pool) {
    tsc::PauliVector p(pool.front().op.n);
    for (const auto& l : pool) p *= l.op;
    return p;
}

}  // namespace fixtures
