#include <doctest.h>

#include "fixtures.hpp"
#include "tsc/pauli.hpp"

using namespace tsc;

TEST_CASE("edge operators by color") {
    Hypergraph h;
    h.vertex_count = 6;
    h.e2 = {{0, 5, Color::R}, {1, 2, Color::G}, {3, 4, Color::B}};
    h.e3 = {{0, 1, 2}};
    auto red = edge_operator(h, 0);
    CHECK(red.x.get(0));
    CHECK(red.x.get(5));
    CHECK(red.z.zero());
    auto green = edge_operator(h, 1);
    CHECK(green.x.get(1));
    CHECK(green.z.get(1));
    CHECK(green.to_string() == "Y1 Y2");
    auto blue = edge_operator(h, 2);
    CHECK(blue.x.zero());
    CHECK(blue.z.get(3));
    auto tri = edge_operator(h, 3);
    CHECK(tri.x.zero());
    CHECK(tri.z.get(0));
    CHECK(tri.z.get(1));
    CHECK(tri.z.get(2));
    CHECK_THROWS_AS(edge_operator(h, 9), PauliError);
}

TEST_CASE("commutation rule") {
    int n = 4;
    auto make = [&](char t, int a, int b) {
        PauliVector p(n);
        if (t != 'Z') { p.x.set(a); p.x.set(b); }
        if (t != 'X') { p.z.set(a); p.z.set(b); }
        return p;
    };
    auto xx = make('X', 0, 1);
    auto zz = make('Z', 1, 2);
    CHECK_FALSE(commutes(xx, zz));  // one shared vertex
    CHECK(commutes(xx, xx));
    PauliVector t1(n), t2(n);
    t1.z.set(0); t1.z.set(1); t1.z.set(2);
    t2.z.set(2); t2.z.set(3); t2.z.set(0);
    CHECK(commutes(t1, t2));  // Z-triangles always commute
}

TEST_CASE("commutation matches shared-vertex parity over all edge pairs") {
    for (const auto& h : {fixtures::prism6(), fixtures::ring12()}) {
        for (int e1 = 0; e1 < h.edge_count(); ++e1)
            for (int e2 = 0; e2 < h.edge_count(); ++e2) {
                auto v1 = h.edge_vertices(e1);
                auto v2 = h.edge_vertices(e2);
                int shared = 0;
                for (int a : v1)
                    for (int b : v2)
                        if (a == b) ++shared;
                bool eta0 = shared % 2 == 0 || (h.is_rank3(e1) && h.is_rank3(e2));
                CHECK(commutes(edge_operator(h, e1), edge_operator(h, e2)) == eta0);
            }
    }
}

TEST_CASE("three links of a split triangle have rank 2") {
    Hypergraph h;
    h.vertex_count = 3;
    h.e3 = {{0, 1, 2}};
    auto links = gauge_links(h);
    REQUIRE(links.size() == 3);
    GF2Space sp(6);
    for (const auto& l : links) sp.insert(l.op.packed());
    CHECK(sp.rank() == 2);
}

TEST_CASE("centralizer of nothing and of single-qubit Zs") {
    Hypergraph empty;
    empty.vertex_count = 3;
    auto a = analyze_code(empty);  // no generators: C(G) is everything
    CHECK(a.centralizer.rank() == 6);
    CHECK(a.dim_gauge == 0);

    // all single-qubit Zs: centralizer = all Z-type operators
    GroupAnalysis b;
    int n = 4;
    std::vector<BitVec> swapped;
    GF2Space gauge(2 * n);
    for (int q = 0; q < n; ++q) {
        PauliVector p(n);
        p.z.set(q);
        gauge.insert(p.packed());
    }
    // kernel check via a tiny hypergraph is not possible (degree constraints),
    // so verify membership logic directly: all-Z operators commute with all Zs
    PauliVector allz(n);
    for (int q = 0; q < n; ++q) allz.z.set(q);
    for (int q = 0; q < n; ++q) {
        PauliVector zq(n);
        zq.z.set(q);
        CHECK(commutes(allz, zq));
    }
    (void)b;
}

static long long brute_centralizer_dim(const Hypergraph& h) {
    auto links = gauge_links(h);
    int n = h.vertex_count;
    long long count = 0;
    for (uint64_t code = 0; code < (uint64_t(1) << (2 * n)); ++code) {
        PauliVector p(n);
        for (int i = 0; i < n; ++i) {
            if ((code >> i) & 1) p.x.set(i);
            if ((code >> (n + i)) & 1) p.z.set(i);
        }
        bool central = true;
        for (const auto& l : links)
            if (!commutes(p, l.op)) { central = false; break; }
        if (central) ++count;
    }
    long long dim = 0;
    while ((1ll << dim) < count) ++dim;
    CHECK((1ll << dim) == count);
    return dim;
}

TEST_CASE("analyze_code centralizer agrees with brute force on toys") {
    for (const auto& h : {fixtures::prism6(), fixtures::k4()}) {
        auto a = analyze_code(h);
        CHECK(a.centralizer.rank() == brute_centralizer_dim(h));
        CHECK(a.n == a.k + a.r + a.s);
    }
}

TEST_CASE("trivalent graphs without triangles encode nothing") {
    auto a = analyze_code(fixtures::k4());
    CHECK(a.k == 0);
}

TEST_CASE("gloop identity on toy hypergraphs") {
    for (const auto& h : {fixtures::prism6(), fixtures::ring12(), fixtures::k4()}) {
        auto chk = verify_gloop_identity(h);
        CHECK_MESSAGE(chk.ok, "image ", chk.dim_image, " vs C(G) ", chk.dim_centralizer);
    }
}

TEST_CASE("gloop identity needs 3-colorability: the 3-cycle toy fails it") {
    // one triangle plus a 3-cycle of links: trivalent, but an odd rank-2
    // cycle admits no proper edge coloring, and C(G) = G_loop breaks with it
    Hypergraph h;
    h.vertex_count = 3;
    h.e3 = {{0, 1, 2}};
    h.e2 = {{0, 1, Color::R}, {1, 2, Color::G}, {0, 2, Color::B}};
    bool h5_failed = false;
    for (const auto& item : validate_hypergraph(h).items)
        if (item.constraint == "H5" && !item.ok) h5_failed = true;
    CHECK(h5_failed);
    auto chk = verify_gloop_identity(h);
    CHECK_FALSE(chk.ok);
    CHECK(chk.dim_image == 1);
    CHECK(chk.dim_centralizer == 2);
}

TEST_CASE("loop operators") {
    auto h = fixtures::prism6();
    // empty cycle gives the identity
    CHECK(loop_operator(h, {}).identity());
    // both triangles joined by alternating links form a closed hypercycle
    std::vector<int> cyc = {6, 7, 0, 2, 4};
    auto w = loop_operator(h, cyc);
    CHECK_FALSE(w.identity());
    CHECK_THROWS_AS(loop_operator(h, {0}), PauliError);
}

TEST_CASE("cycle space of the prism matches exhaustive enumeration") {
    auto h = fixtures::prism6();
    auto basis = cycle_space(h);
    // triangle rows have three ones, so the incidence matrix has full rank
    // here and the nullity is |E| - n (not the graph formula |E| - n + 1)
    CHECK(int(basis.size()) == h.edge_count() - h.vertex_count);
    // exhaustive check on all subsets of the 8 edges
    int closed = 0;
    for (int mask = 0; mask < (1 << h.edge_count()); ++mask) {
        std::vector<int> edges;
        for (int e = 0; e < h.edge_count(); ++e)
            if (mask & (1 << e)) edges.push_back(e);
        if (is_closed_hypercycle(h, edges)) ++closed;
    }
    CHECK(closed == (1 << basis.size()));
}

TEST_CASE("syndrome ordering on the reference example pools") {
    // (a): no extra vertices; the color-grouped order works
    auto pool_a = fixtures::syndrome_pool_a();
    auto target_a = fixtures::pool_product(pool_a);
    auto res_a = syndrome_order(target_a, pool_a);
    CHECK(res_a.feasible);
    // every prefix property holds on the returned order
    PauliVector prefix(target_a.n);
    for (const auto& l : res_a.order) {
        CHECK(commutes(l.op, prefix));
        prefix *= l.op;
    }
    CHECK(prefix == target_a);

    // (b): one added vertex, 21 links, provably unorderable
    auto pool_b = fixtures::syndrome_pool_b();
    auto target_b = fixtures::pool_product(pool_b);
    auto res_b = syndrome_order(target_b, pool_b);
    CHECK_FALSE(res_b.feasible);
    CHECK_FALSE(res_b.exhausted_budget);

    // (c): two added vertices, feasible again
    auto pool_c = fixtures::syndrome_pool_c();
    auto target_c = fixtures::pool_product(pool_c);
    auto res_c = syndrome_order(target_c, pool_c);
    CHECK(res_c.feasible);
}

TEST_CASE("syndrome ordering rejects targets outside the span") {
    auto pool = fixtures::syndrome_pool_a();
    PauliVector target(pool.front().op.n);
    target.x.set(0);
    CHECK_THROWS_AS(syndrome_order(target, pool), PauliError);
}

TEST_CASE("brute-force dressed weight on a hand-made toy") {
    // S = <ZZI, IZZ>, G = S: a bare weight-1 logical exists (X.. anticommutes,
    // but Z0 commutes with both and is not in G)
    GroupAnalysis a;
    a.n = 3;
    a.gauge = GF2Space(6);
    a.stabilizer = GF2Space(6);
    PauliVector zz1(3), zz2(3);
    zz1.z.set(0); zz1.z.set(1);
    zz2.z.set(1); zz2.z.set(2);
    for (const auto& p : {zz1, zz2}) {
        a.gauge.insert(p.packed());
        a.stabilizer.insert(p.packed());
    }
    a.dim_gauge = 2;
    a.s = 2;
    a.r = 0;
    a.k = 1;
    auto w = brute_min_dressed_weight(a, 2);
    REQUIRE(w.has_value());
    CHECK(*w == 1);
    CHECK_FALSE(brute_min_dressed_weight(a, 0).has_value());

    GroupAnalysis k0 = a;
    k0.k = 0;
    CHECK_THROWS_AS(brute_min_dressed_weight(k0, 2), PauliError);
}

TEST_CASE("exact dressed weight of a family build stays within the bound") {
    // the prism encodes one qubit; its exact dressed distance is tiny
    auto h = fixtures::prism6();
    auto a = analyze_code(h);
    if (a.k >= 1) {
        auto w = brute_min_dressed_weight(a, 3);
        REQUIRE(w.has_value());
        CHECK(*w >= 1);
    }
}
