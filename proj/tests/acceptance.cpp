// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria and tolerances are pinned here; timings are wall-clock.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "fixtures.hpp"
#include "reference_tables.hpp"
#include "tsc/builders.hpp"
#include "tsc/census.hpp"
#include "tsc/homology.hpp"
#include "tsc/pauli.hpp"
#include "tsc/surface_map.hpp"

using namespace tsc;

namespace {

int failures = 0;

struct Criterion {
    const char* id;
    const char* title;
    double limit_seconds;
};

void run(const Criterion& c, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
        ok = false;
        detail += " [exceeded " + std::to_string(c.limit_seconds) + "s]";
    }
    std::printf("%-4s %-52s %s (%.2fs)%s%s\n", c.id, c.title, ok ? "PASS" : "FAIL", secs,
                detail.empty() ? "" : "  ", detail.c_str());
    if (!ok) ++failures;
}

bool expect(std::string& detail, const char* what, long long got, long long want) {
    if (got == want) return true;
    detail += std::string(what) + "=" + std::to_string(got) + " (want " +
              std::to_string(want) + ") ";
    return false;
}

GF2Space loop_span(const Hypergraph& h, const std::vector<const RegistryCycle*>& cycles) {
    GF2Space span(2 * h.vertex_count);
    for (const auto* c : cycles) span.insert(loop_operator(h, c->edges).packed());
    return span;
}

}  // namespace

int main() {
    // worked example 1: family 1 on the {6,12,4} 2x2 torus
    run({"AC1", "worked example {6,12,4}: [[96,5,68,4]], s=23", 5.0}, [](std::string& d) {
        auto cm = torus_tessellation(6, 12, 4, 2, 2);
        auto res = build_family1(cm.map, cm.coloring);
        auto a = analyze_code(res.h);
        bool ok = true;
        ok &= expect(d, "n", a.n, 96);
        ok &= expect(d, "s", a.s, 23);
        ok &= expect(d, "dimG", a.dim_gauge, 159);
        ok &= expect(d, "r", a.r, 68);
        ok &= expect(d, "k", a.k, 5);
        auto mt = min_triangles_nontrivial(res.h, probe_edge_sets(res.registry));
        ok &= mt.proven;
        ok &= expect(d, "l", mt.l, 4);
        return ok;
    });

    // worked example 2: family 2 on the {12,4,6} 2x2 torus
    // Known red: the reference worked example is not attainable by the stated
    // construction (the full stabilizer group is two dimensions larger than
    // the documented generator list, leaving k=0); see the decisions ledger.
    run({"AC2", "worked example {12,4,6}: [[72,1,48,4]], s=23, delta=0", 5.0},
        [](std::string& d) {
            auto cm = torus_tessellation(12, 4, 6, 2, 2);
            auto res = build_family2(cm.map, cm.coloring);
            auto a = analyze_code(res.h);
            bool ok = true;
            ok &= expect(d, "n", a.n, 72);
            ok &= expect(d, "s", a.s, 23);
            ok &= expect(d, "r", a.r, 48);
            ok &= expect(d, "k", a.k, 1);
            try {
                auto mt = min_triangles_nontrivial(res.h, probe_edge_sets(res.registry));
                ok &= mt.proven;
                ok &= expect(d, "l", mt.l, 4);
            } catch (const std::exception&) {
                d += "l unmeasurable (no nontrivial classes) ";
                ok = false;
            }
            bool tripartite = is_tripartite(reduced_red_graph(cm.map, cm.coloring));
            if (tripartite) { d += "Gamma_R unexpectedly tripartite "; ok = false; }
            if (!ok) d += "[documented conflict, left red]";
            return ok;
        });

    // table reproduction
    run({"AC3", "tables: families 1-4 reproduced exactly", 1.0}, [](std::string& d) {
        bool ok = true;
        auto index = [](const std::vector<TableRow>& rows) {
            std::map<std::pair<long long, std::string>, TableRow> m;
            for (const auto& r : rows) m[{r.genus, r.tessellation}] = r;
            return m;
        };
        auto i1 = index(emit_table(1, 2, 5));
        for (const auto& w : tables::family1()) {
            auto it = i1.find({w.g, w.cls});
            if (it == i1.end() || it->second.s != w.s || it->second.n != w.n ||
                it->second.k != w.k || it->second.r != w.r) {
                d += "family1 " + w.cls + " g=" + std::to_string(w.g) + " ";
                ok = false;
            }
        }
        auto i2 = index(emit_table(2, 2, 5));
        for (const auto& w : tables::family2()) {
            auto it = i2.find({w.g, w.cls});
            bool row_ok = it != i2.end() && it->second.s == w.s1 && it->second.n == w.n &&
                          it->second.k == w.k1 && it->second.r == w.r &&
                          it->second.s2 && *it->second.s2 == w.s2 &&
                          *it->second.k2 == w.k2;
            if (!row_ok) {
                d += "family2 " + w.cls + " g=" + std::to_string(w.g) + " ";
                ok = false;
            }
        }
        auto i3 = index(emit_table(3, 2, 5));
        for (const auto& w : tables::family3()) {
            auto it = i3.find({w.g, w.cls});
            if (it == i3.end() || it->second.s != w.s || it->second.n != w.n ||
                it->second.k != w.k || it->second.r != w.r) {
                d += "family3 " + w.cls + " g=" + std::to_string(w.g) + " ";
                ok = false;
            }
        }
        auto i4 = index(emit_table(4, 2, 7));
        for (const auto& w : tables::family4()) {
            auto it = i4.find({w.g, w.cls});
            if (it == i4.end() || it->second.s != w.s || it->second.n != w.n ||
                it->second.k != w.k || it->second.r != w.r) {
                d += "family4 " + w.cls + " g=" + std::to_string(w.g) + " ";
                ok = false;
            }
        }
        return ok;
    });

    // formula vs linear algebra on every torus instance built here, plus
    // integrality/edge-identity property sweeps for the hyperbolic rows
    run({"AC4", "formula/algebra agreement and identities", 60.0}, [](std::string& d) {
        bool ok = true;
        for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
            auto cm = torus_tessellation(6, 12, 4, m, n);
            auto res = build_family1(cm.map, cm.coloring);
            auto a = analyze_code(res.h);
            SemiRegularCounts c{res.counts.n_f, res.counts.n_e, res.counts.n_v,
                                res.counts.f_r, res.counts.f_g, res.counts.f_b,
                                res.counts.chi, 1};
            auto p = params_family1_from_counts(c);
            if (p.n != a.n || p.s != a.s || p.r != a.r || p.k != a.k) {
                d += "family1 " + std::to_string(m) + "x" + std::to_string(n) + " ";
                ok = false;
            }
            EdgeBudget want = expected_edges_family1(res.counts, 3);
            ok &= expect(d, "E2", (long long)res.h.e2.size(), want.e2);
            ok &= expect(d, "E3", (long long)res.h.e3.size(), want.e3);
        }
        // known red for family 2: the formula says s = 23 / k = 1, the built
        // instance measures s = 25 / k = 0 (see the decisions ledger)
        for (auto [m, n] : {std::pair{2, 2}, {2, 3}}) {
            auto cm = torus_tessellation(12, 4, 6, m, n);
            auto res = build_family2(cm.map, cm.coloring);
            auto a = analyze_code(res.h);
            bool tri = is_tripartite(reduced_red_graph(cm.map, cm.coloring));
            SemiRegularCounts c{res.counts.n_f, res.counts.n_e, res.counts.n_v,
                                res.counts.f_r, res.counts.f_g, res.counts.f_b,
                                res.counts.chi, 1};
            auto p = params_family2_from_counts(c, 6, tri);
            if (p.n != a.n || p.s != a.s || p.r != a.r || p.k != a.k) {
                d += "family2 " + std::to_string(m) + "x" + std::to_string(n) +
                     " formula s=" + std::to_string(p.s) + ",r=" + std::to_string(p.r) +
                     ",k=" + std::to_string(p.k) + " vs algebra s=" + std::to_string(a.s) +
                     ",r=" + std::to_string(a.r) + ",k=" + std::to_string(a.k) + " ";
                ok = false;
            }
        }
        // hyperbolic rows: n = k+r+s, parity integrality (enforced inside the
        // census ops), and the per-family edge-count identities
        for (long long g = 2; g <= 5; ++g) {
            for (int fam : {1, 2, 3, 4}) {
                for (const auto& row : emit_table(fam, g, g)) {
                    if (row.n != row.k + row.r + row.s) {
                        ok = false;
                        d += "f" + std::to_string(fam) + " accounting ";
                    }
                    if (row.s2 && row.n != *row.k2 + row.r + *row.s2) {
                        ok = false;
                        d += "f2 branch accounting ";
                    }
                }
            }
            for (long long p1 = 3; p1 <= 40; p1 += 2) {
                for (long long p2 = 2; p2 <= 60; ++p2) {
                    SemiRegularCounts c;
                    try {
                        c = counts_2p2q2r(p1, p2, 2, g);
                        params_family1_from_counts(c);
                    } catch (const CensusError&) {
                        continue;
                    }
                    EdgeBudget want = expected_edges_family1(
                        SourceCounts{c.n_v, c.n_e, c.n_f, c.f_r, c.f_g, c.f_b,
                                     int(c.chi)},
                        p1);
                    // |E2| = 2 p2 F_G + (p1+3) F_R and |E3| = (p1+1) F_R
                    if (want.e2 != 2 * p2 * c.f_g + (p1 + 3) * c.f_r ||
                        want.e3 != (p1 + 1) * c.f_r) {
                        ok = false;
                        d += "f1 edge identity ";
                    }
                }
            }
            for (long long p1 = 7; p1 <= 60; p1 += 2) {
                SemiRegularCounts c;
                try {
                    c = counts_2p2q2r(p1, 2, 3, g);
                    params_family3_from_counts(c, p1);
                } catch (const CensusError&) {
                    continue;
                }
                EdgeBudget want = expected_edges_family3(
                    SourceCounts{c.n_v, c.n_e, c.n_f, c.f_r, c.f_g, c.f_b, int(c.chi)},
                    p1);
                // |E2| = 4 F_G + (p1+3) F_R and |E3| = (p1+1) F_R
                if (want.e2 != 4 * c.f_g + (p1 + 3) * c.f_r ||
                    want.e3 != (p1 + 1) * c.f_r) {
                    ok = false;
                    d += "f3 edge identity ";
                }
            }
        }
        if (!ok && d.find("family2") != std::string::npos &&
            d.find("identity") == std::string::npos && d.find("family1") == std::string::npos)
            d += "[family-2 disagreement is the documented conflict]";
        return ok;
    });

    // commutation suite
    run({"AC5", "commutation rule and 1000 random loop pairs", 60.0}, [](std::string& d) {
        auto cm1 = torus_tessellation(6, 12, 4, 2, 2);
        auto res1 = build_family1(cm1.map, cm1.coloring);
        auto cm2 = torus_tessellation(12, 4, 6, 2, 2);
        auto res2 = build_family2(cm2.map, cm2.coloring);
        auto cmb = torus_tessellation(6, 6, 6, 2, 2);
        auto resb = build_bombin(cmb.map, cmb.coloring);
        bool ok = true;
        for (const auto* res : {&res1, &res2, &resb}) {
            const auto& h = res->h;
            for (int e1 = 0; e1 < h.edge_count(); ++e1)
                for (int e2 = e1; e2 < h.edge_count(); ++e2) {
                    auto v1 = h.edge_vertices(e1);
                    auto v2 = h.edge_vertices(e2);
                    int shared = 0;
                    for (int a : v1)
                        for (int b : v2)
                            if (a == b) ++shared;
                    bool eta0 = shared % 2 == 0 || (h.is_rank3(e1) && h.is_rank3(e2));
                    if (commutes(edge_operator(h, e1), edge_operator(h, e2)) != eta0) {
                        d += "edge pair violation ";
                        ok = false;
                    }
                }
            auto basis = cycle_space(h);
            std::mt19937 rng(12345);
            for (int it = 0; it < 1000; ++it) {
                BitVec ea(h.edge_count()), eb(h.edge_count());
                for (const auto& b : basis) {
                    if (rng() & 1) ea ^= b;
                    if (rng() & 1) eb ^= b;
                }
                std::vector<int> ca, cb;
                long long shared = 0;
                for (int e = 0; e < h.edge_count(); ++e) {
                    if (ea.get(e)) ca.push_back(e);
                    if (eb.get(e)) cb.push_back(e);
                    if (ea.get(e) && eb.get(e) && h.is_rank3(e)) ++shared;
                }
                bool want = shared % 2 == 0;
                if (commutes(loop_operator(h, ca), loop_operator(h, cb)) != want) {
                    d += "loop pair violation ";
                    ok = false;
                }
            }
        }
        return ok;
    });

    // G_loop identity
    run({"AC6", "dim W(cycle space) = dim C(G), incl. brute-force toys", 60.0},
        [](std::string& d) {
            bool ok = true;
            auto cm1 = torus_tessellation(6, 12, 4, 2, 2);
            auto res1 = build_family1(cm1.map, cm1.coloring);
            auto chk1 = verify_gloop_identity(res1.h);
            if (!chk1.ok) { d += "family1 torus "; ok = false; }
            auto cm2 = torus_tessellation(12, 4, 6, 2, 2);
            auto res2 = build_family2(cm2.map, cm2.coloring);
            auto chk2 = verify_gloop_identity(res2.h);
            if (!chk2.ok) { d += "family2 torus "; ok = false; }

            // toys with full brute-force centralizers
            for (const auto& h :
                 {fixtures::prism6(), fixtures::ring12(), fixtures::k4()}) {
                auto links = gauge_links(h);
                int n = h.vertex_count;
                long long brute = 0;
                for (uint64_t code = 0; code < (uint64_t(1) << (2 * n)); ++code) {
                    PauliVector p(n);
                    for (int i = 0; i < n; ++i) {
                        if ((code >> i) & 1) p.x.set(i);
                        if ((code >> (n + i)) & 1) p.z.set(i);
                    }
                    bool central = true;
                    for (const auto& l : links)
                        if (!commutes(p, l.op)) { central = false; break; }
                    if (central) ++brute;
                }
                auto a = analyze_code(h);
                if ((1ll << a.centralizer.rank()) != brute) {
                    d += "toy centralizer mismatch ";
                    ok = false;
                }
                auto chk = verify_gloop_identity(h);
                if (!chk.ok) { d += "toy gloop mismatch "; ok = false; }
            }
            return ok;
        });

    // stabilizer suite
    run({"AC7", "registry stabilizers, relation, syndrome orders", 300.0},
        [](std::string& d) {
            bool ok = true;
            auto cm1 = torus_tessellation(6, 12, 4, 2, 2);
            auto res1 = build_family1(cm1.map, cm1.coloring);
            auto a1 = analyze_code(res1.h);
            PauliVector lhs(a1.n), rhs(a1.n);
            for (const auto* cyc : res1.stabilizer_cycles()) {
                auto w = loop_operator(res1.h, cyc->edges);
                if (!a1.gauge.contains(w.packed()) ||
                    !a1.centralizer.contains(w.packed())) {
                    d += cyc->tag + " not a stabilizer ";
                    ok = false;
                }
                if (cyc->tag.rfind("sigma2.g", 0) == 0) lhs *= w;
                if (cyc->tag.rfind("sigma1.r", 0) == 0) rhs *= w;
            }
            if (!(lhs == rhs)) { d += "independence relation fails "; ok = false; }

            auto cm2 = torus_tessellation(12, 4, 6, 2, 2);
            auto res2 = build_family2(cm2.map, cm2.coloring);
            auto a2 = analyze_code(res2.h);
            for (const auto* cyc : res2.stabilizer_cycles()) {
                auto w = loop_operator(res2.h, cyc->edges);
                if (!a2.gauge.contains(w.packed()) ||
                    !a2.centralizer.contains(w.packed())) {
                    d += cyc->tag + " not a stabilizer ";
                    ok = false;
                }
            }

            // syndrome orderability of every registry stabilizer generator
            auto cmb = torus_tessellation(6, 6, 6, 2, 2);
            auto resb = build_bombin(cmb.map, cmb.coloring);
            for (const auto* build : {&res1, &res2, &resb}) {
                for (const auto* cyc : build->stabilizer_cycles()) {
                    auto w = loop_operator(build->h, cyc->edges);
                    auto pool = cycle_link_pool(build->h, cyc->edges);
                    auto so = syndrome_order(w, pool, 4'000'000);
                    if (!so.feasible) {
                        d += cyc->tag + " unorderable ";
                        ok = false;
                    } else {
                        PauliVector prefix(w.n);
                        for (const auto& l : so.order) {
                            if (!commutes(l.op, prefix)) {
                                d += cyc->tag + " bad prefix ";
                                ok = false;
                            }
                            prefix *= l.op;
                        }
                        if (!(prefix == w)) { d += cyc->tag + " bad product "; ok = false; }
                    }
                }
            }

            // the reference 21-link odd-parity pool is infeasible, 20 and 22 work
            auto pa = fixtures::syndrome_pool_a();
            if (!syndrome_order(fixtures::pool_product(pa), pa).feasible) {
                d += "20-link pool infeasible ";
                ok = false;
            }
            auto pb = fixtures::syndrome_pool_b();
            auto rb = syndrome_order(fixtures::pool_product(pb), pb);
            if (rb.feasible || rb.exhausted_budget) {
                d += "21-link pool not refuted ";
                ok = false;
            }
            auto pc = fixtures::syndrome_pool_c();
            if (!syndrome_order(fixtures::pool_product(pc), pc).feasible) {
                d += "22-link pool infeasible ";
                ok = false;
            }
            return ok;
        });

    // Bombin baseline
    run({"AC8", "Bombin {6,6,6}: k=2g, s=2V*-2, n=3F*, d_L<=d_T", 60.0},
        [](std::string& d) {
            auto cm = torus_tessellation(6, 6, 6, 2, 2);
            auto res = build_bombin(cm.map, cm.coloring);
            auto a = analyze_code(res.h);
            bool ok = true;
            ok &= expect(d, "n", a.n, 3ll * cm.map.vertex_count());
            ok &= expect(d, "k", a.k, 2);
            ok &= expect(d, "s", a.s, 2ll * cm.map.face_count() - 2);
            auto bounds = bombin_bounds(res);
            if (!bounds.proven) { d += "d_T not proven "; ok = false; }
            if (!(bounds.d_l <= bounds.d_t)) {
                d += "d_L > d_T ";
                ok = false;
            }
            return ok;
        });

    // negative controls
    run({"AC9", "Petersen fails H5; {6,6,6} census denominator", 10.0},
        [](std::string& d) {
            bool ok = true;
            if (tait_coloring(10, fixtures::petersen_edges()).has_value()) {
                d += "Petersen admitted a Tait coloring ";
                ok = false;
            }
            Hypergraph pet;
            pet.vertex_count = 10;
            auto edges = fixtures::petersen_edges();
            for (size_t i = 0; i < edges.size(); ++i)
                pet.e2.push_back({edges[i].first, edges[i].second, Color(i % 3)});
            bool h5_failed = false;
            for (const auto& item : validate_hypergraph(pet).items)
                if (item.constraint == "H5" && !item.ok) h5_failed = true;
            if (!h5_failed) { d += "validator accepted Petersen "; ok = false; }
            try {
                counts_2p2q2r(3, 3, 3, 2);
                d += "degenerate census accepted ";
                ok = false;
            } catch (const CensusError& e) {
                if (std::string(e.what()).find("nonpositive denominator") ==
                    std::string::npos) {
                    d += "wrong census diagnostic ";
                    ok = false;
                }
            }
            return ok;
        });

    if (failures) std::printf("%d acceptance criterion(s) FAILED\n", failures);
    else std::printf("all acceptance criteria passed\n");
    return failures == 0 ? 0 : 1;
}
