#include "tsc/homology.hpp"

#include <algorithm>
#include <map>

namespace tsc {

std::vector<std::vector<int>> probe_edge_sets(const FaceRegistry& reg) {
    std::vector<std::vector<int>> out;
    for (const auto* c : reg.with_prefix("probe.")) out.push_back(c->edges);
    return out;
}

static BitVec triangle_pattern(const Hypergraph& h, const std::vector<int>& edges) {
    BitVec pat(int(h.e3.size()));
    int base = int(h.e2.size());
    for (int e : edges)
        if (e >= base) pat.flip(e - base);
    return pat;
}

BitVec homology_class(const Hypergraph& h, const std::vector<std::vector<int>>& probes,
                      const std::vector<int>& cycle_edges) {
    if (!is_closed_hypercycle(h, cycle_edges))
        throw HomologyError("edge set is not a closed hypercycle");
    BitVec mine = triangle_pattern(h, cycle_edges);
    BitVec cls(int(probes.size()));
    for (size_t i = 0; i < probes.size(); ++i)
        if (BitVec::dot(mine, triangle_pattern(h, probes[i]))) cls.set(int(i));
    return cls;
}

bool is_trivial(const Hypergraph& h, const std::vector<std::vector<int>>& probes,
                const std::vector<int>& cycle_edges) {
    return homology_class(h, probes, cycle_edges).zero();
}

HomologyDecomposition boundary_space(const Hypergraph& h,
                                     const std::vector<std::vector<int>>& probes) {
    HomologyDecomposition out;
    out.cycle_basis = cycle_space(h);
    std::vector<BitVec> probe_pats;
    for (const auto& p : probes) probe_pats.push_back(triangle_pattern(h, p));
    // class map on the cycle basis
    std::vector<BitVec> rows;
    for (const auto& c : out.cycle_basis) {
        BitVec pat(int(h.e3.size()));
        int base = int(h.e2.size());
        for (int e = base; e < h.edge_count(); ++e)
            if (c.get(e)) pat.set(e - base);
        BitVec cls(int(probes.size()));
        for (size_t i = 0; i < probes.size(); ++i)
            if (BitVec::dot(pat, probe_pats[i])) cls.set(int(i));
        rows.push_back(cls);
    }
    GF2Space image(int(probes.size()));
    for (const auto& r : rows) image.insert(r);
    out.h1_dim = image.rank();
    // kernel combinations of basis cycles are the boundaries
    auto ker = left_kernel(rows, int(probes.size()));
    for (const auto& combo : ker) {
        BitVec b(h.edge_count());
        for (size_t i = 0; i < out.cycle_basis.size(); ++i)
            if (combo.get(int(i))) b ^= out.cycle_basis[i];
        out.boundary_basis.push_back(b);
    }
    return out;
}

MinTrianglesResult min_triangles_nontrivial(const Hypergraph& h,
                                            const std::vector<std::vector<int>>& probes,
                                            long long budget) {
    if (probes.empty())
        throw HomologyError("no probe hypercycles recorded (trivial or unknown homology)");
    auto basis = cycle_space(h);
    int nb = int(basis.size());
    int T = int(h.e3.size());
    int base = int(h.e2.size());

    std::vector<BitVec> probe_pats;
    for (const auto& p : probes) probe_pats.push_back(triangle_pattern(h, p));

    // patterns of the basis cycles, echelonized with combo tracking
    std::vector<BitVec> pats;
    for (const auto& c : basis) {
        BitVec pat(T);
        for (int e = base; e < h.edge_count(); ++e)
            if (c.get(e)) pat.set(e - base);
        pats.push_back(pat);
    }
    TrackedRREF ech = tracked_rref(pats, T);
    std::vector<BitVec> rows, combos;
    for (size_t i = 0; i < ech.rows.size(); ++i) {
        if (!ech.rows[i].zero()) {
            rows.push_back(ech.rows[i]);
            combos.push_back(ech.combos[i]);
        }
    }
    int t = int(rows.size());

    MinTrianglesResult res;
    std::map<std::vector<char>, ClassWitness> best;
    auto class_bits = [&](const BitVec& pat) {
        BitVec cls(int(probes.size()));
        for (size_t i = 0; i < probes.size(); ++i)
            if (BitVec::dot(pat, probe_pats[i])) cls.set(int(i));
        return cls;
    };

    if ((1ll << std::min(t, 62)) > budget) {
        res.proven = false;
        // fall back to single rows and pairs
        for (int i = 0; i < t; ++i) {
            BitVec cls = class_bits(rows[i]);
            if (cls.zero()) continue;
            std::vector<char> key(cls.n);
            for (int b = 0; b < cls.n; ++b) key[b] = cls.get(b);
            long long w = rows[i].popcount();
            auto it = best.find(key);
            if (it == best.end() || w < it->second.triangles) {
                ClassWitness cw;
                cw.coords = cls;
                cw.triangles = w;
                best[key] = cw;
            }
        }
    } else {
        // Gray-code sweep of the pattern space
        BitVec cur(T), combo(nb), cls(int(probes.size()));
        std::vector<BitVec> row_cls;
        for (int i = 0; i < t; ++i) row_cls.push_back(class_bits(rows[i]));
        long long total = 1ll << t;
        for (long long g = 1; g < total; ++g) {
            int bit = std::countr_zero(uint64_t(g));
            cur ^= rows[bit];
            combo ^= combos[bit];
            cls ^= row_cls[bit];
            if (cls.zero()) continue;
            long long w = cur.popcount();
            std::vector<char> key(cls.n);
            for (int b = 0; b < cls.n; ++b) key[b] = cls.get(b);
            auto it = best.find(key);
            if (it == best.end() || w < it->second.triangles) {
                ClassWitness cw;
                cw.coords = cls;
                cw.triangles = w;
                // witness hypercycle from the tracked combination
                BitVec edges(h.edge_count());
                for (int i = 0; i < nb; ++i)
                    if (combo.get(i)) edges ^= basis[i];
                for (int e = 0; e < h.edge_count(); ++e)
                    if (edges.get(e)) cw.edges.push_back(e);
                best[key] = std::move(cw);
            }
        }
    }
    if (best.empty()) throw HomologyError("no nontrivial class is reachable");
    res.l = -1;
    for (auto& [key, cw] : best) {
        if (res.l < 0 || cw.triangles < res.l) res.l = cw.triangles;
        res.classes.push_back(cw);
    }
    return res;
}

long long shortest_noncontractible_dual_cycle(const CombinatorialMap& source) {
    CombinatorialMap star = dual(source);
    auto gens = homology_generator_cycles(source);
    int twog = int(gens.size());
    if (twog == 0) throw HomologyError("sphere has no noncontractible cycles");
    int E = star.edge_count();
    // class contribution of each dual edge = incidence with the source generators
    std::vector<BitVec> eclass(E, BitVec(twog));
    for (int i = 0; i < twog; ++i)
        for (int e : gens[i]) eclass[e].set(i);  // dual edge ids match source edge ids

    std::vector<std::vector<std::pair<int, int>>> adj(star.vertex_count());  // (nbr, edge)
    for (int e = 0; e < E; ++e) {
        int d = star.edge_dart[e];
        adj[star.vertex_of[d]].push_back({star.vertex_of[star.alpha[d]], e});
        adj[star.vertex_of[star.alpha[d]]].push_back({star.vertex_of[d], e});
    }
    long long bound = -1;
    for (int s = 0; s < star.vertex_count(); ++s) {
        std::vector<int> dist(star.vertex_count(), -1);
        std::vector<BitVec> cls(star.vertex_count(), BitVec(twog));
        std::vector<int> via_edge(star.vertex_count(), -1);
        std::vector<int> q = {s};
        dist[s] = 0;
        for (size_t qi = 0; qi < q.size(); ++qi) {
            int u = q[qi];
            for (auto [v, e] : adj[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    cls[v] = cls[u];
                    cls[v] ^= eclass[e];
                    via_edge[v] = e;
                    q.push_back(v);
                }
            }
        }
        for (int u = 0; u < star.vertex_count(); ++u) {
            for (auto [v, e] : adj[u]) {
                if (via_edge[u] == e || via_edge[v] == e) continue;
                BitVec c = cls[u];
                c ^= cls[v];
                c ^= eclass[e];
                if (c.zero()) continue;
                long long len = dist[u] + dist[v] + 1;
                if (bound < 0 || len < bound) bound = len;
            }
        }
    }
    if (bound < 0) throw HomologyError("found no noncontractible dual cycle");
    return bound;
}

BombinBounds bombin_bounds(const BuildResult& build) {
    if (build.h.provenance.rfind("family=bombin", 0) != 0)
        throw HomologyError("not a Bombin-built instance");
    BombinBounds out;
    auto probes = probe_edge_sets(build.registry);
    auto mt = min_triangles_nontrivial(build.h, probes);
    out.d_t = mt.l;
    out.proven = mt.proven;
    out.d_l = shortest_noncontractible_dual_cycle(build.source);
    return out;
}

}  // namespace tsc
