#include "tsc/pauli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace tsc {

std::string PauliVector::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < n; ++i) {
        bool xi = x.get(i), zi = z.get(i);
        if (!xi && !zi) continue;
        if (!first) out << ' ';
        first = false;
        out << (xi && zi ? 'Y' : xi ? 'X' : 'Z') << i;
    }
    if (first) out << "I";
    return out.str();
}

bool commutes(const PauliVector& a, const PauliVector& b) {
    if (a.n != b.n) throw PauliError("qubit count mismatch");
    return BitVec::dot(a.x, b.z) == BitVec::dot(a.z, b.x);
}

PauliVector edge_operator(const Hypergraph& h, int edge) {
    if (edge < 0 || edge >= h.edge_count()) throw PauliError("unknown edge");
    PauliVector p(h.vertex_count);
    if (!h.is_rank3(edge)) {
        const auto& e = h.e2[edge];
        switch (e.color) {
            case Color::R:
                p.x.set(e.u);
                p.x.set(e.v);
                break;
            case Color::G:
                p.x.set(e.u);
                p.x.set(e.v);
                p.z.set(e.u);
                p.z.set(e.v);
                break;
            case Color::B:
                p.z.set(e.u);
                p.z.set(e.v);
                break;
        }
    } else {
        const auto& t = h.e3[edge - h.e2.size()];
        p.z.set(t.u);
        p.z.set(t.v);
        p.z.set(t.w);
    }
    return p;
}

std::vector<Link> gauge_links(const Hypergraph& h) {
    std::vector<Link> links;
    for (int e = 0; e < int(h.e2.size()); ++e)
        links.push_back({edge_operator(h, e), h.e2[e].u, h.e2[e].v, e});
    for (int t = 0; t < int(h.e3.size()); ++t) {
        const auto& tri = h.e3[t];
        int id = int(h.e2.size()) + t;
        for (auto [a, b] : {std::pair{tri.u, tri.v}, std::pair{tri.u, tri.w},
                            std::pair{tri.v, tri.w}}) {
            PauliVector p(h.vertex_count);
            p.z.set(a);
            p.z.set(b);
            links.push_back({p, a, b, id});
        }
    }
    return links;
}

GroupAnalysis analyze_code(const Hypergraph& h) {
    GroupAnalysis a;
    a.n = h.vertex_count;
    auto links = gauge_links(h);

    a.gauge = GF2Space(2 * a.n);
    std::vector<BitVec> gen_rows;
    for (const auto& l : links) {
        BitVec row = l.op.packed();
        gen_rows.push_back(row);
        a.gauge.insert(row);
    }
    a.dim_gauge = a.gauge.rank();

    // C(G) = right kernel of the symplectically swapped generator matrix
    std::vector<BitVec> swapped;
    for (const auto& l : links) {
        BitVec row(2 * a.n);
        for (int i = 0; i < a.n; ++i) {
            if (l.op.z.get(i)) row.set(i);
            if (l.op.x.get(i)) row.set(a.n + i);
        }
        swapped.push_back(row);
    }
    // transpose, then left kernel
    std::vector<BitVec> cols(2 * a.n, BitVec(int(swapped.size())));
    for (size_t r = 0; r < swapped.size(); ++r)
        for (int c = 0; c < 2 * a.n; ++c)
            if (swapped[r].get(c)) cols[c].set(int(r));
    auto ker = left_kernel(cols, int(swapped.size()));
    a.centralizer = GF2Space(2 * a.n);
    for (const auto& kv : ker) {
        BitVec v(2 * a.n);
        for (int c = 0; c < 2 * a.n; ++c)
            if (kv.get(c)) v.set(c);
        a.centralizer.insert(v);
    }
    if (a.centralizer.rank() != 2 * a.n - a.dim_gauge)
        throw PauliError("internal: dim C(G) != 2n - dim G");

    auto inter = gf2_intersect(a.gauge.rows, a.centralizer.rows, 2 * a.n);
    a.stabilizer = GF2Space(2 * a.n);
    for (const auto& v : inter) a.stabilizer.insert(v);
    a.s = a.stabilizer.rank();
    if ((a.dim_gauge - a.s) % 2 != 0)
        throw PauliError("dim G - s is odd: construction violates pairing");
    a.r = (a.dim_gauge - a.s) / 2;
    a.k = a.n - a.r - a.s;
    return a;
}

PauliVector loop_operator(const Hypergraph& h, const std::vector<int>& cycle_edges) {
    if (!is_closed_hypercycle(h, cycle_edges))
        throw PauliError("edge set is not a closed hypercycle");
    PauliVector w(h.vertex_count);
    for (int e : cycle_edges) w *= edge_operator(h, e);
    return w;
}

std::vector<BitVec> cycle_space(const Hypergraph& h) {
    int E = h.edge_count();
    std::vector<BitVec> rows;
    rows.reserve(E);
    for (int e = 0; e < E; ++e) {
        BitVec row(h.vertex_count);
        for (int v : h.edge_vertices(e)) row.flip(v);
        rows.push_back(row);
    }
    return left_kernel(rows, h.vertex_count);
}

GloopCheck verify_gloop_identity(const Hypergraph& h) {
    auto basis = cycle_space(h);
    GF2Space image(2 * h.vertex_count);
    for (const auto& cyc : basis) {
        PauliVector w(h.vertex_count);
        for (int e = 0; e < h.edge_count(); ++e)
            if (cyc.get(e)) w *= edge_operator(h, e);
        image.insert(w.packed());
    }
    auto a = analyze_code(h);
    return {image.rank() == a.centralizer.rank(), image.rank(), a.centralizer.rank()};
}

// ---- syndrome measurement ordering --------------------------------------------

namespace {

struct OrderSearch {
    const std::vector<BitVec>* anti;  // anticommutation adjacency over pool subset
    int m;
    long long budget;
    bool gave_up = false;
    std::unordered_set<uint64_t> failed;  // hashed placed-sets known dead
    std::vector<int> order;
    std::vector<int> order_hint;

    static uint64_t hash_bits(const BitVec& v) {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t w : v.w) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }

    bool dfs(BitVec placed, int placed_count) {
        if (placed_count == m) return true;
        if (--budget < 0) {
            gave_up = true;
            return false;
        }
        uint64_t key = hash_bits(placed);
        if (failed.count(key)) return false;
        for (int hi = 0; hi < m; ++hi) {
            int i = order_hint.empty() ? hi : order_hint[hi];
            if (placed.get(i)) continue;
            // even number of anticommuting predecessors
            if (BitVec::dot((*anti)[i], placed)) continue;
            placed.set(i);
            order.push_back(i);
            if (dfs(placed, placed_count + 1)) return true;
            if (gave_up) return false;
            order.pop_back();
            placed.clear(i);
        }
        failed.insert(key);
        return false;
    }
};

}  // namespace

SyndromeOrder syndrome_order(const PauliVector& target, const std::vector<Link>& pool,
                             long long node_budget) {
    SyndromeOrder result;
    int P = int(pool.size());
    std::vector<BitVec> rows;
    for (const auto& l : pool) rows.push_back(l.op.packed());
    GF2Solution sol = gf2_solve(rows, target.packed(), 2 * target.n);
    if (!sol.ok) throw PauliError("target is not in the span of the pool");

    // Candidate subsets: the particular solution, kernel tweaks, then seeded
    // random kernel combinations.
    std::vector<BitVec> candidates = {sol.combo};
    for (const auto& k : sol.kernel) {
        BitVec c = sol.combo;
        c ^= k;
        candidates.push_back(c);
    }
    if (sol.kernel.size() >= 2 && sol.kernel.size() <= 16) {
        for (size_t i = 0; i < sol.kernel.size(); ++i)
            for (size_t j = i + 1; j < sol.kernel.size(); ++j) {
                BitVec c = sol.combo;
                c ^= sol.kernel[i];
                c ^= sol.kernel[j];
                candidates.push_back(c);
            }
    }
    if (!sol.kernel.empty()) {
        uint64_t state = 0x9e3779b97f4a7c15ull;
        auto rnd = [&]() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        for (int t = 0; t < 64; ++t) {
            BitVec c = sol.combo;
            for (const auto& k : sol.kernel)
                if (rnd() & 1) c ^= k;
            candidates.push_back(c);
        }
    }

    bool any_gave_up = false;
    for (const auto& subset : candidates) {
        std::vector<int> chosen;
        for (int i = 0; i < P; ++i)
            if (subset.get(i)) chosen.push_back(i);
        int m = int(chosen.size());
        std::vector<BitVec> anti(m, BitVec(m));
        long long anti_pairs = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (!commutes(pool[chosen[i]].op, pool[chosen[j]].op)) {
                    anti[i].set(j);
                    anti[j].set(i);
                    ++anti_pairs;
                }
        // every valid ordering makes all back-degrees even, and their sum is
        // the number of anticommuting pairs, so an odd count is hopeless
        if (anti_pairs % 2 != 0) continue;

        // restarts with reshuffled candidate order break out of local traps
        uint64_t state = 0xc0ffee ^ uint64_t(m);
        auto rnd = [&]() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        int restarts = m > 24 ? 24 : 1;
        long long per_restart = std::max<long long>(node_budget / restarts, 20'000);
        std::vector<int> perm(m);
        for (int i = 0; i < m; ++i) perm[i] = i;
        for (int attempt = 0; attempt < restarts; ++attempt) {
            OrderSearch search;
            search.anti = &anti;
            search.m = m;
            search.order_hint = perm;
            search.budget = attempt ? per_restart : std::max(per_restart, node_budget / 4);
            if (search.dfs(BitVec(std::max(m, 1)), 0)) {
                result.feasible = true;
                for (int idx : search.order) result.order.push_back(pool[chosen[idx]]);
                return result;
            }
            any_gave_up |= search.gave_up;
            if (!search.gave_up) break;  // exhausted: this subset is refuted
            for (int i = m - 1; i > 0; --i)
                std::swap(perm[i], perm[rnd() % (i + 1)]);
        }
    }
    result.feasible = false;
    result.exhausted_budget = any_gave_up;
    return result;
}

std::vector<Link> cycle_link_pool(const Hypergraph& h, const std::vector<int>& cycle_edges) {
    // links inside the cycle's support widened by one neighbourhood step: the
    // reference measurement sequences also use links of the region a cycle
    // encloses (the ring stabilizers run through their face's own boundary)
    std::vector<char> in_supp(h.vertex_count, 0);
    for (int e : cycle_edges)
        for (int v : h.edge_vertices(e)) in_supp[v] = 1;
    std::vector<char> near(in_supp);
    for (int e = 0; e < h.edge_count(); ++e) {
        auto vs = h.edge_vertices(e);
        bool touches = false;
        for (int v : vs) touches |= in_supp[v];
        if (touches)
            for (int v : vs) near[v] = 1;
    }
    std::vector<char> in_cycle(h.edge_count(), 0);
    for (int e : cycle_edges) in_cycle[e] = 1;
    std::vector<Link> pool;
    for (const auto& l : gauge_links(h)) {
        if (in_cycle[l.from_edge] || (near[l.a] && near[l.b])) pool.push_back(l);
    }
    return pool;
}

std::optional<int> brute_min_dressed_weight(const GroupAnalysis& a, int weight_cap) {
    if (a.k < 1) throw PauliError("code encodes no logical qubit");
    int n = a.n;
    // enumerate supports of increasing size, letters by 3^w
    std::vector<int> support;
    std::optional<int> best;
    std::function<bool(int, int)> fill = [&](int from, int remaining) -> bool {
        if (remaining == 0) {
            int w = int(support.size());
            long long combos = 1;
            for (int i = 0; i < w; ++i) combos *= 3;
            for (long long code = 0; code < combos; ++code) {
                PauliVector p(n);
                long long c = code;
                for (int q : support) {
                    int letter = c % 3;
                    c /= 3;
                    if (letter == 0) p.x.set(q);
                    if (letter == 1) { p.x.set(q); p.z.set(q); }
                    if (letter == 2) p.z.set(q);
                }
                bool central = true;
                for (const auto& s : a.stabilizer.rows) {
                    PauliVector sv = PauliVector::unpack(s, n);
                    if (!commutes(p, sv)) { central = false; break; }
                }
                if (!central) continue;
                if (!a.gauge.contains(p.packed())) {
                    best = w;
                    return true;
                }
            }
            return false;
        }
        for (int v = from; v <= n - remaining; ++v) {
            support.push_back(v);
            if (fill(v + 1, remaining - 1)) return true;
            support.pop_back();
        }
        return false;
    };
    for (int w = 1; w <= weight_cap; ++w) {
        support.clear();
        if (fill(0, w)) return best;
    }
    return std::nullopt;
}

}  // namespace tsc
