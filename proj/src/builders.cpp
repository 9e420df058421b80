#include "tsc/builders.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "tsc/gf2.hpp"
#include "tsc/pauli.hpp"

namespace tsc {

SourceCounts count_colored_map(const CombinatorialMap& m, const FaceColoring& col) {
    SourceCounts c;
    c.n_v = m.vertex_count();
    c.n_e = m.edge_count();
    c.n_f = m.face_count();
    c.chi = m.euler_characteristic();
    for (int f = 0; f < m.face_count(); ++f) {
        switch (col.color_of_face[f]) {
            case Color::R: ++c.f_r; break;
            case Color::G: ++c.f_g; break;
            case Color::B: ++c.f_b; break;
        }
    }
    return c;
}

EdgeBudget expected_edges_family1(const SourceCounts& c, long long p1) {
    return {c.n_e - p1 * c.f_r + (p1 + 3) * c.f_r, (p1 + 1) * c.f_r};
}
EdgeBudget expected_edges_family2(const SourceCounts& c, long long p1) {
    return {c.n_e - p1 * c.f_r + p1 * c.f_r, p1 * c.f_r};
}
EdgeBudget expected_edges_family3(const SourceCounts& c, long long p1) {
    return expected_edges_family1(c, p1);
}

// ---- placement -----------------------------------------------------------------

std::vector<std::array<int, 3>> place_inner_triangles(const PlacementProblem& prob) {
    int nf = int(prob.slot_cycle.size());
    std::vector<int> parity(prob.cycle_count, 0);
    // toggles still available from faces not yet placed
    std::vector<int> avail(prob.cycle_count, 0);
    for (const auto& slots : prob.slot_cycle)
        for (int c : slots)
            if (c >= 0) ++avail[c];

    std::vector<std::array<int, 3>> choice(nf);
    std::function<bool(int)> go = [&](int f) -> bool {
        if (f == nf) {
            for (int c = 0; c < prob.cycle_count; ++c)
                if (parity[c]) return false;
            return true;
        }
        const auto& slots = prob.slot_cycle[f];
        int ns = int(slots.size());
        if (ns < 3) throw PlacementError("face offers fewer than 3 inner-triangle slots");
        for (int c : slots)
            if (c >= 0) --avail[c];
        for (int a = 0; a < ns; ++a)
            for (int b = a + 1; b < ns; ++b)
                for (int d = b + 1; d < ns; ++d) {
                    for (int s : {a, b, d})
                        if (slots[s] >= 0) parity[slots[s]] ^= 1;
                    bool viable = true;
                    for (int c = 0; c < prob.cycle_count && viable; ++c)
                        if (parity[c] && avail[c] == 0) viable = false;
                    if (viable) {
                        choice[f] = {a, b, d};
                        if (go(f + 1)) return true;
                    }
                    for (int s : {a, b, d})
                        if (slots[s] >= 0) parity[slots[s]] ^= 1;
                }
        for (int c : slots)
            if (c >= 0) ++avail[c];
        return false;
    };
    if (!go(0)) {
        std::vector<int> bad;
        for (int c = 0; c < prob.cycle_count; ++c) bad.push_back(c);
        throw PlacementError("inner-triangle placement infeasible", bad);
    }
    return choice;
}

// ---- shared construction state ---------------------------------------------------

namespace {

struct EdgeRef {
    // where a source edge ended up
    enum Kind { Rank2, Triangle, None } kind = None;
    int index = -1;  // hypergraph edge index
};

struct FaceBuild {
    int face = -1;
    std::vector<int> boundary;  // darts, rotated to start on an attach side
    int p = 0;                  // attach side count
    std::vector<int> apex;      // apex qubit per attach side
    std::vector<int> tri_edge;  // rank-3 edge id per attach side
    std::vector<std::vector<int>> fprime;  // f' edge ids per flank (1 or 2)
    std::vector<int> sub_vertex;           // per flank, -1 if whole
    int inner_tri = -1;
    std::map<int, int> pos_of_dart;  // boundary dart -> position
};

struct GammaHState {
    const CombinatorialMap* m;
    const FaceColoring* col;
    AttachColor attach;
    ConstraintMode mode;
    bool register_rings = false;
    std::set<int> F;

    Hypergraph h;
    FaceRegistry registry;
    std::vector<EdgeRef> src_edge;    // per source edge
    std::vector<FaceBuild> faces;     // per F face, ascending face id
    std::map<int, int> fb_of_face;    // face id -> index into faces

    Color attach_color() const { return attach == AttachColor::Blue ? Color::B : Color::G; }

    Color face_color(int f) const { return col->color_of_face[f]; }
    Color across_color(int dart) const { return face_color(m->face_of[m->alpha[dart]]); }
};

int advance_in_face(const CombinatorialMap& m, int dart, int steps) {
    int d = dart;
    for (int i = 0; i < steps; ++i) d = m.sigma[m.alpha[d]];
    return d;
}

// survivor color rule (see the construction's edge coloring)
Color survivor_color(GammaHState& st, int edge) {
    int d = st.m->edge_dart[edge];
    Color a = st.face_color(st.m->face_of[d]);
    Color b = st.face_color(st.m->face_of[st.m->alpha[d]]);
    if (a == b) throw BuildError("improperly colored source map");
    auto has = [&](Color c) { return a == c || b == c; };
    Color att = st.attach_color();
    if (has(Color::R) && has(att)) return att;  // red face not in F keeps the attach color
    if (st.attach == AttachColor::Blue) {
        if (has(Color::R) && has(Color::G)) return Color::R;
        return Color::G;  // G-B edge
    }
    // attach = green: R-B -> R, G-B -> G
    if (has(Color::R) && has(Color::B)) return Color::R;
    return Color::G;
}

void build_skeleton(GammaHState& st) {
    const auto& m = *st.m;
    st.h.vertex_count = m.vertex_count();
    st.src_edge.assign(m.edge_count(), {});

    for (int f : st.F) {
        if (st.face_color(f) != Color::R)
            throw BuildError("selected face " + std::to_string(f) + " is not red");
        FaceBuild fb;
        fb.face = f;
        auto darts = m.face_darts(f);
        int first = -1;
        for (size_t i = 0; i < darts.size(); ++i)
            if (st.across_color(darts[i]) == st.attach_color()) { first = int(i); break; }
        if (first < 0) throw BuildError("face has no attach-colored side");
        std::rotate(darts.begin(), darts.begin() + first, darts.end());
        if (darts.size() % 2 != 0) throw BuildError("odd face size");
        fb.p = int(darts.size()) / 2;
        for (size_t i = 0; i < darts.size(); ++i) {
            bool want_attach = i % 2 == 0;
            bool is_attach = st.across_color(darts[i]) == st.attach_color();
            if (want_attach != is_attach)
                throw BuildError("face sides do not alternate with the attach color");
        }
        fb.boundary = darts;
        for (size_t i = 0; i < darts.size(); ++i) fb.pos_of_dart[darts[i]] = int(i);
        st.fb_of_face[f] = int(st.faces.size());
        st.faces.push_back(std::move(fb));
    }
}

// constraint cycle ids for the placement problem
PlacementProblem placement_problem(GammaHState& st) {
    const auto& m = *st.m;
    PlacementProblem prob;
    if (st.mode == ConstraintMode::None) {
        for (const auto& fb : st.faces)
            prob.slot_cycle.push_back(std::vector<int>(fb.p, -1));
        return prob;
    }
    std::map<int, int> cycle_id;  // constrained face -> id
    auto id_of = [&](int face) {
        auto it = cycle_id.find(face);
        if (it != cycle_id.end()) return it->second;
        int id = int(cycle_id.size());
        cycle_id[face] = id;
        return id;
    };
    for (const auto& fb : st.faces) {
        std::vector<int> slots(fb.p, -1);
        for (int j = 0; j < fb.p; ++j) {
            int d = fb.boundary[2 * j + 1];  // non-attach side flanked by f' edge j
            int across = m.face_of[m.alpha[d]];
            if (st.mode == ConstraintMode::GreenSigma2) {
                slots[j] = id_of(across);  // the green face's sigma2 hypercycle
            } else {
                // RedRing: the red face opposite across the green square
                if (st.face_color(across) != Color::G)
                    throw BuildError("expected a green face across a non-attach side");
                int far = advance_in_face(m, m.alpha[d], 2);
                int red = m.face_of[m.alpha[far]];
                slots[j] = id_of(red);
            }
        }
        prob.slot_cycle.push_back(std::move(slots));
    }
    prob.cycle_count = int(cycle_id.size());
    return prob;
}

void build_edges(GammaHState& st, const std::vector<std::array<int, 3>>& chosen) {
    const auto& m = *st.m;
    // survivors in source edge order
    for (int e = 0; e < m.edge_count(); ++e) {
        int d = m.edge_dart[e];
        int fa = m.face_of[d], fb = m.face_of[m.alpha[d]];
        // an edge is absorbed iff it is an attach side of an F face
        bool absorbed = false;
        Color ca = st.face_color(fa), cb = st.face_color(fb);
        int red_face = ca == Color::R ? fa : cb == Color::R ? fb : -1;
        Color other = ca == Color::R ? cb : ca;
        if (red_face >= 0 && st.F.count(red_face) && other == st.attach_color())
            absorbed = true;
        if (absorbed) continue;
        auto [u, v] = m.edge_ends(e);
        st.src_edge[e] = {EdgeRef::Rank2, int(st.h.e2.size())};
        st.h.e2.push_back({u, v, survivor_color(st, e)});
    }
    // per-face insertions
    for (size_t fi = 0; fi < st.faces.size(); ++fi) {
        auto& fb = st.faces[fi];
        bool odd = fb.p % 2 != 0;
        // apexes then subdivision vertices
        for (int j = 0; j < fb.p; ++j) fb.apex.push_back(st.h.vertex_count++);
        fb.sub_vertex.assign(fb.p, -1);
        std::vector<int> flanks;
        if (odd) {
            flanks = {chosen[fi][0], chosen[fi][1], chosen[fi][2]};
            for (int fl : flanks) fb.sub_vertex[fl] = st.h.vertex_count++;
        }
        // rank-3 edges on the attach sides
        for (int j = 0; j < fb.p; ++j) {
            int d = fb.boundary[2 * j];
            int e = m.edge_of[d];
            auto [u, v] = m.edge_ends(e);
            st.src_edge[e] = {EdgeRef::Triangle, int(st.h.e2.size() + st.h.e3.size())};
            fb.tri_edge.push_back(int(st.h.e2.size() + st.h.e3.size()));
            st.h.e3.push_back({fb.apex[j], u, v});
        }
        // f' ring with alternating colors
        fb.fprime.assign(fb.p, {});
        int parity = 0;
        auto ring_color = [&]() {
            Color c = parity ? Color::G : Color::R;
            parity ^= 1;
            return c;
        };
        for (int j = 0; j < fb.p; ++j) {
            int a = fb.apex[j], b = fb.apex[(j + 1) % fb.p];
            if (fb.sub_vertex[j] >= 0) {
                int t = fb.sub_vertex[j];
                fb.fprime[j].push_back(int(st.h.e2.size()));
                st.h.e2.push_back({a, t, ring_color()});
                fb.fprime[j].push_back(int(st.h.e2.size()));
                st.h.e2.push_back({t, b, ring_color()});
            } else {
                fb.fprime[j].push_back(int(st.h.e2.size()));
                st.h.e2.push_back({a, b, ring_color()});
            }
        }
        if (odd) {
            fb.inner_tri = int(st.h.e2.size() + st.h.e3.size());
            st.h.e3.push_back({fb.sub_vertex[flanks[0]], fb.sub_vertex[flanks[1]],
                               fb.sub_vertex[flanks[2]]});
        }
    }
}

// fix rank-3 indices after e2 has finished growing: triangle ids were assigned
// while e2 was still being appended for later faces
void renumber_triangles(GammaHState& st) {
    int e2n = int(st.h.e2.size());
    int seen = 0;
    for (auto& fb : st.faces) {
        for (auto& t : fb.tri_edge) t = e2n + seen++;
        if (fb.inner_tri >= 0) fb.inner_tri = e2n + seen++;
        for (int j = 0; j < fb.p; ++j) {
            int e = st.m->edge_of[fb.boundary[2 * j]];
            st.src_edge[e] = {EdgeRef::Triangle, fb.tri_edge[j]};
        }
    }
}

std::vector<int> sorted_edges(BitVec bits) {
    std::vector<int> out;
    for (int i = 0; i < bits.n; ++i)
        if (bits.get(i)) out.push_back(i);
    return out;
}

void require_closed(const Hypergraph& h, const std::vector<int>& edges,
                    const std::string& tag) {
    if (!is_closed_hypercycle(h, edges))
        throw BuildError("internal: registry cycle " + tag + " is not closed");
}

void add_cycle(GammaHState& st, const std::string& tag, const std::vector<int>& edges) {
    require_closed(st.h, edges, tag);
    st.registry.cycles.push_back({tag, edges});
}

// sigma1 = the f' ring
std::vector<int> fprime_ring(const FaceBuild& fb) {
    std::vector<int> out;
    for (const auto& fl : fb.fprime)
        for (int e : fl) out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
}

// sigma2 = triangles + red non-attach sides of f + red f' edges
std::vector<int> red_sigma2(GammaHState& st, const FaceBuild& fb) {
    BitVec bits(st.h.edge_count());
    for (int t : fb.tri_edge) bits.flip(t);
    if (fb.inner_tri >= 0) bits.flip(fb.inner_tri);
    for (int j = 0; j < fb.p; ++j) {
        int e = st.m->edge_of[fb.boundary[2 * j + 1]];
        if (st.src_edge[e].kind != EdgeRef::Rank2)
            throw BuildError("internal: non-attach side did not survive");
        bits.flip(st.src_edge[e].index);
    }
    for (const auto& fl : fb.fprime)
        for (int e : fl)
            if (st.h.e2[e].color == Color::R) bits.flip(e);
    return sorted_edges(bits);
}

std::vector<int> xor_cycles(int edge_count, const std::vector<int>& a,
                            const std::vector<int>& b) {
    BitVec bits(edge_count);
    for (int e : a) bits.flip(e);
    for (int e : b) bits.flip(e);
    return sorted_edges(bits);
}

// family-1 green face sigma2: triangles at the face's vertices, red sides of
// the face, far sides of the adjacent blue squares, and the f' crossing edges
// of the red faces across the red sides.
std::vector<int> green_sigma2(GammaHState& st, int g) {
    const auto& m = *st.m;
    BitVec bits(st.h.edge_count());
    for (int d : m.face_darts(g)) {
        int v = m.vertex_of[d];
        // third dart at v, not on the face boundary
        int third = -1;
        for (int dd : m.vertex_darts(v)) {
            bool on_face = false;
            for (int d2 : {dd, m.alpha[dd]})
                if (m.face_of[d2] == g) on_face = true;
            if (!on_face) third = dd;
        }
        if (third < 0) throw BuildError("internal: no third edge at a green-face vertex");
        int e3ref = m.edge_of[third];
        if (st.src_edge[e3ref].kind != EdgeRef::Triangle)
            throw BuildError("internal: expected a triangle at a green-face vertex");
        bits.flip(st.src_edge[e3ref].index);
    }
    for (int d : m.face_darts(g)) {
        Color across = st.across_color(d);
        int e = m.edge_of[d];
        if (across == Color::R) {
            // crossing f' edge of the red face behind this side
            int red = m.face_of[m.alpha[d]];
            auto it = st.fb_of_face.find(red);
            if (it == st.fb_of_face.end())
                throw BuildError("internal: red face not selected in F");
            const auto& fb = st.faces[it->second];
            int pos = fb.pos_of_dart.at(m.alpha[d]);
            if (pos % 2 != 1) throw BuildError("internal: crossing side is not non-attach");
            for (int fe : fb.fprime[(pos - 1) / 2]) bits.flip(fe);
        } else {
            // blue square: this green side of the face plus its far side
            bits.flip(st.src_edge[e].index);
            int far = advance_in_face(m, m.alpha[d], 2);
            int fe = m.edge_of[far];
            if (st.src_edge[fe].kind != EdgeRef::Rank2)
                throw BuildError("internal: far square side did not survive");
            bits.flip(st.src_edge[fe].index);
        }
    }
    return sorted_edges(bits);
}

// family-2/3 ring hypercycle around a selected red face
std::vector<int> red_ring(GammaHState& st, const FaceBuild& fb) {
    const auto& m = *st.m;
    BitVec bits(st.h.edge_count());
    for (int j = 0; j < fb.p; ++j) {
        // attach side: blue hexagon across; its two other triangles and far side
        int d = fb.boundary[2 * j];
        int hd = m.alpha[d];
        auto hex = m.face_darts(m.face_of[hd]);
        // rotate so the shared side is position 0
        int start = -1;
        for (size_t i = 0; i < hex.size(); ++i)
            if (hex[i] == hd) start = int(i);
        std::rotate(hex.begin(), hex.begin() + start, hex.end());
        if (hex.size() != 6) throw BuildError("ring construction requires blue hexagons");
        for (int pos : {2, 4}) {
            int e = m.edge_of[hex[pos]];
            if (st.src_edge[e].kind != EdgeRef::Triangle)
                throw BuildError("internal: hexagon side lacks a triangle");
            bits.flip(st.src_edge[e].index);
        }
        bits.flip(st.src_edge[m.edge_of[hex[3]]].index);  // far green side
        // non-attach side: green square across; far red side and the crossing
        int d2 = fb.boundary[2 * j + 1];
        int far = advance_in_face(m, m.alpha[d2], 2);
        bits.flip(st.src_edge[m.edge_of[far]].index);
        int red = m.face_of[m.alpha[far]];
        auto it = st.fb_of_face.find(red);
        if (it == st.fb_of_face.end()) throw BuildError("internal: ring neighbour not in F");
        const auto& nb = st.faces[it->second];
        int pos = nb.pos_of_dart.at(m.alpha[far]);
        if (pos % 2 != 1) throw BuildError("internal: ring crossing side is not non-attach");
        for (int fe : nb.fprime[(pos - 1) / 2]) bits.flip(fe);
    }
    return sorted_edges(bits);
}

void build_registry(GammaHState& st) {
    for (const auto& fb : st.faces) {
        std::string f = std::to_string(fb.face);
        auto s1 = fprime_ring(fb);
        auto s2 = red_sigma2(st, fb);
        add_cycle(st, "sigma1.r" + f, s1);
        add_cycle(st, "sigma2.r" + f, s2);
        add_cycle(st, "sigma3.r" + f, xor_cycles(st.h.edge_count(), s1, s2));
        if (st.register_rings) add_cycle(st, "ring.r" + f, red_ring(st, fb));
    }
    // green faces
    const auto& m = *st.m;
    for (int g = 0; g < m.face_count(); ++g) {
        if (st.face_color(g) != Color::G) continue;
        std::string gs = std::to_string(g);
        if (st.attach == AttachColor::Blue) {
            std::vector<int> border;
            bool whole = true;
            for (int d : m.face_darts(g)) {
                int e = m.edge_of[d];
                if (st.src_edge[e].kind != EdgeRef::Rank2) { whole = false; break; }
                border.push_back(st.src_edge[e].index);
            }
            if (whole) {
                std::sort(border.begin(), border.end());
                add_cycle(st, "sigma1.g" + gs, border);
            }
            if (st.mode == ConstraintMode::GreenSigma2) {
                auto s2 = green_sigma2(st, g);
                add_cycle(st, "sigma2.g" + gs, s2);
                auto s1 = st.registry.find("sigma1.g" + gs);
                if (s1)
                    add_cycle(st, "sigma3.g" + gs,
                              xor_cycles(st.h.edge_count(), s1->edges, s2));
            }
        }
    }
}

// ---- probes ------------------------------------------------------------------

// Converts a source-map edge cycle into a hypercycle: attach edges become
// their triangles, other edges their surviving links, and the apexes are
// paired up inside each face by f' arcs. Requires an even number of included
// attach sides per face, arranged by adding face boundaries to the curve.
struct CurveConverter {
    GammaHState* st;
    std::vector<BitVec> face_boundaries;   // per source face: edge set
    std::vector<BitVec> defect_toggles;    // per source face: effect on F-face parities
    std::vector<int> f_index_of_face;      // source face id -> F index or -1

    explicit CurveConverter(GammaHState& s) : st(&s) {
        const auto& m = *st->m;
        int E = m.edge_count();
        face_boundaries.assign(m.face_count(), BitVec(E));
        for (int f = 0; f < m.face_count(); ++f)
            for (int d : m.face_darts(f)) face_boundaries[f].flip(m.edge_of[d]);
        f_index_of_face.assign(m.face_count(), -1);
        for (size_t i = 0; i < st->faces.size(); ++i)
            f_index_of_face[st->faces[i].face] = int(i);
        defect_toggles.assign(m.face_count(), BitVec(int(st->faces.size())));
        for (int f = 0; f < m.face_count(); ++f) {
            for (size_t i = 0; i < st->faces.size(); ++i) {
                const auto& fb = st->faces[i];
                int cnt = 0;
                for (int j = 0; j < fb.p; ++j)
                    if (face_boundaries[f].get(m.edge_of[fb.boundary[2 * j]])) ++cnt;
                if (cnt % 2) defect_toggles[f].set(int(i));
            }
        }
    }

    BitVec defects(const BitVec& gamma) const {
        const auto& m = *st->m;
        BitVec d(int(st->faces.size()));
        for (size_t i = 0; i < st->faces.size(); ++i) {
            const auto& fb = st->faces[i];
            int cnt = 0;
            for (int j = 0; j < fb.p; ++j)
                if (gamma.get(m.edge_of[fb.boundary[2 * j]])) ++cnt;
            if (cnt % 2) d.set(int(i));
        }
        return d;
    }

    // returns the normalized curve, or nullopt if no face-boundary combination
    // can even out the attach-side parities
    std::optional<BitVec> normalize(BitVec gamma) const {
        BitVec d = defects(gamma);
        if (d.zero()) return gamma;
        GF2Solution sol = gf2_solve(defect_toggles, d, int(st->faces.size()));
        if (!sol.ok) return std::nullopt;
        for (int f = 0; f < int(face_boundaries.size()); ++f)
            if (sol.combo.get(f)) gamma ^= face_boundaries[f];
        return gamma;
    }

    std::optional<std::vector<int>> convert(const BitVec& gamma_in) const {
        auto norm = normalize(gamma_in);
        if (!norm) return std::nullopt;
        const BitVec& gamma = *norm;
        const auto& m = *st->m;
        BitVec bits(st->h.edge_count());
        for (int e = 0; e < m.edge_count(); ++e) {
            if (!gamma.get(e)) continue;
            const auto& ref = st->src_edge[e];
            if (ref.kind == EdgeRef::Rank2) {
                bits.flip(ref.index);
            } else if (ref.kind == EdgeRef::Triangle) {
                bits.flip(ref.index);
            } else {
                return std::nullopt;
            }
        }
        // pair apexes of included triangles inside each face
        for (const auto& fb : st->faces) {
            std::vector<int> hit;
            for (int j = 0; j < fb.p; ++j)
                if (gamma.get(m.edge_of[fb.boundary[2 * j]])) hit.push_back(j);
            if (hit.size() % 2) return std::nullopt;
            for (size_t a = 0; a + 1 < hit.size(); a += 2)
                for (int j = hit[a]; j < hit[a + 1]; ++j)
                    for (int fe : fb.fprime[j]) bits.flip(fe);
        }
        auto edges = sorted_edges(bits);
        if (!is_closed_hypercycle(st->h, edges)) return std::nullopt;
        return edges;
    }
};

long long shared_triangles(const Hypergraph& h, const std::vector<int>& a,
                           const std::vector<int>& b) {
    std::vector<char> in_a(h.edge_count(), 0);
    for (int e : a) in_a[e] = 1;
    long long c = 0;
    for (int e : b)
        if (in_a[e] && h.is_rank3(e)) ++c;
    return c;
}

bool build_probes_gamma_h(GammaHState& st) {
    const auto& m = *st.m;
    if (m.genus() < 1) return true;  // nothing to record on the sphere
    auto gens = homology_generator_cycles(m);
    CurveConverter conv(st);
    int E = m.edge_count();
    std::vector<BitVec> curves;
    for (const auto& g : gens) {
        BitVec b(E);
        for (int e : g) b.set(e);
        curves.push_back(b);
    }
    int twog = int(curves.size());
    std::vector<std::vector<int>> probes(twog);
    auto try_set = [&](const std::vector<BitVec>& cs) -> bool {
        std::vector<std::vector<int>> ms;
        for (const auto& c : cs) {
            auto mcyc = conv.convert(c);
            if (!mcyc) return false;
            ms.push_back(*mcyc);
        }
        // Gram matrix of the triangle-sharing form must be nondegenerate
        std::vector<BitVec> gram(twog, BitVec(twog));
        for (int i = 0; i < twog; ++i)
            for (int j = 0; j < twog; ++j)
                if (shared_triangles(st.h, ms[i], ms[j]) % 2) gram[i].set(j);
        GF2Space sp(twog);
        for (const auto& row : gram) sp.insert(row);
        if (sp.rank() != twog) return false;
        probes = ms;
        return true;
    };
    if (!try_set(curves)) {
        // retry with curve modifications; the class basis is kept, only the
        // representatives move
        bool done = false;
        for (int j = 0; j < twog && !done; ++j) {
            for (int f = 0; f < m.face_count() && !done; ++f) {
                auto alt = curves;
                alt[j] ^= conv.face_boundaries[f];
                done = try_set(alt);
            }
        }
        for (int i = 0; i < twog && !done; ++i)
            for (int j = 0; j < twog && !done; ++j) {
                if (i == j) continue;
                auto alt = curves;
                alt[j] ^= curves[i];
                done = try_set(alt);
            }
        if (!done) return false;
    }
    for (int i = 0; i < twog; ++i)
        add_cycle(st, "probe." + std::to_string(i), probes[i]);
    return true;
}

}  // namespace

// ---- gamma_h entry ---------------------------------------------------------------

static BuildResult build_gamma_h_impl(const CombinatorialMap& m, const FaceColoring& col,
                                      const std::set<int>& F, AttachColor attach,
                                      ConstraintMode mode, bool register_rings) {
    auto rep = check_trivalent_3colorable(m, col);
    if (!rep.ok()) throw BuildError("source map is not trivalent and 3-colorable");
    if (F.empty()) throw BuildError("F must be non-empty");

    GammaHState st;
    st.m = &m;
    st.col = &col;
    st.attach = attach;
    st.mode = mode;
    st.register_rings = register_rings;
    st.F = F;
    build_skeleton(st);

    int p = st.faces.front().p;
    for (const auto& fb : st.faces)
        if (fb.p != p) throw BuildError("selected faces have mixed sizes");

    std::vector<std::array<int, 3>> chosen(st.faces.size(), {0, 1, 2});
    if (p % 2 != 0) {
        if (p < 3) throw BuildError("face too small for an inner triangle");
        chosen = place_inner_triangles(placement_problem(st));
    }
    build_edges(st, chosen);
    renumber_triangles(st);
    build_registry(st);

    BuildResult out;
    out.source = m;
    out.source_coloring = col;
    out.counts = count_colored_map(m, col);
    st.h.provenance = "";
    out.probes_ok = build_probes_gamma_h(st);
    out.h = std::move(st.h);
    out.registry = std::move(st.registry);
    return out;
}

BuildResult build_gamma_h(const CombinatorialMap& m, const FaceColoring& col,
                          const std::set<int>& F, AttachColor attach,
                          ConstraintMode mode) {
    return build_gamma_h_impl(m, col, F, attach, mode,
                              mode == ConstraintMode::RedRing);
}

// ---- classified builders -----------------------------------------------------------

namespace {

struct ClassSizes {
    long long red = -1, green = -1, blue = -1;  // face sizes per color, -1 mixed
};

ClassSizes face_sizes(const CombinatorialMap& m, const FaceColoring& col) {
    ClassSizes s;
    auto note = [](long long& slot, long long size) {
        if (slot == -1)
            slot = size;
        else if (slot != size)
            slot = -2;
    };
    for (int f = 0; f < m.face_count(); ++f) {
        long long size = (long long)m.face_darts(f).size();
        switch (col.color_of_face[f]) {
            case Color::R: note(s.red, size); break;
            case Color::G: note(s.green, size); break;
            case Color::B: note(s.blue, size); break;
        }
    }
    return s;
}

std::set<int> all_red(const CombinatorialMap& m, const FaceColoring& col) {
    std::set<int> F;
    for (int f = 0; f < m.face_count(); ++f)
        if (col.color_of_face[f] == Color::R) F.insert(f);
    return F;
}

std::string counts_blob(const SourceCounts& c) {
    std::ostringstream s;
    s << "Nv=" << c.n_v << " Ne=" << c.n_e << " Nf=" << c.n_f << " FR=" << c.f_r
      << " FG=" << c.f_g << " FB=" << c.f_b << " chi=" << c.chi;
    return s.str();
}

}  // namespace

BuildResult build_family1(const CombinatorialMap& m, const FaceColoring& col) {
    ClassSizes s = face_sizes(m, col);
    if (s.blue != 4) throw BuildError("family 1 requires blue squares ({2p1,2p2,4})");
    if (s.red < 6 || s.red % 4 != 2)
        throw BuildError("family 1 requires red faces of size 2p1 with odd p1 > 2");
    BuildResult out = build_gamma_h(m, col, all_red(m, col), AttachColor::Blue,
                                    ConstraintMode::GreenSigma2);
    std::ostringstream prov;
    prov << "family=1 p1=" << s.red / 2 << " p2=" << s.green / 2 << " "
         << counts_blob(out.counts);
    out.h.provenance = prov.str();
    EdgeBudget want = expected_edges_family1(out.counts, s.red / 2);
    if (want.e2 != (long long)out.h.e2.size() || want.e3 != (long long)out.h.e3.size())
        throw BuildError("internal: family-1 edge budget violated");
    return out;
}

BuildResult build_sarvepalli_even(const CombinatorialMap& m, const FaceColoring& col,
                                  const std::set<int>& F, AttachColor attach) {
    for (int f : F) {
        long long size = (long long)m.face_darts(f).size();
        if (size % 4 != 0 || size <= 4)
            throw BuildError("selected face size must be divisible by 4 and exceed 4");
    }
    return build_gamma_h(m, col, F, attach, ConstraintMode::None);
}

BuildResult build_family2(const CombinatorialMap& m, const FaceColoring& col) {
    ClassSizes s = face_sizes(m, col);
    if (s.green != 4 || s.blue != 6)
        throw BuildError("family 2 requires class {2p1,4,6}");
    if (s.red % 4 != 0 || s.red < 12)
        throw BuildError("family 2 requires red faces of size 2p1 with even p1 (p1 >= 6)");
    BuildResult out = build_gamma_h_impl(m, col, all_red(m, col), AttachColor::Blue,
                                         ConstraintMode::None, /*register_rings=*/true);
    bool tri = is_tripartite(reduced_red_graph(m, col));
    std::ostringstream prov;
    prov << "family=2 p1=" << s.red / 2 << " tripartite=" << (tri ? 1 : 0) << " "
         << counts_blob(out.counts);
    out.h.provenance = prov.str();
    EdgeBudget want = expected_edges_family2(out.counts, s.red / 2);
    if (want.e2 != (long long)out.h.e2.size() || want.e3 != (long long)out.h.e3.size())
        throw BuildError("internal: family-2 edge budget violated");
    return out;
}

BuildResult build_family3(const CombinatorialMap& m, const FaceColoring& col) {
    ClassSizes s = face_sizes(m, col);
    if (s.green != 4 || s.blue != 6)
        throw BuildError("family 3 requires class {2p1,4,6}");
    if (s.red % 4 != 2 || s.red < 14)
        throw BuildError("family 3 requires red faces of size 2p1 with odd p1 > 6");
    BuildResult out = build_gamma_h(m, col, all_red(m, col), AttachColor::Blue,
                                    ConstraintMode::RedRing);
    std::ostringstream prov;
    prov << "family=3 p1=" << s.red / 2 << " " << counts_blob(out.counts);
    out.h.provenance = prov.str();
    EdgeBudget want = expected_edges_family3(out.counts, s.red / 2);
    if (want.e2 != (long long)out.h.e2.size() || want.e3 != (long long)out.h.e3.size())
        throw BuildError("internal: family-3 edge budget violated");
    return out;
}

// ---- corner constructions (Bombin, family 4) ----------------------------------------

namespace {

// Shared structure: one qubit per corner (dart), one rank-3 edge per source
// vertex, border rank-2 edges around each source face. Used by the Bombin
// baseline (even faces, no insertions) and by family 4 ({p,3} with odd p,
// inner triangle per face).
struct CornerState {
    const CombinatorialMap* m;
    Hypergraph h;
    FaceRegistry registry;
    std::vector<int> tri_of_vertex;            // rank-3 edge id per source vertex
    std::vector<std::vector<int>> border_of;   // per source dart: border edge ids
    std::vector<std::vector<int>> face_sides;  // per face: darts in order
    std::vector<int> sub_vertex_of_side;       // per dart: subdivision qubit or -1
};

void build_corner_core(CornerState& st, const std::vector<std::set<int>>& subdivide) {
    const auto& m = *st.m;
    int n_corners = m.dart_count();
    st.h.vertex_count = n_corners;
    // rank-3 edge per source vertex (its corners are the darts there)
    st.tri_of_vertex.assign(m.vertex_count(), -1);
    std::vector<Hypergraph::Rank3> tris;
    for (int v = 0; v < m.vertex_count(); ++v) {
        auto ds = m.vertex_darts(v);
        if (ds.size() != 3) throw BuildError("corner construction needs a trivalent map");
        st.tri_of_vertex[v] = int(tris.size());
        tris.push_back({ds[0], ds[1], ds[2]});
    }
    // subdivision qubits, in face order then side order
    st.sub_vertex_of_side.assign(m.dart_count(), -1);
    st.face_sides.resize(m.face_count());
    for (int f = 0; f < m.face_count(); ++f) {
        st.face_sides[f] = m.face_darts(f);
        for (int d : st.face_sides[f])
            if (subdivide[f].count(d)) st.sub_vertex_of_side[d] = st.h.vertex_count++;
    }
    // border edges: corner of dart e_k is sigma^{-1}(e_k); consecutive corners
    // are joined along side e_k
    std::vector<int> sigma_inv(m.dart_count());
    for (int d = 0; d < m.dart_count(); ++d) sigma_inv[m.sigma[d]] = d;
    st.border_of.assign(m.dart_count(), {});
    for (int f = 0; f < m.face_count(); ++f) {
        const auto& sides = st.face_sides[f];
        int L = int(sides.size());
        // color parity must close: border length + subdivisions must be even
        int parity = 0;
        auto next_color = [&]() {
            Color c = parity ? Color::G : Color::R;
            parity ^= 1;
            return c;
        };
        for (int k = 0; k < L; ++k) {
            int d = sides[k];
            int dnext = sides[(k + 1) % L];
            int ca = sigma_inv[d], cb = sigma_inv[dnext];
            int sub = st.sub_vertex_of_side[d];
            if (sub >= 0) {
                st.border_of[d].push_back(int(st.h.e2.size()));
                st.h.e2.push_back({ca, sub, next_color()});
                st.border_of[d].push_back(int(st.h.e2.size()));
                st.h.e2.push_back({sub, cb, next_color()});
            } else {
                st.border_of[d].push_back(int(st.h.e2.size()));
                st.h.e2.push_back({ca, cb, next_color()});
            }
        }
    }
    st.h.e3 = tris;
    // renumber triangle ids now that e2 is complete
    int base = int(st.h.e2.size());
    for (int v = 0; v < m.vertex_count(); ++v) st.tri_of_vertex[v] += base;
}

std::vector<int> corner_sigma2(CornerState& st, int f, int inner_tri) {
    const auto& m = *st.m;
    BitVec bits(st.h.edge_count());
    for (int d : st.face_sides[f]) bits.flip(st.tri_of_vertex[m.vertex_of[d]]);
    if (inner_tri >= 0) bits.flip(inner_tri);
    for (int d : st.face_sides[f])
        for (int e : st.border_of[d])
            if (st.h.e2[e].color == Color::R) bits.flip(e);
    for (int d : st.face_sides[f])
        for (int e : st.border_of[m.alpha[d]]) bits.flip(e);
    return sorted_edges(bits);
}

std::vector<int> corner_sigma1(CornerState& st, int f) {
    std::vector<int> out;
    for (int d : st.face_sides[f])
        for (int e : st.border_of[d]) out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
}

void corner_registry(CornerState& st, const std::vector<int>& inner_of_face) {
    for (int f = 0; f < st.m->face_count(); ++f) {
        std::string fs = std::to_string(f);
        auto s1 = corner_sigma1(st, f);
        auto s2 = corner_sigma2(st, f, inner_of_face[f]);
        require_closed(st.h, s1, "sigma1");
        require_closed(st.h, s2, "sigma2");
        st.registry.cycles.push_back({"sigma1.f" + fs, s1});
        st.registry.cycles.push_back({"sigma2.f" + fs, s2});
        st.registry.cycles.push_back(
            {"sigma3.f" + fs, xor_cycles(st.h.edge_count(), s1, s2)});
    }
}

// Probes by symplectic reduction of the triangle-sharing form on the cycle
// space: a full hyperbolic basis of the loop-commutation form. For the Bombin
// baseline the quotient it classifies is (surface classes) x (string colors),
// rank 4g; every nonzero class gives W(M) outside the gauge group, so the
// triangle minimum over them is a valid distance upper bound.
std::vector<std::vector<int>> algebraic_probes(const Hypergraph& h) {
    auto basis = cycle_space(h);
    int base = int(h.e2.size());
    int T = int(h.e3.size());
    struct Item {
        BitVec pattern;  // over rank-3 edges
        BitVec combo;    // over the cycle basis
    };
    std::vector<Item> items;
    for (size_t i = 0; i < basis.size(); ++i) {
        BitVec pat(T);
        for (int e = base; e < h.edge_count(); ++e)
            if (basis[i].get(e)) pat.set(e - base);
        BitVec combo(int(basis.size()));
        combo.set(int(i));
        items.push_back({pat, combo});
    }
    std::vector<Item> pairs;
    for (;;) {
        int a = -1, b = -1;
        for (size_t i = 0; i < items.size() && a < 0; ++i)
            for (size_t j = i + 1; j < items.size() && a < 0; ++j)
                if (BitVec::dot(items[i].pattern, items[j].pattern)) {
                    a = int(i);
                    b = int(j);
                }
        if (a < 0) break;
        Item pa = items[a], pb = items[b];
        std::vector<Item> rest;
        for (size_t i = 0; i < items.size(); ++i) {
            if (int(i) == a || int(i) == b) continue;
            Item v = items[i];
            if (BitVec::dot(v.pattern, pb.pattern)) {
                v.pattern ^= pa.pattern;
                v.combo ^= pa.combo;
            }
            if (BitVec::dot(v.pattern, pa.pattern)) {
                v.pattern ^= pb.pattern;
                v.combo ^= pb.combo;
            }
            rest.push_back(v);
        }
        items = std::move(rest);
        pairs.push_back(pa);
        pairs.push_back(pb);
    }
    std::vector<std::vector<int>> probes;
    for (const auto& p : pairs) {
        BitVec edges(h.edge_count());
        for (size_t i = 0; i < basis.size(); ++i)
            if (p.combo.get(int(i))) edges ^= basis[i];
        probes.push_back(sorted_edges(edges));
    }
    return probes;
}

bool corner_probes(CornerState& st) {
    const auto& m = *st.m;
    if (m.genus() < 1) return true;
    auto probes = algebraic_probes(st.h);
    if (int(probes.size()) < 2 * m.genus()) return false;
    for (size_t i = 0; i < probes.size(); ++i) {
        require_closed(st.h, probes[i], "probe");
        st.registry.cycles.push_back({"probe." + std::to_string(i), probes[i]});
    }
    return true;
}

}  // namespace

BuildResult build_bombin(const CombinatorialMap& m, const FaceColoring& col) {
    auto rep = check_trivalent_3colorable(m, col);
    if (!rep.ok()) throw BuildError("Bombin construction needs a trivalent 3-colorable map");
    for (int f = 0; f < m.face_count(); ++f)
        if (m.face_darts(f).size() % 2 != 0)
            throw BuildError("Bombin construction needs even face sizes");
    CornerState st;
    st.m = &m;
    std::vector<std::set<int>> subdivide(m.face_count());
    build_corner_core(st, subdivide);
    corner_registry(st, std::vector<int>(m.face_count(), -1));

    BuildResult out;
    out.source = m;
    out.source_coloring = col;
    out.counts = count_colored_map(m, col);
    std::ostringstream prov;
    prov << "family=bombin Vstar=" << m.face_count() << " Fstar=" << m.vertex_count()
         << " " << counts_blob(out.counts);
    st.h.provenance = prov.str();
    out.probes_ok = corner_probes(st);
    out.h = std::move(st.h);
    out.registry = std::move(st.registry);
    return out;
}

BuildResult build_family4(const CombinatorialMap& p3_map) {
    const auto& m = p3_map;
    auto val = vertex_valences(m);
    for (int v : val)
        if (v != 3) throw BuildError("family 4 needs a trivalent {p,3} map");
    long long p = -1;
    for (int f = 0; f < m.face_count(); ++f) {
        long long size = (long long)m.face_darts(f).size();
        if (p == -1) p = size;
        if (p != size) throw BuildError("family 4 needs constant face size");
    }
    if (p % 2 == 0 || p < 5) throw BuildError("family 4 needs odd p >= 5");

    CornerState st;
    st.m = &m;
    st.face_sides.resize(m.face_count());
    for (int f = 0; f < m.face_count(); ++f) st.face_sides[f] = m.face_darts(f);

    // placement: side k of face f adds a vertex to sigma2 of the face across
    PlacementProblem prob;
    prob.cycle_count = m.face_count();
    for (int f = 0; f < m.face_count(); ++f) {
        std::vector<int> slots;
        for (int d : st.face_sides[f]) slots.push_back(m.face_of[m.alpha[d]]);
        prob.slot_cycle.push_back(slots);
    }
    auto chosen = place_inner_triangles(prob);

    std::vector<std::set<int>> subdivide(m.face_count());
    for (int f = 0; f < m.face_count(); ++f)
        for (int s : chosen[f]) subdivide[f].insert(st.face_sides[f][s]);
    st.face_sides.clear();
    build_corner_core(st, subdivide);

    // inner triangles
    std::vector<int> inner_of_face(m.face_count(), -1);
    for (int f = 0; f < m.face_count(); ++f) {
        std::array<int, 3> subs;
        int k = 0;
        for (int s : chosen[f]) subs[k++] = st.sub_vertex_of_side[st.face_sides[f][s]];
        inner_of_face[f] = int(st.h.e2.size() + st.h.e3.size());
        st.h.e3.push_back({subs[0], subs[1], subs[2]});
    }
    corner_registry(st, inner_of_face);

    BuildResult out;
    out.source = m;
    out.source_coloring.color_of_face.assign(m.face_count(), Color::R);
    out.counts.n_v = m.vertex_count();
    out.counts.n_e = m.edge_count();
    out.counts.n_f = m.face_count();
    out.counts.chi = m.euler_characteristic();
    std::ostringstream prov;
    prov << "family=4 p=" << p << " FP=" << m.face_count() << " FT=" << m.vertex_count()
         << " FQ=" << m.edge_count() << " chi=" << m.euler_characteristic();
    st.h.provenance = prov.str();
    out.probes_ok = false;  // no probe recipe for {p,4,3,4}; distances stay census-only
    out.h = std::move(st.h);
    out.registry = std::move(st.registry);
    return out;
}

}  // namespace tsc
