#include "tsc/surface_map.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tsc {

char color_letter(Color c) { return "RGB"[int(c)]; }

Color color_from_letter(char c) {
    switch (c) {
        case 'R': return Color::R;
        case 'G': return Color::G;
        case 'B': return Color::B;
    }
    throw MapError(std::string("unknown color letter '") + c + "'");
}

// label orbits of a permutation; orbits numbered by least contained dart
static int label_orbits(const std::vector<int>& perm, std::vector<int>& of,
                        std::vector<int>& least) {
    int n = int(perm.size());
    of.assign(n, -1);
    least.clear();
    for (int d = 0; d < n; ++d) {
        if (of[d] >= 0) continue;
        int id = int(least.size());
        least.push_back(d);
        int x = d;
        while (of[x] < 0) {
            of[x] = id;
            x = perm[x];
        }
    }
    return int(least.size());
}

void CombinatorialMap::finalize() {
    int n = dart_count();
    if (int(alpha.size()) != n) throw MapError("sigma and alpha sizes differ");
    if (n % 2 != 0) throw MapError("odd number of darts");
    std::vector<char> seen(n, 0);
    for (int d = 0; d < n; ++d) {
        if (sigma[d] < 0 || sigma[d] >= n) throw MapError("sigma image out of range");
        if (alpha[d] < 0 || alpha[d] >= n) throw MapError("alpha image out of range");
        seen[sigma[d]] = 1;
    }
    for (int d = 0; d < n; ++d)
        if (!seen[d]) throw MapError("sigma is not a bijection");
    for (int d = 0; d < n; ++d) {
        if (alpha[d] == d) throw MapError("alpha has a fixed point");
        if (alpha[alpha[d]] != d) throw MapError("alpha is not an involution");
    }

    label_orbits(sigma, vertex_of, vertex_dart);
    label_orbits(alpha, edge_of, edge_dart);
    std::vector<int> phi_perm(n);
    for (int d = 0; d < n; ++d) phi_perm[d] = sigma[alpha[d]];
    label_orbits(phi_perm, face_of, face_dart);

    if (n > 0) {
        // connectivity under <sigma, alpha>
        std::vector<char> vis(n, 0);
        std::vector<int> stack = {0};
        vis[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int d = stack.back();
            stack.pop_back();
            for (int e : {sigma[d], alpha[d]}) {
                if (!vis[e]) {
                    vis[e] = 1;
                    ++count;
                    stack.push_back(e);
                }
            }
        }
        if (count != n) throw MapError("disconnected map");
    }

    int chi = euler_characteristic();
    if (chi % 2 != 0) throw MapError("odd Euler characteristic");
    if (chi > 2) throw MapError("Euler characteristic exceeds 2");
}

std::array<int, 2> CombinatorialMap::edge_ends(int e) const {
    int d = edge_dart[e];
    return {vertex_of[d], vertex_of[alpha[d]]};
}

std::vector<int> CombinatorialMap::face_darts(int f) const {
    std::vector<int> out;
    int d0 = face_dart[f];
    int d = d0;
    do {
        out.push_back(d);
        d = sigma[alpha[d]];
    } while (d != d0);
    return out;
}

std::vector<int> CombinatorialMap::vertex_darts(int v) const {
    std::vector<int> out;
    int d0 = vertex_dart[v];
    int d = d0;
    do {
        out.push_back(d);
        d = sigma[d];
    } while (d != d0);
    return out;
}

// ---- simple graphs ----------------------------------------------------------

void SimpleGraph::add_edge(int u, int v) {
    if (u == v) throw MapError("self-loop in simple graph");
    edges.insert({std::min(u, v), std::max(u, v)});
}

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
    std::vector<std::vector<int>> adj(vertex_count);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

bool is_bipartite(const SimpleGraph& g) {
    auto adj = g.adjacency();
    std::vector<int> side(g.vertex_count, -1);
    for (int s = 0; s < g.vertex_count; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<int> queue = {s};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int v : adj[u]) {
                if (side[v] < 0) {
                    side[v] = 1 - side[u];
                    queue.push_back(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_tripartite(const SimpleGraph& g) {
    auto adj = g.adjacency();
    std::vector<int> col(g.vertex_count, -1);
    std::function<bool(int)> go = [&](int u) -> bool {
        if (u == g.vertex_count) return true;
        for (int c = 0; c < 3; ++c) {
            bool ok = true;
            for (int v : adj[u])
                if (col[v] == c) { ok = false; break; }
            if (!ok) continue;
            col[u] = c;
            if (go(u + 1)) return true;
            col[u] = -1;
        }
        return false;
    };
    return go(0);
}

// ---- transforms -------------------------------------------------------------

CombinatorialMap dual(const CombinatorialMap& m) {
    CombinatorialMap d;
    int n = m.dart_count();
    d.sigma.resize(n);
    d.alpha = m.alpha;
    for (int k = 0; k < n; ++k) d.sigma[k] = m.sigma[m.alpha[k]];
    d.finalize();
    return d;
}

CombinatorialMap medial(const CombinatorialMap& m) {
    // darts 2t (from edge(t), along the corner (t, sigma t)) and 2t+1 (back)
    int n = m.dart_count();
    std::vector<int> sigma_inv(n);
    for (int d = 0; d < n; ++d) sigma_inv[m.sigma[d]] = d;
    CombinatorialMap out;
    out.sigma.resize(2 * n);
    out.alpha.resize(2 * n);
    for (int t = 0; t < n; ++t) {
        out.alpha[2 * t] = 2 * t + 1;
        out.alpha[2 * t + 1] = 2 * t;
        out.sigma[2 * t] = 2 * sigma_inv[t] + 1;
        out.sigma[2 * t + 1] = 2 * m.alpha[m.sigma[t]];
    }
    out.finalize();
    return out;
}

Inflation inflate_trivalent(const CombinatorialMap& m) {
    // Output vertices are flags: F0(d) = 2d (corner on the face side of d),
    // F1(d) = 2d+1 (corner between d and sigma(d)). Each flag carries three
    // output darts, one per move: 0 = f-move, 1 = e-move, 2 = v-move.
    int n = m.dart_count();
    auto dart_id = [](int flag, int mv) { return 3 * flag + mv; };
    CombinatorialMap out;
    out.sigma.assign(6 * n, -1);
    out.alpha.assign(6 * n, -1);

    for (int d = 0; d < n; ++d) {
        int f0 = 2 * d, f1 = 2 * d + 1;
        // f-move pairs the two flags of one dart
        out.alpha[dart_id(f0, 0)] = dart_id(f1, 0);
        out.alpha[dart_id(f1, 0)] = dart_id(f0, 0);
        // v-move: F0(d) <-> F1(alpha d)
        out.alpha[dart_id(f0, 2)] = dart_id(2 * m.alpha[d] + 1, 2);
        out.alpha[dart_id(2 * m.alpha[d] + 1, 2)] = dart_id(f0, 2);
        // e-move: F1(d) <-> F0(sigma d)
        out.alpha[dart_id(f1, 1)] = dart_id(2 * m.sigma[d], 1);
        out.alpha[dart_id(2 * m.sigma[d], 1)] = dart_id(f1, 1);
        // rotations: mirrored between the two flag chiralities
        out.sigma[dart_id(f0, 0)] = dart_id(f0, 1);
        out.sigma[dart_id(f0, 1)] = dart_id(f0, 2);
        out.sigma[dart_id(f0, 2)] = dart_id(f0, 0);
        out.sigma[dart_id(f1, 0)] = dart_id(f1, 2);
        out.sigma[dart_id(f1, 2)] = dart_id(f1, 1);
        out.sigma[dart_id(f1, 1)] = dart_id(f1, 0);
    }
    out.finalize();

    Inflation res;
    res.map = std::move(out);
    res.face_class.assign(res.map.face_count(), -1);
    res.face_source.assign(res.map.face_count(), -1);
    // classify output faces by the move types on their boundary
    for (int f = 0; f < res.map.face_count(); ++f) {
        auto darts = res.map.face_darts(f);
        bool has_f = false, has_e = false, has_v = false;
        for (int dd : darts) {
            int mv = dd % 3;
            has_f |= mv == 0;
            has_e |= mv == 1;
            has_v |= mv == 2;
        }
        int flag = darts[0] / 3;
        int d = flag / 2;
        if (has_f && has_v) {  // square at a source edge
            res.face_class[f] = 1;
            res.face_source[f] = m.edge_of[d];
        } else if (has_f && has_e) {  // 2j-gon at a source vertex
            res.face_class[f] = 0;
            res.face_source[f] = (flag % 2 == 0) ? m.vertex_of[d] : m.vertex_of[d];
        } else {  // 2s-gon at a source face
            res.face_class[f] = 2;
            res.face_source[f] = (flag % 2 == 0) ? m.face_of[d] : m.face_of[m.alpha[d]];
        }
    }
    res.coloring.color_of_face.resize(res.map.face_count());
    for (int f = 0; f < res.map.face_count(); ++f) {
        static const Color by_class[3] = {Color::R, Color::G, Color::B};
        res.coloring.color_of_face[f] = by_class[res.face_class[f]];
    }
    return res;
}

// ---- torus generators --------------------------------------------------------

namespace {

struct TriLattice {
    int p, q, shear;
    // axial neighbour directions in ccw order
    static constexpr int DX[6] = {1, 0, -1, -1, 0, 1};
    static constexpr int DY[6] = {0, 1, 1, 0, -1, -1};

    int norm_vertex(long long a, long long b) const {
        long long k = b >= 0 ? b / q : -((-b + q - 1) / q);
        b -= k * q;
        a -= k * shear;
        a %= p;
        if (a < 0) a += p;
        return int(a) * q + int(b);
    }
    int dart(int v, int k) const { return v * 6 + k; }
};

}  // namespace

CombinatorialMap triangular_torus(int p, int q, int shear) {
    if (p < 1 || q < 1) throw MapError("lattice dimensions must be positive");
    TriLattice lat{p, q, shear};
    CombinatorialMap m;
    m.sigma.resize(6 * p * q);
    m.alpha.resize(6 * p * q);
    for (int a = 0; a < p; ++a) {
        for (int b = 0; b < q; ++b) {
            int v = a * q + b;
            for (int k = 0; k < 6; ++k) {
                m.sigma[lat.dart(v, k)] = lat.dart(v, (k + 1) % 6);
                int u = lat.norm_vertex(a + TriLattice::DX[k], b + TriLattice::DY[k]);
                m.alpha[lat.dart(v, k)] = lat.dart(u, (k + 3) % 6);
            }
        }
    }
    m.finalize();
    return m;
}

CombinatorialMap honeycomb_torus(int p, int q, int shear) {
    return dual(triangular_torus(p, q, shear));
}

ColoredMap torus_tessellation(int two_p1, int two_p2, int two_p3, int m, int n) {
    if (m < 1 || n < 1) throw MapError("cell counts must be positive");
    std::array<int, 3> cls = {two_p1, two_p2, two_p3};

    if (cls == std::array<int, 3>{6, 6, 6}) {
        // 3 hexagons per cell, one of each color class
        int p = 3 * m, q = n, shear = n % 3;
        CombinatorialMap tri = triangular_torus(p, q, shear);
        ColoredMap out;
        out.map = honeycomb_torus(p, q, shear);
        // hexagon = dual face = sigma-orbit of the triangular map = its vertex
        out.coloring.color_of_face.resize(out.map.face_count());
        for (int f = 0; f < out.map.face_count(); ++f) {
            int d = out.map.face_dart[f];
            int v = tri.vertex_of[d];  // duality keeps dart ids
            int a = v / q, b = v % q;
            out.coloring.color_of_face[f] = Color(((a - b) % 3 + 3) % 3);
        }
        auto rep = check_trivalent_3colorable(out.map, out.coloring);
        if (!rep.ok()) throw MapError("internal: honeycomb coloring failed");
        return out;
    }

    std::array<int, 3> sorted = cls;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 3>{4, 6, 12})
        throw MapError("unsupported tessellation class for torus generation");

    // 4.6.12 = flag expansion of the plain honeycomb; unit cell has 12
    // vertices (1 twelve-gon, 2 hexagons, 3 squares).
    Inflation inf = inflate_trivalent(honeycomb_torus(m, n, 0));
    ColoredMap out;
    out.map = std::move(inf.map);
    out.coloring.color_of_face.resize(out.map.face_count());
    auto color_for_size = [&](int size) {
        if (size == two_p1) return Color::R;
        if (size == two_p2) return Color::G;
        return Color::B;
    };
    for (int f = 0; f < out.map.face_count(); ++f) {
        int size = int(out.map.face_darts(f).size());
        out.coloring.color_of_face[f] = color_for_size(size);
    }
    auto rep = check_trivalent_3colorable(out.map, out.coloring);
    if (!rep.ok()) throw MapError("internal: 4.6.12 coloring failed");
    return out;
}

// ---- platonic fixtures -------------------------------------------------------

// Build a map from 3D coordinates: neighbours sorted by angle in the tangent
// plane give the rotation system.
static CombinatorialMap map_from_coords(const std::vector<std::array<double, 3>>& pos,
                                        double edge_len, double tol) {
    int nv = int(pos.size());
    std::vector<std::vector<int>> nbr(nv);
    for (int i = 0; i < nv; ++i) {
        for (int j = 0; j < nv; ++j) {
            if (i == j) continue;
            double dx = pos[i][0] - pos[j][0], dy = pos[i][1] - pos[j][1],
                   dz = pos[i][2] - pos[j][2];
            double d = std::sqrt(dx * dx + dy * dy + dz * dz);
            if (std::abs(d - edge_len) < tol) nbr[i].push_back(j);
        }
    }
    // order each neighbour list ccw as seen from outside the sphere
    for (int i = 0; i < nv; ++i) {
        auto& p = pos[i];
        double nrm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        std::array<double, 3> nz = {p[0] / nrm, p[1] / nrm, p[2] / nrm};
        std::array<double, 3> ref;
        {
            int j = nbr[i][0];
            ref = {pos[j][0] - p[0], pos[j][1] - p[1], pos[j][2] - p[2]};
            double dn = ref[0] * nz[0] + ref[1] * nz[1] + ref[2] * nz[2];
            for (int k = 0; k < 3; ++k) ref[k] -= dn * nz[k];
        }
        std::array<double, 3> ref2 = {nz[1] * ref[2] - nz[2] * ref[1],
                                      nz[2] * ref[0] - nz[0] * ref[2],
                                      nz[0] * ref[1] - nz[1] * ref[0]};
        auto angle = [&](int j) {
            std::array<double, 3> v = {pos[j][0] - p[0], pos[j][1] - p[1], pos[j][2] - p[2]};
            double dn = v[0] * nz[0] + v[1] * nz[1] + v[2] * nz[2];
            for (int k = 0; k < 3; ++k) v[k] -= dn * nz[k];
            double x = v[0] * ref[0] + v[1] * ref[1] + v[2] * ref[2];
            double y = v[0] * ref2[0] + v[1] * ref2[1] + v[2] * ref2[2];
            return std::atan2(y, x);
        };
        std::sort(nbr[i].begin(), nbr[i].end(),
                  [&](int a, int b) { return angle(a) < angle(b); });
    }
    // darts
    std::vector<std::pair<int, int>> darts;  // (vertex, slot)
    std::map<std::pair<int, int>, int> dart_at;
    for (int i = 0; i < nv; ++i)
        for (int s = 0; s < int(nbr[i].size()); ++s) {
            dart_at[{i, s}] = int(darts.size());
            darts.push_back({i, s});
        }
    CombinatorialMap m;
    m.sigma.resize(darts.size());
    m.alpha.resize(darts.size());
    for (int d = 0; d < int(darts.size()); ++d) {
        auto [i, s] = darts[d];
        m.sigma[d] = dart_at[{i, (s + 1) % int(nbr[i].size())}];
        int j = nbr[i][s];
        int back = -1;
        for (int t = 0; t < int(nbr[j].size()); ++t)
            if (nbr[j][t] == i) back = t;
        m.alpha[d] = dart_at[{j, back}];
    }
    m.finalize();
    return m;
}

CombinatorialMap tetrahedron_map() {
    std::vector<std::array<double, 3>> pos = {
        {1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    return map_from_coords(pos, 2 * std::sqrt(2.0), 0.1);
}

CombinatorialMap cube_map() {
    std::vector<std::array<double, 3>> pos;
    for (int s = 0; s < 8; ++s)
        pos.push_back({s & 1 ? 1.0 : -1.0, s & 2 ? 1.0 : -1.0, s & 4 ? 1.0 : -1.0});
    return map_from_coords(pos, 2.0, 0.1);
}

CombinatorialMap dodecahedron_map() {
    const double phi = (1 + std::sqrt(5.0)) / 2;
    std::vector<std::array<double, 3>> ico = {
        {0, 1, phi},  {0, -1, phi},  {0, 1, -phi},  {0, -1, -phi},
        {1, phi, 0},  {-1, phi, 0},  {1, -phi, 0},  {-1, -phi, 0},
        {phi, 0, 1},  {phi, 0, -1},  {-phi, 0, 1},  {-phi, 0, -1}};
    CombinatorialMap icosa = map_from_coords(ico, 2.0, 0.1);
    return dual(icosa);
}

// ---- queries -----------------------------------------------------------------

std::vector<std::vector<int>> face_vertex_cycles(const CombinatorialMap& m) {
    std::vector<std::vector<int>> out(m.face_count());
    for (int f = 0; f < m.face_count(); ++f)
        for (int d : m.face_darts(f)) out[f].push_back(m.vertex_of[d]);
    return out;
}

std::vector<int> vertex_valences(const CombinatorialMap& m) {
    std::vector<int> val(m.vertex_count(), 0);
    for (int d = 0; d < m.dart_count(); ++d) ++val[m.vertex_of[d]];
    return val;
}

TrivalenceReport check_trivalent_3colorable(const CombinatorialMap& m,
                                            const FaceColoring& col) {
    TrivalenceReport rep;
    auto val = vertex_valences(m);
    for (int v = 0; v < m.vertex_count(); ++v)
        if (val[v] != 3) rep.bad_vertices.push_back(v);
    if (!rep.bad_vertices.empty())
        rep.messages.push_back(std::to_string(rep.bad_vertices.size()) +
                               " vertices are not trivalent");
    if (int(col.color_of_face.size()) != m.face_count()) {
        rep.bad_edges.push_back(-1);
        rep.messages.push_back("coloring does not cover all faces");
        return rep;
    }
    for (int e = 0; e < m.edge_count(); ++e) {
        int d = m.edge_dart[e];
        int f1 = m.face_of[d], f2 = m.face_of[m.alpha[d]];
        if (col.color_of_face[f1] == col.color_of_face[f2]) rep.bad_edges.push_back(e);
    }
    if (!rep.bad_edges.empty())
        rep.messages.push_back(std::to_string(rep.bad_edges.size()) +
                               " edges join same-colored faces");
    return rep;
}

SimpleGraph reduced_red_graph(const CombinatorialMap& m, const FaceColoring& col) {
    std::vector<int> red_id(m.face_count(), -1);
    int nred = 0;
    for (int f = 0; f < m.face_count(); ++f)
        if (col.color_of_face[f] == Color::R) red_id[f] = nred++;
    SimpleGraph g;
    g.vertex_count = nred;
    for (int f = 0; f < m.face_count(); ++f) {
        if (col.color_of_face[f] != Color::B) continue;
        std::vector<int> reds;
        for (int d : m.face_darts(f)) {
            int nb = m.face_of[m.alpha[d]];
            if (col.color_of_face[nb] == Color::R) reds.push_back(red_id[nb]);
        }
        std::sort(reds.begin(), reds.end());
        reds.erase(std::unique(reds.begin(), reds.end()), reds.end());
        for (size_t i = 0; i < reds.size(); ++i)
            for (size_t j = i + 1; j < reds.size(); ++j) g.add_edge(reds[i], reds[j]);
    }
    return g;
}

std::vector<std::vector<int>> homology_generator_cycles(const CombinatorialMap& m) {
    int V = m.vertex_count(), E = m.edge_count(), F = m.face_count();
    // primal spanning tree over vertices
    std::vector<char> in_tree(E, 0), v_seen(V, 0);
    std::vector<int> parent_edge(V, -1), parent_vertex(V, -1);
    std::vector<int> queue = {0};
    v_seen[0] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (int d : m.vertex_darts(v)) {
            int u = m.vertex_of[m.alpha[d]];
            if (!v_seen[u]) {
                v_seen[u] = 1;
                in_tree[m.edge_of[d]] = 1;
                parent_edge[u] = m.edge_of[d];
                parent_vertex[u] = v;
                queue.push_back(u);
            }
        }
    }
    // dual spanning tree over faces, using edges not in the primal tree
    std::vector<char> in_cotree(E, 0), f_seen(F, 0);
    std::vector<int> fq = {0};
    f_seen[0] = 1;
    for (size_t qi = 0; qi < fq.size(); ++qi) {
        int f = fq[qi];
        for (int d : m.face_darts(f)) {
            int e = m.edge_of[d];
            if (in_tree[e] || in_cotree[e]) continue;
            int g = m.face_of[m.alpha[d]];
            if (!f_seen[g]) {
                f_seen[g] = 1;
                in_cotree[e] = 1;
                fq.push_back(g);
            }
        }
    }
    std::vector<std::vector<int>> gens;
    auto tree_path_toggle = [&](int v, std::vector<char>& mark) {
        while (parent_edge[v] >= 0) {
            mark[parent_edge[v]] ^= 1;
            v = parent_vertex[v];
        }
    };
    for (int e = 0; e < E; ++e) {
        if (in_tree[e] || in_cotree[e]) continue;
        std::vector<char> mark(E, 0);
        mark[e] = 1;
        auto [u, v] = m.edge_ends(e);
        tree_path_toggle(u, mark);
        tree_path_toggle(v, mark);
        std::vector<int> cyc;
        for (int i = 0; i < E; ++i)
            if (mark[i]) cyc.push_back(i);
        gens.push_back(cyc);
    }
    return gens;
}

// ---- io ----------------------------------------------------------------------

std::string serialize_map(const CombinatorialMap& m, const FaceColoring* col) {
    std::ostringstream out;
    out << "tessmap 1\n";
    out << "darts " << m.dart_count() << "\n";
    out << "sigma";
    for (int x : m.sigma) out << ' ' << x;
    out << "\nalpha";
    for (int x : m.alpha) out << ' ' << x;
    out << "\n";
    if (col) {
        for (int f = 0; f < m.face_count(); ++f)
            out << "facecolor " << f << ' ' << color_letter(col->color_of_face[f]) << "\n";
    }
    return out.str();
}

ColoredMap load_map(std::istream& in) {
    std::string line;
    auto next_line = [&](std::string& s) {
        while (std::getline(in, s)) {
            if (!s.empty() && s.back() == '\r') s.pop_back();
            if (!s.empty()) return true;
        }
        return false;
    };
    if (!next_line(line) || line != "tessmap 1")
        throw MapError("missing 'tessmap 1' header");
    if (!next_line(line)) throw MapError("missing darts line");
    std::istringstream dl(line);
    std::string kw;
    long long n = -1;
    dl >> kw >> n;
    if (kw != "darts" || n < 0 || n % 2 != 0) throw MapError("malformed darts line");

    ColoredMap out;
    auto read_perm = [&](const std::string& name) {
        if (!next_line(line)) throw MapError("missing " + name + " line");
        std::istringstream ls(line);
        std::string k;
        ls >> k;
        if (k != name) throw MapError("expected '" + name + "' line");
        std::vector<int> perm;
        long long x;
        while (ls >> x) {
            if (x < 0 || x >= n) throw MapError(name + " entry out of range");
            perm.push_back(int(x));
        }
        if (int(perm.size()) != n) throw MapError("malformed permutation: " + name);
        return perm;
    };
    out.map.sigma = read_perm("sigma");
    out.map.alpha = read_perm("alpha");
    out.map.finalize();

    std::map<int, Color> face_colors;
    while (next_line(line)) {
        std::istringstream ls(line);
        std::string k;
        ls >> k;
        if (k != "facecolor") throw MapError("unknown line: " + line);
        long long f;
        std::string c;
        if (!(ls >> f >> c) || c.size() != 1) throw MapError("malformed facecolor line");
        if (f < 0 || f >= out.map.face_count()) throw MapError("face index out of range");
        face_colors[int(f)] = color_from_letter(c[0]);
    }
    if (!face_colors.empty()) {
        if (int(face_colors.size()) != out.map.face_count())
            throw MapError("facecolor lines do not cover all faces");
        out.coloring.color_of_face.resize(out.map.face_count());
        for (auto [f, c] : face_colors) out.coloring.color_of_face[f] = c;
    }
    return out;
}

ColoredMap load_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MapError("cannot open map file: " + path);
    return load_map(in);
}

}  // namespace tsc
