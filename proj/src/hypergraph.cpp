#include "tsc/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace tsc {

std::vector<int> Hypergraph::edge_vertices(int edge) const {
    if (edge < int(e2.size())) return {e2[edge].u, e2[edge].v};
    const auto& t = e3[edge - e2.size()];
    return {t.u, t.v, t.w};
}

std::vector<std::vector<int>> Hypergraph::incidence() const {
    std::vector<std::vector<int>> inc(vertex_count);
    for (int e = 0; e < edge_count(); ++e)
        for (int v : edge_vertices(e)) inc[v].push_back(e);
    return inc;
}

std::string ValidationReport::to_string() const {
    std::ostringstream out;
    for (const auto& i : items) {
        out << i.constraint << ": " << (i.ok ? "pass" : "FAIL");
        if (!i.ok && !i.witness.empty()) out << " (" << i.witness << ")";
        out << "\n";
    }
    return out.str();
}

ValidationReport validate_hypergraph(const Hypergraph& h) {
    ValidationReport rep;
    auto add = [&](const char* c, bool ok, std::string w = "") {
        rep.items.push_back({c, ok, std::move(w)});
    };

    // H1: edge arities and vertex ranges
    {
        bool ok = true;
        std::string w;
        for (int e = 0; e < h.edge_count() && ok; ++e) {
            auto vs = h.edge_vertices(e);
            std::set<int> distinct(vs.begin(), vs.end());
            if (distinct.size() != vs.size()) {
                ok = false;
                w = "edge " + std::to_string(e) + " repeats a vertex";
            }
            for (int v : vs)
                if (v < 0 || v >= h.vertex_count) {
                    ok = false;
                    w = "edge " + std::to_string(e) + " out of range";
                }
        }
        add("H1", ok, w);
    }
    auto inc = h.incidence();
    // H2: trivalence
    {
        bool ok = true;
        std::string w;
        for (int v = 0; v < h.vertex_count; ++v)
            if (inc[v].size() != 3) {
                ok = false;
                w = "vertex " + std::to_string(v) + " has degree " +
                    std::to_string(inc[v].size());
                break;
            }
        add("H2", ok, w);
    }
    // H3: pairwise intersections at most one vertex
    {
        bool ok = true;
        std::string w;
        std::map<std::pair<int, int>, int> pair_seen;
        for (int e = 0; e < h.edge_count() && ok; ++e) {
            auto vs = h.edge_vertices(e);
            std::sort(vs.begin(), vs.end());
            for (size_t i = 0; i < vs.size() && ok; ++i)
                for (size_t j = i + 1; j < vs.size() && ok; ++j) {
                    auto key = std::make_pair(vs[i], vs[j]);
                    auto it = pair_seen.find(key);
                    if (it != pair_seen.end()) {
                        ok = false;
                        w = "edges " + std::to_string(it->second) + " and " +
                            std::to_string(e) + " share vertices " +
                            std::to_string(vs[i]) + "," + std::to_string(vs[j]);
                    } else {
                        pair_seen[key] = e;
                    }
                }
        }
        add("H3", ok, w);
    }
    // H4: triangles pairwise disjoint
    {
        bool ok = true;
        std::string w;
        std::vector<int> tri_at(h.vertex_count, -1);
        for (size_t t = 0; t < h.e3.size() && ok; ++t) {
            for (int v : {h.e3[t].u, h.e3[t].v, h.e3[t].w}) {
                if (tri_at[v] >= 0) {
                    ok = false;
                    w = "triangles " + std::to_string(tri_at[v]) + " and " +
                        std::to_string(t) + " share vertex " + std::to_string(v);
                    break;
                }
                tri_at[v] = int(t);
            }
        }
        add("H4", ok, w);
    }
    // H5: at each vertex the three incident edges carry three distinct colors,
    // rank-3 edges counting as blue
    {
        bool ok = true;
        std::string w;
        for (int v = 0; v < h.vertex_count && ok; ++v) {
            int mask = 0;
            for (int e : inc[v]) {
                Color c = h.is_rank3(e) ? Color::B : h.e2[e].color;
                int bit = 1 << int(c);
                if (mask & bit) {
                    ok = false;
                    w = "vertex " + std::to_string(v) + " sees color " +
                        std::string(1, color_letter(c)) + " twice";
                    break;
                }
                mask |= bit;
            }
        }
        add("H5", ok, w);
    }
    return rep;
}

bool is_closed_hypercycle(const Hypergraph& h, const std::vector<int>& edges) {
    std::vector<int> deg(h.vertex_count, 0);
    for (int e : edges)
        for (int v : h.edge_vertices(e)) ++deg[v];
    for (int d : deg)
        if (d % 2 != 0) return false;
    return true;
}

std::string serialize_hypergraph(const Hypergraph& h, const FaceRegistry& reg) {
    std::ostringstream out;
    if (!h.provenance.empty()) out << "# " << h.provenance << "\n";
    out << "qubits " << h.vertex_count << "\n";
    for (const auto& e : h.e2)
        out << "e2 " << e.u << ' ' << e.v << ' ' << color_letter(e.color) << "\n";
    for (const auto& t : h.e3) out << "e3 " << t.u << ' ' << t.v << ' ' << t.w << "\n";
    for (const auto& c : reg.cycles) {
        out << "cycle " << c.tag;
        for (int e : c.edges) out << ' ' << e;
        out << "\n";
    }
    return out.str();
}

LoadedHypergraph load_hypergraph(std::istream& in) {
    LoadedHypergraph out;
    std::string line;
    bool have_qubits = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (out.h.provenance.empty() && line.size() > 2)
                out.h.provenance = line.substr(2);
            continue;
        }
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "qubits") {
            if (!(ls >> out.h.vertex_count) || out.h.vertex_count < 0)
                throw HypergraphError("malformed qubits line");
            have_qubits = true;
        } else if (kw == "e2") {
            int u, v;
            std::string c;
            if (!(ls >> u >> v >> c) || c.size() != 1)
                throw HypergraphError("malformed e2 line");
            out.h.e2.push_back({u, v, color_from_letter(c[0])});
        } else if (kw == "e3") {
            int u, v, w;
            if (!(ls >> u >> v >> w)) throw HypergraphError("malformed e3 line");
            out.h.e3.push_back({u, v, w});
        } else if (kw == "cycle") {
            RegistryCycle c;
            if (!(ls >> c.tag)) throw HypergraphError("malformed cycle line");
            int e;
            while (ls >> e) c.edges.push_back(e);
            out.registry.cycles.push_back(std::move(c));
        } else {
            throw HypergraphError("unknown line: " + line);
        }
    }
    if (!have_qubits) throw HypergraphError("missing qubits line");
    for (const auto& c : out.registry.cycles)
        for (int e : c.edges)
            if (e < 0 || e >= out.h.edge_count())
                throw HypergraphError("cycle edge index out of range in " + c.tag);
    return out;
}

LoadedHypergraph load_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw HypergraphError("cannot open hypergraph file: " + path);
    return load_hypergraph(in);
}

std::optional<std::vector<Color>> tait_coloring(
    int vertices, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> inc(vertices);
    for (size_t e = 0; e < edges.size(); ++e) {
        inc[edges[e].first].push_back(int(e));
        inc[edges[e].second].push_back(int(e));
    }
    std::vector<int> col(edges.size(), -1);
    std::function<bool(size_t)> go = [&](size_t e) -> bool {
        if (e == edges.size()) return true;
        for (int c = 0; c < 3; ++c) {
            bool ok = true;
            for (int v : {edges[e].first, edges[e].second})
                for (int f : inc[v])
                    if (col[f] == c) { ok = false; }
            if (!ok) continue;
            col[e] = c;
            if (go(e + 1)) return true;
            col[e] = -1;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    std::vector<Color> out;
    for (int c : col) out.push_back(Color(c));
    return out;
}

}  // namespace tsc
