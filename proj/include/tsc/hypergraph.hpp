#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tsc/surface_map.hpp"

namespace tsc {

struct HypergraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Qubits on vertices; rank-2 edges carry a color, rank-3 edges (triangles)
// act as Z on all three qubits. Edge indices: rank-2 edges first, then
// rank-3 edges.
struct Hypergraph {
    int vertex_count = 0;
    struct Rank2 {
        int u, v;
        Color color;
    };
    struct Rank3 {
        int u, v, w;
    };
    std::vector<Rank2> e2;
    std::vector<Rank3> e3;
    std::string provenance;

    int edge_count() const { return int(e2.size() + e3.size()); }
    bool is_rank3(int edge) const { return edge >= int(e2.size()); }
    std::vector<int> edge_vertices(int edge) const;

    // per-vertex incident edge ids
    std::vector<std::vector<int>> incidence() const;
};

struct ValidationReport {
    struct Item {
        std::string constraint;  // H1..H5
        bool ok;
        std::string witness;
    };
    std::vector<Item> items;
    bool ok() const {
        for (const auto& i : items)
            if (!i.ok) return false;
        return true;
    }
    std::string to_string() const;
};

ValidationReport validate_hypergraph(const Hypergraph& h);

// Registry of named hypercycles (stabilizer generators, probes, constraint
// cycles) recorded by the builders. Edge lists use global edge indices.
struct RegistryCycle {
    std::string tag;
    std::vector<int> edges;
};

struct FaceRegistry {
    std::vector<RegistryCycle> cycles;

    const RegistryCycle* find(const std::string& tag) const {
        for (const auto& c : cycles)
            if (c.tag == tag) return &c;
        return nullptr;
    }
    std::vector<const RegistryCycle*> with_prefix(const std::string& p) const {
        std::vector<const RegistryCycle*> out;
        for (const auto& c : cycles)
            if (c.tag.rfind(p, 0) == 0) out.push_back(&c);
        return out;
    }
};

bool is_closed_hypercycle(const Hypergraph& h, const std::vector<int>& edges);

std::string serialize_hypergraph(const Hypergraph& h, const FaceRegistry& reg);
struct LoadedHypergraph {
    Hypergraph h;
    FaceRegistry registry;
};
LoadedHypergraph load_hypergraph(std::istream& in);
LoadedHypergraph load_hypergraph_file(const std::string& path);

// Exhaustive proper 3-edge-coloring search on a plain cubic graph, treating
// all edges as rank 2. Used for negative fixtures (Petersen).
std::optional<std::vector<Color>> tait_coloring(int vertices,
                                                const std::vector<std::pair<int, int>>& edges);

}  // namespace tsc
