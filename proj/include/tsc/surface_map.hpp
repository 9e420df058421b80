#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsc {

enum class Color : uint8_t { R = 0, G = 1, B = 2 };
char color_letter(Color c);
Color color_from_letter(char c);

struct MapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Oriented surface embedding of a graph as a rotation system on darts.
// sigma = next dart counterclockwise around the dart's vertex,
// alpha = the opposite dart of the same edge (fixed-point-free involution),
// faces = orbits of phi := sigma . alpha  (phi(d) = sigma[alpha[d]]).
struct CombinatorialMap {
    std::vector<int> sigma;
    std::vector<int> alpha;

    // derived labelling, built by finalize()
    std::vector<int> vertex_of;  // dart -> vertex id
    std::vector<int> edge_of;    // dart -> edge id
    std::vector<int> face_of;    // dart -> face id
    std::vector<int> vertex_dart;  // vertex id -> least dart
    std::vector<int> edge_dart;    // edge id -> least dart
    std::vector<int> face_dart;    // face id -> least dart

    int dart_count() const { return int(sigma.size()); }
    int vertex_count() const { return int(vertex_dart.size()); }
    int edge_count() const { return int(edge_dart.size()); }
    int face_count() const { return int(face_dart.size()); }
    int euler_characteristic() const { return vertex_count() - edge_count() + face_count(); }
    int genus() const { return (2 - euler_characteristic()) / 2; }

    int phi(int d) const { return sigma[alpha[d]]; }
    std::array<int, 2> edge_ends(int e) const;

    // orbit of d under phi (face boundary walk), starting at d
    std::vector<int> face_darts(int f) const;
    std::vector<int> vertex_darts(int v) const;

    // Labels orbits and checks all structural invariants; throws MapError.
    void finalize();
};

struct FaceColoring {
    std::vector<Color> color_of_face;  // indexed by face id
};

struct SimpleGraph {
    int vertex_count = 0;
    std::set<std::pair<int, int>> edges;  // ordered pairs (u < v)

    void add_edge(int u, int v);
    std::vector<std::vector<int>> adjacency() const;
};

bool is_bipartite(const SimpleGraph& g);
bool is_tripartite(const SimpleGraph& g);  // exact backtracking 3-coloring

// ---- transforms ------------------------------------------------------------

CombinatorialMap dual(const CombinatorialMap& m);
CombinatorialMap medial(const CombinatorialMap& m);

// Flag expansion: every input vertex of valence j becomes a 2j-gon, every
// edge a quadrilateral, every face of size s a 2s-gon. Output is trivalent
// and properly 3-colorable by class (v-faces, e-faces, f-faces).
struct Inflation {
    CombinatorialMap map;
    FaceColoring coloring;          // v-faces -> R, e-faces -> G, f-faces -> B
    std::vector<int> face_class;    // 0 = v-face, 1 = e-face, 2 = f-face
    std::vector<int> face_source;   // id of the source vertex/edge/face
};
Inflation inflate_trivalent(const CombinatorialMap& m);

// ---- generators ------------------------------------------------------------

// Torus triangulation: vertices (a,b) in Z_p x Z_q with the b-wraparound
// sheared by `shear` steps in a. All faces are triangles.
CombinatorialMap triangular_torus(int p, int q, int shear);

// Plain honeycomb torus with p*q hexagonal faces (dual of the above).
CombinatorialMap honeycomb_torus(int p, int q, int shear);

struct ColoredMap {
    CombinatorialMap map;
    FaceColoring coloring;
};

// Generates the {6,6,6} or 4.6.12-class torus of m x n unit cells with the
// proper coloring that puts the 2p1-gons in R, 2p2-gons in G, 2p3-gons in B.
// Supported classes: (6,6,6) and the role orderings of {12,6,4}.
ColoredMap torus_tessellation(int two_p1, int two_p2, int two_p3, int m, int n);

// Platonic solids used as spherical fixtures.
CombinatorialMap tetrahedron_map();
CombinatorialMap cube_map();
CombinatorialMap dodecahedron_map();

// ---- queries ---------------------------------------------------------------

std::vector<std::vector<int>> face_vertex_cycles(const CombinatorialMap& m);
std::vector<int> vertex_valences(const CombinatorialMap& m);

struct TrivalenceReport {
    std::vector<int> bad_vertices;      // valence != 3
    std::vector<int> bad_edges;         // ends faces share a color
    std::vector<std::string> messages;
    bool ok() const { return bad_vertices.empty() && bad_edges.empty(); }
};
TrivalenceReport check_trivalent_3colorable(const CombinatorialMap& m, const FaceColoring& col);

// Red faces contracted to points, joined whenever two of them border a
// common blue face.
SimpleGraph reduced_red_graph(const CombinatorialMap& m, const FaceColoring& col);

// 2g independent homology generator cycles (edge-id sets) via tree/cotree.
std::vector<std::vector<int>> homology_generator_cycles(const CombinatorialMap& m);

// ---- io --------------------------------------------------------------------

std::string serialize_map(const CombinatorialMap& m, const FaceColoring* col = nullptr);
ColoredMap load_map(std::istream& in);     // coloring empty if no facecolor lines
ColoredMap load_map_file(const std::string& path);

}  // namespace tsc
