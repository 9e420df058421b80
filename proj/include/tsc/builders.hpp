#pragma once

#include <array>
#include <optional>
#include <set>

#include "tsc/census.hpp"
#include "tsc/hypergraph.hpp"
#include "tsc/surface_map.hpp"

namespace tsc {

struct BuildError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PlacementError : BuildError {
    std::vector<int> unsatisfiable_cycles;
    explicit PlacementError(std::string msg, std::vector<int> cycles = {})
        : BuildError(std::move(msg)), unsatisfiable_cycles(std::move(cycles)) {}
};

// Inner-triangle placement: each source face picks 3 of its slots so that
// every constrained hypercycle gains an even number of new vertices.
struct PlacementProblem {
    std::vector<std::vector<int>> slot_cycle;  // [face][slot] -> cycle id or -1
    int cycle_count = 0;
};
std::vector<std::array<int, 3>> place_inner_triangles(const PlacementProblem& prob);

struct SourceCounts {
    long long n_v = 0, n_e = 0, n_f = 0;
    long long f_r = 0, f_g = 0, f_b = 0;
    int chi = 0;
};
SourceCounts count_colored_map(const CombinatorialMap& m, const FaceColoring& col);

struct BuildResult {
    Hypergraph h;
    FaceRegistry registry;
    CombinatorialMap source;
    FaceColoring source_coloring;
    SourceCounts counts;
    bool probes_ok = false;

    std::vector<const RegistryCycle*> stabilizer_cycles() const {
        std::vector<const RegistryCycle*> out;
        for (const auto& c : registry.cycles)
            if (c.tag.rfind("probe.", 0) != 0) out.push_back(&c);
        return out;
    }
    std::vector<const RegistryCycle*> probe_cycles() const {
        return registry.with_prefix("probe.");
    }
};

enum class AttachColor { Blue, Green };
enum class ConstraintMode { None, GreenSigma2, RedRing };

// The general face-insertion construction on a trivalent 3-colorable map:
// inside every face of F a polygon f' is inserted, rank-3 edges tie f' to the
// attach-colored sides, and (for odd side counts) an inner triangle is placed
// under the even-new-vertex restriction of `mode`.
BuildResult build_gamma_h(const CombinatorialMap& m, const FaceColoring& col,
                          const std::set<int>& F, AttachColor attach,
                          ConstraintMode mode);

BuildResult build_bombin(const CombinatorialMap& m, const FaceColoring& col);
BuildResult build_sarvepalli_even(const CombinatorialMap& m, const FaceColoring& col,
                                  const std::set<int>& F, AttachColor attach);
BuildResult build_family1(const CombinatorialMap& m, const FaceColoring& col);
BuildResult build_family2(const CombinatorialMap& m, const FaceColoring& col);
BuildResult build_family3(const CombinatorialMap& m, const FaceColoring& col);
BuildResult build_family4(const CombinatorialMap& p3_map);

// Edge-count identities the constructions must satisfy, from the source counts.
struct EdgeBudget {
    long long e2 = 0, e3 = 0;
};
EdgeBudget expected_edges_family1(const SourceCounts& c, long long p1);
EdgeBudget expected_edges_family2(const SourceCounts& c, long long p1);
EdgeBudget expected_edges_family3(const SourceCounts& c, long long p1);

}  // namespace tsc
