#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsc {

struct CensusError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Face/edge/vertex counts of a trivalent 3-colorable tessellation
// {2p1,2p2,2p3}, with the 2p1-gons red, 2p2-gons green, 2p3-gons blue.
struct SemiRegularCounts {
    long long n_f = 0, n_e = 0, n_v = 0;
    long long f_r = 0, f_g = 0, f_b = 0;
    long long chi = 0;
    long long genus = 0;
};

enum class Provenance { Formula, LinearAlgebra };

struct CodeParams {
    long long n = 0, s = 0, r = 0, k = 0;
    std::optional<long long> l_bound;
    std::string family;
    Provenance provenance = Provenance::Formula;
    bool encodes() const { return k >= 1; }
    void check_accounting() const {
        if (n != k + r + s || n < 0 || s < 0 || r < 0 || k < 0)
            throw CensusError("inconsistent accounting: n != k + r + s");
    }
};

SemiRegularCounts counts_2p2q2r(long long p1, long long p2, long long p3, long long g);

// {p,3} face/edge/vertex counts and the induced {p,4,3,4} face counts.
struct P3Counts { long long n_f = 0, n_e = 0, n_v = 0; };
struct P434Counts { long long f_p = 0, f_t = 0, f_q = 0; };
P3Counts counts_p3(long long p, long long g);
P434Counts counts_p434(long long p, long long g);

// Parameter formulas shared between the closed-form census and map-counted
// torus instances (they are genus-generic given the counts).
CodeParams params_family1_from_counts(const SemiRegularCounts& c);
CodeParams params_family2_from_counts(const SemiRegularCounts& c, long long p1, bool tripartite);
CodeParams params_family3_from_counts(const SemiRegularCounts& c, long long p1);

CodeParams params_family1(long long p1, long long p2, long long g);
CodeParams params_family2(long long p1, long long g, bool tripartite);
CodeParams params_family3(long long p1, long long g);
CodeParams params_family4(long long p, long long g);

CodeParams params_bombin(long long v_star, long long f_star, long long chi);
CodeParams params_thm5(long long e, long long chi, bool bipartite);
CodeParams params_thm6(long long e, long long chi, bool bipartite);

struct TableRow {
    long long genus;
    std::string tessellation;
    long long s, n, k, r;
    std::optional<long long> s2, k2;  // family 2 non-tripartite branch
};

// All admissible classes of one family in a genus range, sorted like the
// reference tables (genus ascending, then n descending, then k descending).
std::vector<TableRow> emit_table(int family, long long g_min, long long g_max);

std::string format_table(const std::vector<TableRow>& rows, bool structured);

}  // namespace tsc
