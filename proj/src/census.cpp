#include "tsc/census.hpp"

#include <algorithm>
#include <sstream>

namespace tsc {

static long long exact_div(long long num, long long den, const char* what) {
    if (num % den != 0)
        throw CensusError(std::string("non-integral count: ") + what +
                          " (tessellation cannot exist with these formulas)");
    return num / den;
}

SemiRegularCounts counts_2p2q2r(long long p1, long long p2, long long p3, long long g) {
    if (p1 < 2 || p2 < 2 || p3 < 2) throw CensusError("p_i must be at least 2");
    if (g < 2) throw CensusError("genus must be at least 2");
    long long den = p1 * p2 * p3 - p1 * p2 - p1 * p3 - p2 * p3;
    if (den <= 0) throw CensusError("nonpositive denominator (non-hyperbolic class)");
    long long gm = g - 1;
    SemiRegularCounts c;
    c.n_f = exact_div(2 * (p1 * p2 + p1 * p3 + p2 * p3) * gm, den, "N_f");
    c.n_e = exact_div(6 * p1 * p2 * p3 * gm, den, "N_e");
    c.n_v = exact_div(4 * p1 * p2 * p3 * gm, den, "N_v");
    c.f_r = exact_div(2 * p2 * p3 * gm, den, "F_R");
    c.f_g = exact_div(2 * p1 * p3 * gm, den, "F_G");
    c.f_b = exact_div(2 * p1 * p2 * gm, den, "F_B");
    c.genus = g;
    c.chi = 2 - 2 * g;
    if (c.f_r + c.f_g + c.f_b != c.n_f || c.n_v - c.n_e + c.n_f != c.chi ||
        3 * c.n_v != 2 * c.n_e)
        throw CensusError("internal: count identities violated");
    return c;
}

P3Counts counts_p3(long long p, long long g) {
    if (p <= 6) throw CensusError("p must exceed 6");
    if (g < 2) throw CensusError("genus must be at least 2");
    long long gm = g - 1;
    P3Counts c;
    c.n_f = exact_div(12 * gm, p - 6, "n_f");
    c.n_e = exact_div(6 * p * gm, p - 6, "n_e");
    c.n_v = exact_div(4 * p * gm, p - 6, "n_v");
    return c;
}

P434Counts counts_p434(long long p, long long g) {
    P3Counts c = counts_p3(p, g);
    return P434Counts{c.n_f, c.n_v, c.n_e};
}

static long long half(long long x, const char* what) {
    if (x % 2 != 0)
        throw CensusError(std::string("parity violation: ") + what + " is not an integer");
    return x / 2;
}

CodeParams params_family1_from_counts(const SemiRegularCounts& c) {
    CodeParams p;
    p.family = "family1";
    p.n = c.n_e + 3 * c.f_r;
    p.s = 2 * c.f_r + 2 * c.f_g - 1;
    p.k = -c.chi + 1 + half(c.f_r, "F_R/2 in k");
    p.r = -c.chi + c.n_v + half(5 * c.f_r, "5F_R/2 in r");
    if (p.s < 1) throw CensusError("family 1 requires s >= 1");
    p.check_accounting();
    return p;
}

CodeParams params_family2_from_counts(const SemiRegularCounts& c, long long p1,
                                      bool tripartite) {
    long long delta = tripartite ? 1 : 0;
    CodeParams p;
    p.family = "family2";
    p.n = c.n_v + p1 * c.f_r;
    if (p.n != c.n_e) throw CensusError("internal: n != N_e for family 2");
    p.s = 3 * c.f_r + c.f_g - 1 - 2 * delta;
    // the theorem's bare F is read as N_f; this reproduces the worked
    // {12,4,6} example and every table row
    p.k = c.chi - 3 * c.f_r + half(c.n_f, "N_f/2 in k") + 1 + 2 * delta;
    p.r = -c.chi + 2 * c.n_v - half(c.n_f + c.n_e, "(N_f+N_e)/2 in r");
    p.check_accounting();
    return p;
}

CodeParams params_family3_from_counts(const SemiRegularCounts& c, long long p1) {
    CodeParams p;
    p.family = "family3";
    p.n = c.n_v + p1 * c.f_r + 3 * c.f_r;
    if (p.n != c.n_e + 3 * c.f_r) throw CensusError("internal: n != N_e + 3F_R");
    p.s = 3 * c.f_r + c.f_g - 1;
    p.k = c.chi + half(c.n_f, "N_f/2 in k") - half(5 * c.f_r, "5F_R/2 in k") + 1;
    p.r = -c.chi + 2 * c.n_v - half(c.n_f + c.n_e, "(N_f+N_e)/2 in r") +
          half(5 * c.f_r, "5F_R/2 in r");
    p.check_accounting();
    return p;
}

CodeParams params_family1(long long p1, long long p2, long long g) {
    if (p1 <= 2 || p1 % 2 == 0) throw CensusError("family 1 requires odd p1 > 2");
    return params_family1_from_counts(counts_2p2q2r(p1, p2, 2, g));
}

CodeParams params_family2(long long p1, long long g, bool tripartite) {
    if (p1 <= 4 || p1 % 2 != 0) throw CensusError("family 2 requires even p1 > 4");
    return params_family2_from_counts(counts_2p2q2r(p1, 2, 3, g), p1, tripartite);
}

CodeParams params_family3(long long p1, long long g) {
    if (p1 <= 6 || p1 % 2 == 0) throw CensusError("family 3 requires odd p1 > 6");
    return params_family3_from_counts(counts_2p2q2r(p1, 2, 3, g), p1);
}

CodeParams params_family4(long long p, long long g) {
    if (p < 7 || p % 2 == 0) throw CensusError("family 4 requires odd p >= 7");
    P434Counts c = counts_p434(p, g);
    CodeParams out;
    out.family = "family4";
    out.n = (p + 3) * c.f_p;
    out.s = 2 * c.f_p;
    out.k = half(c.f_t - c.f_p, "(F_T-F_P)/2");
    out.r = half(5 * c.f_t + 3 * c.f_p, "(5F_T+3F_P)/2");
    out.check_accounting();
    return out;
}

CodeParams params_bombin(long long v_star, long long f_star, long long chi) {
    if (v_star < 1 || f_star < 1) throw CensusError("counts must be positive");
    CodeParams p;
    p.family = "bombin";
    p.n = 3 * f_star;
    p.k = 2 - chi;
    p.s = 2 * v_star - 2;
    p.r = 2 * f_star - chi;
    p.check_accounting();
    return p;
}

CodeParams params_thm5(long long e, long long chi, bool bipartite) {
    if (e < 1) throw CensusError("edge count must be positive");
    long long delta = bipartite ? 1 : 0;
    CodeParams p;
    p.family = "thm5";
    p.n = 6 * e;
    p.k = 1 + delta - chi;
    p.r = 4 * e - chi;
    p.s = p.n - p.k - p.r;
    p.check_accounting();
    return p;
}

CodeParams params_thm6(long long e, long long chi, bool bipartite) {
    if (e < 1) throw CensusError("edge count must be positive");
    long long delta = bipartite ? 1 : 0;
    CodeParams p;
    p.family = "thm6";
    p.n = 10 * e;
    p.k = 1 + delta - chi;
    p.r = 6 * e - chi;
    p.s = p.n - p.k - p.r;
    p.check_accounting();
    return p;
}

// ---- tables -------------------------------------------------------------------

static std::string class_name(long long a, long long b, long long c) {
    std::ostringstream s;
    s << '{' << a << ',' << b << ',' << c << '}';
    return s.str();
}

std::vector<TableRow> emit_table(int family, long long g_min, long long g_max) {
    std::vector<TableRow> rows;
    for (long long g = std::max<long long>(2, g_min); g <= g_max; ++g) {
        long long cap = 8 + 14 * (g - 1);
        if (family == 1) {
            for (long long p1 = 3; p1 <= cap; p1 += 2) {
                for (long long p2 = 2; p2 <= cap; ++p2) {
                    try {
                        CodeParams p = params_family1(p1, p2, g);
                        rows.push_back({g, class_name(2 * p1, 2 * p2, 4), p.s, p.n,
                                        p.k, p.r, std::nullopt, std::nullopt});
                    } catch (const CensusError&) {
                    }
                }
            }
        } else if (family == 2) {
            for (long long p1 = 6; p1 <= cap; p1 += 2) {
                try {
                    CodeParams p = params_family2(p1, g, true);
                    CodeParams q = params_family2(p1, g, false);
                    rows.push_back({g, class_name(2 * p1, 4, 6), p.s, p.n, p.k, p.r,
                                    q.s, q.k});
                } catch (const CensusError&) {
                }
            }
        } else if (family == 3) {
            for (long long p1 = 7; p1 <= cap; p1 += 2) {
                try {
                    CodeParams p = params_family3(p1, g);
                    rows.push_back({g, class_name(2 * p1, 4, 6), p.s, p.n, p.k, p.r,
                                    std::nullopt, std::nullopt});
                } catch (const CensusError&) {
                }
            }
        } else if (family == 4) {
            for (long long p = 7; p <= cap; p += 2) {
                try {
                    CodeParams q = params_family4(p, g);
                    std::ostringstream name;
                    name << '{' << p << ",4,3,4}";
                    rows.push_back({g, name.str(), q.s, q.n, q.k, q.r, std::nullopt,
                                    std::nullopt});
                } catch (const CensusError&) {
                }
            }
        } else {
            throw CensusError("unknown family for table emission");
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
        if (a.genus != b.genus) return a.genus < b.genus;
        if (a.n != b.n) return a.n > b.n;
        return a.k > b.k;
    });
    return rows;
}

std::string format_table(const std::vector<TableRow>& rows, bool structured) {
    std::ostringstream out;
    if (!structured) out << "g\tclass\ts\tn\tk\tr\td_bound\n";
    for (const auto& r : rows) {
        if (structured) {
            out << "g=" << r.genus << " class=" << r.tessellation << " s=" << r.s
                << " n=" << r.n << " k=" << r.k << " r=" << r.r << " d=?";
            if (r.s2) out << " s2=" << *r.s2 << " k2=" << *r.k2;
            out << "\n";
        } else {
            out << r.genus << '\t' << r.tessellation << '\t' << r.s << '\t' << r.n
                << '\t' << r.k << '\t' << r.r << "\t?\n";
            if (r.s2)
                out << r.genus << '\t' << r.tessellation << '\t' << *r.s2 << '\t'
                    << r.n << '\t' << *r.k2 << '\t' << r.r << "\t?\n";
        }
    }
    return out.str();
}

}  // namespace tsc
