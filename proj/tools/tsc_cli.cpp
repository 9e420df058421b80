#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "tsc/builders.hpp"
#include "tsc/census.hpp"
#include "tsc/homology.hpp"
#include "tsc/pauli.hpp"
#include "tsc/surface_map.hpp"

using namespace tsc;

namespace {

constexpr int EXIT_USAGE = 2;
constexpr int EXIT_VALIDATION = 3;
constexpr int EXIT_INCONSISTENT = 4;

std::map<std::string, std::string> parse_provenance(const std::string& prov) {
    std::map<std::string, std::string> kv;
    std::istringstream in(prov);
    std::string tok;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq != std::string::npos) kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return kv;
}

struct ParsedClass {
    int a = 0, b = 0, c = 0;
};

ParsedClass parse_class(const std::string& s) {
    ParsedClass out;
    char comma1, comma2;
    std::istringstream in(s);
    if (!(in >> out.a >> comma1 >> out.b >> comma2 >> out.c) || comma1 != ',' ||
        comma2 != ',')
        throw MapError("class must look like 6,12,4");
    return out;
}

std::pair<int, int> parse_cells(const std::string& s) {
    auto x = s.find('x');
    if (x == std::string::npos) throw MapError("cells must look like 2x2");
    return {std::stoi(s.substr(0, x)), std::stoi(s.substr(x + 1))};
}

BuildResult run_build(const std::string& family, const std::string& torus_class,
                      const std::string& cells, const std::string& map_file,
                      const std::string& attach) {
    ColoredMap src;
    if (!torus_class.empty()) {
        auto cls = parse_class(torus_class);
        auto [m, n] = parse_cells(cells.empty() ? "1x1" : cells);
        src = torus_tessellation(cls.a, cls.b, cls.c, m, n);
    } else if (!map_file.empty()) {
        src = load_map_file(map_file);
        if (src.coloring.color_of_face.empty() && family != "4")
            throw MapError("map file carries no face coloring");
    } else {
        throw MapError("either --torus or --map is required");
    }

    if (family == "1") return build_family1(src.map, src.coloring);
    if (family == "2") return build_family2(src.map, src.coloring);
    if (family == "3") return build_family3(src.map, src.coloring);
    if (family == "4") return build_family4(src.map);
    if (family == "bombin") return build_bombin(src.map, src.coloring);
    if (family == "sarvepalli") {
        std::set<int> F;
        for (int f = 0; f < src.map.face_count(); ++f)
            if (src.coloring.color_of_face[f] == Color::R) F.insert(f);
        return build_sarvepalli_even(src.map, src.coloring, F,
                                     attach == "green" ? AttachColor::Green
                                                       : AttachColor::Blue);
    }
    throw MapError("unknown family: " + family);
}

// census-formula parameters recovered from the provenance comment, when present
std::optional<CodeParams> formula_params(const std::map<std::string, std::string>& kv) {
    auto geti = [&](const char* k) -> long long { return std::stoll(kv.at(k)); };
    if (!kv.count("family")) return std::nullopt;
    const std::string& fam = kv.at("family");
    if (fam == "1" || fam == "2" || fam == "3") {
        SemiRegularCounts c;
        c.n_v = geti("Nv");
        c.n_e = geti("Ne");
        c.n_f = geti("Nf");
        c.f_r = geti("FR");
        c.f_g = geti("FG");
        c.f_b = geti("FB");
        c.chi = geti("chi");
        if (fam == "1") return params_family1_from_counts(c);
        if (fam == "2")
            return params_family2_from_counts(c, geti("p1"), kv.at("tripartite") == "1");
        return params_family3_from_counts(c, geti("p1"));
    }
    if (fam == "bombin") return params_bombin(geti("Vstar"), geti("Fstar"), geti("chi"));
    if (fam == "4") {
        long long fp = geti("FP"), ft = geti("FT"), p = geti("p");
        CodeParams out;
        out.family = "family4";
        out.n = (p + 3) * fp;
        out.s = 2 * fp;
        out.k = (ft - fp) / 2;
        out.r = (5 * ft + 3 * fp) / 2;
        out.check_accounting();
        return out;
    }
    return std::nullopt;
}

int cmd_analyze(const std::string& file, bool structured, bool with_syndrome,
                long long budget) {
    LoadedHypergraph lg = load_hypergraph_file(file);
    auto rep = validate_hypergraph(lg.h);
    if (!rep.ok()) {
        std::cerr << rep.to_string();
        return EXIT_VALIDATION;
    }
    GroupAnalysis a = analyze_code(lg.h);
    std::ostringstream line;
    std::optional<long long> l;
    auto probes = probe_edge_sets(lg.registry);
    if (!probes.empty()) {
        auto mt = min_triangles_nontrivial(lg.h, probes, budget);
        if (mt.proven) l = mt.l;
    }
    std::string agree = "n/a";
    auto kv = parse_provenance(lg.h.provenance);
    std::optional<CodeParams> formula;
    if (!kv.empty()) {
        try {
            formula = formula_params(kv);
        } catch (const std::exception&) {
        }
    }
    if (formula) {
        bool same = formula->n == a.n && formula->s == a.s && formula->r == a.r &&
                    formula->k == a.k;
        agree = same ? "yes" : "no";
    }

    std::cout << "n=" << a.n << " s=" << a.s << " dimG=" << a.dim_gauge
              << " r=" << a.r << " k=" << a.k;
    if (l) std::cout << " l=" << *l;
    std::cout << " agree=" << agree << "\n";
    if (!structured) {
        std::cout << "[[" << a.n << ',' << a.k << ',' << a.r << ','
                  << (l ? "d<=" + std::to_string(*l) : std::string("d")) << "]] s=" << a.s
                  << " dimG=" << a.dim_gauge << " agree=" << agree << "\n";
    }
    if (with_syndrome) {
        for (const auto& c : lg.registry.cycles) {
            if (c.tag.rfind("probe.", 0) == 0) continue;
            PauliVector w = loop_operator(lg.h, c.edges);
            auto pool = cycle_link_pool(lg.h, c.edges);
            auto so = syndrome_order(w, pool);
            std::cout << "syndrome " << c.tag << ' '
                      << (so.feasible ? "ok" : so.exhausted_budget ? "unknown" : "infeasible")
                      << "\n";
        }
    }
    if (agree == "no") return EXIT_INCONSISTENT;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"topological subsystem codes from trivalent 3-colorable tessellations"};
    app.require_subcommand(1);

    // census
    auto* census = app.add_subcommand("census", "closed-form parameter tables");
    std::string family = "1", genus = "2..5";
    bool structured = false;
    long long thm_edges = 0, thm_chi = 2, vstar = 0, fstar = 0;
    bool bipartite = false;
    census->add_option("--family", family, "1|2|3|4|thm5|thm6|bombin");
    census->add_option("--genus", genus, "genus or range, e.g. 2..5");
    census->add_flag("--structured", structured, "machine-readable rows");
    census->add_option("--edges", thm_edges, "edge count for thm5/thm6");
    census->add_option("--chi", thm_chi, "Euler characteristic for thm5/thm6/bombin");
    census->add_flag("--bipartite", bipartite, "dual graph bipartite (thm5/thm6)");
    census->add_option("--vstar", vstar, "dual vertex count (bombin)");
    census->add_option("--fstar", fstar, "dual face count (bombin)");

    // build
    auto* build = app.add_subcommand("build", "construct a hypergraph");
    std::string bfamily = "1", torus_class, cells, map_file, out_file, attach = "blue";
    build->add_option("--family", bfamily, "1|2|3|4|bombin|sarvepalli");
    build->add_option("--torus", torus_class, "tessellation class, e.g. 6,12,4");
    build->add_option("--cells", cells, "torus cells, e.g. 2x2");
    build->add_option("--map", map_file, "input .tessmap file");
    build->add_option("--out", out_file, "output .hypergraph file");
    build->add_option("--attach", attach, "blue|green (sarvepalli)");

    // analyze / validate / distance
    auto* analyze = app.add_subcommand("analyze", "parameters of a built hypergraph");
    std::string afile;
    bool astructured = false, no_syndrome = false;
    long long budget = 1ll << 24;
    analyze->add_option("file", afile, "input .hypergraph")->required();
    analyze->add_flag("--structured", astructured, "machine-readable output");
    analyze->add_flag("--no-syndrome", no_syndrome, "skip syndrome-order verdicts");
    analyze->add_option("--budget", budget, "search node budget");

    auto* validate = app.add_subcommand("validate", "check (H1)..(H5)");
    std::string vfile;
    validate->add_option("file", vfile, "input .hypergraph")->required();

    auto* distance = app.add_subcommand("distance", "triangle-count distance bound");
    std::string dfile;
    long long dbudget = 1ll << 24;
    distance->add_option("file", dfile, "input .hypergraph")->required();
    distance->add_option("--budget", dbudget, "search node budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : EXIT_USAGE;
    }

    try {
        if (census->parsed()) {
            if (family == "thm5" || family == "thm6") {
                if (thm_edges <= 0) {
                    std::cerr << "--edges is required for " << family << "\n";
                    return EXIT_USAGE;
                }
                CodeParams p = family == "thm5" ? params_thm5(thm_edges, thm_chi, bipartite)
                                                : params_thm6(thm_edges, thm_chi, bipartite);
                std::cout << family << " s=" << p.s << " [[" << p.n << ',' << p.k << ','
                          << p.r << ",d]]" << (p.encodes() ? "" : " non-encoding") << "\n";
                return 0;
            }
            if (family == "bombin") {
                if (vstar <= 0 || fstar <= 0) {
                    std::cerr << "--vstar and --fstar are required for bombin\n";
                    return EXIT_USAGE;
                }
                CodeParams p = params_bombin(vstar, fstar, thm_chi);
                std::cout << "bombin s=" << p.s << " [[" << p.n << ',' << p.k << ','
                          << p.r << ",d]]\n";
                return 0;
            }
            if (family != "1" && family != "2" && family != "3" && family != "4") {
                std::cerr << "unknown family: " << family << "\n";
                return EXIT_USAGE;
            }
            int fam = std::stoi(family);
            long long g1, g2;
            try {
                auto dots = genus.find("..");
                if (dots == std::string::npos) {
                    g1 = g2 = std::stoll(genus);
                } else {
                    g1 = std::stoll(genus.substr(0, dots));
                    g2 = std::stoll(genus.substr(dots + 2));
                }
            } catch (const std::exception&) {
                std::cerr << "malformed genus range: " << genus << "\n";
                return EXIT_USAGE;
            }
            auto rows = emit_table(fam, g1, g2);
            std::cout << format_table(rows, structured);
            return 0;
        }
        if (build->parsed()) {
            BuildResult res;
            try {
                res = run_build(bfamily, torus_class, cells, map_file, attach);
            } catch (const PlacementError& e) {
                std::cerr << "placement infeasible: " << e.what() << "\n";
                return EXIT_VALIDATION;
            } catch (const BuildError& e) {
                std::cerr << "build failed: " << e.what() << "\n";
                return EXIT_USAGE;
            }
            auto rep = validate_hypergraph(res.h);
            std::cout << rep.to_string();
            if (!rep.ok()) return EXIT_VALIDATION;
            std::string text = serialize_hypergraph(res.h, res.registry);
            if (out_file.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_file);
                out << text;
                std::cout << "qubits=" << res.h.vertex_count << " e2=" << res.h.e2.size()
                          << " e3=" << res.h.e3.size() << " -> " << out_file << "\n";
            }
            return 0;
        }
        if (analyze->parsed())
            return cmd_analyze(afile, astructured, !no_syndrome, budget);
        if (validate->parsed()) {
            LoadedHypergraph lg = load_hypergraph_file(vfile);
            auto rep = validate_hypergraph(lg.h);
            std::cout << rep.to_string();
            return rep.ok() ? 0 : EXIT_VALIDATION;
        }
        if (distance->parsed()) {
            LoadedHypergraph lg = load_hypergraph_file(dfile);
            auto probes = probe_edge_sets(lg.registry);
            auto mt = min_triangles_nontrivial(lg.h, probes, dbudget);
            if (!mt.proven) std::cout << "bound not proven optimal (budget exhausted)\n";
            for (const auto& c : mt.classes) {
                std::cout << "class=";
                for (int b = 0; b < c.coords.n; ++b) std::cout << (c.coords.get(b) ? '1' : '0');
                std::cout << " triangles=" << c.triangles << " edges=";
                for (size_t i = 0; i < c.edges.size(); ++i)
                    std::cout << (i ? "," : "") << c.edges[i];
                std::cout << "\n";
            }
            std::cout << "l=" << mt.l << "\n";
            return 0;
        }
    } catch (const CensusError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const HypergraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_VALIDATION;
    } catch (const MapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return EXIT_INCONSISTENT;
    }
    return 0;
}
