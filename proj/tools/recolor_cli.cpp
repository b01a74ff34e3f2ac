// recolor: command-line front end.
//
// Subcommands:
//   gen SPEC            write a graph file from a family spec string
//   analyze FILE        print the structure certificate
//   decide FILE         recolorable or not (frozen witness on the core)
//   path FILE FROM TO   construct a recoloring sequence between two colorings
//   frozen FILE         print a frozen coloring, or "none"
//   verify FILE         oracle cross-check suite; CHECK <name> <pass|fail> ...
//
// Exit codes: 0 ok, 1 internal/check failure, 2 usage, 3 not in class,
// 4 budget exceeded, 5 not mixing at the requested level (also `decide`
// answering "no").

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "recol/chromatic.hpp"
#include "recol/errors.hpp"
#include "recol/family.hpp"
#include "recol/graph.hpp"
#include "recol/oracle.hpp"
#include "recol/patterns.hpp"
#include "recol/path.hpp"
#include "recol/recolor.hpp"
#include "recol/structure.hpp"

using namespace recol;

namespace {

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_file);
    if (!f) throw FormatError("cannot open output file: " + out_file);
    f << text;
}

std::string ids(const std::vector<int>& vs) {
    std::string s;
    for (int v : vs) {
        if (!s.empty()) s += ' ';
        s += std::to_string(v + 1);
    }
    return s;
}

Coloring random_proper(const Graph& g, int ell, std::mt19937_64& rng) {
    for (;;) {
        std::vector<int> order(g.n());
        for (int i = 0; i < g.n(); ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        Coloring c(g.n(), 0);
        bool ok = true;
        for (int v : order) {
            std::vector<int> cols(ell);
            for (int i = 0; i < ell; ++i) cols[i] = i + 1;
            std::shuffle(cols.begin(), cols.end(), rng);
            int got = 0;
            for (int cc : cols) {
                bool free = true;
                for (int w : g.neighbors(v))
                    if (c[w] == cc) free = false;
                if (free) { got = cc; break; }
            }
            if (!got) { ok = false; break; }
            c[v] = got;
        }
        if (ok) return c;
    }
}

int cmd_gen(const std::string& spec, const std::string& out) {
    Graph g = build_family(parse_family_spec(spec));
    emit(write_graph(g), out);
    return 0;
}

int cmd_analyze(const std::string& file) {
    Graph g = read_graph_file(file);
    if (!in_scope_class(g)) throw NotInClass("graph has an induced P2+P3 or C4");
    auto comps = connected_components(g);
    if (comps.size() <= 1) {
        StructureCertificate cert = decompose(g);
        if (!validate_certificate(g, cert))
            throw InternalError("certificate failed validation");
        std::cout << write_certificate(cert);
        return 0;
    }
    for (const auto& comp : comps) {
        Graph sub = g.induced(comp);
        std::cout << "component " << ids(comp) << "\n";
        StructureCertificate cert = decompose(sub);
        if (!validate_certificate(sub, cert))
            throw InternalError("certificate failed validation");
        std::cout << write_certificate(cert);
    }
    return 0;
}

int cmd_decide(const std::string& file) {
    Graph g = read_graph_file(file);
    Decision d = decide_recolorable(g);
    if (d.recolorable) {
        std::cout << "recolorable yes\n";
        return 0;
    }
    std::cout << "recolorable no\n";
    std::cout << "core " << ids(d.core) << "\n";
    std::cout << "frozen " << d.witness_ell;
    for (int c : d.witness) std::cout << ' ' << c;
    std::cout << "\n";
    return 5;
}

int cmd_path(const std::string& file, const std::string& from_file,
             const std::string& to_file, int ell, long long budget,
             bool force_oracle, const std::string& out) {
    Graph g = read_graph_file(file);
    Coloring phi = read_coloring_file(from_file, g.n()).first;
    Coloring psi = read_coloring_file(to_file, g.n()).first;
    RecolorPath p = recolor_path(g, phi, psi, ell, budget, force_oracle);
    emit(write_path(p, g.n()), out);
    return 0;
}

int cmd_frozen(const std::string& file, int ell, long long budget) {
    Graph g = read_graph_file(file);
    if (ell == 0) ell = chromatic_number(g).first + 1;
    // cheap constructive route for the recognized rigid cores
    if (auto w = recognize(g)) {
        if (w->tag == CoreTag::C6Core || w->tag == CoreTag::F2Core ||
            w->tag == CoreTag::H4Star) {
            auto [c, wl] = frozen_coloring(g, *w);
            if (wl == ell) {
                std::cout << write_coloring(c, ell);
                return 0;
            }
        }
    }
    auto c = find_frozen(g, ell, budget);
    if (!c) {
        std::cout << "none\n";
        return 0;
    }
    std::cout << write_coloring(*c, ell);
    return 0;
}

struct Checker {
    int fails = 0;
    void report(const std::string& name, bool pass, const std::string& details) {
        std::cout << "CHECK " << name << (pass ? " pass " : " fail ") << details
                  << "\n";
        if (!pass) ++fails;
    }
};

int cmd_verify(const std::string& file, int ell, long long budget,
               unsigned long long seed, int trials, const std::string& replay,
               const std::string& from_file) {
    Graph g = read_graph_file(file);
    Checker ck;

    if (!replay.empty()) {
        if (from_file.empty())
            throw ParameterError("--replay requires --from START_COLORING");
        Coloring start = read_coloring_file(from_file, g.n()).first;
        try {
            RecolorPath p = read_path_file(replay, start);
            validate_path(g, p);
            ck.report("replay", true,
                      "steps=" + std::to_string(p.steps.size()));
        } catch (const std::exception& e) {
            ck.report("replay", false, e.what());
        }
        return ck.fails ? 1 : 0;
    }

    bool in_class = in_scope_class(g);
    ck.report("in-class", in_class, in_class ? "" : "induced P2+P3 or C4");
    if (!in_class) return 3;

    int chi = chromatic_number(g).first;
    int rho = degeneracy(g).first;
    Decision d = decide_recolorable(g);
    if (ell == 0) ell = d.recolorable ? chi + 1 : std::max(chi + 1, rho + 2);
    ck.report("ell", ell > chi,
              "ell=" + std::to_string(ell) + " chi=" + std::to_string(chi));
    if (ell <= chi) return 1;

    // structure certificate per component
    {
        bool ok = true;
        std::string detail;
        for (const auto& comp : connected_components(g)) {
            Graph sub = g.induced(comp);
            try {
                if (!validate_certificate(sub, decompose(sub))) {
                    ok = false;
                    detail = "certificate invalid";
                }
            } catch (const std::exception& e) {
                ok = false;
                detail = e.what();
            }
        }
        ck.report("certificate", ok, detail);
    }

    // decision vs the exhaustive oracle, at chi+1 where frozenness lives
    try {
        bool mix = is_mixing(g, chi + 1, budget);
        bool consistent = d.recolorable == mix;
        ck.report("mixing", consistent,
                  std::string("decide=") + (d.recolorable ? "yes" : "no") +
                      " oracle=" + (mix ? "yes" : "no") +
                      " ell=" + std::to_string(chi + 1));
        auto frozen = find_frozen(g, chi + 1, budget);
        ck.report("frozen", frozen.has_value() != mix,
                  frozen ? "found" : "none");
        if (!d.recolorable) {
            Graph core = g.induced(d.core);
            bool w_ok = check_proper(core, d.witness, d.witness_ell) &&
                        check_frozen(core, d.witness, d.witness_ell);
            ck.report("witness", w_ok, "ell=" + std::to_string(d.witness_ell));
        }
    } catch (const SizeLimit&) {
        ck.report("mixing", true, "skipped: over budget");
    }

    // seeded endpoint pairs through the constructive path builder
    std::mt19937_64 rng(seed);
    bool force = !d.recolorable && ell < rho + 2;
    int n = g.n();
    bool paths_ok = true;
    std::string paths_detail;
    long long max_len = 0;
    for (int t = 0; t < trials && paths_ok; ++t) {
        Coloring phi = random_proper(g, ell, rng);
        Coloring psi = random_proper(g, ell, rng);
        try {
            RecolorPath p = recolor_path(g, phi, psi, ell, budget, force);
            validate_path(g, p);
            if (p.end() != psi) {
                paths_ok = false;
                paths_detail = "wrong endpoint";
                break;
            }
            max_len = std::max(max_len, (long long)p.steps.size());
            if (!force && (long long)p.steps.size() > 2LL * n * n) {
                paths_ok = false;
                paths_detail = "length over 2n^2";
                break;
            }
            try {
                RecolorPath q = oracle_path(g, ell, phi, psi, budget);
                if (q.steps.size() > p.steps.size()) {
                    paths_ok = false;
                    paths_detail = "shorter than oracle shortest path";
                }
            } catch (const SizeLimit&) {
            }
        } catch (const std::exception& e) {
            paths_ok = false;
            paths_detail = e.what();
        }
    }
    ck.report("paths", paths_ok,
              paths_ok ? "trials=" + std::to_string(trials) +
                             " max_len=" + std::to_string(max_len)
                       : paths_detail);

    return ck.fails ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Decides recolorability of (P2+P3,C4)-free graphs and builds "
        "bounded-length recoloring sequences.\n"
        "Family spec grammar: name[:a,b,...] | join(s,s) | union(s,s); leaf "
        "names: c<k> k<p> e<q> p<k> petersen theta:x cap5 apple5 f1 f2 h1:s "
        "h2:s1,s2,s3,s4 h3:x h4:s1,s2,s3 h4star:p h5:s1,s2 blowc5:b1,..,b5"};
    app.require_subcommand(1);

    std::string spec, file, from_file, to_file, out, replay;
    int ell = 0, trials = 20;
    long long budget = 0;
    unsigned long long seed = 0;
    bool force_oracle = false;

    auto* gen = app.add_subcommand("gen", "write a graph file from a family spec");
    gen->add_option("spec", spec, "family spec string")->required();
    gen->add_option("-o,--out", out, "output file (default stdout)");

    auto* analyze = app.add_subcommand("analyze", "print the structure certificate");
    analyze->add_option("graph", file, "graph file")->required();

    auto* decide = app.add_subcommand("decide", "recolorable at every level above chi?");
    decide->add_option("graph", file, "graph file")->required();

    auto* path = app.add_subcommand("path", "recoloring sequence between two colorings");
    path->add_option("graph", file, "graph file")->required();
    path->add_option("from", from_file, "start coloring file")->required();
    path->add_option("to", to_file, "target coloring file")->required();
    path->add_option("--ell", ell, "number of colors")->required();
    path->add_option("--budget", budget, "oracle state budget");
    path->add_flag("--force-oracle", force_oracle,
                   "brute-force search when no bound applies");
    path->add_option("-o,--out", out, "output file (default stdout)");

    auto* frozen = app.add_subcommand("frozen", "print a frozen coloring or none");
    frozen->add_option("graph", file, "graph file")->required();
    frozen->add_option("--ell", ell, "number of colors (default chi+1)");
    frozen->add_option("--budget", budget, "oracle state budget");

    auto* verify = app.add_subcommand("verify", "oracle cross-check suite");
    verify->add_option("graph", file, "graph file")->required();
    verify->add_option("--ell", ell, "number of colors (default per decision)");
    verify->add_option("--budget", budget, "oracle state budget");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--trials", trials, "endpoint pairs to test");
    verify->add_option("--replay", replay, "re-validate a path file");
    verify->add_option("--from", from_file, "start coloring for --replay");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(spec, out);
        if (analyze->parsed()) return cmd_analyze(file);
        if (decide->parsed()) return cmd_decide(file);
        if (path->parsed())
            return cmd_path(file, from_file, to_file, ell, budget, force_oracle, out);
        if (frozen->parsed()) return cmd_frozen(file, ell, budget);
        if (verify->parsed())
            return cmd_verify(file, ell, budget, seed, trials, replay, from_file);
    } catch (const NotInClass& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const SizeLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const NotMixingAtEll& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
