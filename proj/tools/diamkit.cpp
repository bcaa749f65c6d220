// diamkit command-line interface.
//
// Exit status: 0 yes / valid / ok, 1 no / invalid, 2 error, 3 cap overflow.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <diamkit/diamkit.hpp>

namespace {

using namespace diamkit;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;
constexpr int kOverflow = 3;

/// Reads a whole file, or standard input for "-".
std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& path) { return parse_graph(std::string_view(slurp(path))); }

NaeFormula load_nae(const std::string& path) { return parse_nae(std::string_view(slurp(path))); }

struct ProblemArgs {
    std::string kind;
    std::optional<long long> k;

    void add_to(CLI::App* app) {
        app->add_option("--problem", kind, "threecol, acyclic3col, star3col, nearbip, ifvs or ioct")->required();
        app->add_option("--k", k, "transversal size bound (ifvs, ioct)");
    }

    Problem resolve() const {
        auto parsed = parse_problem_kind(kind);
        if (!parsed)
            throw PreconditionError("unknown problem '" + kind + "'");
        Problem p{*parsed, k};
        if (k && *parsed != Problem::Kind::ifvs && *parsed != Problem::Kind::ioct)
            throw PreconditionError("--k applies to ifvs and ioct only");
        if (k && *k < 0)
            throw PreconditionError("--k must be non-negative");
        return p;
    }
};

void print_certificate(const Problem& p, bool yes, const std::optional<Colouring>& colouring,
                       const std::optional<std::vector<Vertex>>& set) {
    std::cout << "# answer " << (yes ? "yes" : "no") << '\n';
    if (!yes)
        return;
    if (p.is_transversal())
        write_vertex_set(std::cout, *set);
    else
        write_colouring(std::cout, *colouring);
}

int run_verify(const Graph& g, const Problem& p, const std::string& cert_text) {
    std::string first;
    {
        std::istringstream probe(cert_text);
        detail::for_each_content_line(probe, [&](std::size_t, std::string_view t) {
            if (first.empty())
                first = std::string(t);
        });
    }
    bool is_set = first.starts_with("s ");
    bool ok;
    std::istringstream in(cert_text);
    if (p.is_transversal()) {
        if (!is_set)
            throw PreconditionError("transversal problems take a vertex-set certificate");
        auto set = parse_vertex_set(in);
        for (Vertex v : set)
            if (v >= g.order())
                throw PreconditionError("certificate vertex " + std::to_string(v + 1) + " out of range");
        ok = verify_transversal_set(g, set, p.transversal());
    } else {
        if (is_set)
            throw PreconditionError("colouring problems take a colouring certificate");
        Colouring c = parse_colouring(in);
        if (c.order() != g.order())
            throw PreconditionError("certificate has " + std::to_string(c.order()) + " vertices, graph has " +
                                    std::to_string(g.order()));
        ok = c.total() && verify_colouring(g, c, p.mode());
    }
    std::cout << (ok ? "valid" : "invalid") << '\n';
    return ok ? kYes : kNo;
}

PatternSpec pattern_from(const std::string& kind, int r, int h, int i, int j, int ell) {
    if (kind == "path")
        return PatternSpec::path(r);
    if (kind == "cycle")
        return PatternSpec::cycle(r);
    if (kind == "complete")
        return PatternSpec::complete(r);
    if (kind == "star")
        return PatternSpec::star(r);
    if (kind == "chair")
        return PatternSpec::chair();
    if (kind == "subdivided-claw")
        return PatternSpec::subdivided_claw(h, i, j);
    if (kind == "subdivided-star")
        return PatternSpec::subdivided_star(r, ell);
    throw PreconditionError("unknown pattern kind '" + kind + "'");
}

int run(int argc, char** argv) {
    CLI::App app{"Colouring problems on chair-free graphs of bounded diameter, with reference oracles and hardness gadgets"};
    app.require_subcommand(1);
    std::string caps_spec;
    app.add_option("--caps", caps_spec, "cap overrides key=value,... (keys: enumeration, oracle, mis, pattern, count, nae)");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "decide a problem with the linear-time solver");
    ProblemArgs solve_problem;
    solve_problem.add_to(solve_cmd);
    int solve_d = 0;
    bool verify_chair = false, verify_diam = false;
    std::string solve_in = "-";
    solve_cmd->add_option("--d", solve_d, "diameter bound")->required();
    solve_cmd->add_flag("--verify-chair-free", verify_chair, "reject inputs containing an induced chair");
    solve_cmd->add_flag("--verify-diameter", verify_diam, "reject inputs whose diameter exceeds --d");
    solve_cmd->add_option("graph", solve_in, "graph file (default: stdin)");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "decide a problem by exhaustive search");
    ProblemArgs oracle_problem;
    oracle_problem.add_to(oracle_cmd);
    std::string oracle_in = "-";
    oracle_cmd->add_option("graph", oracle_in, "graph file (default: stdin)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a certificate");
    ProblemArgs verify_problem;
    verify_problem.add_to(verify_cmd);
    std::string verify_graph, verify_cert;
    verify_cmd->add_option("graph", verify_graph, "graph file")->required();
    verify_cmd->add_option("certificate", verify_cert, "colouring or vertex-set file (default: stdin)")
        ->default_val("-");

    // count
    auto* count_cmd = app.add_subcommand("count", "count proper 3-colourings");
    std::string count_in = "-";
    count_cmd->add_option("graph", count_in, "graph file (default: stdin)");

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "emit a graph");
    gen_cmd->require_subcommand(1);
    auto* gen_gd = gen_cmd->add_subcommand("gd", "extremal graph G_d");
    int gd_d = 1;
    gen_gd->add_option("--d", gd_d, "depth")->required();
    auto* gen_pattern = gen_cmd->add_subcommand("pattern", "pattern graph");
    std::string pat_kind;
    int pat_r = 1, pat_h = 1, pat_i = 1, pat_j = 1, pat_ell = 0;
    gen_pattern->set_help_flag("--help", "print this help message and exit");
    gen_pattern->add_option("--kind", pat_kind, "path, cycle, complete, star, chair, subdivided-claw, subdivided-star")
        ->required();
    gen_pattern->add_option("--r", pat_r, "order, or leaf count for stars");
    gen_pattern->add_option("--h", pat_h, "first arm of S_{h,i,j}");
    gen_pattern->add_option("--i", pat_i, "second arm of S_{h,i,j}");
    gen_pattern->add_option("--j", pat_j, "third arm of S_{h,i,j}");
    gen_pattern->add_option("--ell", pat_ell, "subdivisions of one star edge");
    auto* gen_complex = gen_cmd->add_subcommand("complex", "complete bipartite graph minus a matching");
    int cx_a = 1, cx_b = 1, cx_m = 0;
    gen_complex->add_option("--a", cx_a, "first side")->required();
    gen_complex->add_option("--b", cx_b, "second side")->required();
    gen_complex->add_option("--matching", cx_m, "removed matching size");
    auto* gen_random = gen_cmd->add_subcommand("random", "random connected chair-free graph");
    int rnd_n = 1;
    double rnd_p = 0.3;
    std::uint64_t rnd_seed = 1;
    gen_random->add_option("--n", rnd_n, "order")->required();
    gen_random->add_option("--p", rnd_p, "edge probability of each growth step")->check(CLI::Range(0.0, 1.0));
    gen_random->add_option("--seed", rnd_seed, "random seed");

    // reduce
    auto* red_cmd = app.add_subcommand("reduce", "build a reduction instance");
    red_cmd->require_subcommand(1);
    std::string red_in = "-", red_collection, red_collection_out;
    auto add_input = [&](CLI::App* c, const char* what) { c->add_option("input", red_in, what); };
    auto* red_c3 = red_cmd->add_subcommand("is-c3-free", "triangle-free diameter-2 Independent Set instance");
    add_input(red_c3, "graph file (default: stdin)");
    auto* red_k14 = red_cmd->add_subcommand("is-k14-free", "K_{1,4}-free diameter-2 Independent Set instance");
    add_input(red_k14, "graph file (default: stdin)");
    auto* red_dom = red_cmd->add_subcommand("dominating", "add a dominating vertex");
    add_input(red_dom, "graph file (default: stdin)");
    auto* red_va = red_cmd->add_subcommand("variant-a", "rewrite a NAE formula into variant A");
    add_input(red_va, "formula file (default: stdin)");
    red_va->add_option("--collection-out", red_collection_out, "write the covering collection here")->required();
    auto* red_ioct = red_cmd->add_subcommand("ioct-gadget", "IOCT gadget of a variant-A formula");
    add_input(red_ioct, "formula file (default: stdin)");
    auto* red_acyc = red_cmd->add_subcommand("acyclic-gadget", "acyclic 3-colouring gadget of a variant-A formula");
    add_input(red_acyc, "formula file (default: stdin)");
    red_acyc->add_option("--collection", red_collection, "covering collection file")->required();
    auto* red_star = red_cmd->add_subcommand("star-gadget", "star 3-colouring gadget of a variant-B formula");
    add_input(red_star, "formula file (default: stdin)");
    auto* red_ext = red_cmd->add_subcommand("extremal", "G_d with its role map");
    int ext_d = 1;
    red_ext->add_option("--d", ext_d, "depth")->required();

    // check-gadget
    auto* check_cmd = app.add_subcommand("check-gadget", "verify the claims of a gadget file");
    std::string check_in = "-";
    check_cmd->add_option("gadget", check_in, "gadget file (default: stdin)");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "chair-freeness and bipartite structure");
    std::string classify_in = "-";
    classify_cmd->add_option("graph", classify_in, "graph file (default: stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kError;
    }

    Caps caps = Caps::from_environment();
    if (!caps_spec.empty())
        caps.apply(caps_spec);

    if (*solve_cmd) {
        Problem p = solve_problem.resolve();
        Graph g = load_graph(solve_in);
        SolveOptions opts;
        opts.enumeration_cap = caps.enumeration;
        opts.verify_chair_free = verify_chair;
        opts.verify_diameter = verify_diam;
        Answer a = solve(g, solve_d, p, opts);
        print_certificate(p, a.yes, a.colouring, a.transversal);
        return a.yes ? kYes : kNo;
    }
    if (*oracle_cmd) {
        Problem p = oracle_problem.resolve();
        Graph g = load_graph(oracle_in);
        auto r = oracle::brute_force(g, p, caps.oracle);
        if (r.optimum)
            std::cout << "# optimum " << *r.optimum << '\n';
        print_certificate(p, r.yes, r.witness_colouring, r.witness_set);
        return r.yes ? kYes : kNo;
    }
    if (*verify_cmd) {
        Problem p = verify_problem.resolve();
        Graph g = load_graph(verify_graph);
        return run_verify(g, p, slurp(verify_cert));
    }
    if (*count_cmd) {
        Graph g = load_graph(count_in);
        std::cout << oracle::count_3_colourings(g, caps.count) << '\n';
        return kYes;
    }
    if (*gen_cmd) {
        if (*gen_gd) {
            write_graph(std::cout, generate_Gd(gd_d));
        } else if (*gen_pattern) {
            write_graph(std::cout, build_pattern(pattern_from(pat_kind, pat_r, pat_h, pat_i, pat_j, pat_ell)));
        } else if (*gen_complex) {
            write_graph(std::cout, complex_graph(cx_a, cx_b, cx_m));
        } else {
            std::mt19937_64 rng(rnd_seed);
            write_graph(std::cout, random_chair_free_graph(rnd_n, rnd_p, rng));
        }
        return kYes;
    }
    if (*red_cmd) {
        if (*red_c3) {
            write_gadget(std::cout, build_is_diam2_trianglefree(load_graph(red_in)));
        } else if (*red_k14) {
            write_gadget(std::cout, build_is_diam2_k14free(load_graph(red_in)));
        } else if (*red_dom) {
            write_graph(std::cout, add_dominating_vertex(load_graph(red_in)));
        } else if (*red_va) {
            auto out = to_variant_a(load_nae(red_in));
            std::ofstream col(red_collection_out);
            if (!col)
                throw Error("cannot write '" + red_collection_out + "'");
            write_collection(col, out.collection);
            write_nae(std::cout, out.formula);
        } else if (*red_ioct) {
            write_gadget(std::cout, build_ioct_gadget(load_nae(red_in)));
        } else if (*red_acyc) {
            NaeFormula f = load_nae(red_in);
            std::istringstream col(slurp(red_collection));
            write_gadget(std::cout, build_acyclic_gadget(f, parse_collection(col, f)));
        } else if (*red_star) {
            write_gadget(std::cout, build_star_gadget(load_nae(red_in)));
        } else {
            write_gadget(std::cout, extremal_gadget(ext_d));
        }
        return kYes;
    }
    if (*check_cmd) {
        std::istringstream in(slurp(check_in));
        GadgetOutput out = read_gadget(in);
        VerifyOptions opts;
        opts.oracle_cap = caps.oracle;
        opts.nae_cap = caps.nae;
        opts.pattern_cap = caps.pattern;
        opts.mis_cap = std::max(opts.mis_cap, caps.mis);
        auto rep = verify_gadget(out, opts);
        for (const auto& c : rep.claims) {
            std::cout << to_string(c.status) << ' ' << c.name;
            if (!c.detail.empty())
                std::cout << " (" << c.detail << ')';
            std::cout << '\n';
        }
        return rep.any_failed() ? kNo : kYes;
    }
    if (*classify_cmd) {
        Graph g = load_graph(classify_in);
        auto cc = is_chair_free(g);
        std::cout << "chair-free " << (cc.chair_free ? "yes" : "no");
        if (cc.witness) {
            std::cout << " witness";
            for (Vertex v : cc.witness->image)
                std::cout << ' ' << v + 1;
        }
        std::cout << '\n';
        bool connected = g.order() > 0 && is_connected(g);
        std::cout << "connected " << (connected ? "yes" : "no") << '\n';
        auto bp = bipartition(g);
        std::cout << "bipartite " << (bp.bipartite() ? "yes" : "no") << '\n';
        if (connected) {
            std::cout << "diameter " << diameter(g) << '\n';
            if (bp.bipartite() && cc.chair_free) {
                auto cls = classify_bipartite_chair_free(g);
                std::cout << "class " << to_string(cls.tag);
                if (cls.tag == BipartiteChairFreeClass::Tag::complex)
                    std::cout << ' ' << cls.parts->larger.size() << ' ' << cls.parts->smaller.size() << " matching "
                              << cls.removed_matching.size();
                std::cout << '\n';
            }
        }
        return kYes;
    }
    return kError;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const diamkit::CapOverflow& e) {
        std::cerr << "overflow: " << e.what() << '\n';
        return kOverflow;
    } catch (const diamkit::ParseError& e) {
        std::cerr << "error: parse: " << e.what() << '\n';
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
}
