#include "cforce/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "CLI11.hpp"
#include "cforce/forcing.hpp"
#include "cforce/generators.hpp"
#include "cforce/io.hpp"
#include "cforce/solvers.hpp"
#include "cforce/structural.hpp"
#include "cforce/structure.hpp"
#include "cforce/verify.hpp"

namespace cforce {

namespace {

Graph load_graph(const std::string& path, std::istream& in) {
    if (path == "-") return read_edge_list(in);
    std::ifstream file(path);
    if (!file) throw Error("cannot open '" + path + "'");
    return read_edge_list(file);
}

void print_witnesses(std::ostream& out, const std::vector<VertexSet>& witnesses, bool all) {
    std::size_t shown = all ? witnesses.size() : std::min<std::size_t>(1, witnesses.size());
    for (std::size_t i = 0; i < shown; ++i) out << "witness = " << witnesses[i].to_string() << '\n';
}

int run_fc(const Graph& g, const std::string& method, bool witness, bool all, bool trace,
           std::ostream& out) {
    int value = 0;
    std::vector<VertexSet> witnesses;

    bool tree = is_tree(g);
    bool clique = !tree && detect_single_clique(g).is_single_clique_graph;
    bool structural = method == "structural" || (method == "auto" && !all && (tree || clique));

    if (method == "structural" && !tree && !clique)
        throw Error("structural method requires a tree or a single-clique graph");

    if (structural) {
        auto [v, w] = tree ? tree_connected_forcing(g) : single_clique_connected_forcing(g);
        value = v;
        witnesses.push_back(w);
    } else {
        SolveResult res = connected_forcing_number(g, all);
        value = res.value;
        witnesses = std::move(res.witnesses);
    }

    out << "Fc = " << value << '\n';
    if (witness || all) print_witnesses(out, witnesses, all);
    if (trace && !witnesses.empty()) write_trace(out, forcing_closure(g, witnesses.front()));
    return 0;
}

void explore_fc_extremes(int max_n, std::ostream& out) {
    for (int n = 2; n <= max_n; ++n) {
        std::map<int, long long> tally;
        long long total = 0;
        all_connected_graphs_up_to_iso(n, [&](const Graph& g) {
            ++total;
            ++tally[connected_forcing_number(g).value];
        });
        out << "n = " << n << ": " << total << " connected graphs up to isomorphism\n";
        for (auto [fc, cnt] : tally) {
            out << "  Fc = " << fc << ": " << cnt;
            if (fc == n - 2) out << " (= n-2)";
            if (fc == n - 3) out << " (= n-3)";
            out << '\n';
        }
    }
}

void explore_subset_containment(int max_n, std::ostream& out) {
    // Graphs where no minimum connected forcing set contains a minimum
    // forcing set (equivalently: no minimum forcing set extends to one).
    long long found_total = 0;
    for (int n = 2; n <= max_n; ++n) {
        long long found = 0;
        all_connected_graphs_up_to_iso(n, [&](const Graph& g) {
            SolveResult f = forcing_number(g, true);
            SolveResult fc = connected_forcing_number(g, true);
            for (const auto& w : fc.witnesses)
                for (const auto& s : f.witnesses)
                    if (s.is_subset_of(w)) return;
            ++found;
            if (++found_total == 1) {
                out << "example (n = " << n << ", F = " << f.value << ", Fc = " << fc.value << "):\n";
                write_edge_list(out, g);
            }
        });
        out << "n = " << n << ": " << found << " graph(s) where no minimum connected forcing set "
            << "contains a minimum forcing set\n";
    }
    if (found_total == 0) out << "no such graph up to n = " << max_n << '\n';
}

void explore_r1r2_converse(int max_n, std::ostream& out) {
    // Vertices in every minimum connected forcing set although their removal
    // leaves two components with at least one pendant path among them.
    long long found = 0;
    for (int n = 3; n <= max_n; ++n) {
        all_connected_graphs_up_to_iso(n, [&](const Graph& g) {
            SolveResult fc = connected_forcing_number(g, true);
            VertexSet common = fc.witnesses.front();
            for (const auto& w : fc.witnesses) common &= w;
            if (common.empty()) return;
            for (int v : common) {
                auto comps = components_after_removal(g, VertexSet::of(n, {v}));
                if (comps.size() != 2) continue;
                if (!is_pendant_path(g, v, comps[0]) && !is_pendant_path(g, v, comps[1])) continue;
                ++found;
                if (found == 1) {
                    out << "example (n = " << n << ", vertex " << v << "):\n";
                    write_edge_list(out, g);
                }
            }
        });
    }
    if (found == 0)
        out << "no vertex outside R1/R2 lies in every minimum connected forcing set, up to n = "
            << max_n << '\n';
    else
        out << found << " (graph, vertex) pair(s) found up to n = " << max_n << '\n';
}

}  // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact and structural solvers for zero forcing and connected zero forcing"};
    app.name("cforce");
    app.require_subcommand(1);

    std::string gen_family;
    std::vector<int> gen_params;
    auto* gen = app.add_subcommand("gen", "emit a family graph as an edge list");
    gen->add_option("family", gen_family,
                    "path|cycle|complete|star|hypercube|torus|flower_snark|pendant_path|pendant_cycle")
        ->required();
    gen->add_option("params", gen_params, "family parameters");

    std::string fc_input, fc_method = "auto";
    bool fc_witness = false, fc_all = false, fc_trace = false;
    auto* fc = app.add_subcommand("fc", "connected forcing number");
    fc->add_option("input", fc_input, "edge-list file, or - for stdin")->required();
    fc->add_option("--method", fc_method, "auto|brute|structural")
        ->check(CLI::IsMember({"auto", "brute", "structural"}));
    fc->add_flag("--witness", fc_witness, "print one minimum connected forcing set");
    fc->add_flag("--all", fc_all, "print every minimum connected forcing set (exhaustive)");
    fc->add_flag("--trace", fc_trace, "print the forcing trace of the reported witness");

    std::string f_input;
    bool f_witness = false, f_all = false, f_trace = false;
    auto* fplain = app.add_subcommand("f", "forcing number");
    fplain->add_option("input", f_input, "edge-list file, or - for stdin")->required();
    fplain->add_flag("--witness", f_witness, "print one minimum forcing set");
    fplain->add_flag("--all", f_all, "print every minimum forcing set");
    fplain->add_flag("--trace", f_trace, "print the forcing trace of the reported witness");

    std::string sets_input;
    bool sets_connected = false, sets_plain = false, sets_min = false;
    auto* sets = app.add_subcommand("sets", "list minimum forcing sets, one per line");
    sets->add_option("input", sets_input, "edge-list file, or - for stdin")->required();
    sets->add_flag("--connected", sets_connected, "minimum connected forcing sets");
    sets->add_flag("--plain", sets_plain, "minimum forcing sets");
    sets->add_flag("--min", sets_min, "enumerate at the minimum cardinality");

    std::string spread_input;
    int spread_vertex = 0;
    bool spread_connected = false;
    auto* spread = app.add_subcommand("spread", "forcing spread of a vertex");
    spread->add_option("input", spread_input, "edge-list file, or - for stdin")->required();
    spread->add_option("vertex", spread_vertex, "vertex id")->required();
    spread->add_flag("--connected", spread_connected, "connected forcing spread");

    std::string info_input;
    auto* info = app.add_subcommand("info", "structural report");
    info->add_option("input", info_input, "edge-list file, or - for stdin")->required();

    std::string verify_suite;
    int verify_threads = 1;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", verify_suite, "trees|clique|extremal|snark|bounds|spreads|all")
        ->required()
        ->check(CLI::IsMember({"trees", "clique", "extremal", "snark", "bounds", "spreads", "all"}));
    verify_cmd->add_option("--threads", verify_threads, "worker thread cap")->check(CLI::Range(1, 256));

    std::string explore_question;
    int explore_max_n = 6;
    auto* explore = app.add_subcommand("explore", "enumeration reports for open questions");
    explore->add_option("question", explore_question, "fc-extremes|subset-containment|r1r2-converse")
        ->required()
        ->check(CLI::IsMember({"fc-extremes", "subset-containment", "r1r2-converse"}));
    explore->add_option("--max-n", explore_max_n, "largest graph order to enumerate")
        ->check(CLI::Range(2, 6));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            write_edge_list(out, make(FamilySpec::parse(gen_family, gen_params)));
            return 0;
        }
        if (*fc) {
            if (fc_all && fc_method == "structural") {
                err << "--all requires an exhaustive method\n";
                return 2;
            }
            return run_fc(load_graph(fc_input, in), fc_method, fc_witness, fc_all, fc_trace, out);
        }
        if (*fplain) {
            Graph g = load_graph(f_input, in);
            SolveResult res = forcing_number(g, f_all);
            out << "F = " << res.value << '\n';
            if (f_witness || f_all) print_witnesses(out, res.witnesses, f_all);
            if (f_trace && !res.witnesses.empty())
                write_trace(out, forcing_closure(g, res.witnesses.front()));
            return 0;
        }
        if (*sets) {
            if (sets_connected == sets_plain || !sets_min) {
                err << "sets requires --min and exactly one of --connected / --plain\n";
                return 2;
            }
            Graph g = load_graph(sets_input, in);
            SolveResult res =
                sets_connected ? connected_forcing_number(g, true) : forcing_number(g, true);
            for (const auto& w : res.witnesses) out << w.to_string() << '\n';
            return 0;
        }
        if (*spread) {
            Graph g = load_graph(spread_input, in);
            int value = spread_connected ? connected_forcing_spread(g, spread_vertex)
                                         : forcing_spread(g, spread_vertex);
            out << "spread = " << value << '\n';
            return 0;
        }
        if (*info) {
            Graph g = load_graph(info_input, in);
            if (!is_connected(g)) throw Error("info requires a connected graph");
            StructuralReport rep = compute_r_sets(g);
            out << "n = " << g.vertex_count() << '\n';
            out << "m = " << g.edge_count() << '\n';
            out << "leaves = " << rep.leaves.to_string() << '\n';
            out << "leaf_number = " << rep.leaf_number << '\n';
            out << "articulation_points = " << rep.articulation_points.to_string() << '\n';
            out << "R1 = " << rep.r1.to_string() << '\n';
            out << "R2 = " << rep.r2.to_string() << '\n';
            out << "R3_reduced = " << rep.r3_reduced.to_string() << '\n';
            out << "curly_L = " << rep.curly_l << '\n';
            for (const auto& b : rep.blocks) out << "block = " << b.to_string() << '\n';
            VertexSet reduced_vertices(g.vertex_count());
            for (int v : rep.reduced_to_original) reduced_vertices.add(v);
            out << "reduced_vertices = " << reduced_vertices.to_string() << '\n';
            for (auto [a, b] : rep.reduced.edge_list())
                out << "reduced_edge = " << rep.reduced_to_original[static_cast<std::size_t>(a)] << ' '
                    << rep.reduced_to_original[static_cast<std::size_t>(b)] << '\n';
            return 0;
        }
        if (*verify_cmd) {
            verify::Options opt{verify_threads};
            bool ok = true;
            for (const auto& suite : verify::run_suites(verify_suite, opt)) {
                for (const auto& check : suite.checks) {
                    out << check.name << ": " << (check.pass ? "PASS" : "FAIL");
                    if (!check.detail.empty()) out << " (" << check.detail << ")";
                    out << '\n';
                    ok = ok && check.pass;
                }
            }
            return ok ? 0 : 3;
        }
        if (*explore) {
            if (explore_question == "fc-extremes")
                explore_fc_extremes(explore_max_n, out);
            else if (explore_question == "subset-containment")
                explore_subset_containment(explore_max_n, out);
            else
                explore_r1r2_converse(explore_max_n, out);
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace cforce
