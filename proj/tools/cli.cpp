#include "cli.hpp"

#include <indtree/constructions.hpp>
#include <indtree/io.hpp>
#include <indtree/report_format.hpp>
#include <indtree/solver.hpp>
#include <indtree/verifier.hpp>

#include <CLI11.hpp>

#include <optional>
#include <ostream>

namespace indtree::cli {

namespace {
    struct EnumerationFlags
    {
        bool allow_large = false;
        int threads = 1;

        auto add_to(CLI::App * app) -> void
        {
            app->add_flag("--allow-large", allow_large, "Permit orders 11 and 12");
            app->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));
        }

        auto options() const -> EnumerationOptions { return {allow_large, threads}; }
    };

    auto construct(const std::string & family, int k, int m, const std::string & format, std::ostream & out) -> int
    {
        Graph g;
        if (family == "gk")
            g = build_g_k(k).graph;
        else if (family == "bk")
            g = build_b_k(k);
        else
            g = build_knn_minus_pm(m);

        if (format == "graph6")
            out << to_graph6(g) << '\n';
        else
            write_edge_list(out, g);
        return ok;
    }

    auto solve(const std::string & input, std::optional<int> root, bool brute_force, bool json, std::ostream & out) -> int
    {
        auto graphs = read_graph_file(input);
        if (graphs.empty())
            throw ParseError("no graph found in " + input, 0);
        for (const auto & g : graphs) {
            TreeSearchResult result;
            if (brute_force)
                result = brute_force_t(g, root ? std::optional<Vertex>{*root} : std::nullopt);
            else if (root)
                result = max_induced_tree_through(RootedGraph{g, *root});
            else
                result = max_induced_tree(g);

            if (json)
                out << to_json(g, result) << '\n';
            else
                out << "t=" << result.size << "  witness " << format_vertex_list(result.witness) << '\n';
        }
        return ok;
    }
}

auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Exact maximum induced trees in small triangle-free graphs", "indtree"};
    app.require_subcommand(1);

    auto * construct_cmd = app.add_subcommand("construct", "Build G_k, B_k or K_{m,m} minus a perfect matching");
    std::string family;
    int k = 0, m = 0;
    std::string format = "graph6";
    construct_cmd->add_option("--family", family, "gk | bk | knn-pm")->required()->check(CLI::IsMember({"gk", "bk", "knn-pm"}));
    construct_cmd->add_option("--k", k, "Family parameter k (gk, bk)");
    construct_cmd->add_option("--m", m, "Part size m (knn-pm)");
    construct_cmd->add_option("--format", format, "graph6 | edgelist")->check(CLI::IsMember({"graph6", "edgelist"}));

    auto * solve_cmd = app.add_subcommand("solve", "Compute t(G) or t(G,v) for each graph in a file");
    std::string input;
    std::optional<int> root;
    bool brute = false, solve_json = false;
    solve_cmd->add_option("--input", input, "graph6 (one per line) or edge-list file")->required();
    solve_cmd->add_option("--root", root, "Require the tree to contain this vertex");
    solve_cmd->add_flag("--brute-force", brute, "Use the subset-scan oracle (n <= 20)");
    solve_cmd->add_flag("--json", solve_json, "JSON output");

    auto * enumerate_cmd = app.add_subcommand("enumerate", "List connected triangle-free graphs as graph6");
    int enum_n = 0;
    EnumerationFlags enum_flags;
    enumerate_cmd->add_option("--n", enum_n, "Order")->required();
    enum_flags.add_to(enumerate_cmd);

    auto * tabulate_cmd = app.add_subcommand("tabulate", "Exact t3(n) and t3*(n) with extremal witnesses");
    int tab_n = 0;
    bool tab_json = false, tab_no_timing = false;
    EnumerationFlags tab_flags;
    tabulate_cmd->add_option("--n", tab_n, "Order")->required();
    tabulate_cmd->add_flag("--json", tab_json, "JSON output");
    tabulate_cmd->add_flag("--no-timing", tab_no_timing, "Omit elapsed time");
    tab_flags.add_to(tabulate_cmd);

    auto * verify_cmd = app.add_subcommand("verify", "Check a claim exhaustively over small graphs");
    std::string claim;
    int max_n = default_max_order;
    int verify_k = 3;
    bool verify_json = false, verify_no_timing = false;
    EnumerationFlags verify_flags;
    verify_cmd->add_option("--claim", claim, "theorem1 | theorem2 | corollary | counterexample_b5 | diameter_remark")
            ->required()
            ->check(CLI::IsMember({"theorem1", "theorem2", "corollary", "counterexample_b5", "diameter_remark"}));
    verify_cmd->add_option("--max-n", max_n, "Largest order enumerated");
    verify_cmd->add_option("--k", verify_k, "k for diameter_remark");
    verify_cmd->add_flag("--json", verify_json, "JSON output");
    verify_cmd->add_flag("--no-timing", verify_no_timing, "Omit elapsed time");
    verify_flags.add_to(verify_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e, out, err);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e, out, err);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e, out, err);
        return usage_error;
    }

    try {
        if (*construct_cmd) {
            if (family == "knn-pm" ? m < 1 : k < 1) {
                err << "construct: " << (family == "knn-pm" ? "--m" : "--k") << " is required and must be positive\n";
                return usage_error;
            }
            return construct(family, k, m, format, out);
        }
        if (*solve_cmd)
            return solve(input, root, brute, solve_json, out);
        if (*enumerate_cmd) {
            enumerate_connected_triangle_free(enum_n, [&](const Graph & g) { out << to_graph6(g) << '\n'; }, enum_flags.options());
            return ok;
        }
        if (*tabulate_cmd) {
            auto report = tabulate(tab_n, tab_flags.options());
            out << (tab_json ? to_json(report, ! tab_no_timing) + "\n" : to_text(report, ! tab_no_timing));
            return ok;
        }

        VerificationReport report;
        const auto options = verify_flags.options();
        if (claim == "theorem1")
            report = verify_theorem1(max_n, options);
        else if (claim == "theorem2")
            report = verify_theorem2(max_n, options);
        else if (claim == "corollary")
            report = verify_corollary(max_n, options);
        else if (claim == "counterexample_b5")
            report = verify_counterexample_b5();
        else
            report = verify_diameter_remark(verify_k, max_n, options);
        out << (verify_json ? to_json(report, ! verify_no_timing) + "\n" : to_text(report, ! verify_no_timing));
        return report.passed ? ok : falsified;
    }
    catch (const ParseError & e) {
        err << "parse error: " << e.what() << '\n';
    }
    catch (const BudgetError & e) {
        err << "budget: " << e.what() << '\n';
    }
    catch (const GraphError & e) {
        err << "invalid input: " << e.what() << '\n';
    }
    catch (const std::runtime_error & e) {
        err << "error: " << e.what() << '\n';
    }
    return usage_error;
}

} // namespace indtree::cli
