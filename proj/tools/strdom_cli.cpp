// strdom: exact strong Roman domination toolkit.
//
// Subcommands: solve, verify, bounds, gen, realize, reduce, check-family.
// Exit codes: 0 success, 1 domain rejection, 2 parse error, 3 budget
// exhaustion.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "strdom/bounds.hpp"
#include "strdom/errors.hpp"
#include "strdom/families.hpp"
#include "strdom/graph.hpp"
#include "strdom/labeling.hpp"
#include "strdom/reduction.hpp"
#include "strdom/solver.hpp"
#include "strdom/trees.hpp"

using nlohmann::json;
using namespace strdom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;

constexpr int kWitnessPrintLimit = 50;

struct GraphInput {
    Graph graph;
    std::string description;
};

GraphInput load_graph_arg(const std::string& arg, std::uint64_t seed) {
    GraphInput in;
    in.description = arg;
    if (arg == "-") {
        in.graph = read_edge_list(std::cin);
    } else if (arg.find(':') != std::string::npos) {
        if (arg.rfind("rtree:", 0) == 0) {
            int n = std::stoi(arg.substr(6));
            SplitMix64 rng(seed);
            in.graph = random_labeled_tree(n, rng);
        } else {
            in.graph = generate(FamilySpec::parse(arg));
        }
    } else {
        in.graph = read_edge_list_file(arg);
    }
    return in;
}

json witness_json(const Labeling& w, bool force, bool suppress) {
    if (suppress || (!force && w.graph_order() > kWitnessPrintLimit)) return nullptr;
    return w.values;
}

json solve_result_json(const SolveResult& r, bool force_witness, bool suppress_witness) {
    return json{{"status", r.complete() ? "optimal" : "budget-exhausted"},
                {"value", r.value},
                {"lower_bound", r.lower_bound},
                {"nodes", r.nodes_explored},
                {"elapsed_seconds", r.elapsed_seconds},
                {"witness", witness_json(r.witness, force_witness, suppress_witness)}};
}

void print_witness_human(const Labeling& w, bool force, bool suppress) {
    if (suppress || (!force && w.graph_order() > kWitnessPrintLimit)) return;
    std::cout << "  witness:";
    for (int v = 0; v < w.graph_order(); ++v) std::cout << ' ' << w[v];
    std::cout << '\n';
}

json violations_json(const std::vector<Violation>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back({{"vertex", v.vertex}, {"reason", v.reason}});
    return out;
}

std::string edges_human(const Graph& g) {
    std::ostringstream os;
    write_edge_list(os, g);
    return os.str();
}

json edges_json(const Graph& g) {
    json out = json::array();
    for (auto [u, v] : g.edges) out.push_back({u, v});
    return out;
}

int run_solve(const std::string& input, bool do_strdf, bool do_roman, bool do_dom, bool all,
              bool do_construct, std::uint64_t budget, double time_limit, bool json_out,
              bool force_witness, bool suppress_witness, std::uint64_t seed) {
    if (all) do_strdf = do_roman = do_dom = true;
    if (!do_strdf && !do_roman && !do_dom && !do_construct) do_strdf = true;
    auto in = load_graph_arg(input, seed);
    SolveOptions options;
    options.node_budget = budget;
    options.time_limit_seconds = time_limit;

    json results = json::object();
    bool exhausted = false;
    std::optional<SolveResult> strdf, roman, dom;
    if (do_strdf) strdf = solve_strdf_exact(in.graph, options);
    if (do_roman) roman = solve_roman_exact(in.graph, options);
    if (do_dom) dom = solve_domination_exact(in.graph, options);
    for (auto* r : {&strdf, &roman, &dom})
        if (*r && !(*r)->complete()) exhausted = true;
    std::optional<TreeWitness> construction;
    if (do_construct) construction = construct_tree_strdf(in.graph);

    if (json_out) {
        if (strdf) results["strdf"] = solve_result_json(*strdf, force_witness, suppress_witness);
        if (roman) results["roman"] = solve_result_json(*roman, force_witness, suppress_witness);
        if (dom)
            results["domination"] = solve_result_json(*dom, force_witness, suppress_witness);
        if (construction)
            results["tree_construction"] =
                json{{"weight", construction->labeling.weight()},
                     {"bound", construction->weight_bound},
                     {"case_trace", construction->case_trace},
                     {"witness", witness_json(construction->labeling, force_witness,
                                              suppress_witness)}};
        json out{{"command", "solve"},
                 {"input", in.description},
                 {"n", in.graph.n},
                 {"m", in.graph.size()},
                 {"results", results}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "graph: " << in.description << " (n=" << in.graph.n
                  << ", m=" << in.graph.size() << ")\n";
        auto show = [&](const char* name, const SolveResult& r) {
            std::cout << name << ": " << r.value;
            if (!r.complete())
                std::cout << "  [incomplete: bounds " << r.lower_bound << ".." << r.value << "]";
            std::cout << "  (nodes " << r.nodes_explored << ")\n";
            print_witness_human(r.witness, force_witness, suppress_witness);
        };
        if (strdf) show("gamma_StR", *strdf);
        if (roman) show("gamma_R", *roman);
        if (dom) show("gamma", *dom);
        if (construction) {
            std::cout << "constructive upper bound: " << construction->labeling.weight()
                      << " (bound " << construction->weight_bound << "; cases";
            for (const auto& c : construction->case_trace) std::cout << ' ' << c;
            std::cout << ")\n";
            print_witness_human(construction->labeling, force_witness, suppress_witness);
        }
    }
    return exhausted ? kExitBudget : kExitOk;
}

int run_verify(const std::string& graph_arg, const std::string& labeling_arg, bool roman,
               bool json_out, std::uint64_t seed) {
    auto in = load_graph_arg(graph_arg, seed);
    Labeling f;
    if (labeling_arg == "-")
        f = read_labeling(std::cin, in.graph.n);
    else
        f = read_labeling_file(labeling_arg, in.graph.n);
    auto report = roman ? verify_rdf(in.graph, f) : verify_strdf(in.graph, f);
    if (json_out) {
        json out{{"command", "verify"},
                 {"mode", roman ? "roman" : "strdf"},
                 {"valid", report.valid},
                 {"weight", report.weight},
                 {"violations", violations_json(report.violations)},
                 {"cap_violations", violations_json(report.cap_violations)},
                 {"thresholds", report.thresholds}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << (report.valid ? "valid" : "INVALID") << ", weight " << report.weight
                  << '\n';
        for (const auto& v : report.violations) std::cout << "  violation: " << v.reason << '\n';
        for (const auto& v : report.cap_violations) std::cout << "  cap: " << v.reason << '\n';
    }
    return kExitOk;
}

int run_bounds(const std::string& input, std::optional<int> gamma, std::optional<int> gamma_r,
               bool json_out, std::uint64_t seed) {
    auto in = load_graph_arg(input, seed);
    ExactValues exact;
    exact.gamma = gamma;
    exact.gamma_r = gamma_r;
    auto report = bounds_report(in.graph, exact);
    if (json_out) {
        json out = json::parse(bounds_report_json(report));
        out["command"] = "bounds";
        out["input"] = in.description;
        std::cout << out.dump(2) << '\n';
    } else {
        auto show = [](const char* name, const std::optional<int>& v, const std::string& why) {
            std::cout << "  " << name << ": ";
            if (v)
                std::cout << *v << '\n';
            else
                std::cout << "n/a (" << why << ")\n";
        };
        std::cout << "bounds for " << in.description << " (n=" << in.graph.n << ")\n";
        std::cout << "  lower_order: " << report.lower_order << '\n';
        show("lower_roman", report.lower_roman, report.lower_roman_reason);
        std::cout << "  upper_max_degree: " << report.upper_max_degree << '\n';
        show("upper_domination", report.upper_domination, report.upper_domination_reason);
        show("upper_diameter", report.upper_diameter, report.upper_diameter_reason);
        show("upper_girth", report.upper_girth, report.upper_girth_reason);
        if (report.upper_probabilistic)
            std::cout << "  upper_probabilistic: " << *report.upper_probabilistic << " (floor "
                      << *report.upper_probabilistic_floor << ")\n";
        else
            std::cout << "  upper_probabilistic: n/a (" << report.upper_probabilistic_reason
                      << ")\n";
        show("upper_n_minus_2", report.upper_n_minus_2, report.upper_n_minus_2_reason);
    }
    return kExitOk;
}

int run_gen(const std::string& spec_text, const std::string& out_file, bool json_out,
            std::uint64_t seed) {
    auto in = load_graph_arg(spec_text, seed);
    if (!out_file.empty()) write_edge_list_file(out_file, in.graph);
    if (json_out) {
        json out{{"command", "gen"},
                 {"spec", spec_text},
                 {"n", in.graph.n},
                 {"m", in.graph.size()},
                 {"edges", edges_json(in.graph)},
                 {"file", out_file.empty() ? json(nullptr) : json(out_file)}};
        std::cout << out.dump(2) << '\n';
    } else if (out_file.empty()) {
        std::cout << edges_human(in.graph);
    } else {
        std::cout << "wrote " << in.graph.n << " vertices, " << in.graph.size() << " edges to "
                  << out_file << '\n';
    }
    return kExitOk;
}

int run_realize(int n, int p, const std::string& out_file, bool json_out) {
    auto realized = realize_tree(n, p);
    std::string certification = realized.certification;
    if (n <= 14) {
        auto exact = solve_strdf_exact(realized.tree);
        if (exact.value != realized.certified_value)
            throw DomainError("solver disagrees with the closed form on the realized tree");
        certification = "solver";
    }
    if (!out_file.empty()) write_edge_list_file(out_file, realized.tree);
    if (json_out) {
        json out{{"command", "realize"},
                 {"n", n},
                 {"p", p},
                 {"spec", realized.spec.text},
                 {"certified_value", realized.certified_value},
                 {"certification", certification},
                 {"edges", edges_json(realized.tree)},
                 {"file", out_file.empty() ? json(nullptr) : json(out_file)}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "order " << n << " tree with gamma_StR = " << realized.certified_value
                  << " (" << realized.spec.text << ", certified by " << certification << ")\n";
        if (out_file.empty())
            std::cout << edges_human(realized.tree);
        else
            std::cout << "wrote " << out_file << '\n';
    }
    return kExitOk;
}

int run_reduce(const std::string& cnf_file, const std::string& out_file,
               const std::string& roles_file, bool json_out) {
    CnfFormula f = cnf_file == "-" ? parse_cnf(std::cin) : parse_cnf_file(cnf_file);
    auto validation = validate_1neg3sat(f);
    if (!validation.valid) {
        if (json_out) {
            json out{{"command", "reduce"},
                     {"valid", false},
                     {"violations", validation.violations},
                     {"planarity", validation.planarity}};
            std::cout << out.dump(2) << '\n';
        } else {
            std::cout << "formula rejected:\n";
            for (const auto& v : validation.violations) std::cout << "  " << v << '\n';
        }
        return kExitDomain;
    }
    auto rg = build_reduction_graph(f);
    if (!out_file.empty()) write_edge_list_file(out_file, rg.graph);
    std::string roles = role_map_json(rg);
    if (!roles_file.empty()) {
        std::ofstream rf(roles_file);
        if (!rf) throw ParseError("cannot open roles file: " + roles_file);
        rf << roles << '\n';
    }
    if (json_out) {
        json out{{"command", "reduce"},
                 {"valid", true},
                 {"variables", f.variable_count},
                 {"clauses", f.clause_count()},
                 {"order", rg.graph.n},
                 {"size", rg.graph.size()},
                 {"warnings", f.warnings},
                 {"planarity", validation.planarity},
                 {"roles", json::parse(roles)},
                 {"file", out_file.empty() ? json(nullptr) : json(out_file)},
                 {"roles_file", roles_file.empty() ? json(nullptr) : json(roles_file)}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "gadget graph: order " << rg.graph.n << ", size " << rg.graph.size()
                  << " (" << f.variable_count << " variables, " << f.clause_count()
                  << " clauses)\n";
        for (const auto& w : f.warnings) std::cout << "  warning: " << w << '\n';
        if (out_file.empty()) std::cout << edges_human(rg.graph);
    }
    return kExitOk;
}

int run_check_family(const std::string& input, bool check_t, bool check_fpm, bool json_out,
                     std::uint64_t seed) {
    if (!check_t && !check_fpm) check_t = check_fpm = true;
    auto in = load_graph_arg(input, seed);
    json out{{"command", "check-family"}, {"n", in.graph.n}};
    std::ostringstream human;
    if (check_t) {
        bool member = membership_family_T(in.graph);
        out["family_t"] = json{{"member", member}};
        human << "family T: " << (member ? "member" : "not a member") << '\n';
    }
    if (check_fpm) {
        auto d = membership_F_pm(in.graph);
        json units = json::array();
        for (const auto& u : d.units) units.push_back(std::vector<int>(u.begin(), u.end()));
        out["fpm"] = json{{"member", d.member}, {"units", d.member ? units : json(nullptr)}};
        human << "extremal 6n/7 family: " << (d.member ? "member, " : "not a member");
        if (d.member) human << d.units.size() << " unit(s)";
        human << '\n';
    }
    if (json_out)
        std::cout << out.dump(2) << '\n';
    else
        std::cout << human.str();
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact strong Roman domination toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json_out = false;
    std::uint64_t seed = 1;
    app.add_flag("--json", json_out, "machine-readable JSON output");
    app.add_option("--seed", seed, "seed for randomized generators (rtree:<n>)");

    auto* solve = app.add_subcommand("solve", "compute gamma / gamma_R / gamma_StR exactly");
    std::string solve_input;
    bool do_strdf = false, do_roman = false, do_dom = false, do_all = false;
    bool do_construct = false;
    bool force_witness = false, suppress_witness = false;
    std::uint64_t budget = SolveOptions{}.node_budget;
    double time_limit = 0;
    solve->add_option("input", solve_input, "graph file, family spec, or '-'")->required();
    solve->add_flag("--strdf", do_strdf, "strong Roman domination number (default)");
    solve->add_flag("--roman", do_roman, "Roman domination number");
    solve->add_flag("--domination", do_dom, "domination number");
    solve->add_flag("--all", do_all, "all three");
    solve->add_flag("--construct", do_construct,
                    "on trees: the constructive floor(6n/7) labeling with its case trace");
    solve->add_option("--budget", budget, "search-node budget");
    solve->add_option("--time-limit", time_limit, "wall-clock limit in seconds");
    solve->add_flag("--witness", force_witness, "print witness even for large graphs");
    solve->add_flag("--no-witness", suppress_witness, "never print the witness");

    auto* verify = app.add_subcommand("verify", "check a labeling file against a graph");
    std::string verify_graph, verify_labeling;
    bool verify_roman = false, verify_strdf_flag = false;
    verify->add_option("graph", verify_graph, "graph file, family spec, or '-'")->required();
    verify->add_option("labeling", verify_labeling, "labeling file ('v label' lines or JSON array)")
        ->required();
    verify->add_flag("--strdf", verify_strdf_flag, "strong Roman check (default)");
    verify->add_flag("--roman", verify_roman, "classical Roman check");

    auto* bounds = app.add_subcommand("bounds", "evaluate every applicable bound");
    std::string bounds_input;
    int opt_gamma = -1, opt_gamma_r = -1;
    bounds->add_option("input", bounds_input, "graph file, family spec, or '-'")->required();
    bounds->add_option("--gamma", opt_gamma, "supply gamma instead of solving");
    bounds->add_option("--gamma-r", opt_gamma_r, "supply gamma_R instead of solving");

    auto* gen = app.add_subcommand("gen", "generate a family member as an edge list");
    std::string gen_spec, gen_out;
    gen->add_option("spec", gen_spec, "family spec, e.g. spider:5,2 or rtree:12")->required();
    gen->add_option("-o,--output", gen_out, "write the edge list to a file");

    auto* realize = app.add_subcommand("realize", "build a tree of order n with gamma_StR = p");
    int realize_n = 0, realize_p = 0;
    std::string realize_out;
    realize->add_option("n", realize_n, "tree order")->required();
    realize->add_option("p", realize_p, "target strong Roman domination number")->required();
    realize->add_option("-o,--output", realize_out, "write the edge list to a file");

    auto* reduce = app.add_subcommand("reduce", "build the satisfiability gadget graph");
    std::string reduce_cnf, reduce_out, reduce_roles;
    reduce->add_option("cnf", reduce_cnf, "DIMACS CNF file or '-'")->required();
    reduce->add_option("-o,--output", reduce_out, "write the gadget edge list to a file");
    reduce->add_option("--roles", reduce_roles, "write the vertex role map JSON to a file");

    auto* check = app.add_subcommand("check-family", "extremal family membership tests");
    std::string check_input;
    bool check_t = false, check_fpm = false;
    check->add_option("input", check_input, "tree file, family spec, or '-'")->required();
    check->add_flag("--t", check_t, "test membership in the gamma_StR = n-1 family");
    check->add_flag("--fpm", check_fpm, "test membership in the gamma_StR = 6n/7 family");

    try {
        app.parse(argc, argv);
        if (solve->parsed())
            return run_solve(solve_input, do_strdf, do_roman, do_dom, do_all, do_construct,
                             budget, time_limit, json_out, force_witness, suppress_witness,
                             seed);
        if (verify->parsed())
            return run_verify(verify_graph, verify_labeling, verify_roman, json_out, seed);
        if (bounds->parsed())
            return run_bounds(bounds_input,
                              opt_gamma >= 0 ? std::optional<int>(opt_gamma) : std::nullopt,
                              opt_gamma_r >= 0 ? std::optional<int>(opt_gamma_r) : std::nullopt,
                              json_out, seed);
        if (gen->parsed()) return run_gen(gen_spec, gen_out, json_out, seed);
        if (realize->parsed()) return run_realize(realize_n, realize_p, realize_out, json_out);
        if (reduce->parsed()) return run_reduce(reduce_cnf, reduce_out, reduce_roles, json_out);
        if (check->parsed())
            return run_check_family(check_input, check_t, check_fpm, json_out, seed);
        return kExitParse;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitParse;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const DomainError& e) {
        std::cerr << "rejected: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}
