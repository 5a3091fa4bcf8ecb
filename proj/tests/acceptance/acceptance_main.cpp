// Acceptance suite: runs every criterion end to end and prints one PASS/FAIL
// line each. Exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "strdom/bounds.hpp"
#include "strdom/families.hpp"
#include "strdom/graph.hpp"
#include "strdom/labeling.hpp"
#include "strdom/reduction.hpp"
#include "strdom/solver.hpp"
#include "strdom/trees.hpp"
#include "support/oracles.hpp"

using namespace strdom;

namespace {

int failures_total = 0;

struct Criterion {
    int number;
    std::string title;
    std::function<bool(std::string&)> run;
};

int strdf(const Graph& g) { return solve_strdf_exact(g).value; }

bool expect(bool ok, std::string& detail, const std::string& what) {
    if (!ok && detail.empty()) detail = what;
    return ok;
}

// 1. spiders: solver equals 1 + q + ceil(t/2) for t in [2,6], q in [0,t]
bool criterion_spiders(std::string& detail) {
    bool ok = true;
    for (int t = 2; t <= 6; ++t)
        for (int q = 0; q <= t; ++q) {
            auto spec = FamilySpec::spider(t, q);
            int expected = 1 + q + (t + 1) / 2;
            int got = strdf(generate(spec));
            ok &= expect(got == expected, detail,
                         spec.text + ": solver " + std::to_string(got) + " vs closed form " +
                             std::to_string(expected));
        }
    return ok;
}

// 2. double stars: solver equals the closed form, strictly below 6n/7
bool criterion_double_stars(std::string& detail) {
    bool ok = true;
    for (int p = 1; p <= 5; ++p)
        for (int q = p; q <= 5; ++q) {
            auto spec = FamilySpec::double_star(p, q);
            int n = p + q + 2;
            int got = strdf(generate(spec));
            int expected = closed_form_gamma_str(spec);
            ok &= expect(got == expected, detail, spec.text + ": solver vs closed form");
            ok &= expect(7 * got < 6 * n, detail, spec.text + ": not strictly below 6n/7");
        }
    return ok;
}

// 3. paths and cycles: gamma_StR = gamma_R = ceil(2n/3) for n in [3,12]
bool criterion_paths_cycles(std::string& detail) {
    bool ok = true;
    for (int n = 3; n <= 12; ++n) {
        int expected = (2 * n + 2) / 3;
        for (auto spec : {FamilySpec::path(n), FamilySpec::cycle(n)}) {
            Graph g = generate(spec);
            int s = strdf(g), r = solve_roman_exact(g).value;
            ok &= expect(s == expected && r == expected, detail,
                         spec.text + ": got strdf " + std::to_string(s) + ", roman " +
                             std::to_string(r) + ", want " + std::to_string(expected));
        }
    }
    return ok;
}

// 4. exhaustively over labeled trees 3 <= n <= 8:
//    gamma_StR = n-1  <=>  membership in the stored extremal family
bool criterion_family_T(std::string& detail) {
    bool ok = true;
    for (int n = 3; n <= 8 && ok; ++n) {
        enumerate_labeled_trees(n, [&](const Graph& t) {
            if (!ok) return;
            bool extremal = strdf(t) == n - 1;
            bool member = membership_family_T(t);
            ok &= expect(extremal == member, detail,
                         "order-" + std::to_string(n) + " tree: extremal=" +
                             std::to_string(extremal) + " member=" + std::to_string(member));
        });
    }
    return ok;
}

// 5. tree bound: gamma_StR <= floor(6n/7) with equality (7v == 6n) iff the
//    unit decomposition exists; the constructive labeling is valid and within
//    the bound on every instance
bool criterion_tree_bound(std::string& detail) {
    bool ok = true;
    auto check_tree = [&](const Graph& t) {
        if (!ok) return;
        int n = t.n;
        int value = strdf(t);
        ok &= expect(value <= 6 * n / 7, detail, "tree exceeds floor(6n/7)");
        bool tight = 7 * value == 6 * n;
        bool member = membership_F_pm(t).member;
        ok &= expect(tight == member, detail,
                     "order-" + std::to_string(n) + ": tight=" + std::to_string(tight) +
                         " member=" + std::to_string(member));
        auto witness = construct_tree_strdf(t);
        auto rep = verify_strdf(t, witness.labeling);
        ok &= expect(rep.valid && rep.cap_violations.empty(), detail,
                     "constructed labeling invalid");
        ok &= expect(rep.weight <= witness.weight_bound, detail,
                     "constructed labeling above the bound");
    };
    for (int n = 3; n <= 8 && ok; ++n) enumerate_labeled_trees(n, check_tree);
    for (int n = 9; n <= 14 && ok; ++n)
        for (const auto& t : sample_random_trees(n, 500, 4200 + n)) check_tree(t);
    return ok;
}

// 6. bound sandwich on 300 random connected graphs with n <= 12, plus the
//    odd-order equality condition checked exhaustively for n = 5 and 7;
//    also probes the general-graph 6n/7 conjecture, logging only
bool criterion_bound_sandwich(std::string& detail) {
    bool ok = true;
    SplitMix64 rng(20260808);
    for (int round = 0; round < 300 && ok; ++round) {
        Graph g = testsupport::random_connected_graph(rng, 3, 12);
        auto r = bounds_report(g);
        int value = strdf(g);
        ok &= expect(r.lower_order <= value, detail, "lower_order fails");
        ok &= expect(r.lower_roman && *r.lower_roman <= value, detail, "lower_roman fails");
        ok &= expect(value <= r.upper_max_degree, detail, "upper_max_degree fails");
        ok &= expect(r.upper_domination && value <= *r.upper_domination, detail,
                     "upper_domination fails");
        ok &= expect(r.upper_diameter && value <= *r.upper_diameter, detail,
                     "upper_diameter fails");
        if (r.upper_girth) ok &= expect(value <= *r.upper_girth, detail, "upper_girth fails");
        if (r.upper_probabilistic_floor)
            ok &= expect(value <= *r.upper_probabilistic_floor, detail,
                         "probabilistic floor fails");
        if (r.upper_n_minus_2)
            ok &= expect(value <= *r.upper_n_minus_2, detail, "n-2 bound fails");
        if (g.n >= 3 && 7 * value > 6 * g.n)
            std::printf("    note: conjecture probe found gamma_StR > 6n/7 on a connected "
                        "graph of order %d (value %d)\n",
                        g.n, value);
    }
    for (int n : {5, 7}) {
        if (!ok) break;
        int target = (n + 1) / 2;
        testsupport::for_each_connected_labeled_graph(n, [&](const Graph& g) {
            if (!ok) return;
            bool equality = strdf(g) == target;
            bool universal = metrics(g).max_degree == n - 1;
            ok &= expect(equality == universal, detail,
                         "odd-n equality mismatch at n=" + std::to_string(n));
        });
    }
    return ok;
}

// 7. rooted-product sharpness of the diameter and girth bounds
bool criterion_rooted_products(std::string& detail) {
    auto p2 = generate(FamilySpec::path(2));
    auto mk = [&](const Graph& base) {
        std::vector<std::pair<Graph, int>> att(base.n, {p2, 0});
        return rooted_product(base, att);
    };
    Graph pd = mk(generate(FamilySpec::path(3)));
    Graph cg = mk(generate(FamilySpec::cycle(3)));
    auto bd = bounds_report(pd);
    auto bg = bounds_report(cg);
    bool ok = true;
    ok &= expect(bd.upper_diameter && strdf(pd) == *bd.upper_diameter, detail,
                 "P_3 o P_2 does not attain the diameter bound");
    ok &= expect(bg.upper_girth && strdf(cg) == *bg.upper_girth, detail,
                 "C_3 o P_2 does not attain the girth bound");
    return ok;
}

// 8. reduction equivalence on the corpus: value >= 4n always, = 4n iff
//    satisfiable, the assignment labeling is valid of weight 4n, and every
//    optimal witness puts weight >= 4 on each S_i
bool criterion_reduction(std::string& detail) {
    bool ok = true;
    int instance = 0;
    for (const auto& f : testsupport::reduction_corpus()) {
        ++instance;
        int n = f.variable_count;
        ok &= expect(validate_1neg3sat(f).valid, detail, "corpus formula failed validation");
        auto rg = build_reduction_graph(f);
        ok &= expect(rg.graph.n == f.clause_count() + 5 * n, detail, "gadget order wrong");
        ok &= expect(rg.graph.size() <= 3 * f.clause_count() + 7 * n, detail,
                     "gadget size above 3m+7n");
        auto sat = satisfiable_bruteforce(f);
        auto solved = solve_strdf_exact(rg.graph);
        if (!solved.complete()) {
            // certificate fallback: a valid weight-4n labeling plus the 4n
            // lower bound carried by the search
            ok &= expect(sat.satisfiable, detail, "incomplete solve on unsat instance");
            auto cert = assignment_labeling(rg, sat.assignment);
            auto rep = verify_strdf(rg.graph, cert);
            ok &= expect(rep.valid && rep.weight == 4 * n, detail, "certificate invalid");
            ok &= expect(solved.lower_bound >= 4 * n, detail,
                         "search lower bound below 4n in fallback");
            continue;
        }
        ok &= expect(solved.value >= 4 * n, detail,
                     "instance " + std::to_string(instance) + ": value below 4n");
        ok &= expect((solved.value == 4 * n) == sat.satisfiable, detail,
                     "instance " + std::to_string(instance) +
                         ": equivalence with satisfiability fails");
        if (sat.satisfiable) {
            auto labeling = assignment_labeling(rg, sat.assignment);
            auto rep = verify_strdf(rg.graph, labeling);
            ok &= expect(rep.valid && rep.weight == 4 * n, detail,
                         "instance " + std::to_string(instance) +
                             ": assignment labeling not a valid weight-4n function");
        }
        for (int i = 0; i < n; ++i) {
            int s_weight = 0;
            for (int v : rg.s_set(i)) s_weight += solved.witness[v];
            if (s_weight < 4) {
                std::printf("    note: instance %d, optimal witness of weight %d carries only "
                            "%d on S_%d; witness:",
                            instance, solved.value, s_weight, i + 1);
                for (int v = 0; v < rg.graph.n; ++v)
                    std::printf(" %d", solved.witness[v]);
                std::printf("\n");
            }
            ok &= expect(s_weight >= 4, detail,
                         "instance " + std::to_string(instance) +
                             ": optimal witness puts weight " + std::to_string(s_weight) +
                             " < 4 on S_" + std::to_string(i + 1) +
                             " (the per-set claim fails although the 4n total and the "
                             "satisfiability equivalence hold)");
        }
    }
    return ok;
}

// 9. realizability: every feasible (n, p) with n <= 14 solver-certified, and
//    with 15 <= n <= 30 closed-form-certified
bool criterion_realizability(std::string& detail) {
    bool ok = true;
    for (int n = 3; n <= 30 && ok; ++n) {
        for (int p = (n + 2) / 2; p <= 6 * n / 7 && ok; ++p) {
            RealizedTree r;
            try {
                r = realize_tree(n, p);
            } catch (const std::exception& e) {
                return expect(false, detail,
                              "realize(" + std::to_string(n) + "," + std::to_string(p) +
                                  ") threw: " + e.what());
            }
            ok &= expect(r.tree.n == n && is_tree(r.tree), detail, "order or acyclicity wrong");
            ok &= expect(r.certified_value == p, detail, "closed-form certificate mismatch");
            if (n <= 14)
                ok &= expect(strdf(r.tree) == p, detail,
                             "solver disagrees at (" + std::to_string(n) + "," +
                                 std::to_string(p) + ")");
        }
    }
    return ok;
}

// 10. the solver agrees with naive full-labeling enumeration on every
//     connected graph with n <= 6 (catalog up to isomorphism)
bool criterion_oracle(std::string& detail) {
    auto catalog = testsupport::connected_graph_catalog(6);
    bool ok = expect(catalog.size() == 143, detail,
                     "catalog size " + std::to_string(catalog.size()) + ", want 143");
    for (const auto& g : catalog) {
        if (!ok) break;
        int naive = testsupport::oracle_strdf(g);
        int solved = strdf(g);
        ok &= expect(naive == solved, detail,
                     "order-" + std::to_string(g.n) + " graph: oracle " + std::to_string(naive) +
                         " vs solver " + std::to_string(solved));
    }
    return ok;
}

void run(const Criterion& c) {
    std::string detail;
    bool ok = false;
    try {
        ok = c.run(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    if (ok) {
        std::printf("[PASS] criterion %2d: %s\n", c.number, c.title.c_str());
    } else {
        ++failures_total;
        std::printf("[FAIL] criterion %2d: %s — %s\n", c.number, c.title.c_str(),
                    detail.c_str());
    }
    std::fflush(stdout);
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "spider closed form equals the exact solver (t in [2,6], q in [0,t])",
         criterion_spiders},
        {2, "double star closed forms, strictly below 6n/7 (1 <= p <= q <= 5)",
         criterion_double_stars},
        {3, "paths and cycles: gamma_StR = gamma_R = ceil(2n/3) for n in [3,12]",
         criterion_paths_cycles},
        {4, "gamma_StR = n-1 exactly on the stored family (all labeled trees, n <= 8)",
         criterion_family_T},
        {5, "tree bound floor(6n/7), tight exactly on unit-decomposable trees; "
            "constructive labeling valid and within the bound",
         criterion_tree_bound},
        {6, "every applicable bound brackets the value (300 random graphs); odd-n "
            "equality condition exhaustive for n in {5,7}",
         criterion_bound_sandwich},
        {7, "rooted products attain the diameter and girth bounds", criterion_rooted_products},
        {8, "reduction gadgets: value >= 4n, = 4n iff satisfiable, S-set weights >= 4",
         criterion_reduction},
        {9, "realizability over the whole feasible band (n <= 30)", criterion_realizability},
        {10, "solver agrees with naive enumeration on all 143 connected graphs, n <= 6",
         criterion_oracle},
    };
    for (const auto& c : criteria) run(c);
    if (failures_total == 0) {
        std::printf("all %zu criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("%d criteria FAILED\n", failures_total);
    return 1;
}
