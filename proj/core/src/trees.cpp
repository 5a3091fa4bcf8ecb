#include "strdom/trees.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "strdom/errors.hpp"
#include "strdom/solver.hpp"

namespace strdom {

namespace {

constexpr int kExactFallbackLimit = 18;

int ceil_div(int a, int b) { return (a + b - 1) / b; }

bool is_unrooted_leaf(const Graph& t, int v) { return t.degree(v) == 1; }

int leaf_neighbor_count(const Graph& t, int v) {
    int c = 0;
    for (int w : t.neighbors(v))
        if (is_unrooted_leaf(t, w)) ++c;
    return c;
}

struct RootedView {
    std::vector<int> parent;
    std::vector<std::vector<int>> children;

    RootedView(const Graph& t, int root) {
        parent.assign(t.n, -1);
        children.assign(t.n, {});
        std::vector<int> stack{root};
        std::vector<char> seen(t.n, 0);
        seen[root] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : t.neighbors(v)) {
                if (seen[w]) continue;
                seen[w] = 1;
                parent[w] = v;
                children[v].push_back(w);
                stack.push_back(w);
            }
        }
        for (auto& c : children) std::sort(c.begin(), c.end());
    }

    bool childless(int v) const { return children[v].empty(); }

    // v's children that are stems with all-leaf children
    std::vector<int> end_stem_children(int v) const {
        std::vector<int> out;
        for (int c : children[v]) {
            if (children[c].empty()) continue;
            bool all_leaves = std::all_of(children[c].begin(), children[c].end(),
                                          [&](int d) { return childless(d); });
            if (all_leaves) out.push_back(c);
        }
        return out;
    }

    void collect_subtree(int v, std::vector<int>& out) const {
        out.push_back(v);
        for (int c : children[v]) collect_subtree(c, out);
    }

    std::vector<int> subtree(int v) const {
        std::vector<int> out;
        collect_subtree(v, out);
        std::sort(out.begin(), out.end());
        return out;
    }
};

struct SubTree {
    Graph g;
    std::vector<int> to_orig; // local -> original id
};

SubTree remove_vertices(const Graph& t, std::vector<int> removed) {
    std::sort(removed.begin(), removed.end());
    std::vector<int> local(t.n, -1);
    SubTree sub;
    for (int v = 0; v < t.n; ++v) {
        if (std::binary_search(removed.begin(), removed.end(), v)) continue;
        local[v] = static_cast<int>(sub.to_orig.size());
        sub.to_orig.push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : t.edges)
        if (local[u] >= 0 && local[v] >= 0) edges.emplace_back(local[u], local[v]);
    sub.g = build_graph(static_cast<int>(sub.to_orig.size()), edges);
    return sub;
}

// Diametral path chosen to maximize deg(v2), then the leaf neighbors of v3,
// then deg(v3); remaining ties break to the lexicographically least path.
std::vector<int> choose_diametral_path(const Graph& t, int diameter) {
    std::vector<int> best_path;
    int best_t2 = -1, best_l3 = -1, best_d3 = -1;
    std::vector<int> parent(t.n);
    for (int a = 0; a < t.n; ++a) {
        auto dist = bfs_distances(t, a);
        std::fill(parent.begin(), parent.end(), -1);
        for (int v = 0; v < t.n; ++v)
            for (int w : t.neighbors(v))
                if (dist[w] == dist[v] + 1) parent[w] = v;
        for (int b = 0; b < t.n; ++b) {
            if (dist[b] != diameter) continue;
            std::vector<int> path;
            for (int v = b; v != -1; v = parent[v]) path.push_back(v);
            std::reverse(path.begin(), path.end()); // now runs a .. b
            int t2 = t.degree(path[1]);
            int l3 = leaf_neighbor_count(t, path[2]);
            int d3 = t.degree(path[2]);
            bool better = std::tie(t2, l3, d3) > std::tie(best_t2, best_l3, best_d3) ||
                          (std::tie(t2, l3, d3) == std::tie(best_t2, best_l3, best_d3) &&
                           (best_path.empty() || path < best_path));
            if (better) {
                best_path = path;
                best_t2 = t2;
                best_l3 = l3;
                best_d3 = d3;
            }
        }
    }
    return best_path;
}

std::vector<int> exact_labels(const Graph& t) {
    return solve_strdf_exact(t).witness.values;
}

std::vector<int> path_pattern_labels(const Graph& t) {
    // walk the path from one endpoint
    int start = 0;
    while (t.degree(start) != 1) ++start;
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < t.n) {
        for (int w : t.neighbors(cur)) {
            if (w != prev) {
                order.push_back(w);
                prev = cur;
                cur = w;
                break;
            }
        }
    }
    std::vector<int> labels(t.n, 0);
    for (int i = 0; i < t.n; ++i)
        if (i % 3 == 1) labels[order[i]] = 2;
    if (t.n % 3 == 1) labels[order[t.n - 1]] = 1;
    if (t.n % 3 == 2) labels[order[t.n - 1]] = 2;
    return labels;
}

std::vector<int> star_labels(const Graph& t) {
    int center = 0;
    for (int v = 1; v < t.n; ++v)
        if (t.degree(v) > t.degree(center)) center = v;
    std::vector<int> labels(t.n, 0);
    labels[center] = 1 + ceil_div(t.n - 1, 2);
    return labels;
}

std::vector<int> double_star_labels(const Graph& t) {
    int u = -1, v = -1;
    for (int w = 0; w < t.n; ++w) {
        if (t.degree(w) < 2) continue;
        if (u < 0)
            u = w;
        else
            v = w;
    }
    int p = leaf_neighbor_count(t, u), q = leaf_neighbor_count(t, v);
    if (p > q) {
        std::swap(u, v);
        std::swap(p, q);
    }
    std::vector<int> labels(t.n, 0);
    if (p == 1) {
        labels[v] = 1 + ceil_div(q + 1, 2);
        for (int w : t.neighbors(u))
            if (is_unrooted_leaf(t, w)) labels[w] = 1; // the far leaf
    } else {
        labels[u] = 1 + ceil_div(p, 2);
        labels[v] = 1 + ceil_div(q, 2);
    }
    return labels;
}

// Lower every positive label to the most its zero neighbors can demand
// (1 + ceil(zero-degree / 2), floor 1). Lowering never invalidates anything
// and keeps all labels under the component cap.
void normalize_labels(const Graph& t, std::vector<int>& labels) {
    for (int v = 0; v < t.n; ++v) {
        if (labels[v] <= 1) continue;
        int zero_neighbors = 0;
        for (int w : t.neighbors(v))
            if (labels[w] == 0) ++zero_neighbors;
        labels[v] = std::min(labels[v], std::max(1, 1 + (zero_neighbors + 1) / 2));
    }
}

struct Builder {
    std::vector<std::string> trace;

    std::vector<int> run(const Graph& t);

    // Verifies a composed labeling. An undefended zero vertex is raised to 1
    // (which only shrinks thresholds); if the result still fails, or busts
    // the weight bound, re-solve exactly (n <= 18).
    std::vector<int> checked(const Graph& t, std::vector<int> labels,
                             const std::string& case_id,
                             std::vector<std::string> child_trace) {
        int bound = 6 * t.n / 7;
        normalize_labels(t, labels);
        auto report = verify_strdf(t, Labeling(labels));
        bool patched = false;
        for (int rounds = 0; !report.valid && rounds < t.n; ++rounds) {
            // cheapest repair first: lift the best defender onto its
            // threshold, else lift the vertex itself out of the zero set
            patched = true;
            const auto& violation = report.violations.front();
            if (violation.best_neighbor >= 0 && violation.best_gap > 0)
                labels[violation.best_neighbor] += violation.best_gap;
            else
                labels[violation.vertex] = 1;
            report = verify_strdf(t, Labeling(labels));
        }
        if (patched && report.valid) {
            normalize_labels(t, labels);
            report = verify_strdf(t, Labeling(labels));
        }
        if (report.valid && report.cap_violations.empty() && report.weight <= bound) {
            for (auto& c : child_trace) trace.push_back(std::move(c));
            trace.push_back(patched ? case_id + ":patched" : case_id);
            return labels;
        }
        if (t.n <= kExactFallbackLimit) {
            trace.push_back(case_id + ":fallback-exact");
            return exact_labels(t);
        }
        trace.push_back(case_id);
        throw ConstructionAuditError(
            "composition for case " + case_id + " failed verification on a tree of order " +
                std::to_string(t.n),
            trace);
    }

    std::vector<int> base(const Graph& t, std::vector<int> labels, const std::string& case_id) {
        return checked(t, std::move(labels), case_id, {});
    }

    // Recurse on t minus `removed`, handing back the subproblem labels mapped
    // to original ids (removed vertices left at 0), plus the child trace.
    struct Recursed {
        std::vector<int> labels;
        std::vector<std::string> child_trace;
    };

    Recursed recurse(const Graph& t, const SubTree& sub) {
        Builder child;
        auto sub_labels = child.run(sub.g);
        Recursed r;
        r.labels.assign(t.n, 0);
        for (int i = 0; i < sub.g.n; ++i) r.labels[sub.to_orig[i]] = sub_labels[i];
        r.child_trace = std::move(child.trace);
        return r;
    }
};

std::vector<int> Builder::run(const Graph& t) {
    int n = t.n;
    auto m = metrics(t);
    if (n <= 5) return base(t, exact_labels(t), "base:exact");
    if (m.max_degree <= 2) return base(t, path_pattern_labels(t), "base:path");
    if (*m.diameter == 2) return base(t, star_labels(t), "base:star");
    if (*m.diameter == 3) return base(t, double_star_labels(t), "base:dstar");

    auto path = choose_diametral_path(t, *m.diameter);
    int v1 = path[0], v2 = path[1], v3 = path[2], v4 = path[3];
    int root = path.back();
    RootedView rv(t, root);
    int t2 = t.degree(v2);
    int diam = *m.diameter;

    auto small_or_throw = [&](const std::string& case_id) -> std::vector<int> {
        if (n <= kExactFallbackLimit) {
            trace.push_back(case_id + ":small");
            return exact_labels(t);
        }
        throw ConstructionAuditError("subtree too small for case " + case_id +
                                         " and the tree too large for exact solving",
                                     trace);
    };

    if (t2 >= 4) {
        // Case 1: prune the deep end-stem, pay 1 + ceil(t/2) on it.
        auto sub = remove_vertices(t, rv.subtree(v2));
        if (sub.g.n < 3) return small_or_throw("1");
        auto r = recurse(t, sub);
        auto labels = r.labels;
        labels[v2] = 1 + ceil_div(t2, 2);
        for (int c : rv.children[v2]) labels[c] = 0;
        return checked(t, labels, "1", r.child_trace);
    }

    if (t2 == 3) {
        if (t.degree(v3) == 2) {
            // Case 2.1
            auto sub = remove_vertices(t, rv.subtree(v3));
            if (sub.g.n < 3) return small_or_throw("2.1");
            auto r = recurse(t, sub);
            auto labels = r.labels;
            labels[v3] = 1;
            labels[v2] = 2;
            for (int c : rv.children[v2]) labels[c] = 0;
            return checked(t, labels, "2.1", r.child_trace);
        }
        // Case 2.2: another degree-3 stem with two pendant leaves next to v3
        // (measured unrooted, so the diameter-4 parent side counts too).
        int w22 = -1;
        for (int nb : t.neighbors(v3))
            if (nb != v2 && t.degree(nb) == 3 && leaf_neighbor_count(t, nb) == 2) {
                w22 = nb;
                break;
            }
        if (w22 >= 0) {
            std::vector<int> removed{v1, v2, w22};
            for (int c : rv.children[v2]) if (c != v1) removed.push_back(c);
            for (int nb : t.neighbors(w22))
                if (is_unrooted_leaf(t, nb)) removed.push_back(nb);
            auto sub = remove_vertices(t, removed);
            if (sub.g.n < 3) return small_or_throw("2.2");
            auto r = recurse(t, sub);
            auto labels = r.labels;
            labels[v3] += 1;
            labels[v2] = labels[w22] = 2;
            for (int c : rv.children[v2]) labels[c] = 0;
            for (int nb : t.neighbors(w22))
                if (is_unrooted_leaf(t, nb)) labels[nb] = 0;
            return checked(t, labels, "2.2", r.child_trace);
        }
        if (diam == 4) {
            // t minus the deep stem is a spider centered at v3
            std::vector<int> labels(n, 0);
            labels[v3] = 1 + ceil_div(t.degree(v3) - 1, 2);
            labels[v2] = 2;
            for (int nb : t.neighbors(v3)) {
                if (nb == v2) continue;
                labels[nb] = 0;
                if (t.degree(nb) == 2)
                    for (int far : t.neighbors(nb))
                        if (far != v3) labels[far] = 1;
            }
            for (int c : rv.children[v2]) labels[c] = 0;
            return base(t, labels, "2.spider4");
        }
        int d3 = t.degree(v3);
        auto stems2 = [&] {
            std::vector<int> out;
            for (int c : rv.children[v3])
                if (!rv.childless(c) && c != v2 && t.degree(c) == 2) out.push_back(c);
            return out;
        }();
        if (d3 >= 4 && d3 % 2 == 0) {
            // Case 2.3: drop the descendants, keep v3 as a leaf of T'.
            std::vector<int> removed;
            for (int c : rv.children[v3]) rv.collect_subtree(c, removed);
            auto sub = remove_vertices(t, removed);
            if (sub.g.n < 3) return small_or_throw("2.3");
            auto r = recurse(t, sub);
            auto labels = r.labels;
            labels[v3] += d3 / 2;
            labels[v2] = 2;
            for (int c : rv.children[v2]) labels[c] = 0;
            for (int s : stems2) {
                labels[s] = 0;
                labels[rv.children[s][0]] = 1;
            }
            for (int c : rv.children[v3])
                if (rv.childless(c)) labels[c] = 0;
            return checked(t, labels, "2.3", r.child_trace);
        }
        if (d3 >= 5 && d3 % 2 == 1) {
            // Case 2.4
            auto sub = remove_vertices(t, rv.subtree(v3));
            if (sub.g.n < 3) return small_or_throw("2.4");
            auto r = recurse(t, sub);
            auto labels = r.labels;
            labels[v3] = ceil_div(d3, 2);
            labels[v2] = 2;
            for (int c : rv.children[v2]) labels[c] = 0;
            for (int s : stems2) {
                labels[s] = 0;
                labels[rv.children[s][0]] = 1;
            }
            for (int c : rv.children[v3])
                if (rv.childless(c)) labels[c] = 0;
            return checked(t, labels, "2.4", r.child_trace);
        }
        // d3 == 3: the other child of v3 is a degree-2 stem (2.5) or leaf (2.6)
        int other = -1;
        for (int c : rv.children[v3])
            if (c != v2) other = c;
        auto sub = remove_vertices(t, rv.subtree(v3));
        if (sub.g.n < 3) return small_or_throw(rv.childless(other) ? "2.6" : "2.5");
        auto r = recurse(t, sub);
        auto labels = r.labels;
        labels[v3] = labels[v2] = 2;
        for (int c : rv.children[v2]) labels[c] = 0;
        if (!rv.childless(other)) {
            labels[other] = 0;
            labels[rv.children[other][0]] = 1;
            return checked(t, labels, "2.5", r.child_trace);
        }
        labels[other] = 0;
        return checked(t, labels, "2.6", r.child_trace);
    }

    // Case 3: t2 == 2
    if (diam == 4) {
        // the whole tree is a spider centered at v3
        std::vector<int> labels(n, 1);
        labels[v3] = 1 + ceil_div(t.degree(v3), 2);
        for (int nb : t.neighbors(v3)) labels[nb] = 0;
        return base(t, labels, "3.spider");
    }

    int d3 = t.degree(v3);
    if (d3 >= 3) {
        // children of v3 are single-leaf stems or leaves here
        std::vector<int> stems, leaves;
        for (int c : rv.children[v3])
            (rv.childless(c) ? leaves : stems).push_back(c);
        int r3 = static_cast<int>(stems.size());

        auto spread = [&](std::vector<int>& labels) {
            // zeros on N(v3) - v4, ones on the stems' leaves
            for (int c : rv.children[v3]) labels[c] = 0;
            for (int s : stems) labels[rv.children[s][0]] = 1;
        };

        if (d3 % 2 == 0 || d3 >= 7) {
            // Cases 3.1(a) even and 3.1(b) odd >= 7
            auto sub = remove_vertices(t, rv.subtree(v3));
            if (sub.g.n < 3) return small_or_throw(d3 % 2 == 0 ? "3.1a" : "3.1b");
            auto r = recurse(t, sub);
            auto labels = r.labels;
            labels[v3] = 1 + ceil_div(d3, 2);
            spread(labels);
            return checked(t, labels, d3 % 2 == 0 ? "3.1a" : "3.1b", r.child_trace);
        }
        if (d3 == 5) {
            // Case 3.1(c), split by the number of stem children
            std::vector<int> removed{v1, v2};
            std::vector<int> absorbed; // the two vertices folded into f(v3)
            std::string case_id = "3.1c.r" + std::to_string(r3);
            if (r3 == 4) {
                removed.push_back(stems[0] == v2 ? stems[1] : stems[0]);
                std::vector<int> others;
                for (int s : stems)
                    if (s != v2 && s != removed.back()) others.push_back(s);
                removed.push_back(rv.children[removed[2]][0]);
                for (int s : others) removed.push_back(rv.children[s][0]);
                absorbed = others;
            } else if (r3 == 3) {
                int s1 = stems[0] == v2 ? stems[1] : stems[0];
                int s2 = -1;
                for (int s : stems)
                    if (s != v2 && s != s1) s2 = s;
                removed.push_back(s1);
                removed.push_back(rv.children[s1][0]);
                removed.push_back(rv.children[s2][0]);
                absorbed = {s2, leaves[0]};
            } else if (r3 == 2) {
                int s1 = stems[0] == v2 ? stems[1] : stems[0];
                removed.push_back(s1);
                removed.push_back(rv.children[s1][0]);
                absorbed = leaves;
            } else { // r3 == 1, v2 the only stem
                removed.push_back(leaves[0]);
                absorbed = {leaves[1], leaves[2]};
            }
            auto sub = remove_vertices(t, removed);
            if (sub.g.n < 3) return small_or_throw(case_id);
            auto r = recurse(t, sub);
            auto labels = r.labels;
            int folded = labels[v3];
            for (int a : absorbed) folded += labels[a];
            labels[v3] = folded + 1;
            for (int nb : t.neighbors(v3))
                if (nb != v4) labels[nb] = 0;
            // ones on the removed fringe away from v3
            for (int x : removed)
                if (!t.has_edge(x, v3)) labels[x] = 1;
            return checked(t, labels, case_id, r.child_trace);
        }
        // d3 == 3: Case 3.1(d)
        auto sub = remove_vertices(t, rv.subtree(v3));
        if (sub.g.n < 3) return small_or_throw("3.1d");
        auto r = recurse(t, sub);
        auto labels = r.labels;
        if (labels[v4] != 0) {
            labels[v3] = 2;
            for (int c : rv.children[v3]) labels[c] = 0;
            for (int s : stems) labels[rv.children[s][0]] = 1;
        } else {
            labels[v3] = 0;
            for (int s : stems) {
                labels[s] = 2;
                labels[rv.children[s][0]] = 0;
            }
            for (int c : leaves) labels[c] = 1;
        }
        return checked(t, labels, "3.1d", r.child_trace);
    }

    // 3.2: deg(v3) == 2; classify v4's children
    int v5 = path[4];
    auto end_stems = rv.end_stem_children(v4);
    int strip = -1, b_stem = -1, c_stem = -1, deep = -1;
    for (int w : end_stems) {
        int dw = t.degree(w);
        if (dw >= 4 && strip < 0) strip = w;
        if (dw == 3 && b_stem < 0) b_stem = w;
        if (dw == 2 && c_stem < 0) c_stem = w;
    }
    for (int c : rv.children[v4])
        if (c != v3 && !rv.childless(c) &&
            std::find(end_stems.begin(), end_stems.end(), c) == end_stems.end())
            deep = c;

    if (strip >= 0) {
        auto sub = remove_vertices(t, rv.subtree(strip));
        if (sub.g.n < 3) return small_or_throw("3.2strip");
        auto r = recurse(t, sub);
        auto labels = r.labels;
        labels[strip] = 1 + ceil_div(t.degree(strip), 2);
        for (int c : rv.children[strip]) labels[c] = 0;
        return checked(t, labels, "3.2strip", r.child_trace);
    }
    if (b_stem >= 0) {
        int w1 = rv.children[b_stem][0], w2 = rv.children[b_stem][1];
        auto sub = remove_vertices(t, {v1, v2, v3, b_stem, w1, w2});
        if (sub.g.n < 3) return small_or_throw("3.2b");
        auto r = recurse(t, sub);
        auto labels = r.labels;
        if (labels[v4] == 0) {
            labels[w2] = 1;
            labels[w1] = labels[v2] = 2;
            labels[b_stem] = labels[v3] = labels[v1] = 0;
        } else {
            labels[v1] = 1;
            labels[v3] = labels[b_stem] = 2;
            labels[w1] = labels[w2] = labels[v2] = 0;
        }
        return checked(t, labels, "3.2b", r.child_trace);
    }
    if (c_stem >= 0) {
        int wp = rv.children[c_stem][0];
        auto sub = remove_vertices(t, {v1, v2, v3, c_stem, wp});
        if (sub.g.n < 3) return small_or_throw("3.2c");
        auto r = recurse(t, sub);
        auto labels = r.labels;
        if (labels[v4] <= 1) {
            labels[wp] = labels[v2] = 2;
            labels[c_stem] = labels[v3] = labels[v1] = 0;
        } else {
            labels[v4] += 1;
            labels[wp] = 1;
            labels[v2] = 2;
            labels[c_stem] = labels[v3] = labels[v1] = 0;
        }
        return checked(t, labels, "3.2c", r.child_trace);
    }
    if (deep >= 0) {
        // a second pendant length-3 path below v4; prune both paths whole
        int w3 = deep;
        if (rv.children[w3].size() != 1) return small_or_throw("3.2d");
        int w2 = rv.children[w3][0];
        if (rv.children[w2].size() != 1) return small_or_throw("3.2d");
        int w1 = rv.children[w2][0];
        auto sub = remove_vertices(t, {v1, v2, v3, w1, w2, w3});
        if (sub.g.n < 3) return small_or_throw("3.2d");
        auto r = recurse(t, sub);
        auto labels = r.labels;
        if (labels[v4] >= 2) labels[v4] += 1;
        labels[w2] = labels[v2] = 2;
        labels[w3] = labels[v3] = labels[v1] = labels[w1] = 0;
        return checked(t, labels, "3.2d", r.child_trace);
    }
    if (t.degree(v4) == 2) {
        // Case 3.2(a)
        auto sub = remove_vertices(t, rv.subtree(v4));
        if (sub.g.n < 3) return small_or_throw("3.2a");
        auto r = recurse(t, sub);
        auto labels = r.labels;
        if (labels[v5] == 0) {
            labels[v4] = labels[v2] = 0;
            labels[v3] = 2;
            labels[v1] = 1;
        } else {
            labels[v3] = labels[v1] = 0;
            labels[v2] = 2;
            labels[v4] = 1;
        }
        return checked(t, labels, "3.2a", r.child_trace);
    }
    // remaining: every child of v4 except v3 is a leaf
    std::vector<int> leaf_children;
    for (int c : rv.children[v4])
        if (c != v3 && rv.childless(c)) leaf_children.push_back(c);
    if (t.degree(v4) == 3 && leaf_children.size() == 1) {
        // Case 3.2(e)
        int w = leaf_children[0];
        auto sub = remove_vertices(t, rv.subtree(v4));
        if (sub.g.n < 3) return small_or_throw("3.2e");
        auto r = recurse(t, sub);
        auto labels = r.labels;
        if (labels[v5] >= 1) {
            labels[v4] = labels[v2] = 2;
            labels[w] = labels[v3] = labels[v1] = 0;
        } else {
            labels[w] = labels[v2] = 2;
            labels[v4] = labels[v3] = labels[v1] = 0;
        }
        return checked(t, labels, "3.2e", r.child_trace);
    }
    if (t.degree(v4) >= 4 && leaf_children.size() + 2 == static_cast<std::size_t>(t.degree(v4))) {
        // Case 3.2(f)
        auto sub = remove_vertices(t, rv.subtree(v4));
        if (sub.g.n < 3) return small_or_throw("3.2f");
        auto r = recurse(t, sub);
        auto labels = r.labels;
        labels[v4] = 1 + ceil_div(t.degree(v4), 2);
        labels[v2] = 2;
        labels[v3] = labels[v1] = 0;
        for (int c : leaf_children) labels[c] = 0;
        return checked(t, labels, "3.2f", r.child_trace);
    }
    return small_or_throw("3.2-unmatched");
}

} // namespace

TreeWitness construct_tree_strdf(const Graph& t) {
    if (!is_tree(t)) throw DomainError("construct_tree_strdf expects a tree");
    if (t.n < 3) throw DomainError("construct_tree_strdf needs n >= 3");
    Builder builder;
    auto labels = builder.run(t);
    TreeWitness w;
    w.labeling = Labeling(std::move(labels));
    w.weight_bound = 6 * t.n / 7;
    w.case_trace = std::move(builder.trace);
    return w;
}

RealizedTree realize_tree(int n, int p) {
    if (n < 3) throw DomainError("realize_tree needs n >= 3");
    int lo = (n + 2) / 2, hi = 6 * n / 7;
    if (p < lo || p > hi)
        throw DomainError("p=" + std::to_string(p) + " is outside the feasible band [" +
                          std::to_string(lo) + ", " + std::to_string(hi) +
                          "] = [ceil((n+1)/2), floor(6n/7)] for n=" + std::to_string(n));
    RealizedTree out;
    out.certification = "closed-form";
    if (n == 3) {
        out.spec = FamilySpec::path(3);
    } else if (n == 4) {
        out.spec = FamilySpec::star(4);
    } else {
        bool found = false;
        for (int offset : {1, 2}) { // even-parity system first, then odd
            int s = 2 * p - n - offset;
            if (s < 0) continue;
            int q = s / 5, j = s % 5;
            int l = n - 7 * q - 2 * j - 1;
            if (l < 0 || j + l < 3) continue;
            if ((j + l) % 2 != offset - 1) continue;
            auto spec = FamilySpec::gnqjl(q, j, l);
            if (closed_form_gamma_str(spec) != p) continue;
            out.spec = spec;
            found = true;
            break;
        }
        if (!found)
            throw DomainError("no spider-chain parameters realize (n=" + std::to_string(n) +
                              ", p=" + std::to_string(p) + ")");
    }
    out.tree = generate(out.spec);
    out.certified_value = closed_form_gamma_str(out.spec);
    return out;
}

} // namespace strdom
