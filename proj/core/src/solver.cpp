#include "strdom/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <climits>
#include <numeric>

#include "strdom/errors.hpp"

namespace strdom {

namespace {

using u64 = std::uint64_t;

constexpr int kMaxArena = 64; // bitmask arena; desk scale is far below this

u64 full_mask(int k) { return k == 64 ? ~u64(0) : (u64(1) << k) - 1; }

struct Budget {
    u64 limit;
    double time_limit = 0;
    std::chrono::steady_clock::time_point start;
    u64 used = 0;
    bool exhausted = false;

    bool tick() {
        if (exhausted) return false;
        if (++used > limit) {
            exhausted = true;
            return false;
        }
        if (time_limit > 0 && (used & 0xfff) == 0) {
            std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
            if (dt.count() >= time_limit) exhausted = true;
        }
        return !exhausted;
    }
};

// Keeps the minimum (weight, label vector) pair; equal weights break to the
// lexicographically smaller vector, which makes witnesses deterministic.
struct Incumbent {
    int weight = INT_MAX;
    std::vector<int> labels;

    void offer(int w, std::vector<int> l) {
        if (w < weight || (w == weight && std::lexicographical_compare(
                                              l.begin(), l.end(), labels.begin(), labels.end())))
        {
            weight = w;
            labels = std::move(l);
        }
    }
};

// A vertex subset (normally one connected component) remapped to local ids in
// ascending global order, with bitmask adjacency.
struct Arena {
    std::vector<int> verts; // local -> global
    int k = 0;
    std::vector<u64> adj;
    int max_degree = 0;

    Arena(const Graph& g, const std::vector<int>& subset) {
        verts = subset;
        k = static_cast<int>(subset.size());
        if (k > kMaxArena)
            throw DomainError("exact solver supports components of at most " +
                              std::to_string(kMaxArena) + " vertices (got " +
                              std::to_string(k) + ")");
        std::vector<int> local(g.n, -1);
        for (int i = 0; i < k; ++i) local[verts[i]] = i;
        adj.assign(k, 0);
        for (int i = 0; i < k; ++i)
            for (int w : g.neighbors(verts[i]))
                if (local[w] >= 0) adj[i] |= u64(1) << local[w];
        for (int i = 0; i < k; ++i)
            max_degree = std::max(max_degree, std::popcount(adj[i]));
    }
};

enum class Variant { strong_roman, roman };

int defender_cost(Variant v, int zero_deg) {
    return v == Variant::strong_roman ? (zero_deg + 1) / 2 : 1;
}
int defender_label(Variant v, int zero_deg) {
    return v == Variant::strong_roman ? 1 + (zero_deg + 1) / 2 : 2;
}

// Zero-set branch-and-bound with an exact weighted-cover oracle at the leaves.
// An optimal labeling always has the normal form (zeros, defenders at their
// thresholds, ones elsewhere), so searching (zero set, cover) pairs is exact.
struct ZeroSetSolver {
    const Arena& a;
    Variant variant;
    Budget& budget;
    Incumbent best;

    std::vector<int> order;  // branching order: degree descending, id ascending
    std::vector<int> alive;  // per vertex: neighbors not decided zero
    std::vector<int> zcost;  // cover scratch: defender cost for current zero set
    u64 zeros = 0;
    int zero_count = 0;

    explicit ZeroSetSolver(const Arena& arena, Variant v, Budget& b)
        : a(arena), variant(v), budget(b) {
        order.resize(a.k);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            int dx = std::popcount(a.adj[x]), dy = std::popcount(a.adj[y]);
            return dx != dy ? dx > dy : x < y;
        });
        alive.resize(a.k);
        for (int v2 = 0; v2 < a.k; ++v2) alive[v2] = std::popcount(a.adj[v2]);
        zcost.assign(a.k, 0);
    }

    int prefix_lb(int zmax) const {
        if (variant == Variant::strong_roman) return a.k - zmax / 2;
        int d = std::max(1, a.max_degree);
        return a.k - zmax + (zmax + d - 1) / d;
    }

    void seed_incumbents() {
        if (variant == Variant::strong_roman) {
            // Max-degree center, zeros on its neighborhood, ones elsewhere.
            int c = 0;
            for (int v = 1; v < a.k; ++v)
                if (std::popcount(a.adj[v]) > std::popcount(a.adj[c])) c = v;
            int d = std::popcount(a.adj[c]);
            std::vector<int> l(a.k, 1);
            l[c] = 1 + (d + 1) / 2;
            for (u64 m = a.adj[c]; m;) {
                int w = std::countr_zero(m);
                m &= m - 1;
                l[w] = 0;
            }
            best.offer(a.k - d / 2, std::move(l));
        } else {
            best.offer(a.k, std::vector<int>(a.k, 1));
            // Greedy dominating set, twos on it, zeros elsewhere.
            u64 uncovered = full_mask(a.k);
            std::vector<int> l(a.k, 0);
            int w = 0;
            while (uncovered) {
                int pick = -1, gain = -1;
                for (int v = 0; v < a.k; ++v) {
                    int g2 = std::popcount((a.adj[v] | (u64(1) << v)) & uncovered);
                    if (g2 > gain) {
                        gain = g2;
                        pick = v;
                    }
                }
                l[pick] = 2;
                w += 2;
                uncovered &= ~(a.adj[pick] | (u64(1) << pick));
            }
            best.offer(w, std::move(l));
        }
    }

    void run() {
        seed_incumbents();
        branch(0);
    }

    void branch(int idx) {
        if (!budget.tick()) return;
        int zmax = zero_count + (a.k - idx);
        if (prefix_lb(zmax) > best.weight) return;
        if (idx == a.k) {
            solve_cover();
            return;
        }
        int v = order[idx];
        // zero branch first: large zero sets carry the low-weight labelings
        if (alive[v] > 0) {
            zeros |= u64(1) << v;
            ++zero_count;
            bool feasible = true;
            for (u64 m = a.adj[v]; m;) {
                int w = std::countr_zero(m);
                m &= m - 1;
                if (--alive[w] == 0 && (zeros >> w & 1)) feasible = false;
            }
            if (feasible) branch(idx + 1);
            for (u64 m = a.adj[v]; m;) {
                int w = std::countr_zero(m);
                m &= m - 1;
                ++alive[w];
            }
            zeros &= ~(u64(1) << v);
            --zero_count;
        }
        branch(idx + 1);
    }

    int cover_lb(u64 uncovered) const {
        int u = std::popcount(uncovered);
        if (variant == Variant::strong_roman) return (u + 1) / 2;
        int d = std::max(1, a.max_degree);
        return (u + d - 1) / d;
    }

    std::vector<int> build_labels(u64 chosen) const {
        std::vector<int> l(a.k, 1);
        for (u64 m = zeros; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            l[v] = 0;
        }
        for (u64 m = chosen; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            l[v] = defender_label(variant, std::popcount(a.adj[v] & zeros));
        }
        return l;
    }

    void solve_cover() {
        u64 candidates = full_mask(a.k) & ~zeros;
        for (u64 m = candidates; m;) {
            int d = std::countr_zero(m);
            m &= m - 1;
            u64 cov = a.adj[d] & zeros;
            zcost[d] = cov ? defender_cost(variant, std::popcount(cov)) : 0;
        }
        cover_dfs(zeros, 0, 0);
    }

    void cover_dfs(u64 uncovered, u64 chosen, int extra) {
        if (!budget.tick()) return;
        int base = a.k - zero_count;
        if (base + extra + (uncovered ? cover_lb(uncovered) : 0) > best.weight) return;
        if (!uncovered) {
            best.offer(base + extra, build_labels(chosen));
            return;
        }
        // fail-first element selection
        int elem = -1, fewest = INT_MAX;
        for (u64 m = uncovered; m;) {
            int e = std::countr_zero(m);
            m &= m - 1;
            int c = std::popcount(a.adj[e] & ~zeros);
            if (c == 0) return; // this zero vertex cannot be defended
            if (c < fewest) {
                fewest = c;
                elem = e;
            }
        }
        for (u64 m = a.adj[elem] & ~zeros; m;) {
            int d = std::countr_zero(m);
            m &= m - 1;
            cover_dfs(uncovered & ~a.adj[d], chosen | (u64(1) << d), extra + zcost[d]);
        }
    }
};

// Minimum dominating set via closed-neighborhood cover.
struct DominationSolver {
    const Arena& a;
    Budget& budget;
    Incumbent best;
    std::vector<u64> closed;

    DominationSolver(const Arena& arena, Budget& b) : a(arena), budget(b) {
        closed.resize(a.k);
        for (int v = 0; v < a.k; ++v) closed[v] = a.adj[v] | (u64(1) << v);
    }

    void run() {
        // greedy incumbent
        u64 uncovered = full_mask(a.k), chosen = 0;
        while (uncovered) {
            int pick = -1, gain = -1;
            for (int v = 0; v < a.k; ++v) {
                int g2 = std::popcount(closed[v] & uncovered);
                if (g2 > gain) {
                    gain = g2;
                    pick = v;
                }
            }
            chosen |= u64(1) << pick;
            uncovered &= ~closed[pick];
        }
        best.offer(std::popcount(chosen), indicator(chosen));
        dfs(full_mask(a.k), 0, 0);
    }

    std::vector<int> indicator(u64 chosen) const {
        std::vector<int> l(a.k, 0);
        for (u64 m = chosen; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            l[v] = 1;
        }
        return l;
    }

    void dfs(u64 uncovered, u64 chosen, int size) {
        if (!budget.tick()) return;
        int lb = size + (std::popcount(uncovered) + a.max_degree) / (a.max_degree + 1);
        if (lb > best.weight) return;
        if (!uncovered) {
            best.offer(size, indicator(chosen));
            return;
        }
        int elem = -1, fewest = INT_MAX;
        for (u64 m = uncovered; m;) {
            int e = std::countr_zero(m);
            m &= m - 1;
            int c = std::popcount(closed[e]);
            if (c < fewest) {
                fewest = c;
                elem = e;
            }
        }
        for (u64 m = closed[elem]; m;) {
            int d = std::countr_zero(m);
            m &= m - 1;
            dfs(uncovered & ~closed[d], chosen | (u64(1) << d), size + 1);
        }
    }
};

enum class Problem { strong_roman, roman, domination };

int trivial_lower(Problem p, const Arena& a) {
    switch (p) {
    case Problem::strong_roman: return (a.k + 2) / 2; // ceil((k+1)/2)
    case Problem::roman:
    case Problem::domination: return (a.k + a.max_degree) / (a.max_degree + 1);
    }
    return 1;
}

SolveResult solve_dispatch(const Graph& g, Problem problem, const SolveOptions& options) {
    if (g.n == 0) throw DomainError("solver requires a nonempty graph");
    auto t0 = std::chrono::steady_clock::now();
    Budget budget{options.node_budget, options.time_limit_seconds, t0};

    SolveResult result;
    result.witness = Labeling(g.n, 0);
    bool complete = true;
    for (const auto& comp : connected_components(g)) {
        Arena arena(g, comp);
        Incumbent comp_best;
        if (arena.k == 1) {
            comp_best.offer(1, {1});
        } else if (problem == Problem::domination) {
            DominationSolver solver(arena, budget);
            solver.run();
            comp_best = std::move(solver.best);
        } else {
            Variant v = problem == Problem::strong_roman ? Variant::strong_roman
                                                         : Variant::roman;
            ZeroSetSolver solver(arena, v, budget);
            solver.run();
            comp_best = std::move(solver.best);
        }
        result.value += comp_best.weight;
        if (budget.exhausted) {
            complete = false;
            result.lower_bound += std::min(comp_best.weight, trivial_lower(problem, arena));
        } else {
            result.lower_bound += comp_best.weight;
        }
        for (int i = 0; i < arena.k; ++i)
            result.witness.values[arena.verts[i]] = comp_best.labels[i];
    }
    result.status = complete ? SolveStatus::optimal : SolveStatus::budget_exhausted;
    result.nodes_explored = budget.used;
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    result.elapsed_seconds = dt.count();
    return result;
}

} // namespace

SolveResult solve_strdf_exact(const Graph& g, const SolveOptions& options) {
    return solve_dispatch(g, Problem::strong_roman, options);
}

SolveResult solve_roman_exact(const Graph& g, const SolveOptions& options) {
    return solve_dispatch(g, Problem::roman, options);
}

SolveResult solve_domination_exact(const Graph& g, const SolveOptions& options) {
    return solve_dispatch(g, Problem::domination, options);
}

std::optional<ZeroSetCost> minimal_cost_for_zero_set(const Graph& g,
                                                     const std::vector<int>& zero_set) {
    if (g.n > kMaxArena)
        throw DomainError("minimal_cost_for_zero_set supports graphs of at most " +
                          std::to_string(kMaxArena) + " vertices");
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    Arena arena(g, all);

    Budget budget{~u64(0) >> 1, 0, std::chrono::steady_clock::now()};
    ZeroSetSolver solver(arena, Variant::strong_roman, budget);
    for (int v : zero_set) {
        if (v < 0 || v >= g.n)
            throw DomainError("zero set vertex " + std::to_string(v) + " out of range");
        if (!(solver.zeros >> v & 1)) {
            solver.zeros |= u64(1) << v;
            ++solver.zero_count;
        }
    }
    solver.solve_cover();
    if (solver.best.weight == INT_MAX) return std::nullopt;
    return ZeroSetCost{solver.best.weight, Labeling(std::move(solver.best.labels))};
}

} // namespace strdom
