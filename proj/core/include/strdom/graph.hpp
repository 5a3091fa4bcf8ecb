#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace strdom {

/// Simple undirected graph on dense 0-based vertex ids. Immutable once built;
/// safe for unrestricted concurrent reads.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // u < v, sorted, deduplicated
    std::vector<std::vector<int>> adj;      // sorted neighbor lists

    int order() const { return n; }
    int size() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj[v]; }
    bool has_edge(int u, int v) const;
};

/// Exact degree extremes, BFS diameter, shortest-cycle girth and component
/// count. `diameter`/`girth` empty means infinite (disconnected / acyclic).
struct GraphMetrics {
    int max_degree = 0;
    int min_degree = 0;
    std::optional<int> diameter;
    std::optional<int> girth;
    int component_count = 0;
};

/// Builds a graph from an edge list. Duplicate edges are merged; self-loops
/// and out-of-range endpoints are rejected naming the offending pair.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

GraphMetrics metrics(const Graph& g);

/// BFS distances from `src`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int src);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Rooted product: one rooted graph per base vertex, the i-th root identified
/// with base vertex i. Order is the sum of attachment orders; base edges
/// survive as edges between the roots.
///
/// Vertex layout of the result: attachment i occupies a contiguous id block,
/// in input order, keeping its internal ids as offsets.
Graph rooted_product(const Graph& base,
                     const std::vector<std::pair<Graph, int>>& attachments);

/// Disjoint union (used by solvers' additivity tests and component plumbing).
Graph disjoint_union(const Graph& a, const Graph& b);

// --- edge-list text format ---------------------------------------------
//
//   # comment
//   p <n> <m>          (optional header)
//   <u> <v>            (one edge per line, whitespace separated)
//
// If every vertex token is a nonnegative integer the ids are taken
// literally (header required for isolated vertices); otherwise tokens are
// treated as names and mapped to dense ids in first-seen order.

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

// --- labeled tree generation --------------------------------------------

/// Decodes a length n-2 sequence over {0..n-1} into its labeled tree.
Graph tree_from_sequence(int n, const std::vector<int>& seq);

/// Calls `fn` on every labeled tree of order n (n^(n-2) trees, n <= 8).
void enumerate_labeled_trees(int n, const std::function<void(const Graph&)>& fn);

/// Deterministic splittable RNG for reproducible sampling.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    /// Uniform value in [0, bound).
    std::uint64_t below(std::uint64_t bound);
};

/// Uniformly random labeled tree of order n >= 2 (n == 1 gives K_1).
Graph random_labeled_tree(int n, SplitMix64& rng);

/// `count` independent random labeled trees, reproducible by seed.
std::vector<Graph> sample_random_trees(int n, int count, std::uint64_t seed);

} // namespace strdom
