#include "strdom/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "strdom/errors.hpp"

namespace strdom {

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    if (n < 0) throw DomainError("vertex count must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has an endpoint outside 0.." + std::to_string(n - 1));
        if (u == v)
            throw DomainError("self-loop (" + std::to_string(u) + "," + std::to_string(v) +
                              ") is not allowed");
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.n, -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.adj[v]) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (int w : g.adj[comp[i]]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_tree(const Graph& g) {
    return g.n >= 1 && g.size() == g.n - 1 && is_connected(g);
}

namespace {

// Shortest cycle through edges seen from one BFS; the minimum over all start
// vertices is the exact girth.
std::optional<int> girth_of(const Graph& g) {
    int best = -1;
    std::vector<int> dist(g.n), parent(g.n);
    std::deque<int> queue;
    for (int s = 0; s < g.n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        queue.assign(1, s);
        dist[s] = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (w != parent[v] && v != parent[w]) {
                    int len = dist[v] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

} // namespace

GraphMetrics metrics(const Graph& g) {
    GraphMetrics m;
    if (g.n == 0) return m;
    m.max_degree = 0;
    m.min_degree = g.n;
    for (int v = 0; v < g.n; ++v) {
        m.max_degree = std::max(m.max_degree, g.degree(v));
        m.min_degree = std::min(m.min_degree, g.degree(v));
    }
    auto comps = connected_components(g);
    m.component_count = static_cast<int>(comps.size());
    if (m.component_count == 1) {
        int diameter = 0;
        for (int v = 0; v < g.n; ++v) {
            auto dist = bfs_distances(g, v);
            diameter = std::max(diameter, *std::max_element(dist.begin(), dist.end()));
        }
        m.diameter = diameter;
    }
    m.girth = girth_of(g);
    return m;
}

Graph rooted_product(const Graph& base,
                     const std::vector<std::pair<Graph, int>>& attachments) {
    if (static_cast<int>(attachments.size()) != base.n)
        throw DomainError("rooted product needs exactly one attachment per base vertex (got " +
                          std::to_string(attachments.size()) + " for base order " +
                          std::to_string(base.n) + ")");
    std::vector<int> offset(base.n + 1, 0);
    for (int i = 0; i < base.n; ++i) {
        const auto& [h, root] = attachments[i];
        if (h.n == 0) throw DomainError("attachment " + std::to_string(i) + " is empty");
        if (root < 0 || root >= h.n)
            throw DomainError("attachment " + std::to_string(i) + " has invalid root " +
                              std::to_string(root));
        offset[i + 1] = offset[i] + h.n;
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < base.n; ++i)
        for (auto [u, v] : attachments[i].first.edges)
            edges.emplace_back(offset[i] + u, offset[i] + v);
    for (auto [u, v] : base.edges)
        edges.emplace_back(offset[u] + attachments[u].second,
                           offset[v] + attachments[v].second);
    return build_graph(offset[base.n], edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges = a.edges;
    for (auto [u, v] : b.edges) edges.emplace_back(a.n + u, a.n + v);
    return build_graph(a.n + b.n, edges);
}

namespace {

bool parse_int_token(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size() && out >= 0;
}

} // namespace

Graph read_edge_list(std::istream& in) {
    std::optional<long long> header_n, header_m;
    std::vector<std::pair<std::string, std::string>> raw_edges;
    std::string line;
    int lineno = 0;
    bool saw_edge = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue; // blank
        if (a == "p") {
            if (saw_edge || header_n)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": header must come first and appear once");
            long long n, m;
            std::string ns, ms;
            if (!(ls >> ns >> ms) || !parse_int_token(ns, n) || !parse_int_token(ms, m) ||
                (ls >> extra))
                throw ParseError("line " + std::to_string(lineno) + ": malformed header, want 'p <n> <m>'");
            header_n = n;
            header_m = m;
            continue;
        }
        if (!(ls >> b) || (ls >> extra))
            throw ParseError("line " + std::to_string(lineno) + ": want one 'u v' pair per line");
        raw_edges.emplace_back(a, b);
        saw_edge = true;
    }

    bool all_int = true;
    for (const auto& [a, b] : raw_edges) {
        long long x;
        if (!parse_int_token(a, x) || !parse_int_token(b, x)) {
            all_int = false;
            break;
        }
    }

    std::vector<std::pair<int, int>> edges;
    int n = 0;
    if (all_int) {
        long long max_id = -1;
        for (const auto& [a, b] : raw_edges) {
            long long u, v;
            parse_int_token(a, u);
            parse_int_token(b, v);
            max_id = std::max({max_id, u, v});
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
        n = header_n ? static_cast<int>(*header_n) : static_cast<int>(max_id + 1);
        if (max_id >= n)
            throw ParseError("vertex id " + std::to_string(max_id) +
                             " exceeds declared order " + std::to_string(n));
    } else {
        // Named vertices: dense ids in first-seen order.
        std::map<std::string, int> ids;
        std::vector<std::string> order;
        auto intern = [&](const std::string& name) {
            auto it = ids.find(name);
            if (it != ids.end()) return it->second;
            int id = static_cast<int>(order.size());
            ids.emplace(name, id);
            order.push_back(name);
            return id;
        };
        for (const auto& [a, b] : raw_edges) {
            int u = intern(a); // sequence the two interns: first-seen order matters
            int v = intern(b);
            edges.emplace_back(u, v);
        }
        n = static_cast<int>(order.size());
        if (header_n) {
            if (*header_n < n)
                throw ParseError("header declares " + std::to_string(*header_n) +
                                 " vertices but " + std::to_string(n) + " names appear");
            n = static_cast<int>(*header_n);
        }
    }

    Graph g;
    try {
        g = build_graph(n, edges);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    if (header_m && *header_m != g.size())
        throw ParseError("header declares " + std::to_string(*header_m) + " edges, found " +
                         std::to_string(g.size()));
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "p " << g.n << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    write_edge_list(out, g);
}

// --- labeled tree generation --------------------------------------------

Graph tree_from_sequence(int n, const std::vector<int>& seq) {
    if (n < 1) throw DomainError("tree order must be >= 1");
    if (static_cast<int>(seq.size()) != std::max(0, n - 2))
        throw DomainError("sequence length must be n-2");
    if (n == 1) return build_graph(1, {});
    std::vector<int> deg(n, 1);
    for (int v : seq) {
        if (v < 0 || v >= n) throw DomainError("sequence entry out of range");
        ++deg[v];
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    // Pointer/leaf scan decode, O(n) after the degree pass.
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int v : seq) {
        edges.emplace_back(leaf, v);
        if (--deg[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            while (deg[++ptr] != 1) {}
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return build_graph(n, edges);
}

void enumerate_labeled_trees(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1) throw DomainError("tree order must be >= 1");
    if (n > 8) throw DomainError("exhaustive tree enumeration supports n <= 8 (asked for " +
                                 std::to_string(n) + ")");
    if (n <= 2) {
        fn(tree_from_sequence(n, {}));
        return;
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
        fn(tree_from_sequence(n, seq));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    // Rejection sampling keeps the draw exactly uniform.
    std::uint64_t limit = ~0ULL - (~0ULL % bound + 1) % bound;
    std::uint64_t x;
    do {
        x = next();
    } while (x > limit);
    return x % bound;
}

Graph random_labeled_tree(int n, SplitMix64& rng) {
    if (n < 1) throw DomainError("tree order must be >= 1");
    std::vector<int> seq(std::max(0, n - 2));
    for (auto& v : seq) v = static_cast<int>(rng.below(n));
    return tree_from_sequence(n, seq);
}

std::vector<Graph> sample_random_trees(int n, int count, std::uint64_t seed) {
    if (n < 2) throw DomainError("random tree sampling needs n >= 2");
    SplitMix64 rng(seed);
    std::vector<Graph> trees;
    trees.reserve(count);
    for (int i = 0; i < count; ++i) trees.push_back(random_labeled_tree(n, rng));
    return trees;
}

} // namespace strdom
