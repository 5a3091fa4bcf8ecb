#include "strdom/families.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "strdom/errors.hpp"

namespace strdom {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

[[noreturn]] void reject(const std::string& what) { throw DomainError(what); }

void validate(const FamilySpec& s) {
    using Tag = FamilySpec::Tag;
    switch (s.tag) {
    case Tag::path:
        if (s.a < 1) reject("path needs n >= 1");
        break;
    case Tag::cycle:
        if (s.a < 3) reject("cycle needs n >= 3");
        break;
    case Tag::star:
        if (s.a < 2) reject("star needs order >= 2");
        break;
    case Tag::double_star:
        if (s.a < 1 || s.a > s.b) reject("double star needs 1 <= p <= q");
        break;
    case Tag::spider:
        if (s.a < 2) reject("spider needs t >= 2");
        if (s.b < 0 || s.b > s.a) reject("spider needs 0 <= q <= t");
        break;
    case Tag::gnqjl:
        if (s.a < 0) reject("gnqjl needs q >= 0");
        if (s.b < 0 || s.b > 4) reject("gnqjl needs 0 <= j <= 4");
        if (s.c < 0) reject("gnqjl needs l >= 0");
        if (s.b + s.c < 3) reject("gnqjl needs j + l >= 3");
        break;
    case Tag::fpm:
        if (!is_tree(s.base)) reject("fpm needs a tree as base");
        break;
    case Tag::t_member:
        if (s.a < 1 || s.a > 8) reject("t_member index must be 1..8");
        break;
    }
}

Graph make_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return build_graph(n, edges);
}

Graph make_cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return build_graph(n, edges);
}

Graph make_star(int order) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < order; ++i) edges.emplace_back(0, i);
    return build_graph(order, edges);
}

// Center 0; subdivided legs first (mid 1+2i, tip 2+2i), then the short legs.
Graph make_spider(int t, int q) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < q; ++i) {
        edges.emplace_back(0, 1 + 2 * i);
        edges.emplace_back(1 + 2 * i, 2 + 2 * i);
    }
    for (int i = 0; i < t - q; ++i) edges.emplace_back(0, 1 + 2 * q + i);
    return build_graph(1 + t + q, edges);
}

Graph make_double_star(int p, int q) {
    std::vector<std::pair<int, int>> edges{{0, 1}};
    for (int i = 0; i < p; ++i) edges.emplace_back(0, 2 + i);
    for (int i = 0; i < q; ++i) edges.emplace_back(1, 2 + p + i);
    return build_graph(p + q + 2, edges);
}

Graph make_gnqjl(int q, int j, int l) {
    Graph base = make_path(q + 1);
    std::vector<std::pair<Graph, int>> attachments;
    attachments.emplace_back(make_spider(j + l, j), 0);
    for (int i = 0; i < q; ++i) attachments.emplace_back(make_spider(3, 3), 0);
    return rooted_product(base, attachments);
}

Graph make_fpm(const Graph& base) {
    std::vector<std::pair<Graph, int>> attachments(base.n, {make_spider(3, 3), 0});
    return rooted_product(base, attachments);
}

Graph make_t_member(int index) {
    switch (index) {
    case 1: return make_path(3);
    case 2: return make_path(4);
    case 3: return make_path(5);
    case 4: return make_spider(3, 0); // the star of order 4
    case 5: return make_spider(3, 1);
    case 6: return make_spider(3, 2);
    case 7: return make_spider(3, 3); // S(K_{1,3})
    case 8:
        // degree-3 center with leg lengths (3,1,1); exhaustive search shows it
        // reaches n-1 as well, so membership must include it
        return build_graph(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}});
    }
    reject("t_member index must be 1..8");
}

bool parse_params(const std::string& body, std::vector<int>& out) {
    std::stringstream ss(body);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        int v;
        auto [p, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
        if (ec != std::errc() || p != piece.data() + piece.size()) return false;
        out.push_back(v);
    }
    return !out.empty();
}

} // namespace

FamilySpec FamilySpec::path(int n) { return {Tag::path, n, 0, 0, {}, "path:" + std::to_string(n)}; }
FamilySpec FamilySpec::cycle(int n) { return {Tag::cycle, n, 0, 0, {}, "cycle:" + std::to_string(n)}; }
FamilySpec FamilySpec::star(int order) { return {Tag::star, order, 0, 0, {}, "star:" + std::to_string(order)}; }
FamilySpec FamilySpec::double_star(int p, int q) {
    return {Tag::double_star, p, q, 0, {}, "dstar:" + std::to_string(p) + "," + std::to_string(q)};
}
FamilySpec FamilySpec::spider(int t, int q) {
    return {Tag::spider, t, q, 0, {}, "spider:" + std::to_string(t) + "," + std::to_string(q)};
}
FamilySpec FamilySpec::gnqjl(int q, int j, int l) {
    return {Tag::gnqjl, q, j, l, {},
            "gnqjl:" + std::to_string(q) + "," + std::to_string(j) + "," + std::to_string(l)};
}
FamilySpec FamilySpec::fpm(Graph base_tree) {
    FamilySpec s;
    s.tag = Tag::fpm;
    s.text = "fpm:<base order " + std::to_string(base_tree.n) + ">";
    s.base = std::move(base_tree);
    return s;
}
FamilySpec FamilySpec::t_member(int index) {
    return {Tag::t_member, index, 0, 0, {}, "tmember:" + std::to_string(index)};
}

FamilySpec FamilySpec::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ParseError("family spec needs the form '<tag>:<params>', got '" + text + "'");
    std::string tag = text.substr(0, colon);
    std::string body = text.substr(colon + 1);
    if (tag == "fpm") {
        auto spec = fpm(read_edge_list_file(body));
        spec.text = text;
        return spec;
    }
    std::vector<int> p;
    if (!parse_params(body, p))
        throw ParseError("cannot parse family parameters from '" + text + "'");
    auto want = [&](std::size_t count) {
        if (p.size() != count)
            throw ParseError("family '" + tag + "' takes " + std::to_string(count) +
                             " parameter(s), got " + std::to_string(p.size()));
    };
    if (tag == "path") { want(1); return path(p[0]); }
    if (tag == "cycle") { want(1); return cycle(p[0]); }
    if (tag == "star") { want(1); return star(p[0]); }
    if (tag == "dstar") { want(2); return double_star(p[0], p[1]); }
    if (tag == "spider") { want(2); return spider(p[0], p[1]); }
    if (tag == "gnqjl") { want(3); return gnqjl(p[0], p[1], p[2]); }
    if (tag == "tmember") { want(1); return t_member(p[0]); }
    throw ParseError("unknown family tag '" + tag + "'");
}

Graph generate(const FamilySpec& spec) {
    validate(spec);
    using Tag = FamilySpec::Tag;
    switch (spec.tag) {
    case Tag::path: return make_path(spec.a);
    case Tag::cycle: return make_cycle(spec.a);
    case Tag::star: return make_star(spec.a);
    case Tag::double_star: return make_double_star(spec.a, spec.b);
    case Tag::spider: return make_spider(spec.a, spec.b);
    case Tag::gnqjl: return make_gnqjl(spec.a, spec.b, spec.c);
    case Tag::fpm: return make_fpm(spec.base);
    case Tag::t_member: return make_t_member(spec.a);
    }
    reject("unreachable family tag");
}

int closed_form_gamma_str(const FamilySpec& spec) {
    validate(spec);
    using Tag = FamilySpec::Tag;
    switch (spec.tag) {
    case Tag::path: return ceil_div(2 * spec.a, 3);
    case Tag::cycle: return ceil_div(2 * spec.a, 3);
    case Tag::star: return ceil_div(spec.a + 1, 2);
    case Tag::double_star: {
        int p = spec.a, q = spec.b, n = p + q + 2;
        if (q == 1) return 3; // S(1,1) is P_4
        if (p == 1) return ceil_div(n + 2, 2);
        return 2 + ceil_div(p, 2) + ceil_div(q, 2);
    }
    case Tag::spider: return 1 + spec.b + ceil_div(spec.a, 2);
    case Tag::gnqjl: return 6 * spec.a + ceil_div(spec.b + spec.c, 2) + spec.b + 1;
    case Tag::fpm: return 6 * spec.base.n;
    case Tag::t_member: {
        static constexpr int orders[] = {3, 4, 5, 4, 5, 6, 7, 6};
        return orders[spec.a - 1] - 1;
    }
    }
    reject("unreachable family tag");
}

const std::vector<Graph>& family_T_members() {
    static const std::vector<Graph> members = [] {
        std::vector<Graph> out;
        for (int i = 1; i <= 8; ++i) out.push_back(generate(FamilySpec::t_member(i)));
        return out;
    }();
    return members;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.size() != b.size()) return false;
    if (a.n > 8) throw DomainError("brute-force isomorphism supports n <= 8");
    auto degs = [](const Graph& g) {
        std::vector<int> d(g.n);
        for (int v = 0; v < g.n; ++v) d[v] = g.degree(v);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(a) != degs(b)) return false;

    // backtracking vertex assignment a -> b
    std::vector<int> map(a.n, -1);
    std::vector<char> used(b.n, 0);
    std::function<bool(int)> place = [&](int v) -> bool {
        if (v == a.n) return true;
        for (int w = 0; w < b.n; ++w) {
            if (used[w] || a.degree(v) != b.degree(w)) continue;
            bool ok = true;
            for (int u : a.neighbors(v)) {
                if (map[u] >= 0 && !b.has_edge(map[u], w)) {
                    ok = false;
                    break;
                }
            }
            // also reject extra edges to already-placed vertices
            if (ok) {
                for (int u = 0; u < v; ++u) {
                    bool ea = a.has_edge(u, v), eb = b.has_edge(map[u], w);
                    if (ea != eb) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (place(v + 1)) return true;
            map[v] = -1;
            used[w] = 0;
        }
        return false;
    };
    return place(0);
}

bool membership_family_T(const Graph& t) {
    if (!is_tree(t)) throw DomainError("family membership tests expect a tree");
    if (t.n < 3) throw DomainError("family T membership needs n >= 3");
    if (t.n > 7) return false;
    for (const auto& member : family_T_members())
        if (are_isomorphic(t, member)) return true;
    return false;
}

FpmDecomposition membership_F_pm(const Graph& t) {
    if (!is_tree(t)) throw DomainError("family membership tests expect a tree");
    FpmDecomposition result;
    if (t.n % 7 != 0 || t.n == 0) return result;

    std::vector<int> unit_of(t.n, -1);
    std::vector<std::array<int, 7>> units;
    for (int c = 0; c < t.n; ++c) {
        // pendant length-2 legs hanging off c: neighbor of degree 2 whose
        // other neighbor is a leaf
        std::vector<std::pair<int, int>> legs;
        for (int s : t.neighbors(c)) {
            if (t.degree(s) != 2) continue;
            int other = t.neighbors(s)[0] == c ? t.neighbors(s)[1] : t.neighbors(s)[0];
            if (t.degree(other) == 1) legs.emplace_back(s, other);
        }
        if (legs.size() != 3) continue;
        std::array<int, 7> unit{c, legs[0].first, legs[0].second,
                                legs[1].first, legs[1].second,
                                legs[2].first, legs[2].second};
        int id = static_cast<int>(units.size());
        for (int v : unit) {
            if (unit_of[v] >= 0) return result; // overlapping units: not a member
            unit_of[v] = id;
        }
        units.push_back(unit);
    }
    if (static_cast<int>(units.size()) * 7 != t.n) return result;
    if (std::any_of(unit_of.begin(), unit_of.end(), [](int u) { return u < 0; }))
        return result;
    // every cross-unit edge must join two unit centers
    for (auto [u, v] : t.edges) {
        if (unit_of[u] == unit_of[v]) continue;
        if (u != units[unit_of[u]][0] || v != units[unit_of[v]][0]) return result;
    }
    result.member = true;
    result.units = std::move(units);
    return result;
}

} // namespace strdom
