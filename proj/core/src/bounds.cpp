#include "strdom/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "strdom/errors.hpp"
#include "strdom/solver.hpp"

namespace strdom {

namespace {

constexpr int kMaxImplicitSolve = 20;

std::vector<int> sorted_common_neighbors(const Graph& g, int x, int y) {
    std::vector<int> common;
    std::set_intersection(g.neighbors(x).begin(), g.neighbors(x).end(),
                          g.neighbors(y).begin(), g.neighbors(y).end(),
                          std::back_inserter(common));
    return common;
}

// Two neighbors of x outside N[y], ascending.
std::vector<int> private_neighbors(const Graph& g, int x, int y, int want) {
    std::vector<int> out;
    for (int w : g.neighbors(x)) {
        if (w == y || g.has_edge(w, y)) continue;
        out.push_back(w);
        if (static_cast<int>(out.size()) == want) break;
    }
    return out;
}

std::optional<std::pair<int, int>> find_witness_pair(const Graph& g) {
    // condition 1: degree >= 2 at distance >= 3
    for (int x = 0; x < g.n; ++x) {
        if (g.degree(x) < 2) continue;
        auto dist = bfs_distances(g, x);
        for (int y = x + 1; y < g.n; ++y)
            if (g.degree(y) >= 2 && dist[y] >= 3) return std::make_pair(x, y);
    }
    // condition 2: adjacent, degree >= 3, disjoint neighborhoods
    for (auto [x, y] : g.edges)
        if (g.degree(x) >= 3 && g.degree(y) >= 3 && sorted_common_neighbors(g, x, y).empty())
            return std::make_pair(x, y);
    // condition 3: non-adjacent, degree >= 3, at most one shared neighbor
    for (int x = 0; x < g.n; ++x) {
        if (g.degree(x) < 3) continue;
        for (int y = x + 1; y < g.n; ++y) {
            if (g.degree(y) < 3 || g.has_edge(x, y)) continue;
            if (sorted_common_neighbors(g, x, y).size() <= 1) return std::make_pair(x, y);
        }
    }
    return std::nullopt;
}

} // namespace

std::pair<bool, std::optional<Labeling>> n_minus_2_witness(const Graph& g) {
    if (g.n < 6 || !is_connected(g)) return {false, std::nullopt};
    auto pair = find_witness_pair(g);
    if (!pair) return {false, std::nullopt};
    auto [x, y] = *pair;
    auto xs = private_neighbors(g, x, y, 2);
    auto ys = private_neighbors(g, y, x, 2);
    Labeling f(g.n, 1);
    f.values[x] = f.values[y] = 2;
    for (int w : xs) f.values[w] = 0;
    for (int w : ys) f.values[w] = 0;
    auto report = verify_strdf(g, f);
    if (!report.valid || report.weight != g.n - 2)
        throw std::logic_error("n-2 witness construction produced an invalid labeling");
    return {true, std::move(f)};
}

BoundsReport bounds_report(const Graph& g, const ExactValues& exact) {
    if (g.n == 0) throw DomainError("bounds need a nonempty graph");
    BoundsReport r;
    r.n = g.n;
    auto m = metrics(g);
    r.connected = m.component_count == 1;
    r.lower_order = (g.n + 2) / 2;
    r.upper_max_degree = g.n - m.max_degree / 2;

    int half_delta_up = (m.max_degree + 1) / 2;

    r.gamma = exact.gamma;
    r.gamma_r = exact.gamma_r;
    if (!r.gamma) {
        if (g.n <= kMaxImplicitSolve)
            r.gamma = solve_domination_exact(g).value;
    }
    if (!r.gamma_r) {
        if (g.n <= kMaxImplicitSolve)
            r.gamma_r = solve_roman_exact(g).value;
    }

    if (r.gamma_r)
        r.lower_roman = *r.gamma_r;
    else
        r.lower_roman_reason = "gamma_R not supplied and n > " +
                               std::to_string(kMaxImplicitSolve);

    if (r.gamma)
        r.upper_domination = (1 + half_delta_up) * *r.gamma;
    else
        r.upper_domination_reason = "gamma not supplied and n > " +
                                    std::to_string(kMaxImplicitSolve);

    if (m.diameter)
        r.upper_diameter = g.n - (1 + *m.diameter) / 3;
    else
        r.upper_diameter_reason = "graph is disconnected";

    if (m.girth)
        r.upper_girth = g.n - *m.girth / 3;
    else
        r.upper_girth_reason = "graph is acyclic";

    if (half_delta_up < m.min_degree) {
        double a = 1.0 + half_delta_up;
        double value = a * g.n / (m.min_degree + 1.0) *
                       (std::log((1.0 + m.min_degree) / a) + 1.0);
        r.upper_probabilistic = value;
        r.upper_probabilistic_floor = static_cast<int>(std::floor(value));
    } else {
        r.upper_probabilistic_reason = "requires ceil(Delta/2) < delta";
    }

    auto [applicable, witness] = n_minus_2_witness(g);
    if (applicable) {
        r.upper_n_minus_2 = g.n - 2;
        r.n_minus_2_labeling = std::move(witness);
    } else {
        r.upper_n_minus_2_reason = r.connected
            ? "no vertex pair meets the distance or degree conditions"
            : "graph is disconnected";
    }
    return r;
}

std::string bounds_report_json(const BoundsReport& r, int indent) {
    using nlohmann::json;
    json j;
    j["n"] = r.n;
    j["connected"] = r.connected;
    j["lower_order"] = r.lower_order;
    j["upper_max_degree"] = r.upper_max_degree;
    json reasons = json::object();
    auto put = [&](const char* key, const auto& value, const std::string& reason) {
        if (value)
            j[key] = *value;
        else {
            j[key] = nullptr;
            reasons[key] = reason;
        }
    };
    put("lower_roman", r.lower_roman, r.lower_roman_reason);
    put("upper_domination", r.upper_domination, r.upper_domination_reason);
    put("upper_diameter", r.upper_diameter, r.upper_diameter_reason);
    put("upper_girth", r.upper_girth, r.upper_girth_reason);
    put("upper_probabilistic", r.upper_probabilistic, r.upper_probabilistic_reason);
    put("upper_probabilistic_floor", r.upper_probabilistic_floor, r.upper_probabilistic_reason);
    put("upper_n_minus_2", r.upper_n_minus_2, r.upper_n_minus_2_reason);
    j["reasons"] = std::move(reasons);
    j["gamma"] = r.gamma ? json(*r.gamma) : json(nullptr);
    j["gamma_r"] = r.gamma_r ? json(*r.gamma_r) : json(nullptr);
    if (r.n_minus_2_labeling)
        j["n_minus_2_witness"] = r.n_minus_2_labeling->values;
    else
        j["n_minus_2_witness"] = nullptr;
    return j.dump(indent);
}

} // namespace strdom
