#include "strdom/labeling.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "strdom/errors.hpp"

namespace strdom {

long long Labeling::weight() const {
    return std::accumulate(values.begin(), values.end(), 0LL);
}

long long weight(const Labeling& f) { return f.weight(); }

namespace {

void check_shape(const Graph& g, const Labeling& f) {
    if (f.graph_order() != g.n)
        throw DomainError("labeling has " + std::to_string(f.graph_order()) +
                          " entries but the graph has " + std::to_string(g.n) + " vertices");
    for (int v = 0; v < g.n; ++v)
        if (f[v] < 0)
            throw DomainError("vertex " + std::to_string(v) + " has negative label");
}

std::vector<int> component_caps(const Graph& g) {
    std::vector<int> cap(g.n, 1);
    for (const auto& comp : connected_components(g)) {
        int delta = 0;
        for (int v : comp) delta = std::max(delta, g.degree(v));
        int c = (delta + 1) / 2 + 1;
        for (int v : comp) cap[v] = c;
    }
    return cap;
}

} // namespace

ValidityReport verify_strdf(const Graph& g, const Labeling& f) {
    check_shape(g, f);
    ValidityReport report;
    report.weight = f.weight();
    report.thresholds.assign(g.n, 1);
    for (int w = 0; w < g.n; ++w) {
        int zero_neighbors = 0;
        for (int u : g.adj[w])
            if (f[u] == 0) ++zero_neighbors;
        report.thresholds[w] = 1 + (zero_neighbors + 1) / 2;
    }
    auto caps = component_caps(g);
    for (int v = 0; v < g.n; ++v) {
        if (f[v] > caps[v]) {
            Violation w;
            w.vertex = v;
            w.reason = "label " + std::to_string(f[v]) + " exceeds the cap " +
                       std::to_string(caps[v]) + " of its component";
            report.cap_violations.push_back(std::move(w));
        }
        if (f[v] != 0) continue;
        // A zero vertex needs some neighbor at or above its defense threshold.
        bool defended = false;
        int best_neighbor = -1, best_gap = 0;
        for (int u : g.adj[v]) {
            int gap = report.thresholds[u] - f[u];
            if (f[u] >= 2 && (best_neighbor < 0 || gap < best_gap)) {
                best_neighbor = u;
                best_gap = gap;
            }
            if (f[u] >= report.thresholds[u] && f[u] >= 2) {
                defended = true;
                break;
            }
        }
        if (!defended) {
            Violation w;
            w.vertex = v;
            w.best_neighbor = best_neighbor;
            w.best_gap = best_gap;
            if (g.degree(v) == 0)
                w.reason = "vertex " + std::to_string(v) + " is zero and has no neighbors";
            else if (best_neighbor < 0)
                w.reason = "vertex " + std::to_string(v) + " is zero and no neighbor has label >= 2";
            else
                w.reason = "vertex " + std::to_string(v) + " is zero; best defender " +
                           std::to_string(best_neighbor) + " is short by " +
                           std::to_string(best_gap);
            report.violations.push_back(std::move(w));
        }
    }
    report.valid = report.violations.empty();
    return report;
}

ValidityReport verify_rdf(const Graph& g, const Labeling& f) {
    check_shape(g, f);
    for (int v = 0; v < g.n; ++v)
        if (f[v] > 2)
            throw DomainError("Roman dominating functions use labels in {0,1,2}; vertex " +
                              std::to_string(v) + " has " + std::to_string(f[v]));
    ValidityReport report;
    report.weight = f.weight();
    report.thresholds.assign(g.n, 2); // a defender always needs label 2
    for (int v = 0; v < g.n; ++v) {
        if (f[v] != 0) continue;
        bool defended = std::any_of(g.adj[v].begin(), g.adj[v].end(),
                                    [&](int u) { return f[u] == 2; });
        if (!defended) {
            Violation w;
            w.vertex = v;
            w.reason = "vertex " + std::to_string(v) + " is zero and has no neighbor with label 2";
            report.violations.push_back(std::move(w));
        }
    }
    report.valid = report.violations.empty();
    return report;
}

Labeling read_labeling(std::istream& in, int expected_order) {
    in >> std::ws;
    if (in.peek() == '[') {
        // JSON form: array of integers indexed by vertex id
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad JSON labeling: ") + e.what());
        }
        if (!j.is_array() || static_cast<int>(j.size()) != expected_order)
            throw ParseError("JSON labeling must be an array of " +
                             std::to_string(expected_order) + " integers");
        std::vector<int> values;
        for (const auto& x : j) {
            if (!x.is_number_integer() || x.get<long long>() < 0)
                throw ParseError("JSON labeling entries must be nonnegative integers");
            values.push_back(x.get<int>());
        }
        return Labeling(std::move(values));
    }
    std::vector<int> values(expected_order, -1);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long v, label;
        if (!(ls >> v)) continue;
        if (!(ls >> label))
            throw ParseError("line " + std::to_string(lineno) + ": want '<vertex> <label>'");
        if (v < 0 || v >= expected_order)
            throw ParseError("line " + std::to_string(lineno) + ": vertex " + std::to_string(v) +
                             " out of range");
        if (label < 0)
            throw ParseError("line " + std::to_string(lineno) + ": negative label");
        values[v] = static_cast<int>(label);
    }
    for (int v = 0; v < expected_order; ++v)
        if (values[v] < 0)
            throw ParseError("no label given for vertex " + std::to_string(v));
    return Labeling(std::move(values));
}

Labeling read_labeling_file(const std::string& path, int expected_order) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open labeling file: " + path);
    return read_labeling(in, expected_order);
}

void write_labeling(std::ostream& out, const Labeling& f) {
    for (int v = 0; v < f.graph_order(); ++v) out << v << ' ' << f[v] << '\n';
}

} // namespace strdom
