#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "strdom/graph.hpp"

namespace strdom {

/// Vertex label assignment; candidate (strong) Roman dominating function.
/// Value type: verification never mutates it.
struct Labeling {
    std::vector<int> values;

    Labeling() = default;
    explicit Labeling(std::vector<int> v) : values(std::move(v)) {}
    Labeling(int n, int fill) : values(n, fill) {}

    int graph_order() const { return static_cast<int>(values.size()); }
    int operator[](int v) const { return values[v]; }
    long long weight() const;
};

long long weight(const Labeling& f);

struct Violation {
    int vertex = -1;
    std::string reason;
    int best_neighbor = -1; // strongest candidate defender, -1 if none
    int best_gap = 0;       // threshold(best_neighbor) - label(best_neighbor)
};

/// Outcome of a verification pass. `valid` reflects the defense conditions;
/// label-cap breaches are reported separately as warnings and do not flip
/// `valid`.
struct ValidityReport {
    bool valid = false;
    long long weight = 0;
    std::vector<Violation> violations;     // unsatisfied zero vertices
    std::vector<Violation> cap_violations; // labels above ceil(Delta/2)+1
    std::vector<int> thresholds;           // per-vertex t(w) = 1 + ceil(|N(w) cap B0| / 2)
};

/// Strong Roman domination check: every zero vertex needs a neighbor w with
/// f(w) >= 1 + ceil(|N(w) cap B0| / 2). The label cap uses the maximum degree
/// of each connected component.
ValidityReport verify_strdf(const Graph& g, const Labeling& f);

/// Classical Roman domination check; labels must lie in {0,1,2}.
ValidityReport verify_rdf(const Graph& g, const Labeling& f);

// Text format: one `v label` pair per line, '#' comments.
// JSON format: array of integers indexed by vertex id.
Labeling read_labeling(std::istream& in, int expected_order);
Labeling read_labeling_file(const std::string& path, int expected_order);
void write_labeling(std::ostream& out, const Labeling& f);

} // namespace strdom
