#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "strdom/graph.hpp"
#include "strdom/labeling.hpp"

namespace strdom {

struct Literal {
    int var = 0; // 0-based
    bool negated = false;

    friend bool operator==(const Literal&, const Literal&) = default;
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// Clause list over signed variable literals. Parsing keeps clauses as sorted
/// literal sets and drops exact duplicates with a warning.
struct CnfFormula {
    int variable_count = 0;
    std::vector<std::vector<Literal>> clauses;
    std::vector<std::string> warnings;

    int clause_count() const { return static_cast<int>(clauses.size()); }
};

/// DIMACS CNF: optional `c` comment lines, a `p cnf <vars> <clauses>` header,
/// then clauses as signed integers terminated by 0.
CnfFormula parse_cnf(std::istream& in);
CnfFormula parse_cnf_file(const std::string& path);

/// Structural validation for the restricted 3-SAT fragment: every variable
/// once negative and once or twice positive, clause sizes 2-3 with distinct
/// variables, three-literal clauses containing a negative literal, and at
/// least as many clauses as variables. Planarity is not checked.
struct CnfValidation {
    bool valid = false;
    std::vector<std::string> violations;
    std::string planarity = "unchecked";
};

CnfValidation validate_1neg3sat(const CnfFormula& f);

struct SatResult {
    bool satisfiable = false;
    std::vector<bool> assignment; // meaningful when satisfiable
};

/// Exhaustive assignment search, n <= 20; returns the lexicographically first
/// satisfying assignment (variable 0 varied fastest).
SatResult satisfiable_bruteforce(const CnfFormula& f);

/// The clause-variable gadget graph: one K_{2,3} per variable (literal pair
/// {a_i, !a_i} against {x_i, y_i, z_i}) plus the literal edge, and one vertex
/// per clause joined to its literals. Order m + 5n.
///
/// Vertex ids: variable i owns 5i..5i+4 as (positive, negative, x, y, z);
/// clause j is 5n + j.
struct ReductionGraph {
    Graph graph;
    int variable_count = 0;
    int clause_count = 0;
    std::vector<int> s_clause;  // per variable: the clause vertex assigned to S_i
    std::vector<int> y_clauses; // clause indices left outside every S_i

    int positive_vertex(int var) const { return 5 * var; }
    int negative_vertex(int var) const { return 5 * var + 1; }
    int literal_vertex(Literal l) const { return 5 * l.var + (l.negated ? 1 : 0); }
    int clause_vertex(int j) const { return 5 * variable_count + j; }

    /// S_i: the five gadget vertices of variable i plus its assigned clause vertex.
    std::array<int, 6> s_set(int i) const {
        return {5 * i, 5 * i + 1, 5 * i + 2, 5 * i + 3, 5 * i + 4,
                clause_vertex(s_clause[i])};
    }
};

/// Builds the gadget for a formula that passes validate_1neg3sat; rejects
/// invalid formulas listing their violations. The S_i partition assigns each
/// variable one adjacent clause vertex (index-order preference, with
/// augmenting-path repair when plain greedy would starve a variable).
ReductionGraph build_reduction_graph(const CnfFormula& f);

/// The weight-4n labeling induced by a satisfying assignment: the true
/// literal of each variable gets 4, everything else 0.
Labeling assignment_labeling(const ReductionGraph& rg, const std::vector<bool>& assignment);

/// Sidecar JSON mapping vertex ids to roles (literal/b-vertex/clause) plus
/// the S_i / Y partition.
std::string role_map_json(const ReductionGraph& rg);

} // namespace strdom
