#include "strdom/reduction.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <sstream>

#include "json.hpp"
#include "strdom/errors.hpp"

namespace strdom {

CnfFormula parse_cnf(std::istream& in) {
    CnfFormula f;
    bool saw_header = false;
    long long declared_clauses = 0;
    std::vector<std::vector<Literal>> raw;
    std::vector<Literal> current;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c") continue;
        if (first == "p") {
            std::string kind;
            long long nv = -1, nc = -1;
            if (saw_header || !(ls >> kind >> nv >> nc) || kind != "cnf" || nv < 0 || nc < 0)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": malformed header, want 'p cnf <vars> <clauses>'");
            saw_header = true;
            f.variable_count = static_cast<int>(nv);
            declared_clauses = nc;
            continue;
        }
        if (!saw_header)
            throw ParseError("line " + std::to_string(lineno) + ": clause before 'p cnf' header");
        ls.clear();
        ls.str(line);
        long long lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (current.empty())
                    throw ParseError("line " + std::to_string(lineno) + ": empty clause");
                raw.push_back(std::move(current));
                current.clear();
                continue;
            }
            long long var = lit > 0 ? lit : -lit;
            if (var > f.variable_count)
                throw ParseError("line " + std::to_string(lineno) + ": variable " +
                                 std::to_string(var) + " exceeds declared count " +
                                 std::to_string(f.variable_count));
            current.push_back({static_cast<int>(var - 1), lit < 0});
        }
        if (!ls.eof())
            throw ParseError("line " + std::to_string(lineno) + ": unexpected token");
    }
    if (!saw_header) throw ParseError("missing 'p cnf' header");
    if (!current.empty()) throw ParseError("unterminated clause at end of input");
    if (static_cast<long long>(raw.size()) != declared_clauses)
        throw ParseError("header declares " + std::to_string(declared_clauses) +
                         " clauses, found " + std::to_string(raw.size()));

    for (auto& clause : raw) {
        std::sort(clause.begin(), clause.end());
        auto last = std::unique(clause.begin(), clause.end());
        if (last != clause.end()) {
            f.warnings.push_back("repeated literal inside a clause was collapsed");
            clause.erase(last, clause.end());
        }
        if (std::find(f.clauses.begin(), f.clauses.end(), clause) != f.clauses.end()) {
            f.warnings.push_back("duplicate clause dropped");
            continue;
        }
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

CnfFormula parse_cnf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open CNF file: " + path);
    return parse_cnf(in);
}

CnfValidation validate_1neg3sat(const CnfFormula& f) {
    CnfValidation v;
    std::vector<int> positive(f.variable_count, 0), negative(f.variable_count, 0);
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const auto& clause = f.clauses[i];
        std::size_t vars = clause.size();
        for (std::size_t a = 1; a < clause.size(); ++a)
            if (clause[a].var == clause[a - 1].var) {
                v.violations.push_back("clause " + std::to_string(i + 1) +
                                       " repeats a variable");
                break;
            }
        if (vars < 2 || vars > 3)
            v.violations.push_back("clause " + std::to_string(i + 1) + " has " +
                                   std::to_string(vars) + " literals, want 2 or 3");
        if (vars == 3 && std::none_of(clause.begin(), clause.end(),
                                      [](Literal l) { return l.negated; }))
            v.violations.push_back("3-literal clause " + std::to_string(i + 1) +
                                   " has no negative literal");
        for (Literal l : clause) (l.negated ? negative : positive)[l.var]++;
    }
    for (int x = 0; x < f.variable_count; ++x) {
        if (negative[x] != 1)
            v.violations.push_back("variable " + std::to_string(x + 1) + " occurs negatively " +
                                   std::to_string(negative[x]) + " times, want exactly 1");
        if (positive[x] < 1 || positive[x] > 2)
            v.violations.push_back("variable " + std::to_string(x + 1) + " occurs positively " +
                                   std::to_string(positive[x]) + " times, want 1 or 2");
    }
    if (f.clause_count() < f.variable_count)
        v.violations.push_back("need at least as many clauses as variables (" +
                               std::to_string(f.clause_count()) + " < " +
                               std::to_string(f.variable_count) + ")");
    v.valid = v.violations.empty();
    return v;
}

SatResult satisfiable_bruteforce(const CnfFormula& f) {
    if (f.variable_count > 20)
        throw DomainError("brute-force satisfiability supports at most 20 variables");
    SatResult r;
    std::uint32_t limit = 1u << f.variable_count;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        bool ok = true;
        for (const auto& clause : f.clauses) {
            bool sat = false;
            for (Literal l : clause) {
                bool value = (mask >> l.var) & 1;
                if (value != l.negated) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (ok) {
            r.satisfiable = true;
            r.assignment.resize(f.variable_count);
            for (int x = 0; x < f.variable_count; ++x) r.assignment[x] = (mask >> x) & 1;
            return r;
        }
    }
    return r;
}

namespace {

// One clause representative per variable, preferring low clause indices;
// augmenting paths repair the plain greedy order when it would starve
// someone.
std::vector<int> assign_s_clauses(const CnfFormula& f) {
    int n = f.variable_count, m = f.clause_count();
    std::vector<std::vector<int>> clauses_of(n);
    for (int j = 0; j < m; ++j)
        for (Literal l : f.clauses[j]) clauses_of[l.var].push_back(j);

    std::vector<int> clause_owner(m, -1);
    std::vector<char> visited(m, 0);
    std::function<bool(int)> augment = [&](int var) -> bool {
        for (int j : clauses_of[var]) {
            if (visited[j]) continue;
            visited[j] = 1;
            if (clause_owner[j] < 0 || augment(clause_owner[j])) {
                clause_owner[j] = var;
                return true;
            }
        }
        return false;
    };
    for (int var = 0; var < n; ++var) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!augment(var))
            throw DomainError("variable " + std::to_string(var + 1) +
                              " cannot receive a private clause vertex for its S set");
    }
    std::vector<int> s_clause(n, -1);
    for (int j = 0; j < m; ++j)
        if (clause_owner[j] >= 0) s_clause[clause_owner[j]] = j;
    return s_clause;
}

} // namespace

ReductionGraph build_reduction_graph(const CnfFormula& f) {
    auto validation = validate_1neg3sat(f);
    if (!validation.valid) {
        std::string msg = "formula is not a valid instance:";
        for (const auto& v : validation.violations) msg += "\n  " + v;
        throw DomainError(msg);
    }
    ReductionGraph rg;
    rg.variable_count = f.variable_count;
    rg.clause_count = f.clause_count();

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < rg.variable_count; ++i) {
        int pos = 5 * i, neg = 5 * i + 1;
        for (int b = 2; b <= 4; ++b) {
            edges.emplace_back(pos, 5 * i + b);
            edges.emplace_back(neg, 5 * i + b);
        }
        edges.emplace_back(pos, neg);
    }
    for (int j = 0; j < rg.clause_count; ++j)
        for (Literal l : f.clauses[j])
            edges.emplace_back(rg.clause_vertex(j), rg.literal_vertex(l));
    rg.graph = build_graph(rg.variable_count * 5 + rg.clause_count, edges);

    // the construction relies on literal degrees: 5 or 6 positive, 5 negative
    for (int i = 0; i < rg.variable_count; ++i) {
        int dp = rg.graph.degree(rg.positive_vertex(i));
        int dn = rg.graph.degree(rg.negative_vertex(i));
        if ((dp != 5 && dp != 6) || dn != 5)
            throw DomainError("literal vertices of variable " + std::to_string(i + 1) +
                              " have degrees " + std::to_string(dp) + "/" + std::to_string(dn) +
                              ", want 5-or-6/5");
    }

    rg.s_clause = assign_s_clauses(f);
    std::vector<char> taken(rg.clause_count, 0);
    for (int j : rg.s_clause) taken[j] = 1;
    for (int j = 0; j < rg.clause_count; ++j)
        if (!taken[j]) rg.y_clauses.push_back(j);
    return rg;
}

Labeling assignment_labeling(const ReductionGraph& rg, const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != rg.variable_count)
        throw DomainError("assignment size does not match the variable count");
    Labeling f(rg.graph.n, 0);
    for (int i = 0; i < rg.variable_count; ++i) {
        int v = assignment[i] ? rg.positive_vertex(i) : rg.negative_vertex(i);
        f.values[v] = 4;
    }
    return f;
}

std::string role_map_json(const ReductionGraph& rg) {
    nlohmann::json roles = nlohmann::json::object();
    auto add = [&](int v, nlohmann::json j) { roles[std::to_string(v)] = std::move(j); };
    for (int i = 0; i < rg.variable_count; ++i) {
        add(rg.positive_vertex(i), {{"role", "literal"}, {"variable", i + 1}, {"negated", false}});
        add(rg.negative_vertex(i), {{"role", "literal"}, {"variable", i + 1}, {"negated", true}});
        const char* names[] = {"x", "y", "z"};
        for (int b = 0; b < 3; ++b)
            add(5 * i + 2 + b,
                {{"role", "b-vertex"}, {"variable", i + 1}, {"name", names[b]}});
    }
    for (int j = 0; j < rg.clause_count; ++j)
        add(rg.clause_vertex(j), {{"role", "clause"}, {"clause", j + 1}});

    nlohmann::json s_sets = nlohmann::json::array();
    for (int i = 0; i < rg.variable_count; ++i) {
        auto s = rg.s_set(i);
        s_sets.push_back(std::vector<int>(s.begin(), s.end()));
    }
    nlohmann::json y = nlohmann::json::array();
    for (int j : rg.y_clauses) y.push_back(rg.clause_vertex(j));

    nlohmann::json out{{"order", rg.graph.n},
                       {"variables", rg.variable_count},
                       {"clauses", rg.clause_count},
                       {"vertices", std::move(roles)},
                       {"s_sets", std::move(s_sets)},
                       {"y_set", std::move(y)}};
    return out.dump(2);
}

} // namespace strdom
