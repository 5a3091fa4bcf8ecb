#pragma once

// Test-side oracles and fixtures. The oracles enumerate labelings or vertex
// subsets directly, independent of the solvers' zero-set/cover search, so
// they can vouch for it.

#include <vector>

#include "strdom/graph.hpp"
#include "strdom/labeling.hpp"
#include "strdom/reduction.hpp"

namespace testsupport {

using strdom::CnfFormula;
using strdom::Graph;
using strdom::SplitMix64;

/// Minimum StRDF weight by enumerating every labeling with labels up to the
/// per-component cap. Feasible for n <= 6 or so.
int oracle_strdf(const Graph& g);

/// Minimum RDF weight by enumerating every {0,1,2} labeling.
int oracle_roman(const Graph& g);

/// Domination number by subset enumeration.
int oracle_domination(const Graph& g);

/// All connected graphs with 1 <= n <= max_n up to isomorphism (max_n <= 6).
std::vector<Graph> connected_graph_catalog(int max_n);

/// All connected labeled graphs on exactly n vertices (n <= 7), streamed.
void for_each_connected_labeled_graph(int n, const std::function<void(const Graph&)>& fn);

/// Uniform-ish random connected graph with order in [nmin, nmax].
Graph random_connected_graph(SplitMix64& rng, int nmin, int nmax);

// --- small fixture graphs and formulas with hand-checked labelings -------

/// 14 vertices: a hub adjacent to twelve vertices, plus one extra vertex
/// joined to two of them. Hub is vertex 7, the extra vertex is 0.
Graph hub_graph();

/// 14 vertices, 14 edges (one cycle): the second comparison graph.
Graph unicyclic_graph();

/// 11 vertices: two degree-5 centers joined through a middle vertex.
Graph twin_broom_graph();

/// (a1 v a2 v !a3) & (!a1 v a3) & (a1 v !a2 v a3) — order-18 gadget
CnfFormula three_var_formula();

/// (a1 v a2) & (!a1 v a2) & (a1 v !a2) — order-13 gadget
CnfFormula two_var_formula();

/// Valid restricted-3SAT instances with n <= 3 variables, m <= 5 clauses.
std::vector<CnfFormula> reduction_corpus();

} // namespace testsupport
