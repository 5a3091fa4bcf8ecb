#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "strdom/families.hpp"
#include "strdom/graph.hpp"
#include "strdom/labeling.hpp"

namespace strdom {

/// A verified strong Roman dominating function of weight <= floor(6n/7),
/// together with the recursion cases that produced it.
struct TreeWitness {
    Labeling labeling;
    int weight_bound = 0; // floor(6n/7)
    std::vector<std::string> case_trace;
};

/// Raised when a composition step fails verification and the tree is too
/// large for the exact fallback; carries the attempted case trace.
class ConstructionAuditError : public std::runtime_error {
public:
    ConstructionAuditError(const std::string& what, std::vector<std::string> trace)
        : std::runtime_error(what), case_trace(std::move(trace)) {}
    std::vector<std::string> case_trace;
};

/// Constructive weight <= floor(6n/7) labeling for a tree of order n >= 3:
/// closed-form labelings for stars, double stars and paths; otherwise a
/// diametral-path recursion that prunes the deep end of the tree and extends
/// the recursive labeling. Every composition is re-verified; a failed step
/// falls back to the exact solver (n <= 18).
TreeWitness construct_tree_strdf(const Graph& t);

struct RealizedTree {
    Graph tree;
    int certified_value = 0;
    FamilySpec spec;
    std::string certification; // "closed-form"
};

/// A tree of order n whose strong Roman domination number is exactly p, for
/// any p in [ceil((n+1)/2), floor(6n/7)]: P_3 and the order-4 star for the
/// two smallest orders, otherwise a path-of-spiders instance whose
/// parameters solve 2p - n = 5q + j + 1 (or + 2 on the odd-parity branch)
/// against the order equation n = 7q + 2j + l + 1.
RealizedTree realize_tree(int n, int p);

} // namespace strdom
