#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "strdom/graph.hpp"
#include "strdom/labeling.hpp"

namespace strdom {

struct SolveOptions {
    std::uint64_t node_budget = 100'000'000; // search nodes before giving up
    double time_limit_seconds = 0;           // 0 = no wall-clock limit
};

enum class SolveStatus { optimal, budget_exhausted };

/// Exact optimum with witness, or an honest (lower, upper) bound pair when
/// the budget runs out. The witness always verifies under the matching
/// verifier and has weight `value`.
struct SolveResult {
    SolveStatus status = SolveStatus::optimal;
    int value = 0;      // optimum, or the best upper bound when incomplete
    int lower_bound = 0;
    Labeling witness;
    std::uint64_t nodes_explored = 0;
    double elapsed_seconds = 0;

    bool complete() const { return status == SolveStatus::optimal; }
};

/// Strong Roman domination number, solved per connected component and summed.
/// Ties between equal-weight witnesses break to the lexicographically
/// smallest label vector.
SolveResult solve_strdf_exact(const Graph& g, const SolveOptions& options = {});

/// Roman domination number (labels {0,1,2}).
SolveResult solve_roman_exact(const Graph& g, const SolveOptions& options = {});

/// Domination number; witness encodes the set as a 0/1 labeling.
SolveResult solve_domination_exact(const Graph& g, const SolveOptions& options = {});

struct ZeroSetCost {
    int cost = 0;
    Labeling witness;
};

/// Minimum strong-Roman weight among labelings whose zero set is exactly
/// `zero_set`: defenders pay 1 + ceil(|N(w) cap zero_set| / 2), every other
/// vertex outside the zero set pays 1. Empty optional when some zero vertex
/// cannot be defended.
std::optional<ZeroSetCost> minimal_cost_for_zero_set(const Graph& g,
                                                     const std::vector<int>& zero_set);

} // namespace strdom
