#pragma once

#include <optional>
#include <string>
#include <utility>

#include "strdom/graph.hpp"
#include "strdom/labeling.hpp"

namespace strdom {

/// Exact invariants a caller may supply to avoid exponential solves.
struct ExactValues {
    std::optional<int> gamma;
    std::optional<int> gamma_r;
    std::optional<int> gamma_str;
};

/// Every lower/upper bound on the strong Roman domination number that can be
/// read off the graph's order, degrees, diameter and girth, plus the two
/// solver-backed ones. Inapplicable bounds stay empty and carry a reason.
struct BoundsReport {
    int n = 0;
    bool connected = false;

    int lower_order = 0;     // ceil((n+1)/2)
    int upper_max_degree = 0; // n - floor(Delta/2)

    std::optional<int> lower_roman; // gamma_R
    std::string lower_roman_reason;

    std::optional<int> upper_domination; // (1 + ceil(Delta/2)) * gamma
    std::string upper_domination_reason;

    std::optional<int> upper_diameter; // n - floor((1 + diam)/3)
    std::string upper_diameter_reason;

    std::optional<int> upper_girth; // n - floor(girth/3)
    std::string upper_girth_reason;

    // (1 + ceil(Delta/2)) * n / (delta + 1) * (ln((1+delta)/(1+ceil(Delta/2))) + 1),
    // defined when ceil(Delta/2) < delta; reported as a real and as its floor.
    std::optional<double> upper_probabilistic;
    std::optional<int> upper_probabilistic_floor;
    std::string upper_probabilistic_reason;

    std::optional<int> upper_n_minus_2; // n - 2, when a distance witness exists
    std::string upper_n_minus_2_reason;
    std::optional<Labeling> n_minus_2_labeling;

    // exact values used (supplied or solved)
    std::optional<int> gamma;
    std::optional<int> gamma_r;
};

/// Evaluates every applicable bound. gamma / gamma_R come from `exact` when
/// given; otherwise they are solved exactly for n <= 20 and left empty (with
/// a reason) above that.
BoundsReport bounds_report(const Graph& g, const ExactValues& exact = {});

/// Checks the three sufficient conditions for gamma_StR <= n-2 (two degree>=2
/// vertices at distance >= 3; adjacent degree>=3 vertices with disjoint
/// neighborhoods; non-adjacent degree>=3 vertices sharing at most one
/// neighbor) and, when one holds, returns the verified weight-(n-2) labeling.
std::pair<bool, std::optional<Labeling>> n_minus_2_witness(const Graph& g);

/// One field per bound; inapplicable bounds are null next to a reason string.
std::string bounds_report_json(const BoundsReport& r, int indent = 2);

} // namespace strdom
