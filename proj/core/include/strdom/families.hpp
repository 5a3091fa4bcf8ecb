#pragma once

#include <array>
#include <string>
#include <vector>

#include "strdom/graph.hpp"

namespace strdom {

/// Tagged description of one parametric family instance. The text syntax used
/// by the CLI mirrors the factory names: `path:7`, `cycle:5`, `star:9`,
/// `dstar:2,3`, `spider:5,2`, `gnqjl:3,2,3`, `tmember:4`, `fpm:<edge-list-file>`.
struct FamilySpec {
    enum class Tag { path, cycle, star, double_star, spider, gnqjl, fpm, t_member };

    Tag tag = Tag::path;
    int a = 0, b = 0, c = 0; // parameters, meaning depends on tag
    Graph base;              // fpm: the base tree
    std::string text;        // display form

    static FamilySpec path(int n);
    static FamilySpec cycle(int n);
    static FamilySpec star(int order);
    static FamilySpec double_star(int p, int q); // p <= q pendant leaves
    static FamilySpec spider(int t, int q);      // K_{1,t} with q edges subdivided
    static FamilySpec gnqjl(int q, int j, int l);
    static FamilySpec fpm(Graph base_tree);
    static FamilySpec t_member(int index); // 1..8

    /// Parses the CLI syntax; `fpm:` loads the base tree from the named file.
    static FamilySpec parse(const std::string& text);
};

/// Builds the family member. Parameter violations are rejected naming the
/// offending parameter.
Graph generate(const FamilySpec& spec);

/// The closed-form strong Roman domination number of the family member.
int closed_form_gamma_str(const FamilySpec& spec);

/// The trees with gamma_StR = n-1: P_3, P_4, P_5, the spiders S_{3,q} for
/// q = 0..3 (orders 4..7), and the order-6 tree whose degree-3 vertex has leg
/// lengths (3,1,1). Exhaustive search over all trees of order <= 8 confirms
/// these eight are exactly the extremal ones.
const std::vector<Graph>& family_T_members();

/// True iff `t` is isomorphic to one of the stored members.
/// Rejects non-trees and n < 3.
bool membership_family_T(const Graph& t);

/// Unit decomposition for membership in the extremal family: n/7 vertex
/// groups each inducing a subdivided star S(K_{1,3}) (center plus three
/// pendant length-2 paths), all remaining edges joining unit centers.
struct FpmDecomposition {
    bool member = false;
    // per unit: center, then (stem, leaf) pairs of its three legs
    std::vector<std::array<int, 7>> units;
};

FpmDecomposition membership_F_pm(const Graph& t);

/// Brute-force isomorphism for small graphs (n <= 8).
bool are_isomorphic(const Graph& a, const Graph& b);

} // namespace strdom
