#include "doctest.h"

#include "strdom/errors.hpp"
#include "strdom/families.hpp"
#include "strdom/graph.hpp"
#include "strdom/solver.hpp"
#include "strdom/trees.hpp"

using namespace strdom;

TEST_CASE("generation hits the prescribed orders") {
    CHECK(generate(FamilySpec::spider(3, 3)).n == 7);
    CHECK(generate(FamilySpec::gnqjl(3, 2, 3)).n == 29);
    CHECK(generate(FamilySpec::double_star(2, 3)).n == 7);
    CHECK(generate(FamilySpec::fpm(generate(FamilySpec::path(5)))).n == 35);
    for (int q = 0; q <= 2; ++q)
        for (int j = 0; j <= 4; ++j)
            for (int l = 0; l <= 5; ++l) {
                if (j + l < 3) continue;
                auto g = generate(FamilySpec::gnqjl(q, j, l));
                CHECK(g.n == 7 * q + 2 * j + l + 1);
                CHECK(is_tree(g));
            }
    int expected_orders[] = {3, 4, 5, 4, 5, 6, 7, 6};
    for (int i = 1; i <= 8; ++i)
        CHECK(generate(FamilySpec::t_member(i)).n == expected_orders[i - 1]);
}

TEST_CASE("parameter violations are rejected by name") {
    CHECK_THROWS_WITH_AS(generate(FamilySpec::spider(1, 0)), doctest::Contains("t >= 2"),
                         DomainError);
    CHECK_THROWS_WITH_AS(generate(FamilySpec::spider(3, 4)), doctest::Contains("q <= t"),
                         DomainError);
    CHECK_THROWS_WITH_AS(generate(FamilySpec::gnqjl(1, 5, 2)), doctest::Contains("j <= 4"),
                         DomainError);
    CHECK_THROWS_WITH_AS(generate(FamilySpec::gnqjl(1, 1, 1)), doctest::Contains("j + l >= 3"),
                         DomainError);
    CHECK_THROWS_AS(generate(FamilySpec::double_star(3, 2)), DomainError);
    CHECK_THROWS_AS(generate(FamilySpec::cycle(2)), DomainError);
    CHECK_THROWS_AS(generate(FamilySpec::star(1)), DomainError);
    CHECK_THROWS_AS(closed_form_gamma_str(FamilySpec::t_member(9)), DomainError);
    auto not_tree = generate(FamilySpec::cycle(4));
    CHECK_THROWS_AS(generate(FamilySpec::fpm(not_tree)), DomainError);
}

TEST_CASE("closed forms match the exact solver at small orders") {
    CHECK(closed_form_gamma_str(FamilySpec::spider(5, 2)) == 6);
    CHECK(closed_form_gamma_str(FamilySpec::gnqjl(1, 0, 3)) == 9);
    CHECK(closed_form_gamma_str(FamilySpec::path(7)) == 5);
    CHECK(closed_form_gamma_str(FamilySpec::fpm(generate(FamilySpec::path(5)))) == 30);
    CHECK(closed_form_gamma_str(FamilySpec::double_star(1, 1)) == 3); // P_4 dispatch

    std::vector<FamilySpec> specs;
    for (int n = 1; n <= 14; ++n) specs.push_back(FamilySpec::path(n));
    for (int n = 3; n <= 14; ++n) specs.push_back(FamilySpec::cycle(n));
    for (int n = 2; n <= 14; ++n) specs.push_back(FamilySpec::star(n));
    for (int p = 1; p <= 5; ++p)
        for (int q = p; q <= 5; ++q) specs.push_back(FamilySpec::double_star(p, q));
    for (int t = 2; t <= 6; ++t)
        for (int q = 0; q <= t; ++q)
            if (1 + t + q <= 14) specs.push_back(FamilySpec::spider(t, q));
    for (int j = 0; j <= 4; ++j)
        for (int l = 0; l <= 8; ++l)
            if (j + l >= 3 && 2 * j + l + 1 <= 14) specs.push_back(FamilySpec::gnqjl(0, j, l));
    specs.push_back(FamilySpec::gnqjl(1, 0, 3));
    specs.push_back(FamilySpec::gnqjl(1, 2, 1));
    specs.push_back(FamilySpec::fpm(generate(FamilySpec::path(2))));
    for (int i = 1; i <= 8; ++i) specs.push_back(FamilySpec::t_member(i));
    for (const auto& spec : specs) {
        auto g = generate(spec);
        if (g.n > 14) continue;
        INFO("spec ", spec.text);
        CHECK(closed_form_gamma_str(spec) == solve_strdf_exact(g).value);
    }
}

TEST_CASE("double stars stay strictly below 6n/7") {
    for (int p = 1; p <= 5; ++p)
        for (int q = p; q <= 5; ++q) {
            int n = p + q + 2;
            CHECK(7 * closed_form_gamma_str(FamilySpec::double_star(p, q)) < 6 * n);
        }
}

TEST_CASE("membership in the n-1 family") {
    CHECK(membership_family_T(generate(FamilySpec::path(5))));
    CHECK(membership_family_T(generate(FamilySpec::spider(3, 3))));
    CHECK(membership_family_T(build_graph(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}})));
    CHECK_FALSE(membership_family_T(generate(FamilySpec::path(6))));
    CHECK_FALSE(membership_family_T(generate(FamilySpec::path(8))));
    CHECK_THROWS_AS(membership_family_T(generate(FamilySpec::cycle(4))), DomainError);
    // every stored member is extremal
    for (const auto& member : family_T_members())
        CHECK(solve_strdf_exact(member).value == member.n - 1);
}

TEST_CASE("membership in the 6n/7 family") {
    auto unit = generate(FamilySpec::spider(3, 3));
    auto d1 = membership_F_pm(unit);
    CHECK(d1.member);
    CHECK(d1.units.size() == 1);

    auto member5 = generate(FamilySpec::fpm(generate(FamilySpec::path(5))));
    auto d5 = membership_F_pm(member5);
    CHECK(d5.member);
    CHECK(d5.units.size() == 5);
    // each unit induces a subdivided star: center degree >= 3, stems degree 2
    for (const auto& u : d5.units) {
        CHECK(member5.degree(u[0]) >= 3);
        for (int i = 1; i < 7; i += 2) {
            CHECK(member5.degree(u[i]) == 2);      // stem
            CHECK(member5.degree(u[i + 1]) == 1);  // leaf
        }
    }

    CHECK_FALSE(membership_F_pm(generate(FamilySpec::path(7))).member);
    CHECK_FALSE(membership_F_pm(generate(FamilySpec::path(14))).member);
    CHECK_FALSE(membership_F_pm(generate(FamilySpec::path(6))).member);
    CHECK_THROWS_AS(membership_F_pm(generate(FamilySpec::cycle(7))), DomainError);

    // members built on random base trees of every small order
    SplitMix64 rng(3);
    for (int m = 1; m <= 4; ++m) {
        Graph base = m == 1 ? build_graph(1, {}) : random_labeled_tree(m, rng);
        auto g = generate(FamilySpec::fpm(base));
        auto d = membership_F_pm(g);
        CHECK(d.member);
        CHECK(static_cast<int>(d.units.size()) == m);
    }
}

TEST_CASE("family spec text syntax") {
    CHECK(FamilySpec::parse("spider:5,2").text == "spider:5,2");
    CHECK(generate(FamilySpec::parse("gnqjl:3,2,3")).n == 29);
    CHECK(generate(FamilySpec::parse("dstar:2,3")).n == 7);
    CHECK(generate(FamilySpec::parse("path:7")).n == 7);
    CHECK(generate(FamilySpec::parse("tmember:4")).n == 4);
    CHECK_THROWS_AS(FamilySpec::parse("nope"), ParseError);
    CHECK_THROWS_AS(FamilySpec::parse("spider:1,2,3"), ParseError);
    CHECK_THROWS_AS(FamilySpec::parse("path:x"), ParseError);
}
