#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "sgs/bicyclic.hpp"
#include "sgs/catalog.hpp"
#include "sgs/error.hpp"
#include "sgs/rng.hpp"
#include "sgs/spectra.hpp"

using namespace sgs;

TEST_CASE("base extraction and classification") {
    // B(3,3) with 4 pendants at the shared vertex
    SignedGraph inf(9, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {0, 3, 1}, {3, 4, -1}, {0, 4, 1},
                        {0, 5, 1}, {0, 6, 1}, {0, 7, 1}, {0, 8, 1}});
    auto [b1, s1] = base_of(inf);
    CHECK(s1.type == BicyclicType::Infinity);
    CHECK(s1.params == std::array<int, 3>{3, 3, 0});
    CHECK(s1.base_vertices == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(b1.order() == 5);
    CHECK(b1.size() == 6);

    // bare dumbbell B(3,2,3)
    SignedGraph db(7, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {0, 3, 1}, {3, 4, 1}, {4, 5, 1},
                       {5, 6, -1}, {4, 6, 1}});
    auto [b2, s2] = base_of(db);
    CHECK(s2.type == BicyclicType::Dumbbell);
    CHECK(s2.params == std::array<int, 3>{3, 2, 3});
    CHECK(b2.order() == db.order());

    // theta (2,2,1) with a pendant path
    SignedGraph th(6, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {0, 3, -1}, {1, 3, 1}, {2, 4, 1},
                       {4, 5, 1}});
    auto [b3, s3] = base_of(th);
    CHECK(s3.type == BicyclicType::Theta);
    CHECK(s3.params == std::array<int, 3>{2, 2, 1});
    CHECK(b3.order() == 4);
    CHECK(s3.cycle_signs.size() == 3);

    SignedGraph tree(3, {{0, 1, 1}, {1, 2, 1}});
    CHECK_THROWS_WITH_AS(base_of(tree), doctest::Contains("NotBicyclic"), SgError);
}

TEST_CASE("families match the catalog formulas exactly") {
    for (int n : {7, 8, 9, 10, 11, 12, 15, 20}) {
        for (int i = 1; i <= 5; ++i) {
            SignedGraph g = construct_family(i, n);
            CHECK(g.order() == n);
            CHECK(g.size() == n + 1);
            CHECK(charpoly_exact(g) == family_charpoly_formula(i, n));
        }
    }
    CHECK_THROWS_WITH_AS(construct_family(1, 6), doctest::Contains("UnsupportedN"), SgError);
    CHECK_THROWS_WITH_AS(construct_family(6, 10), doctest::Contains("UnsupportedN"), SgError);
}

TEST_CASE("family shapes land in the classes the ordering argument uses") {
    for (int i : {1, 4}) {
        auto [b, s] = base_of(construct_family(i, 12));
        CHECK(s.type == BicyclicType::Infinity);
    }
    for (int i : {2, 3, 5}) {
        auto [b, s] = base_of(construct_family(i, 12));
        CHECK(s.type == BicyclicType::Theta);
    }
}

TEST_CASE("f polynomial fixtures") {
    CHECK(f_polynomial(1, 36).to_coeff_line() == "31 0 -36 0 1");
    CHECK(f_polynomial(4, 36).to_coeff_line() == "-31 -35 1 1");
    CHECK(f_polynomial(3, 8).to_coeff_line() == "8 4 -9 0 1");
    CHECK_THROWS_AS(f_polynomial(1, 4), SgError);
    CHECK_THROWS_AS(f_polynomial(0, 10), SgError);
}

TEST_CASE("family_index fixtures computed from the closed forms") {
    // largest root of x^4 - 36x^2 + 31: sqrt((36 + sqrt(36^2 - 4*31)) / 2)
    double r1 = std::sqrt((36 + std::sqrt(36.0 * 36 - 4 * 31)) / 2);
    CHECK(family_index(1, 36) == doctest::Approx(r1).epsilon(1e-11));
    CHECK(family_index(1, 36) == doctest::Approx(5.9259803213).epsilon(1e-9));

    CHECK(family_index(5, 36) == doctest::Approx(5.8660896376).epsilon(1e-9));
    double bound = (1 + std::sqrt(16.0 * 36 - 71)) / 4;
    CHECK(family_index(5, 36) < bound);

    double r2 = std::sqrt(4 + std::sqrt(6.0));  // largest root of x^4 - 8x^2 + 10
    CHECK(family_index(2, 7) == doctest::Approx(r2).epsilon(1e-11));
}

TEST_CASE("eigensolver agrees with the root of f_i") {
    Rng rng(139);
    for (int t = 0; t < 25; ++t) {
        int n = 7 + rng.below(114);
        int i = 1 + rng.below(5);
        CHECK(std::fabs(family_index(i, n) - index_of(construct_family(i, n)).lambda) <= 1e-8);
    }
}

TEST_CASE("index beats sqrt(n-2) for the two theta leaders") {
    for (int n : {7, 12, 36, 100, 200})
        for (int i : {2, 3}) CHECK(family_index(i, n) > std::sqrt(n - 2.0));
}

TEST_CASE("difference identities at sample sizes") {
    for (int n : {7, 10, 36}) {
        Polynomial p1 = family_charpoly_formula(1, n), p2 = family_charpoly_formula(2, n);
        Polynomial p3 = family_charpoly_formula(3, n), p4 = family_charpoly_formula(4, n);
        CHECK(p2 - p1 == (Polynomial{n - 5, 0, 1}).times_power(n - 6));
        CHECK(p3 - p2 == (Polynomial{-4, 4}).times_power(n - 4));
        CHECK(p4 - p3 == (Polynomial{5 - n, -4, 3}).times_power(n - 6));
    }
}

TEST_CASE("catalog rows expand consistently with factor-wise evaluation") {
    for (const auto& row : polynomial_catalog()) {
        int n = std::max(10, row.min_n);
        Polynomial full = row_polynomial(row, n);
        CHECK(full.degree() == n);
        CHECK(full.leading() == 1);
        for (long x0 : {-3L, 2L, 5L}) {
            mpz_class prod = 1;
            for (const auto& f : row.factors(n)) prod *= f.eval(x0);
            CHECK(full.eval(x0) == prod);
        }
    }
    CHECK_THROWS_AS(row_polynomial(catalog_row("G1^3"), 7), SgError);
    CHECK_THROWS_AS(catalog_row("nope"), SgError);
}
