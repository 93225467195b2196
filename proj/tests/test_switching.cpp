#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "sgs/bicyclic.hpp"
#include "sgs/error.hpp"
#include "sgs/rng.hpp"
#include "sgs/spectra.hpp"
#include "sgs/switching.hpp"

using namespace sgs;

namespace {

SignedGraph cycle(int n, std::vector<int> neg = {}) {
    std::vector<SignedEdge> es;
    for (int i = 0; i < n; ++i) {
        int s = std::count(neg.begin(), neg.end(), i) ? -1 : 1;
        es.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n), s});
    }
    return SignedGraph(n, es);
}

SwitchingFunction random_theta(Rng& rng, int n) {
    SwitchingFunction t(static_cast<size_t>(n));
    for (auto& x : t) x = rng.sign();
    return t;
}

}  // namespace

TEST_CASE("switch examples") {
    SignedGraph tri(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, -1}});
    CHECK(switch_graph(tri, {1, 1, 1}).edges() == tri.edges());

    SignedGraph p2(2, {{0, 1, 1}});
    CHECK(switch_graph(p2, {-1, 1}).sign_of(0, 1) == -1);

    // C4, negative edge (0,1); switching at vertex 1 moves it to (1,2)
    SignedGraph c4 = cycle(4, {0});
    SignedGraph moved = switch_graph(c4, {1, -1, 1, 1});
    CHECK(moved.sign_of(0, 1) == 1);
    CHECK(moved.sign_of(1, 2) == -1);
    CHECK(moved.sign_of(2, 3) == 1);
}

TEST_CASE("switching twice is the identity") {
    Rng rng(41);
    for (int t = 0; t < 40; ++t) {
        int n = 2 + rng.below(9);
        SignedGraph g = random_connected_signed(rng, n, rng.below(4));
        auto theta = random_theta(rng, n);
        CHECK(switch_graph(switch_graph(g, theta), theta).edges() == g.edges());
    }
}

TEST_CASE("is_balanced examples") {
    BalanceCertificate c5 = is_balanced(cycle(5));
    CHECK(c5.balanced);
    CHECK(std::all_of(c5.theta.begin(), c5.theta.end(), [](int t) { return t == 1; }));

    BalanceCertificate tri = is_balanced(SignedGraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, -1}}));
    CHECK_FALSE(tri.balanced);
    REQUIRE(tri.negative_cycles.size() == 1);
    CHECK(tri.negative_cycles[0].sign == -1);
    CHECK(tri.negative_cycles[0].length() == 3);

    BalanceCertificate c4 = is_balanced(cycle(4, {0, 2}));
    CHECK(c4.balanced);
    CHECK(std::any_of(c4.theta.begin(), c4.theta.end(), [](int t) { return t == -1; }));
    // the witness actually works
    SignedGraph switched = switch_graph(cycle(4, {0, 2}), c4.theta);
    for (const auto& e : switched.edges()) CHECK(e.sign == 1);
}

TEST_CASE("switching_equivalent examples") {
    Rng rng(43);
    for (int t = 0; t < 40; ++t) {
        int n = 2 + rng.below(8);
        SignedGraph g = random_connected_signed(rng, n, rng.below(4));
        SignedGraph h = switch_graph(g, random_theta(rng, n));
        auto w = switching_equivalent(g, h);
        REQUIRE(w.has_value());
        CHECK(switch_graph(g, *w).edges() == h.edges());
    }

    SignedGraph pos(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    SignedGraph neg(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, -1}});
    CHECK_FALSE(switching_equivalent(pos, neg).has_value());

    auto w = switching_equivalent(cycle(4, {1}), cycle(4, {3}));
    REQUIRE(w.has_value());
    CHECK(switch_graph(cycle(4, {1}), *w).edges() == cycle(4, {3}).edges());

    CHECK_THROWS_WITH_AS(switching_equivalent(pos, cycle(4)), doctest::Contains("Mismatch"),
                         SgError);
}

TEST_CASE("balanced iff switching equivalent to all-positive, exhaustive n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        int np = static_cast<int>(pairs.size());
        for (int em = 0; em < (1 << np); ++em) {
            std::vector<SignedEdge> base;
            for (int b = 0; b < np; ++b)
                if (em & (1 << b)) base.push_back({pairs[b].first, pairs[b].second, 1});
            SignedGraph g0(n, base);
            if (!g0.connected()) continue;
            int m = g0.size();
            for (int sm = 0; sm < (1 << m); ++sm) {
                auto es = base;
                for (int b = 0; b < m; ++b)
                    if (sm & (1 << b)) es[static_cast<size_t>(b)].sign = -1;
                SignedGraph g(n, es);
                bool bal = is_balanced(g).balanced;
                CHECK(bal == switching_equivalent(g, g0).has_value());
            }
        }
    }
}

TEST_CASE("switching preserves spectra and cycle signs") {
    Rng rng(47);
    for (int t = 0; t < 60; ++t) {
        int n = 3 + rng.below(9);
        SignedGraph g = random_connected_signed(rng, n, rng.below(4));
        SignedGraph h = switch_graph(g, random_theta(rng, n));
        auto sg = eigenvalues(g).values, sh = eigenvalues(h).values;
        for (size_t i = 0; i < sg.size(); ++i)
            CHECK(std::fabs(sg[i] - sh[i]) < 1e-10);
        auto cg = simple_cycles(g), ch = simple_cycles(h);
        REQUIRE(cg.size() == ch.size());
        for (size_t i = 0; i < cg.size(); ++i) {
            CHECK(cg[i].vertices == ch[i].vertices);
            CHECK(cg[i].sign == ch[i].sign);
        }
    }
}

TEST_CASE("normalize_signature on an infinity graph") {
    // B(3,3), left triangle all negative
    SignedGraph g(5, {{0, 1, -1}, {1, 2, -1}, {0, 2, -1}, {0, 3, 1}, {3, 4, 1}, {0, 4, 1}});
    auto [base, shape] = base_of(g);
    SignedGraph norm = normalize_signature(g, shape);
    int negs = 0;
    for (const auto& e : norm.edges()) negs += e.sign < 0;
    CHECK(negs == 1);
    CHECK(norm.sign_of(0, 1) == -1);  // lexicographically smallest edge of that triangle
    CHECK(switching_equivalent(g, norm).has_value());
    // idempotence
    CHECK(normalize_signature(norm, shape).edges() == norm.edges());
}

TEST_CASE("normalize_signature on a theta graph moves the negative edge to e3") {
    // paths (2,2,1) between 0 and 1; e1 = (0,1), e2 = (0,2), e3 = (0,3); e1, e2 negative
    SignedGraph g(4, {{0, 1, -1}, {0, 2, -1}, {1, 2, 1}, {0, 3, 1}, {1, 3, 1}});
    auto [base, shape] = base_of(g);
    SignedGraph norm = normalize_signature(g, shape);
    int negs = 0;
    for (const auto& e : norm.edges()) negs += e.sign < 0;
    CHECK(negs == 1);
    CHECK(norm.sign_of(0, 3) == -1);
    CHECK(switching_equivalent(g, norm).has_value());
}

TEST_CASE("normalize_signature rejects balanced and non-bicyclic input") {
    SignedGraph bal(5, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {0, 3, 1}, {3, 4, 1}, {0, 4, 1}});
    auto [base, shape] = base_of(bal);
    CHECK_THROWS_WITH_AS(normalize_signature(bal, shape), doctest::Contains("Balanced"), SgError);
    SignedGraph tree(3, {{0, 1, 1}, {1, 2, 1}});
    CHECK_THROWS_WITH_AS(normalize_signature(tree, shape), doctest::Contains("NotBicyclic"),
                         SgError);
}

TEST_CASE("normalize_signature is switching equivalent with the stated negative count") {
    Rng rng(53);
    for (int t = 0; t < 40; ++t) {
        SignedGraph g = random_unbalanced_bicyclic(rng, 6 + rng.below(5));
        auto [base, shape] = base_of(g);
        SignedGraph norm = normalize_signature(g, shape);
        CHECK(switching_equivalent(g, norm).has_value());
        int negs = 0;
        for (const auto& e : norm.edges()) negs += e.sign < 0;
        if (shape.type == BicyclicType::Theta) {
            CHECK(negs == 1);
        } else {
            int neg_cycles = 0;
            for (int s : shape.cycle_signs) neg_cycles += s < 0;
            CHECK(negs == neg_cycles);
        }
    }
}

TEST_CASE("theta serialization") {
    CHECK(theta_to_string({1, -1, 1}) == "+-+");
    CHECK(theta_from_string("+-+") == SwitchingFunction{1, -1, 1});
    CHECK_THROWS_AS(theta_from_string("+x"), SgError);
}
