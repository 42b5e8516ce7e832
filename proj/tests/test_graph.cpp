#include <doctest.h>

#include <algorithm>
#include <set>

#include "yao/constructions.hpp"
#include "yao/graph.hpp"
#include "yao/reference.hpp"
#include "yao/rng.hpp"

using namespace yao;

namespace {

std::set<std::pair<int, int>> directed_edges(const OrderedYaoGraph& g) {
    std::set<std::pair<int, int>> out;
    for (int u = 0; u < g.n; ++u)
        for (const YaoEdge& e : g.out_edges[u]) out.insert({u, e.target});
    return out;
}

Ordering random_ordering(int n, std::mt19937_64& rng) {
    Ordering ord = identity_ordering(n);
    deterministic_shuffle(ord.perm, rng);
    return ord;
}

} // namespace

TEST_CASE("hand-simulated k=2 build") {
    const PointSet ps = make_point_set({{0, 0}, {1, 2}, {2, 1}}, make_params(2));
    const OrderedYaoGraph g = build_ordered(ps, identity_ordering(3));

    CHECK(directed_edges(g) == std::set<std::pair<int, int>>{{1, 0}, {2, 0}, {2, 1}});
    const GraphStats s = stats(g);
    CHECK(s.edges == 3);
    CHECK(s.max_indegree == 2);
    CHECK(s.clique_number == 3);
    CHECK(s.acyclic);
}

TEST_CASE("single point builds an empty graph") {
    const PointSet ps = make_point_set({{0.5, 0.5}}, make_params(4));
    const OrderedYaoGraph g = build_ordered(ps, identity_ordering(1));
    CHECK(g.edge_count() == 0);
    const GraphStats s = stats(g);
    CHECK(s.edges == 0);
    CHECK(s.clique_number == 1);
    CHECK(s.acyclic);
}

TEST_CASE("k=1 ordered graphs are trees") {
    auto rng = make_rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 9));
        const PointSet ps = random_validated(n, 1, mix_seed(41, trial));
        const OrderedYaoGraph g = build_ordered(ps, random_ordering(n, rng));
        CHECK(g.edge_count() == n - 1);
        CHECK(is_acyclic(g));
    }
}

TEST_CASE("build rejects invalid permutations") {
    const PointSet ps = make_point_set({{0, 0}, {1, 2}, {2, 1}}, make_params(2));
    CHECK_THROWS_AS(build_ordered(ps, Ordering{{0, 1}}), GuardError);
    CHECK_THROWS_AS(build_ordered(ps, Ordering{{0, 1, 1}}), GuardError);
    CHECK_THROWS_AS(build_ordered(ps, Ordering{{0, 1, 3}}), GuardError);
}

TEST_CASE("unordered builder") {
    SUBCASE("two points link both ways") {
        const PointSet ps = make_point_set({{0, 0.05}, {1, 0.4}}, make_params(2));
        const OrderedYaoGraph g = build_unordered(ps);
        CHECK(directed_edges(g) == std::set<std::pair<int, int>>{{0, 1}, {1, 0}});
        CHECK_FALSE(g.ordered());
    }
    SUBCASE("single point") {
        const PointSet ps = make_point_set({{3, 3}}, make_params(5));
        CHECK(build_unordered(ps).edge_count() == 0);
    }
    SUBCASE("rotated unit square has outdegree two everywhere") {
        PointSet ps = make_point_set({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, make_params(4));
        ps = rotate(ps, 0.02); // nudges every direction off the axes
        REQUIRE(is_general_position(ps).ok);
        const OrderedYaoGraph g = build_unordered(ps);
        for (int v = 0; v < g.n; ++v) CHECK(g.out_edges[v].size() == 2);
    }
}

TEST_CASE("clique number on hand graphs") {
    OrderedYaoGraph triangle;
    triangle.n = 3;
    triangle.k = 3;
    triangle.order_position = {0, 1, 2};
    triangle.out_edges = {{}, {{0, 0}}, {{0, 0}, {1, 1}}};
    CHECK(clique_number(triangle) == 3);

    OrderedYaoGraph star; // K_{1,4}: later leaves all point at vertex 0
    star.n = 5;
    star.k = 4;
    star.order_position = {0, 1, 2, 3, 4};
    star.out_edges = {{}, {{0, 0}}, {{0, 1}}, {{0, 2}}, {{0, 3}}};
    CHECK(clique_number(star) == 2);

    OrderedYaoGraph big_k;
    big_k.k = 30;
    big_k.n = 1;
    big_k.order_position = {0};
    big_k.out_edges = {{}};
    CHECK_THROWS_AS(clique_number(big_k), GuardError);
}

TEST_CASE("structural invariants on random builds") {
    auto rng = make_rng(43);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 9));
        const int k = 1 + static_cast<int>(uniform_below(rng, 8));
        const PointSet ps = random_validated(n, k, mix_seed(43, trial));
        const Ordering ord = random_ordering(n, rng);
        const OrderedYaoGraph g = build_ordered(ps, ord);

        int max_outdeg = 0;
        for (int u = 0; u < n; ++u) {
            std::set<int> sectors;
            for (const YaoEdge& e : g.out_edges[u]) {
                CHECK(g.order_position[e.target] < g.order_position[u]); // backward edges only
                CHECK(sectors.insert(e.sector).second);                  // one edge per sector
            }
            const int outdeg = static_cast<int>(g.out_edges[u].size());
            max_outdeg = std::max(max_outdeg, outdeg);
            CHECK(outdeg <= std::min(k, g.order_position[u]));
        }
        CHECK(clique_number(g) <= 1 + max_outdeg);
        CHECK(is_acyclic(g));

        const GraphStats s = stats(g);
        long long in_sum = 0, out_sum = 0;
        for (int v = 0; v < n; ++v) {
            in_sum += s.indeg[v];
            out_sum += s.outdeg[v];
        }
        CHECK(s.edges == in_sum);
        CHECK(s.edges == out_sum);
    }
}

TEST_CASE("production builder matches the naive oracle") {
    auto rng = make_rng(47);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 6)); // n <= 7
        const int k = 1 + static_cast<int>(uniform_below(rng, 9));
        const PointSet ps = random_validated(n, k, mix_seed(47, trial));
        const Ordering ord = random_ordering(n, rng);
        const OrderedYaoGraph fast = build_ordered(ps, ord);
        const OrderedYaoGraph slow = reference::build_ordered(ps, ord);
        CHECK(reference::same_edge_set(fast, slow));
    }
}

TEST_CASE("clique search matches subset enumeration") {
    auto rng = make_rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + static_cast<int>(uniform_below(rng, 10));
        const int k = 2 + static_cast<int>(uniform_below(rng, 7));
        const PointSet ps = random_validated(n, k, mix_seed(53, trial));
        const OrderedYaoGraph g = build_ordered(ps, random_ordering(n, rng));
        CHECK(clique_number(g) == reference::clique_number(g));

        const OrderedYaoGraph u = build_unordered(ps);
        CHECK(clique_number(u) == reference::clique_number(u));
    }
}
