#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "yao/constructions.hpp"
#include "yao/graph.hpp"
#include "yao/rng.hpp"

using namespace yao;

TEST_CASE("collinear_generic") {
    SUBCASE("single point") {
        const PointSet ps = collinear_generic(1, 4, 1);
        CHECK(ps.size() == 1);
    }
    SUBCASE("validates for a spread of k") {
        for (int k : {2, 3, 4, 5, 8, 12}) {
            const PointSet ps = collinear_generic(7, k, 10 + k);
            CHECK(ps.size() == 7);
            CHECK(is_general_position(ps).ok);
        }
    }
    SUBCASE("every point sees the others in at most two sectors") {
        const PointSet ps = collinear_generic(8, 5, 21);
        for (int p = 0; p < ps.size(); ++p) {
            std::set<int> sectors;
            for (int q = 0; q < ps.size(); ++q)
                if (q != p) sectors.insert(sector_index(ps.points[p], ps.points[q], ps.params));
            CHECK(sectors.size() <= 2);
        }
    }
}

TEST_CASE("triangle_k3") {
    const PointSet ps = triangle_k3();
    REQUIRE(ps.size() == 3);
    CHECK(ps.params.k == 3);
    CHECK(is_general_position(ps).ok);

    SUBCASE("centered at the origin") {
        double cx = 0, cy = 0;
        for (const Point& p : ps.points) {
            cx += p.x / 3;
            cy += p.y / 3;
        }
        CHECK(std::abs(cx) < 1e-6);
        CHECK(std::abs(cy) < 1e-6);
    }
    SUBCASE("each vertex sees the other two in a single sector") {
        for (int p = 0; p < 3; ++p) {
            std::set<int> sectors;
            for (int q = 0; q < 3; ++q)
                if (q != p) sectors.insert(sector_index(ps.points[p], ps.points[q], ps.params));
            CHECK(sectors.size() == 1);
        }
    }
}

TEST_CASE("figure9_k3") {
    SUBCASE("minimum size") {
        const PointSet ps = figure9_k3(4, 7);
        CHECK(ps.size() == 4);
        CHECK(is_general_position(ps).ok);
        CHECK_THROWS_AS(figure9_k3(3, 7), GuardError);
    }
    SUBCASE("A, B, C have outdegree at most 1 under every ordering") {
        const PointSet ps = figure9_k3(6, 8);
        REQUIRE(is_general_position(ps).ok);
        Ordering ord = identity_ordering(6);
        std::sort(ord.perm.begin(), ord.perm.end());
        do {
            const OrderedYaoGraph g = build_ordered(ps, ord);
            for (int v : {0, 1, 2}) CHECK(g.out_edges[v].size() <= 1);
        } while (std::next_permutation(ord.perm.begin(), ord.perm.end()));
    }
}

TEST_CASE("d3_hard") {
    SUBCASE("sizes and the unit circle") {
        for (int m : {1, 2, 4}) {
            const PointSet ps = d3_hard(m, 100 + m);
            CHECK(ps.size() == 6 * m);
            CHECK(is_general_position(ps).ok);
            for (const Point& p : ps.points)
                CHECK(std::abs(std::hypot(p.x, p.y) - 1.0) < 1e-3);
        }
    }
    SUBCASE("c_{m+1-j} f_j is the strictly shortest side of every witness triangle") {
        for (int m : {1, 2, 3}) {
            const PointSet ps = d3_hard(m, 200 + m);
            auto at = [&](int group, int i) { return ps.points[group * m + (i - 1)]; };
            for (int i = 1; i <= m; ++i) {
                for (int j = 1; j <= m; ++j) {
                    const Point a = at(0, i);
                    const Point c = at(2, m + 1 - j);
                    const Point f = at(5, j);
                    const double cf = dist(c, f);
                    CHECK(cf < dist(a, c));
                    CHECK(cf < dist(a, f));
                }
            }
        }
    }
}

TEST_CASE("wk_clique") {
    SUBCASE("even k=4 gives the rotated antipodal pair") {
        const PointSet ps = wk_clique(4);
        REQUIRE(ps.size() == 2);
        const double phi = 3.14159265358979323846 / (64.0 * 4);
        CHECK(ps.points[0].x == doctest::Approx(std::cos(phi)).epsilon(1e-12));
        CHECK(ps.points[0].y == doctest::Approx(std::sin(phi)).epsilon(1e-12));
        CHECK(ps.points[1].x == doctest::Approx(-std::cos(phi)).epsilon(1e-12));
        CHECK(ps.points[1].y == doctest::Approx(-std::sin(phi)).epsilon(1e-12));
    }
    SUBCASE("k=5 arguments follow the odd/even-m formula") {
        const PointSet ps = wk_clique(5);
        REQUIRE(ps.size() == 3);
        const double pi = 3.14159265358979323846;
        const double phi = pi / (64.0 * 5);
        const double expected[3] = {pi / 5 + phi, pi + phi, 8 * pi / 5 + phi};
        for (int i = 0; i < 3; ++i) {
            double arg = std::atan2(ps.points[i].y, ps.points[i].x);
            if (arg < 0) arg += kTwoPi;
            CHECK(arg == doctest::Approx(expected[i]).epsilon(1e-12));
        }
    }
    SUBCASE("every point sees the others in pairwise distinct sectors") {
        for (int k = 2; k <= 13; ++k) {
            const PointSet ps = wk_clique(k);
            CHECK(ps.size() == (k + 1) / 2);
            CHECK(is_general_position(ps).ok);
            for (int p = 0; p < ps.size(); ++p) {
                std::set<int> sectors;
                for (int q = 0; q < ps.size(); ++q) {
                    if (q == p) continue;
                    CHECK(sectors.insert(sector_index(ps.points[p], ps.points[q], ps.params)).second);
                }
            }
        }
    }
    SUBCASE("an oversized phi fails validation") {
        // a full sector turn puts pair directions back onto the rays
        CHECK_THROWS_AS(wk_clique(4, kTwoPi / 4.0), ValidationError);
    }
}

TEST_CASE("grid_hard") {
    SUBCASE("smallest grid") {
        const PointSet ps = grid_hard(4, 3, 5);
        CHECK(ps.size() == 4);
        CHECK(is_general_position(ps).ok);
    }
    SUBCASE("n=9, k=4 respects the distance envelope") {
        const PointSet ps = grid_hard(9, 4, 6);
        REQUIRE(ps.size() == 9);
        CHECK(is_general_position(ps).ok);
        double min_d = 1e18, max_d = 0;
        for (int a = 0; a < 9; ++a)
            for (int b = a + 1; b < 9; ++b) {
                min_d = std::min(min_d, dist(ps.points[a], ps.points[b]));
                max_d = std::max(max_d, dist(ps.points[a], ps.points[b]));
            }
        CHECK(min_d > 1.0);
        CHECK(max_d <= 5.0);
    }
    SUBCASE("no isosceles triangles survive the perturbation") {
        const PointSet ps = grid_hard(16, 6, 7);
        const double eps = distance_tolerance(ps);
        for (int a = 0; a < ps.size(); ++a)
            for (int b = a + 1; b < ps.size(); ++b)
                for (int c = b + 1; c < ps.size(); ++c) {
                    const double ab = dist(ps.points[a], ps.points[b]);
                    const double ac = dist(ps.points[a], ps.points[c]);
                    const double bc = dist(ps.points[b], ps.points[c]);
                    CHECK(std::abs(ab - ac) > eps);
                    CHECK(std::abs(ab - bc) > eps);
                    CHECK(std::abs(ac - bc) > eps);
                }
    }
    SUBCASE("non-square n fills from the outer grid") {
        const PointSet ps = grid_hard(11, 4, 8);
        CHECK(ps.size() == 11);
        CHECK(is_general_position(ps).ok);
    }
}

TEST_CASE("random_validated output is validated") {
    for (int trial = 0; trial < 10; ++trial) {
        const PointSet ps = random_validated(30, 3 + trial % 5, trial);
        CHECK(is_general_position(ps).ok);
    }
}
