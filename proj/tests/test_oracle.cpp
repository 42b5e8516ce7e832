#include <doctest.h>

#include <algorithm>

#include "yao/constructions.hpp"
#include "yao/oracle.hpp"
#include "yao/orderings.hpp"
#include "yao/rng.hpp"

using namespace yao;

namespace {

long long metric_of(const GraphStats& s, Metric m) {
    switch (m) {
        case Metric::Edges: return s.edges;
        case Metric::MaxIndegree: return s.max_indegree;
        case Metric::Clique: return s.clique_number;
    }
    return 0;
}

} // namespace

TEST_CASE("unrank agrees with lexicographic enumeration") {
    std::vector<int> perm{0, 1, 2, 3};
    std::uint64_t rank = 0;
    do {
        CHECK(unrank_permutation(rank, 4) == perm);
        ++rank;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(rank == factorial(4));
}

TEST_CASE("exhaustive search on the k=3 triangle witness") {
    const PointSet ps = triangle_k3();
    SearchSpec spec;
    spec.metric = Metric::Clique;
    spec.objective = Objective::Maximize;
    const SearchResult clique_max = search(ps, spec);
    CHECK(clique_max.value == 2);
    CHECK(clique_max.orderings_examined == 6);

    spec.metric = Metric::Edges;
    const SearchResult edges_max = search(ps, spec);
    spec.objective = Objective::Minimize;
    const SearchResult edges_min = search(ps, spec);
    CHECK(edges_max.value == 2); // every ordering yields exactly two edges
    CHECK(edges_min.value == 2);
}

TEST_CASE("collinear sets never grow a 4-clique or beat 2n-3 edges") {
    const PointSet ps = collinear_generic(6, 5, 77);
    SearchSpec spec;
    spec.metric = Metric::Clique;
    spec.objective = Objective::Maximize;
    CHECK(search(ps, spec).value <= 3);
    spec.metric = Metric::Edges;
    CHECK(search(ps, spec).value <= 9);
}

TEST_CASE("sampled sweep of the n=9 grid stays above the derived floor") {
    const PointSet ps = grid_hard(9, 4, 123);
    SearchSpec spec;
    spec.metric = Metric::Edges;
    spec.objective = Objective::Minimize;
    spec.exhaustive = false;
    spec.samples = 1000;
    spec.seed = 7;
    // floor = 9*ceil(4/2) - 0.188*16*sqrt(9), i.e. just below the true
    // minimum of 9 found by the exhaustive sweep
    CHECK(static_cast<double>(search(ps, spec).value) >= 18.0 - 0.188 * 16 * 3);
}

TEST_CASE("three points can always be ordered into a triangle (k=4)") {
    for (int trial = 0; trial < 10; ++trial) {
        const PointSet ps = random_validated(3, 4, mix_seed(1111, trial));
        SearchSpec spec;
        spec.metric = Metric::Clique;
        spec.objective = Objective::Maximize;
        CHECK(search(ps, spec).value == 3);
    }
}

TEST_CASE("d3 hard instance at m=1 peaks at max indegree 4") {
    const PointSet ps = d3_hard(1, 1);
    SearchSpec spec;
    spec.metric = Metric::MaxIndegree;
    spec.objective = Objective::Maximize;
    const SearchResult r = search(ps, spec);
    CHECK(r.value == 4); // 5*ceil(6/6)-1, attained
    CHECK(r.orderings_examined == 720);
    // witness replays to the same value
    CHECK(metric_of(stats(build_ordered(ps, r.witness)), Metric::MaxIndegree) == r.value);
}

TEST_CASE("witness replay reproduces the extremal value") {
    auto rng = make_rng(2222);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 5));
        const int k = 2 + static_cast<int>(uniform_below(rng, 7));
        const PointSet ps = random_validated(n, k, mix_seed(2222, trial));
        SearchSpec spec;
        spec.metric = static_cast<Metric>(trial % 3);
        spec.objective = trial % 2 ? Objective::Minimize : Objective::Maximize;
        const SearchResult r = search(ps, spec);
        CHECK(metric_of(stats(build_ordered(ps, r.witness)), spec.metric) == r.value);
    }
}

TEST_CASE("results are independent of the worker count") {
    const PointSet ps = random_validated(7, 5, 3333);
    for (Metric m : {Metric::Edges, Metric::MaxIndegree, Metric::Clique}) {
        for (Objective o : {Objective::Minimize, Objective::Maximize}) {
            SearchSpec one;
            one.metric = m;
            one.objective = o;
            one.threads = 1;
            SearchSpec many = one;
            many.threads = 4;
            const SearchResult a = search(ps, one);
            const SearchResult b = search(ps, many);
            CHECK(a.value == b.value);
            CHECK(a.witness.perm == b.witness.perm);
        }
    }
}

TEST_CASE("sampled mode") {
    const PointSet ps = random_validated(8, 4, 4444);
    SearchSpec sampled;
    sampled.exhaustive = false;
    sampled.samples = 500;
    sampled.seed = 9;
    sampled.metric = Metric::Edges;
    sampled.objective = Objective::Maximize;

    SearchSpec full;
    full.metric = Metric::Edges;
    full.objective = Objective::Maximize;

    const SearchResult s = search(ps, sampled);
    const SearchResult f = search(ps, full);
    CHECK(s.value <= f.value); // sampling never beats the exhaustive extremum
    CHECK(s.orderings_examined == 500);
    CHECK(metric_of(stats(build_ordered(ps, s.witness)), Metric::Edges) == s.value);

    // deterministic in the seed, regardless of threads
    SearchSpec again = sampled;
    again.threads = 3;
    CHECK(search(ps, again).witness.perm == s.witness.perm);

    sampled.objective = Objective::Minimize;
    full.objective = Objective::Minimize;
    CHECK(search(ps, sampled).value >= search(ps, full).value);
}

TEST_CASE("guards") {
    const PointSet big = random_validated(10, 3, 5555);
    SearchSpec spec;
    CHECK_THROWS_AS(search(big, spec), GuardError);

    SearchSpec no_samples;
    no_samples.exhaustive = false;
    no_samples.samples = 0;
    const PointSet small = random_validated(4, 3, 5556);
    CHECK_THROWS_AS(search(small, no_samples), GuardError);

    const PointSet degenerate =
        make_point_set({{0, 0}, {1, 0}, {2, 0.5}}, make_params(4)); // pair on l0
    CHECK_THROWS_AS(search(degenerate, SearchSpec{}), ValidationError);
}

TEST_CASE("certify_bound") {
    SUBCASE("collinear sets never exceed 2n-3 edges") {
        const PointSet ps = collinear_generic(5, 5, 42);
        SearchSpec spec;
        spec.metric = Metric::Edges;
        spec.objective = Objective::Maximize;
        const CertifyOutcome out = certify_bound(ps, spec, BoundOp::AtMost, 7);
        CHECK(out.ok);
        CHECK_FALSE(out.counterexample.has_value());
    }
    SUBCASE("the k=6 clique set forces a triangle under every ordering") {
        const PointSet ps = wk_clique(6);
        SearchSpec spec;
        spec.metric = Metric::Clique;
        spec.objective = Objective::Minimize;
        const CertifyOutcome out = certify_bound(ps, spec, BoundOp::AtLeast, 3);
        CHECK(out.ok);
    }
    SUBCASE("a false bound comes back with a witness") {
        const PointSet ps = random_validated(3, 4, 43);
        SearchSpec spec;
        spec.metric = Metric::Edges;
        spec.objective = Objective::Maximize;
        const CertifyOutcome out = certify_bound(ps, spec, BoundOp::AtMost, 1);
        CHECK_FALSE(out.ok);
        REQUIRE(out.counterexample.has_value());
        CHECK(stats(build_ordered(ps, *out.counterexample)).edges > 1);
    }
}

TEST_CASE("progress callback reaches the total") {
    const PointSet ps = random_validated(5, 3, 44);
    SearchSpec spec;
    std::uint64_t last = 0, total = 0;
    search(ps, spec, [&](std::uint64_t done, std::uint64_t t) {
        last = done;
        total = t;
    });
    CHECK(last == total);
    CHECK(total == 120);
}

TEST_CASE("greedy edge-max never beats the oracle and es never dips below it") {
    auto rng = make_rng(6666);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + static_cast<int>(uniform_below(rng, 5)); // n <= 7
        const int k = 3 + static_cast<int>(uniform_below(rng, 5));
        const PointSet ps = random_validated(n, k, mix_seed(6666, trial));

        SearchSpec spec;
        spec.metric = Metric::Edges;
        spec.objective = Objective::Maximize;
        const long long best = search(ps, spec).value;
        spec.objective = Objective::Minimize;
        const long long worst = search(ps, spec).value;

        const long long greedy = stats(build_ordered(ps, greedy_edge_max(ps).ordering)).edges;
        const long long es = stats(build_ordered(ps, es_edge_min(ps).ordering)).edges;
        CHECK(greedy <= best);
        CHECK(es >= worst);
    }
}
