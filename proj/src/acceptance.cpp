#include "yao/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <set>
#include <sstream>

#include "yao/constructions.hpp"
#include "yao/oracle.hpp"
#include "yao/orderings.hpp"
#include "yao/reference.hpp"
#include "yao/rng.hpp"

namespace yao::accept {

namespace {

constexpr std::uint64_t kBaseSeed = 0x59414f414343ULL;

std::uint64_t run_seed(int criterion, int k, int run) {
    return mix_seed(kBaseSeed, (static_cast<std::uint64_t>(criterion) << 40) ^
                                   (static_cast<std::uint64_t>(k) << 20) ^
                                   static_cast<std::uint64_t>(run));
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Detail {
  public:
    template <typename T>
    Detail& operator<<(const T& v) {
        stream_ << v;
        return *this;
    }
    std::string str() const { return stream_.str(); }

  private:
    std::ostringstream stream_;
};

int ceil_half(int k) { return (k + 1) / 2; }

int apex_indegree(const OrderedYaoGraph& g, int apex) {
    int d = 0;
    for (int u = 0; u < g.n; ++u)
        for (const YaoEdge& e : g.out_edges[u])
            if (e.target == apex) ++d;
    return d;
}

// 1. degree_maximizing reaches n-1 for even k.
Outcome even_k_degree_max() {
    Detail d;
    int worst = 1 << 30;
    for (int k : {2, 4, 8}) {
        for (int run = 0; run < 100; ++run) {
            const PointSet ps = random_validated(25, k, run_seed(1, k, run));
            const GraphStats s = stats(build_ordered(ps, degree_maximizing(ps).ordering));
            worst = std::min(worst, s.max_indegree);
            if (s.max_indegree != 24) {
                d << "k=" << k << " run=" << run << " max indegree " << s.max_indegree
                  << " != 24";
                return {false, d.str()};
            }
        }
    }
    d << "max indegree 24 on 300/300 runs (k in {2,4,8}, n=25)";
    return {true, d.str()};
}

// 2. radial ordering reaches n-1 for k >= 6.
Outcome radial_full_indegree() {
    Detail d;
    for (int k : {6, 7, 9}) {
        for (int run = 0; run < 100; ++run) {
            const PointSet ps = random_validated(25, k, run_seed(2, k, run));
            const int apex = run % 25;
            const OrderedYaoGraph g = build_ordered(ps, radial(ps, apex).ordering);
            const int indeg = apex_indegree(g, apex);
            if (indeg != 24) {
                d << "k=" << k << " run=" << run << " indeg(apex)=" << indeg << " != 24";
                return {false, d.str()};
            }
        }
    }
    d << "indeg(apex) 24 on 300/300 runs (k in {6,7,9}, n=25)";
    return {true, d.str()};
}

// 3. k=5 reaches 2/3(n-1).
Outcome k5_two_thirds() {
    Detail d;
    int worst = 1 << 30;
    for (int run = 0; run < 100; ++run) {
        const PointSet ps = random_validated(31, 5, run_seed(3, 5, run));
        const GraphStats s = stats(build_ordered(ps, degree_maximizing(ps).ordering));
        worst = std::min(worst, s.max_indegree);
        if (s.max_indegree < 20) {
            d << "run=" << run << " max indegree " << s.max_indegree << " < 20";
            return {false, d.str()};
        }
    }
    d << "max indegree >= 20 on 100/100 runs (worst " << worst << ", n=31)";
    return {true, d.str()};
}

// 4. k=3 reaches (n-1)/2.
Outcome k3_one_half() {
    Detail d;
    int worst = 1 << 30;
    for (int run = 0; run < 100; ++run) {
        const PointSet ps = random_validated(21, 3, run_seed(4, 3, run));
        const GraphStats s = stats(build_ordered(ps, degree_maximizing(ps).ordering));
        worst = std::min(worst, s.max_indegree);
        if (s.max_indegree < 10) {
            d << "run=" << run << " max indegree " << s.max_indegree << " < 10";
            return {false, d.str()};
        }
    }
    d << "max indegree >= 10 on 100/100 runs (worst " << worst << ", n=21)";
    return {true, d.str()};
}

// 5. the m=1 hard instance caps every ordering at max indegree 4.
Outcome d3_hard_cap() {
    Detail d;
    const PointSet ps = d3_hard(1, run_seed(5, 3, 0));
    SearchSpec spec;
    spec.metric = Metric::MaxIndegree;
    spec.objective = Objective::Maximize;
    const SearchResult r = search(ps, spec);
    if (r.value > 4) {
        d << "exhaustive max of max indegree " << r.value << " > 4";
        return {false, d.str()};
    }
    const GraphStats s = stats(build_ordered(ps, degree_maximizing(ps).ordering));
    if (s.max_indegree < 3) {
        d << "degree_maximizing reached only " << s.max_indegree << " < 3";
        return {false, d.str()};
    }
    d << "exhaustive cap " << r.value << " <= 4 over 720 orderings; strategy reached "
      << s.max_indegree << " >= 3";
    return {true, d.str()};
}

// 6. a 3-clique can always be forced; the k=3 triangle is the lone exception.
Outcome clique_always_three() {
    Detail d;
    for (int k = 2; k <= 9; ++k) {
        const int n = k == 3 ? 4 : 3;
        for (int run = 0; run < 100; ++run) {
            const PointSet ps = random_validated(n, k, run_seed(6, k, run));
            const StrategyOutcome out = clique_forcing(ps);
            const OrderedYaoGraph g = build_ordered(ps, out.ordering);
            if (!check_promises(out, g).empty() || clique_number(g) < 3) {
                d << "k=" << k << " run=" << run << " forcing triple is not a triangle";
                return {false, d.str()};
            }
        }
    }

    const PointSet tri = triangle_k3();
    SearchSpec spec;
    spec.metric = Metric::Edges;
    spec.objective = Objective::Maximize;
    const long long emax = search(tri, spec).value;
    spec.objective = Objective::Minimize;
    const long long emin = search(tri, spec).value;
    spec.metric = Metric::Clique;
    spec.objective = Objective::Maximize;
    const long long wmax = search(tri, spec).value;
    if (emax != 2 || emin != 2 || wmax != 2) {
        d << "triangle witness: edges in [" << emin << "," << emax << "], clique max " << wmax
          << " (expected exactly 2 everywhere)";
        return {false, d.str()};
    }
    d << "800/800 forcing triples; triangle witness pinned at 2 edges / clique 2";
    return {true, d.str()};
}

// 7. the root-of-unity sets form a clique under every ordering.
Outcome unavoidable_cliques() {
    Detail d;
    for (int k = 4; k <= 12; ++k) {
        const PointSet ps = wk_clique(k);
        const int size = ps.size();

        for (int p = 0; p < size; ++p) {
            std::set<int> sectors;
            for (int q = 0; q < size; ++q) {
                if (q == p) continue;
                if (!sectors.insert(sector_index(ps.points[p], ps.points[q], ps.params)).second) {
                    d << "k=" << k << ": point " << p << " sees two others in one sector";
                    return {false, d.str()};
                }
            }
        }

        SearchSpec spec;
        spec.metric = Metric::Edges;
        spec.objective = Objective::Minimize;
        const long long emin = search(ps, spec).value;
        const long long complete = static_cast<long long>(size) * (size - 1) / 2;
        if (emin != complete) {
            d << "k=" << k << ": some ordering yields " << emin << " < " << complete
              << " edges";
            return {false, d.str()};
        }
        spec.metric = Metric::Clique;
        const long long wmin = search(ps, spec).value;
        if (wmin != size) {
            d << "k=" << k << ": some ordering yields clique " << wmin << " < " << size;
            return {false, d.str()};
        }
    }
    d << "complete graph under every ordering for k=4..12 (ceil(k/2)! sweeps)";
    return {true, d.str()};
}

// 8. guaranteed edge maximization and its two sharp witnesses.
Outcome edge_maximization() {
    Detail d;
    for (int k : {2, 3, 4, 5, 6}) {
        const long long bound = k == 3 ? 36 : 37; // 2n-4 / 2n-3 at n=20
        for (int run = 0; run < 100; ++run) {
            const PointSet ps = random_validated(20, k, run_seed(8, k, run));
            const long long edges = stats(build_ordered(ps, greedy_edge_max(ps).ordering)).edges;
            if (edges < bound) {
                d << "k=" << k << " run=" << run << " edges " << edges << " < " << bound;
                return {false, d.str()};
            }
        }
    }

    SearchSpec spec;
    spec.metric = Metric::Edges;
    spec.objective = Objective::Maximize;
    for (int k : {4, 5}) {
        const PointSet line = collinear_generic(6, k, run_seed(8, 100 + k, 0));
        const long long best = search(line, spec).value;
        if (best != 9) {
            d << "collinear n=6 k=" << k << ": exhaustive max edges " << best << " != 9";
            return {false, d.str()};
        }
    }
    const PointSet fig = figure9_k3(6, run_seed(8, 200, 0));
    const long long best = search(fig, spec).value;
    if (best != 8) {
        d << "figure-9 witness n=6: exhaustive max edges " << best << " != 8";
        return {false, d.str()};
    }
    d << "greedy >= 2n-3 (2n-4 at k=3) on 500/500 runs; witnesses peak at 9 and 8";
    return {true, d.str()};
}

// 9. the Erdos-Szekeres ordering obeys its caps at scale.
Outcome edge_minimization() {
    Detail d;
    for (int n : {50, 100, 200}) {
        const int root = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)) - 1e-9));
        for (int k : {3, 5, 7, 8}) {
            const long long cap = static_cast<long long>(ceil_half(k)) * n -
                                  static_cast<long long>(root) * ((k + 1) / 4);
            for (int run = 0; run < 100; ++run) {
                const PointSet ps = random_validated(n, k, run_seed(9, k * 1000 + n, run));
                const StrategyOutcome out = es_edge_min(ps);
                const OrderedYaoGraph g = build_ordered(ps, out.ordering);
                if (!check_promises(out, g).empty()) {
                    d << "n=" << n << " k=" << k << " run=" << run << " per-vertex caps failed";
                    return {false, d.str()};
                }
                if (g.edge_count() > cap) {
                    d << "n=" << n << " k=" << k << " run=" << run << " edges "
                      << g.edge_count() << " > " << cap;
                    return {false, d.str()};
                }
            }
            const PointSet grid = grid_hard(n, k, run_seed(9, k, n));
            const StrategyOutcome out = es_edge_min(grid);
            const OrderedYaoGraph g = build_ordered(grid, out.ordering);
            if (!check_promises(out, g).empty() || g.edge_count() > cap) {
                d << "grid n=" << n << " k=" << k << ": edges " << g.edge_count()
                  << " over cap " << cap << " or caps failed";
                return {false, d.str()};
            }
        }
    }
    d << "edges <= n*ceil(k/2) - ceil(sqrt(n))*floor((k+1)/4) and per-vertex caps on "
      << "1200 random + 12 grid instances";
    return {true, d.str()};
}

// 10. grid sets keep their edge count near the ceiling under any ordering.
// The slack constant is pinned from the n=9 exhaustive sweeps (seeds are
// run_seed(10, k, 9)):
//   yao search --construction grid --n 9 --k 4 --seed 553316876181571587
//       --metric edges --objective min --exhaustive        = 9
//   yao search --construction grid --n 9 --k 6 --seed 2893402159429769803
//       --metric edges --objective min --exhaustive        = 16
// c = max over k of (9*ceil(k/2) - min_edges) / (k^2 * sqrt(9))
//   = max(9/48, 11/108) = 0.1875, rounded up to three decimals.
constexpr double kGridSlackConstant = 0.188;

Outcome grid_lower_bound() {
    Detail d;
    for (int k : {4, 6}) {
        const int n = 49;
        const PointSet ps = grid_hard(n, k, run_seed(10, k, n));
        const double floor_bound =
            ceil_half(k) * static_cast<double>(n) - kGridSlackConstant * k * k * std::sqrt(n);

        SearchSpec spec;
        spec.metric = Metric::Edges;
        spec.objective = Objective::Minimize;
        spec.exhaustive = false;
        spec.samples = 2000;
        spec.seed = run_seed(10, k, 0);
        const long long sampled_min = search(ps, spec).value;

        const long long es = stats(build_ordered(ps, es_edge_min(ps).ordering)).edges;
        const long long observed = std::min(sampled_min, es);
        if (static_cast<double>(observed) < floor_bound) {
            d << "k=" << k << ": observed min " << observed << " < floor " << floor_bound;
            return {false, d.str()};
        }
        d << "k=" << k << ": min(sampled " << sampled_min << ", es " << es << ") >= floor "
          << floor_bound << "; ";
    }
    d << "c=" << kGridSlackConstant << " from the n=9 exhaustive sweep";
    return {true, d.str()};
}

// 11. structural graph laws.
Outcome structural_invariants() {
    Detail d;
    auto rng = make_rng(kBaseSeed ^ 11);

    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 9));
        const int k = 1 + static_cast<int>(uniform_below(rng, 9));
        const PointSet ps = random_validated(n, k, run_seed(11, k, trial));
        Ordering ord = identity_ordering(n);
        deterministic_shuffle(ord.perm, rng);
        const OrderedYaoGraph g = build_ordered(ps, ord);

        int max_outdeg = 0;
        for (int u = 0; u < n; ++u) {
            std::set<int> sectors;
            for (const YaoEdge& e : g.out_edges[u]) {
                if (g.order_position[e.target] >= g.order_position[u])
                    return {false, "backward-edge law violated"};
                if (!sectors.insert(e.sector).second)
                    return {false, "two edges in one sector"};
            }
            const int outdeg = static_cast<int>(g.out_edges[u].size());
            max_outdeg = std::max(max_outdeg, outdeg);
            if (outdeg > std::min(k, g.order_position[u]))
                return {false, "outdegree cap violated"};
        }
        if (clique_number(g) > 1 + max_outdeg)
            return {false, "clique exceeded 1 + max outdegree"};

        if (k == 1 && (g.edge_count() != n - 1 || !is_acyclic(g)))
            return {false, "k=1 graph is not an (n-1)-edge acyclic graph"};
    }

    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 9));
        const PointSet ps = random_validated(n, 1, run_seed(11, 1, 1000 + trial));
        Ordering ord = identity_ordering(n);
        deterministic_shuffle(ord.perm, rng);
        const OrderedYaoGraph g = build_ordered(ps, ord);
        if (g.edge_count() != n - 1 || !is_acyclic(g))
            return {false, "k=1 graph is not an (n-1)-edge acyclic graph"};
    }

    for (int trial = 0; trial < 100000; ++trial) {
        const int k = 1 + static_cast<int>(uniform_below(rng, 24));
        const SectorParams params = make_params(k, uniform01(rng) * kTwoPi / k);
        const Point p{uniform01(rng) * 10 - 5, uniform01(rng) * 10 - 5};
        const Point q{uniform01(rng) * 10 - 5, uniform01(rng) * 10 - 5};
        if (p.x == q.x && p.y == q.y) continue;
        if (sector_index(p, q, params) != dual_sector_index(q, p, params))
            return {false, "sector/dual duality violated"};
    }

    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 6));
        const int k = 1 + static_cast<int>(uniform_below(rng, 9));
        const PointSet ps = random_validated(n, k, run_seed(11, k, 2000 + trial));
        Ordering ord = identity_ordering(n);
        deterministic_shuffle(ord.perm, rng);
        if (!reference::same_edge_set(build_ordered(ps, ord), reference::build_ordered(ps, ord)))
            return {false, "production and naive builders disagree"};
    }

    d << "backward edges, sector uniqueness, outdegree caps, clique law, k=1 trees, "
      << "100k duality pairs, naive-builder equivalence";
    return {true, d.str()};
}

struct Spec {
    int id;
    const char* name;
    double budget_seconds;
    Outcome (*run)();
};

const Spec kCriteria[] = {
    {1, "even-k degree maximization reaches n-1", 5.0, even_k_degree_max},
    {2, "radial ordering reaches n-1 for k >= 6", 5.0, radial_full_indegree},
    {3, "k=5 degree maximization reaches 2/3 (n-1)", 5.0, k5_two_thirds},
    {4, "k=3 degree maximization reaches (n-1)/2", 5.0, k3_one_half},
    {5, "d3 hard instance caps max indegree at 4", 10.0, d3_hard_cap},
    {6, "a 3-clique can always be forced (triangle witness excepted)", 10.0, clique_always_three},
    {7, "root-of-unity sets force a clique under every ordering", 30.0, unavoidable_cliques},
    {8, "edge maximization: 2n-3 guaranteed, witnesses sharp", 60.0, edge_maximization},
    {9, "edge minimization caps hold at n up to 200", 60.0, edge_minimization},
    {10, "grid sets stay near the edge ceiling under sampling", 120.0, grid_lower_bound},
    {11, "structural invariant suite", 30.0, structural_invariants},
};

const Spec* find_criterion(int id) {
    for (const Spec& c : kCriteria)
        if (c.id == id) return &c;
    return nullptr;
}

} // namespace

std::vector<int> suite_criteria(const std::string& suite) {
    if (suite == "degrees") return {1, 2, 3, 4, 5};
    if (suite == "cliques") return {6, 7};
    if (suite == "edges") return {8, 9, 10};
    if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    throw GuardError("unknown suite: " + suite + " (expected degrees|edges|cliques|all)");
}

CriterionResult run_criterion(int id) {
    const Spec* spec = find_criterion(id);
    if (!spec) throw GuardError("unknown criterion " + std::to_string(id));

    CriterionResult result;
    result.id = id;
    result.name = spec->name;

    const auto started = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = spec->run();
    } catch (const std::exception& e) {
        outcome = {false, std::string("exception: ") + e.what()};
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    result.pass = outcome.pass && result.seconds < spec->budget_seconds;
    result.detail = outcome.detail;
    if (outcome.pass && result.seconds >= spec->budget_seconds) {
        result.detail += " [over the " + std::to_string(spec->budget_seconds) + "s budget]";
    }
    return result;
}

bool run_suite(const std::string& suite, const std::function<void(const CriterionResult&)>& emit) {
    bool all_pass = true;
    for (int id : suite_criteria(suite)) {
        const CriterionResult r = run_criterion(id);
        all_pass = all_pass && r.pass;
        if (emit) emit(r);
    }
    return all_pass;
}

std::string format_line(const CriterionResult& r) {
    std::ostringstream out;
    out << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": " << r.name << " ("
        << r.detail << ") [" << r.seconds << "s]";
    return out.str();
}

} // namespace yao::accept
