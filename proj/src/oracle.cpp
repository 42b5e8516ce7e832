#include "yao/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "yao/rng.hpp"

namespace yao {

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::vector<int> unrank_permutation(std::uint64_t rank, int n) {
    std::vector<int> avail(n);
    std::iota(avail.begin(), avail.end(), 0);
    std::vector<int> perm;
    perm.reserve(n);
    for (int i = 0; i < n; ++i) {
        const std::uint64_t f = factorial(n - 1 - i);
        const auto d = static_cast<std::size_t>(rank / f);
        rank %= f;
        perm.push_back(avail[d]);
        avail.erase(avail.begin() + static_cast<long>(d));
    }
    return perm;
}

namespace {

// Ordering-independent tables: every permutation is then evaluated with
// plain lookups instead of trigonometry. Per point, the other points sorted
// by (sector, distance, tie offset, index); on a validated set the first
// predecessor in this list per sector is exactly the build_ordered target.
struct Evaluator {
    int n = 0;
    int k = 0;
    Metric metric;
    std::vector<std::vector<std::pair<int, int>>> pref; // per point: (sector, candidate)

    Evaluator(const PointSet& ps, Metric metric) : n(ps.size()), k(ps.params.k), metric(metric) {
        pref.resize(n);
        for (int p = 0; p < n; ++p) {
            struct Row {
                int sector;
                double distance;
                double offset;
                int index;
            };
            std::vector<Row> rows;
            rows.reserve(n - 1);
            for (int q = 0; q < n; ++q) {
                if (q == p) continue;
                const SectorHit hit = sector_hit(ps.points[p], ps.points[q], ps.params);
                rows.push_back({hit.index, dist(ps.points[p], ps.points[q]), hit.offset, q});
            }
            std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
                if (a.sector != b.sector) return a.sector < b.sector;
                if (a.distance != b.distance) return a.distance < b.distance;
                if (a.offset != b.offset) return a.offset < b.offset;
                return a.index < b.index;
            });
            pref[p].reserve(rows.size());
            for (const Row& r : rows) pref[p].push_back({r.sector, r.index});
        }
    }

    // Scratch buffers reused across permutations (one Evaluator per worker).
    mutable std::vector<int> pos_of, indeg;
    mutable std::vector<std::vector<int>> targets;

    long long evaluate(const std::vector<int>& perm) const {
        pos_of.assign(n, 0);
        for (int i = 0; i < n; ++i) pos_of[perm[i]] = i;

        long long edges = 0;
        if (metric != Metric::Edges) indeg.assign(n, 0);
        if (metric == Metric::Clique) {
            targets.assign(n, {});
        }

        for (int i = 1; i < n; ++i) {
            const int p = perm[i];
            int current_sector = -1;
            for (const auto& [sector, q] : pref[p]) {
                if (sector == current_sector) continue;
                if (pos_of[q] < i) {
                    current_sector = sector;
                    ++edges;
                    if (metric != Metric::Edges) ++indeg[q];
                    if (metric == Metric::Clique) targets[p].push_back(q);
                }
            }
        }

        switch (metric) {
            case Metric::Edges:
                return edges;
            case Metric::MaxIndegree:
                return n == 0 ? 0 : *std::max_element(indeg.begin(), indeg.end());
            case Metric::Clique: {
                OrderedYaoGraph g;
                g.n = n;
                g.k = k;
                g.order_position = pos_of;
                g.out_edges.assign(n, {});
                for (int p = 0; p < n; ++p)
                    for (int q : targets[p]) g.out_edges[p].push_back({q, 0});
                return clique_number(g);
            }
        }
        return 0;
    }
};

struct Best {
    long long value = 0;
    std::uint64_t rank = 0; // enumeration rank or sample index
    std::vector<int> perm;
    bool set = false;
};

void merge(Best& into, const Best& candidate, Objective objective) {
    if (!candidate.set) return;
    if (!into.set) {
        into = candidate;
        return;
    }
    const bool better = objective == Objective::Maximize ? candidate.value > into.value
                                                         : candidate.value < into.value;
    if (better || (candidate.value == into.value && candidate.rank < into.rank)) into = candidate;
}

} // namespace

SearchResult search(const PointSet& ps, const SearchSpec& spec, const ProgressFn& progress) {
    const int n = ps.size();
    if (n < 1) throw GuardError("search needs a non-empty point set");

    GeneralPositionReport report = is_general_position(ps);
    if (!report.ok) throw ValidationError("search input is not in general position", std::move(report));

    if (spec.exhaustive && n > kExhaustiveLimit)
        throw GuardError("exhaustive search is capped at n <= " + std::to_string(kExhaustiveLimit));
    if (!spec.exhaustive && spec.samples == 0)
        throw GuardError("sampled search needs a positive sample count");

    const std::uint64_t total = spec.exhaustive ? factorial(n) : spec.samples;
    int threads = spec.threads > 0 ? spec.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = static_cast<int>(std::min<std::uint64_t>(threads, total));

    const std::uint64_t chunk = std::max<std::uint64_t>((total + threads * 8 - 1) / (threads * 8), 256);
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> done{0};
    std::mutex merge_mutex;
    Best best;

    auto worker = [&]() {
        const Evaluator eval(ps, spec.metric);
        Best local;
        std::vector<int> perm;
        while (true) {
            const std::uint64_t lo = next_chunk.fetch_add(chunk);
            if (lo >= total) break;
            const std::uint64_t hi = std::min(lo + chunk, total);

            if (spec.exhaustive) {
                perm = unrank_permutation(lo, n);
                for (std::uint64_t r = lo; r < hi; ++r) {
                    const long long v = eval.evaluate(perm);
                    merge(local, Best{v, r, perm, true}, spec.objective);
                    if (r + 1 < hi) std::next_permutation(perm.begin(), perm.end());
                }
            } else {
                for (std::uint64_t r = lo; r < hi; ++r) {
                    auto rng = make_rng(spec.seed, r);
                    perm.resize(n);
                    std::iota(perm.begin(), perm.end(), 0);
                    deterministic_shuffle(perm, rng);
                    const long long v = eval.evaluate(perm);
                    merge(local, Best{v, r, perm, true}, spec.objective);
                }
            }

            done.fetch_add(hi - lo);
            if (progress) {
                std::lock_guard<std::mutex> lock(merge_mutex);
                progress(done.load(), total);
            }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        merge(best, local, spec.objective);
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SearchResult result;
    result.value = best.value;
    result.witness.perm = best.perm;
    result.exhaustive = spec.exhaustive;
    result.orderings_examined = total;
    return result;
}

CertifyOutcome certify_bound(const PointSet& ps, const SearchSpec& spec, BoundOp op,
                             long long bound, const ProgressFn& progress) {
    const SearchResult r = search(ps, spec, progress);
    CertifyOutcome out;
    out.value = r.value;
    out.ok = op == BoundOp::AtMost ? r.value <= bound : r.value >= bound;
    if (!out.ok) out.counterexample = r.witness;
    return out;
}

} // namespace yao
