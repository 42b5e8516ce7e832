#include "yao/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>

namespace yao {

Ordering identity_ordering(int n) {
    Ordering ord;
    ord.perm.resize(n);
    std::iota(ord.perm.begin(), ord.perm.end(), 0);
    return ord;
}

bool is_permutation(const Ordering& ord, int n) {
    if (static_cast<int>(ord.perm.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (int v : ord.perm) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

long long OrderedYaoGraph::edge_count() const {
    long long total = 0;
    for (const auto& es : out_edges) total += static_cast<long long>(es.size());
    return total;
}

namespace {

struct Candidate {
    double distance = 0.0;
    double offset = 0.0;
    int target = -1;
};

// In-tolerance ties go to the point closer to the sector's clockwise
// boundary; only exercised on degenerate inputs, but keeps the build total.
bool beats(const Candidate& a, const Candidate& b, double eps) {
    if (b.target < 0) return true;
    if (a.distance < b.distance - eps) return true;
    if (a.distance > b.distance + eps) return false;
    if (a.offset != b.offset) return a.offset < b.offset;
    return a.target < b.target;
}

} // namespace

OrderedYaoGraph build_ordered(const PointSet& ps, const Ordering& ord) {
    const int n = ps.size();
    if (!is_permutation(ord, n)) throw GuardError("ordering is not a permutation of the point set");

    OrderedYaoGraph g;
    g.n = n;
    g.k = ps.params.k;
    g.out_edges.assign(n, {});
    g.order_position.assign(n, OrderedYaoGraph::kUnordered);

    const double eps = distance_tolerance(ps);
    std::vector<Candidate> best(g.k);

    for (int pos = 0; pos < n; ++pos) {
        const int p = ord.perm[pos];
        g.order_position[p] = pos;
        if (pos == 0) continue;

        std::fill(best.begin(), best.end(), Candidate{});
        for (int prev = 0; prev < pos; ++prev) {
            const int q = ord.perm[prev];
            const SectorHit hit = sector_hit(ps.points[p], ps.points[q], ps.params);
            const Candidate c{dist(ps.points[p], ps.points[q]), hit.offset, q};
            if (beats(c, best[hit.index], eps)) best[hit.index] = c;
        }
        for (int s = 0; s < g.k; ++s) {
            if (best[s].target >= 0) {
                assert(g.order_position[best[s].target] < pos);
                g.out_edges[p].push_back({best[s].target, s});
            }
        }
    }
    return g;
}

OrderedYaoGraph build_unordered(const PointSet& ps) {
    const int n = ps.size();
    OrderedYaoGraph g;
    g.n = n;
    g.k = ps.params.k;
    g.out_edges.assign(n, {});
    g.order_position.assign(n, OrderedYaoGraph::kUnordered);

    const double eps = distance_tolerance(ps);
    std::vector<Candidate> best(g.k);

    for (int p = 0; p < n; ++p) {
        std::fill(best.begin(), best.end(), Candidate{});
        for (int q = 0; q < n; ++q) {
            if (q == p) continue;
            const SectorHit hit = sector_hit(ps.points[p], ps.points[q], ps.params);
            const Candidate c{dist(ps.points[p], ps.points[q]), hit.offset, q};
            if (beats(c, best[hit.index], eps)) best[hit.index] = c;
        }
        for (int s = 0; s < g.k; ++s) {
            if (best[s].target >= 0) g.out_edges[p].push_back({best[s].target, s});
        }
    }
    return g;
}

bool is_acyclic(const OrderedYaoGraph& g) {
    std::vector<int> indeg(g.n, 0);
    for (const auto& es : g.out_edges)
        for (const YaoEdge& e : es) ++indeg[e.target];

    std::queue<int> ready;
    for (int v = 0; v < g.n; ++v)
        if (indeg[v] == 0) ready.push(v);

    int removed = 0;
    while (!ready.empty()) {
        const int v = ready.front();
        ready.pop();
        ++removed;
        for (const YaoEdge& e : g.out_edges[v])
            if (--indeg[e.target] == 0) ready.push(e.target);
    }
    return removed == g.n;
}

namespace {

using AdjMatrix = std::vector<std::vector<bool>>;

AdjMatrix undirected_support(const OrderedYaoGraph& g) {
    AdjMatrix adj(g.n, std::vector<bool>(g.n, false));
    for (int u = 0; u < g.n; ++u) {
        for (const YaoEdge& e : g.out_edges[u]) {
            adj[u][e.target] = true;
            adj[e.target][u] = true;
        }
    }
    return adj;
}

void max_clique_rec(const AdjMatrix& adj, std::vector<int>& candidates, int chosen, int& best) {
    if (chosen + static_cast<int>(candidates.size()) <= best) return;
    if (candidates.empty()) {
        best = std::max(best, chosen);
        return;
    }
    while (!candidates.empty()) {
        if (chosen + static_cast<int>(candidates.size()) <= best) return;
        const int v = candidates.back();
        candidates.pop_back();
        std::vector<int> next;
        next.reserve(candidates.size());
        for (int u : candidates)
            if (adj[v][u]) next.push_back(u);
        max_clique_rec(adj, next, chosen + 1, best);
    }
}

// Elimination order such that every clique is contained in the closed later-
// neighborhood of its first vertex: insertion order when available, a
// degeneracy order of the support otherwise.
std::vector<int> elimination_rank(const OrderedYaoGraph& g, const AdjMatrix& adj) {
    std::vector<int> rank(g.n);
    if (g.ordered()) {
        for (int v = 0; v < g.n; ++v) rank[v] = g.order_position[v];
        return rank;
    }
    std::vector<int> degree(g.n, 0);
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v)
            if (adj[u][v]) ++degree[u];
    std::vector<bool> removed(g.n, false);
    for (int step = 0; step < g.n; ++step) {
        int pick = -1;
        for (int v = 0; v < g.n; ++v)
            if (!removed[v] && (pick < 0 || degree[v] < degree[pick])) pick = v;
        removed[pick] = true;
        rank[pick] = g.n - 1 - step; // earliest removed gets the highest rank
        for (int v = 0; v < g.n; ++v)
            if (!removed[v] && adj[pick][v]) --degree[v];
    }
    return rank;
}

} // namespace

int clique_number(const OrderedYaoGraph& g) {
    if (g.k > 24) throw GuardError("clique search requires k <= 24");
    if (g.n == 0) return 0;

    const AdjMatrix adj = undirected_support(g);
    const std::vector<int> rank = elimination_rank(g, adj);

    int best = 1;
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> candidates;
        for (int u = 0; u < g.n; ++u)
            if (adj[v][u] && rank[u] < rank[v]) candidates.push_back(u);
        max_clique_rec(adj, candidates, 1, best);
    }
    return best;
}

GraphStats stats(const OrderedYaoGraph& g) {
    GraphStats s;
    s.indeg.assign(g.n, 0);
    s.outdeg.assign(g.n, 0);
    for (int u = 0; u < g.n; ++u) {
        s.outdeg[u] = static_cast<int>(g.out_edges[u].size());
        s.edges += s.outdeg[u];
        for (const YaoEdge& e : g.out_edges[u]) ++s.indeg[e.target];
    }
    s.max_indegree = s.indeg.empty() ? 0 : *std::max_element(s.indeg.begin(), s.indeg.end());
    s.clique_number = g.n == 0 ? 0 : clique_number(g);
    s.acyclic = is_acyclic(g);
    return s;
}

} // namespace yao
