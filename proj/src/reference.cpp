#include "yao/reference.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace yao::reference {

namespace {

// Same convention as the production code (rays belong to the CCW-next
// sector) but written the slow way: normalize by repeated subtraction and
// find the sector by walking the boundary list.
int slow_sector(const Point& from, const Point& to, const SectorParams& params) {
    double ang = std::atan2(to.y - from.y, to.x - from.x) - params.rotation;
    while (ang < 0.0) ang += 2.0 * M_PI;
    while (ang >= 2.0 * M_PI) ang -= 2.0 * M_PI;
    int s = 0;
    while (s + 1 < params.k && ang >= (s + 1) * 2.0 * M_PI / params.k) ++s;
    return s;
}

double sqdist(const Point& a, const Point& b) {
    return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y);
}

} // namespace

OrderedYaoGraph build_ordered(const PointSet& ps, const Ordering& ord) {
    const int n = ps.size();
    OrderedYaoGraph g;
    g.n = n;
    g.k = ps.params.k;
    g.out_edges.assign(n, {});
    g.order_position.assign(n, OrderedYaoGraph::kUnordered);
    for (int pos = 0; pos < n; ++pos) g.order_position[ord.perm[pos]] = pos;

    for (int pos = 1; pos < n; ++pos) {
        const int p = ord.perm[pos];
        for (int s = 0; s < g.k; ++s) {
            int best = -1;
            for (int prev = 0; prev < pos; ++prev) {
                const int q = ord.perm[prev];
                if (slow_sector(ps.points[p], ps.points[q], ps.params) != s) continue;
                if (best < 0 || sqdist(ps.points[p], ps.points[q]) < sqdist(ps.points[p], ps.points[best]))
                    best = q;
            }
            if (best >= 0) g.out_edges[p].push_back({best, s});
        }
    }
    return g;
}

int clique_number(const OrderedYaoGraph& g) {
    if (g.n > 24) throw GuardError("subset-enumeration clique oracle is capped at n <= 24");
    std::vector<std::uint32_t> adj(g.n, 0);
    for (int u = 0; u < g.n; ++u) {
        for (const YaoEdge& e : g.out_edges[u]) {
            adj[u] |= 1u << e.target;
            adj[e.target] |= 1u << u;
        }
    }
    int best = g.n > 0 ? 1 : 0;
    for (std::uint32_t mask = 1; mask < (1u << g.n); ++mask) {
        bool clique = true;
        for (int v = 0; v < g.n && clique; ++v) {
            if (!(mask & (1u << v))) continue;
            if ((mask & adj[v]) != (mask & ~(1u << v))) clique = false;
        }
        if (clique) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

bool same_edge_set(const OrderedYaoGraph& a, const OrderedYaoGraph& b) {
    if (a.n != b.n) return false;
    auto edges = [](const OrderedYaoGraph& g) {
        std::set<std::tuple<int, int, int>> out;
        for (int u = 0; u < g.n; ++u)
            for (const YaoEdge& e : g.out_edges[u]) out.insert({u, e.target, e.sector});
        return out;
    };
    return edges(a) == edges(b);
}

} // namespace yao::reference
