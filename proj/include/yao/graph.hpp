#pragma once

// Ordered and unordered k-sector Yao graphs. In the ordered build, points are
// inserted one by one and every new point sends one edge per non-empty sector
// to its closest predecessor there, so all edges go from later to earlier.

#include <vector>

#include "yao/geometry.hpp"

namespace yao {

struct Ordering {
    std::vector<int> perm; // point indices in insertion order
};

Ordering identity_ordering(int n);
bool is_permutation(const Ordering& ord, int n);

struct YaoEdge {
    int target;
    int sector;
};

struct OrderedYaoGraph {
    static constexpr int kUnordered = -1;

    int n = 0;
    int k = 1;
    std::vector<std::vector<YaoEdge>> out_edges; // per source vertex
    std::vector<int> order_position;             // insertion rank, or kUnordered

    bool ordered() const { return n == 0 || order_position[0] != kUnordered; }
    long long edge_count() const;
};

// Caller is responsible for general position; the builder itself is total
// thanks to the in-sector tie rule (closer to the clockwise boundary wins).
OrderedYaoGraph build_ordered(const PointSet& ps, const Ordering& ord);

// One edge per point and non-empty sector to the closest neighbor there.
OrderedYaoGraph build_unordered(const PointSet& ps);

struct GraphStats {
    long long edges = 0;
    std::vector<int> indeg;
    std::vector<int> outdeg;
    int max_indegree = 0;
    int clique_number = 0;
    bool acyclic = true;
};

GraphStats stats(const OrderedYaoGraph& g);

// Exact maximum clique of the undirected support. For ordered graphs every
// clique lives inside {v} + out-neighbors(v) of its latest vertex v, which
// caps the branching at k; requires k <= 24.
int clique_number(const OrderedYaoGraph& g);

bool is_acyclic(const OrderedYaoGraph& g);

} // namespace yao
