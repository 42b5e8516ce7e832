#pragma once

// Insertion-order strategies. Each strategy returns the ordering together
// with machine-checkable certificates of the bound it promises; replaying
// the ordering through build_ordered must satisfy every certificate.

#include <optional>
#include <string>
#include <vector>

#include "yao/graph.hpp"

namespace yao {

enum class CertKind {
    IndegreeAtLeast,  // subjects = {vertex}: indeg(vertex) >= value
    OutdegreeAtMost,  // for every vertex in subjects (all when empty): outdeg <= value
    EdgesAtMost,      // total edges <= value
    EdgesAtLeast,     // total edges >= value
    CliqueAtMost,     // clique number <= value
    CliqueWitness,    // subjects are pairwise adjacent in the undirected support
};

struct Certificate {
    CertKind kind;
    long long value = 0;
    std::vector<int> subjects;
    std::string label;
};

struct StrategyOutcome {
    std::string strategy;
    Ordering ordering;
    std::vector<Certificate> promises;
    std::vector<int> witnesses; // apex / forcing triple / chain, strategy-specific
};

// Empty when the certificate holds, otherwise a human-readable reason.
std::optional<std::string> certificate_failure(const Certificate& cert, const OrderedYaoGraph& g);

// All promises at once; empty vector means the outcome replays cleanly.
std::vector<std::string> check_promises(const StrategyOutcome& outcome, const OrderedYaoGraph& g);

// Strictly decreasing y. Every outdegree <= ceil(k/2), hence at most
// n*ceil(k/2) edges and clique number <= ceil(k/2)+1.
StrategyOutcome top_to_bottom(const PointSet& ps);

// Apex first, then every point lying in the t cyclically consecutive dual
// sectors -s_start..-s_{start+t-1} of the apex, sorted by increasing
// projection onto the bisector of the covered span; the rest afterwards.
// Requires t <= floor(k/2). Promises indeg(apex) >= number selected.
StrategyOutcome orthogonal(const PointSet& ps, int apex, int start_sector, int t);

// Apex first, remaining points farthest-first. For k >= 6 promises
// indeg(apex) = n-1.
StrategyOutcome radial(const PointSet& ps, int apex);

// Dispatch on k: even k -> topmost apex + orthogonal over the lower half;
// odd k >= 7 -> radial; k = 3 -> better of the two lower dual windows;
// k = 5 -> best of P0+P1, P1+P2 (orthogonal) and P0+P2 (farthest-first).
// k = 1 is unsupported.
StrategyOutcome degree_maximizing(const PointSet& ps);

// Finds a triple where one point sees the other two in different sectors and
// schedules it first, which forces a triangle. Throws CertificationError
// ("no forcing triple") when no triple qualifies (only possible at k=3, n=3).
StrategyOutcome clique_forcing(const PointSet& ps);

// Repeatedly assigns the latest free position to a point whose remaining
// peers occupy at least two of its sectors. Promises >= 2n-3 edges
// (k != 3, n >= 3) or >= 2n-4 (k = 3, n >= 3).
StrategyOutcome greedy_edge_max(const PointSet& ps);

// Erdos-Szekeres ordering over the (x', y) keys: a monotone chain of length
// m >= ceil(sqrt(n)) is inserted from its dominant end with the remaining
// points grouped into dominance layers. Promises outdeg <= ceil(k/4) on the
// chain, <= ceil(k/2) elsewhere, and at most
// n*ceil(k/2) - m*floor((k+1)/4) edges in total. Requires k >= 3.
StrategyOutcome es_edge_min(const PointSet& ps);

// k = 2 -> top_to_bottom (the n*ceil(k/2) cap is already sharp); k >= 3 ->
// es_edge_min; k = 1 unsupported.
StrategyOutcome edge_min_dispatch(const PointSet& ps);

// Stable CLI identifiers: top-to-bottom, orthogonal, radial, degree-max,
// clique-forcing, edge-max, edge-min.
std::vector<std::string> strategy_names();

namespace detail {

// Longest chain of point indices monotone in both keys, found by patience
// sorting over (xi ascending, y strictly monotone). `increasing` selects the
// y direction. Returned in xi-ascending order.
std::vector<int> longest_monotone_chain(const std::vector<double>& xi,
                                        const std::vector<double>& y,
                                        bool increasing);

// Dominance layers for a chain given in processing order (both keys strictly
// decreasing). layer[p] identifies the chain element after which p is
// inserted. Throws std::logic_error("chain partition bug") when some point
// falls outside every layer, i.e. the chain was not maximal.
std::vector<int> es_partition(const std::vector<double>& xi,
                              const std::vector<double>& y,
                              const std::vector<int>& chain);

} // namespace detail

} // namespace yao
