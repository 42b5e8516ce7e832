#pragma once

// Deliberately naive re-implementations used as independent oracles by the
// test and verification suites. Kept free of any code from graph.cpp or
// geometry.cpp internals; slow is fine here.

#include "yao/graph.hpp"

namespace yao::reference {

// O(n^3 k) ordered builder with its own angle arithmetic and its own
// closest-predecessor scan.
OrderedYaoGraph build_ordered(const PointSet& ps, const Ordering& ord);

// Max clique by full subset enumeration; n <= 24.
int clique_number(const OrderedYaoGraph& g);

bool same_edge_set(const OrderedYaoGraph& a, const OrderedYaoGraph& b);

} // namespace yao::reference
