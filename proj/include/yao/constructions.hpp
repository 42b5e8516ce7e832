#pragma once

// Extremal point-set generators. Every generator returns a set that passes
// is_general_position; deterministic in its seed.

#include <cstdint>
#include <optional>

#include "yao/geometry.hpp"

namespace yao {

// n points on a line whose direction stays at least pi/(4k) away from every
// sector ray, lightly perturbed. No ordering of it exceeds 2n-3 edges and its
// clique number never exceeds 3.
PointSet collinear_generic(int n, int k, std::uint64_t seed);

// k = 3: a triangle with one vertex just off each of l_0, l_1, l_2, centered
// at the origin. Every ordering yields exactly two edges.
PointSet triangle_k3();

// k = 3: A = (0,0), C = (0,1), B = (sqrt(3)/2, 1/2) plus n-3 points strictly
// inside segment AC, perturbed. A, B, C have outdegree at most 1 under every
// ordering, capping the edge count at 2n-4. Requires n >= 4.
PointSet figure9_k3(int n, std::uint64_t seed);

// k = 3: 6m unit-circle points a_i,b_i,c_i,d_i,e_i,f_i at angles
// +-i*alpha, 2*pi/3 +- i*alpha, 4*pi/3 +- i*alpha with alpha = pi/(10m),
// perturbed. Point index = group*m + (i-1) with groups ordered a,b,c,d,e,f.
// Caps the maximum indegree of every ordering at 5*ceil(n/6)-1.
PointSet d3_hard(int m, std::uint64_t seed);

// ceil(k/2) points built from 2k-th roots of unity and rotated by phi
// (default pi/(64k)): each point sees all the others in pairwise distinct
// sectors, so every ordering produces a complete graph. Throws
// ValidationError when phi breaks general position.
PointSet wk_clique(int k, std::optional<double> phi = std::nullopt);

// n points covering the floor(sqrt(n))^2 grid inside the ceil(sqrt(n))^2
// grid, gap 1+delta with delta = 1/(8*sqrt(n)), perturbed so that no
// isosceles triangle survives and no pair direction is parallel to a sector
// ray, while the minimum pairwise distance stays above 1 and the diameter
// below ceil(sqrt(2)*ceil(sqrt(n))). Requires n >= 4, k >= 2.
PointSet grid_hard(int n, int k, std::uint64_t seed);

// Uniform points in the unit square, redrawn until validation passes.
// Not an extremal witness; exists for tests and the CLI.
PointSet random_validated(int n, int k, std::uint64_t seed);

// Stable CLI identifiers: collinear, triangle3, figure9, d3-hard, clique-set,
// grid (plus random).
std::vector<std::string> construction_names();

} // namespace yao
