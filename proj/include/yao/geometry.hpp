#pragma once

// Planar sector predicates: k equal cones around every point, bounded by rays
// l_0..l_{k-1} at angles rotation + 2*pi*i/k, with l_0 horizontal when
// rotation is zero. A ray belongs to the sector counterclockwise of it, so
// the sectors form a half-open partition of the directions around a point.

#include <cstdint>
#include <string>
#include <vector>

#include "yao/errors.hpp"

namespace yao {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Boundary proximity below this angle (radians) counts as "on a sector ray".
inline constexpr double kAngleTolerance = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct SectorParams {
    int k = 1;
    double rotation = 0.0; // radians, normalized to [0, 2*pi/k)
};

// Validates k >= 1 and normalizes rotation into [0, 2*pi/k).
SectorParams make_params(int k, double rotation = 0.0);

struct PointSet {
    std::vector<Point> points;
    SectorParams params;

    int size() const { return static_cast<int>(points.size()); }
};

// Rejects non-finite coordinates.
PointSet make_point_set(std::vector<Point> points, SectorParams params);

enum class ViolationKind {
    OnSectorBoundary,      // ordered pair whose direction is within tolerance of a ray
    EquidistantSameSector, // two points in one sector of a third at (near-)equal distance
    DuplicateY,            // two points with (near-)equal y
    DuplicateXPrime,       // two points with (near-)equal x' projection
};

std::string to_string(ViolationKind kind);

struct ViolationRecord {
    ViolationKind kind;
    std::vector<int> indices; // (origin, target) or (origin, a, b) or (a, b)
};

struct GeneralPositionReport {
    bool ok = true;
    std::vector<ViolationRecord> violations;
};

// General-position failure; carries the offending report when available.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what, GeneralPositionReport report = {})
        : std::runtime_error(what), report(std::move(report)) {}
    GeneralPositionReport report;
};

double dist(const Point& a, const Point& b);
double diameter(const PointSet& ps);

// Scale-aware distance tie tolerance: 1e-9 * (1 + diameter).
double distance_tolerance(const PointSet& ps);

struct SectorHit {
    int index;     // sector containing the direction
    double offset; // CCW angle from the sector's clockwise boundary ray, in [0, 2*pi/k)
};

// Sector of `target` as seen from `origin`. Throws on coincident points.
int sector_index(const Point& origin, const Point& target, const SectorParams& params);
SectorHit sector_hit(const Point& origin, const Point& target, const SectorParams& params);

// Dual sector of `origin` containing `target`: the i with
// sector_index(target, origin) == i, computed from the negated displacement.
int dual_sector_index(const Point& origin, const Point& target, const SectorParams& params);

// x-coordinate of the intersection of the x-axis with the line through p in
// the direction of l_{ceil(k/4)}. Requires k >= 3 and a non-horizontal ray.
double x_prime(const Point& p, const SectorParams& params);

// Coordinates in the frame where l_0 is horizontal (the set rotated by
// -rotation). Equal to x/y/x_prime when rotation is zero.
double frame_x(const Point& p, const SectorParams& params);
double frame_y(const Point& p, const SectorParams& params);
double frame_x_prime(const Point& p, const SectorParams& params);

// Scans all pairs for near-boundary directions, all in-sector distance ties,
// and duplicate y / x' keys. ok iff no violation found.
GeneralPositionReport is_general_position(const PointSet& ps);

// Displaces every point uniformly inside a disc of radius `magnitude`
// (deterministic in `seed`), retrying the whole set until validation passes.
// Throws ValidationError("perturbation failed") when the retry budget runs out.
PointSet perturb(const PointSet& ps, double magnitude, std::uint64_t seed);

inline constexpr int kPerturbRetryBudget = 64;

// Rotates every point about the origin; params are left untouched.
PointSet rotate(const PointSet& ps, double angle);

} // namespace yao
