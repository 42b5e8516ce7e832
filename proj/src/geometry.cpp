#include "yao/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "yao/rng.hpp"

namespace yao {

namespace {

double normalize_angle(double t) {
    t = std::fmod(t, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0; // the += above can round up to 2*pi exactly
    return t;
}

SectorHit direction_hit(double dx, double dy, const SectorParams& params) {
    const double theta = std::atan2(dy, dx);
    const double t = normalize_angle(theta - params.rotation);
    const double width = kTwoPi / params.k;
    int i = static_cast<int>(t * params.k / kTwoPi);
    if (i >= params.k) i = params.k - 1;
    double offset = t - i * width;
    if (offset < 0.0) offset = 0.0;
    return {i, offset};
}

// Angle of l_{ceil(k/4)} in the frame (rotation excluded).
double chain_ray_angle(int k) { return kTwoPi * ((k + 3) / 4) / k; }

} // namespace

SectorParams make_params(int k, double rotation) {
    if (k < 1) throw GuardError("sector count k must be at least 1");
    const double period = kTwoPi / k;
    double r = std::fmod(rotation, period);
    if (r < 0.0) r += period;
    if (r >= period) r = 0.0;
    return {k, r};
}

PointSet make_point_set(std::vector<Point> points, SectorParams params) {
    if (params.k < 1) throw GuardError("sector count k must be at least 1");
    for (const Point& p : points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw GuardError("point coordinates must be finite");
        }
    }
    return {std::move(points), params};
}

double dist(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

double diameter(const PointSet& ps) {
    double d = 0.0;
    const int n = ps.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d = std::max(d, dist(ps.points[i], ps.points[j]));
    return d;
}

double distance_tolerance(const PointSet& ps) { return 1e-9 * (1.0 + diameter(ps)); }

SectorHit sector_hit(const Point& origin, const Point& target, const SectorParams& params) {
    const double dx = target.x - origin.x;
    const double dy = target.y - origin.y;
    if (dx == 0.0 && dy == 0.0) throw GuardError("degenerate pair");
    return direction_hit(dx, dy, params);
}

int sector_index(const Point& origin, const Point& target, const SectorParams& params) {
    return sector_hit(origin, target, params).index;
}

int dual_sector_index(const Point& origin, const Point& target, const SectorParams& params) {
    const double dx = origin.x - target.x;
    const double dy = origin.y - target.y;
    if (dx == 0.0 && dy == 0.0) throw GuardError("degenerate pair");
    return direction_hit(dx, dy, params).index;
}

double x_prime(const Point& p, const SectorParams& params) {
    if (params.k <= 2) throw GuardError("x_prime requires k >= 3");
    const double theta = chain_ray_angle(params.k) + params.rotation;
    const double s = std::sin(theta);
    if (std::abs(s) < 1e-12) throw GuardError("projection undefined");
    return p.x - p.y * std::cos(theta) / s;
}

double frame_x(const Point& p, const SectorParams& params) {
    const double r = params.rotation;
    return p.x * std::cos(r) + p.y * std::sin(r);
}

double frame_y(const Point& p, const SectorParams& params) {
    const double r = params.rotation;
    return -p.x * std::sin(r) + p.y * std::cos(r);
}

double frame_x_prime(const Point& p, const SectorParams& params) {
    if (params.k <= 2) throw GuardError("x_prime requires k >= 3");
    const double theta = chain_ray_angle(params.k);
    const double s = std::sin(theta);
    if (std::abs(s) < 1e-12) throw GuardError("projection undefined");
    return frame_x(p, params) - frame_y(p, params) * std::cos(theta) / s;
}

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::OnSectorBoundary: return "on-sector-boundary";
        case ViolationKind::EquidistantSameSector: return "equidistant-same-sector";
        case ViolationKind::DuplicateY: return "duplicate-y";
        case ViolationKind::DuplicateXPrime: return "duplicate-x-prime";
    }
    return "unknown";
}

namespace {

// Flags index pairs whose key values tie within eps; keys need not be sorted.
void flag_near_duplicates(const std::vector<double>& key, double eps, ViolationKind kind,
                          GeneralPositionReport& report) {
    const int n = static_cast<int>(key.size());
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return key[a] < key[b]; });
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n && key[idx[j]] - key[idx[i]] <= eps; ++j) {
            report.ok = false;
            report.violations.push_back({kind, {idx[i], idx[j]}});
        }
    }
}

} // namespace

GeneralPositionReport is_general_position(const PointSet& ps) {
    GeneralPositionReport report;
    const int n = ps.size();
    if (n <= 1) return report;

    const int k = ps.params.k;
    const double width = kTwoPi / k;
    const double eps_dist = distance_tolerance(ps);

    // Pair directions near a sector ray. Coincident points surface through
    // the duplicate-key checks below, so skip the angle test for them.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const Point& a = ps.points[i];
            const Point& b = ps.points[j];
            if (a.x == b.x && a.y == b.y) continue;
            const SectorHit hit = sector_hit(a, b, ps.params);
            const double to_boundary = std::min(hit.offset, width - hit.offset);
            if (to_boundary <= kAngleTolerance) {
                report.ok = false;
                report.violations.push_back({ViolationKind::OnSectorBoundary, {i, j}});
            }
        }
    }

    // Distance ties inside one sector of a common origin.
    for (int i = 0; i < n; ++i) {
        std::vector<std::vector<std::pair<double, int>>> buckets(k);
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const Point& a = ps.points[i];
            const Point& b = ps.points[j];
            if (a.x == b.x && a.y == b.y) continue;
            buckets[sector_index(a, b, ps.params)].push_back({dist(a, b), j});
        }
        for (auto& bucket : buckets) {
            std::sort(bucket.begin(), bucket.end());
            for (std::size_t a = 0; a < bucket.size(); ++a) {
                for (std::size_t b = a + 1;
                     b < bucket.size() && bucket[b].first - bucket[a].first <= eps_dist; ++b) {
                    report.ok = false;
                    report.violations.push_back(
                        {ViolationKind::EquidistantSameSector, {i, bucket[a].second, bucket[b].second}});
                }
            }
        }
    }

    std::vector<double> ys(n);
    for (int i = 0; i < n; ++i) ys[i] = ps.points[i].y;
    flag_near_duplicates(ys, eps_dist, ViolationKind::DuplicateY, report);

    if (k >= 3) {
        const double theta = chain_ray_angle(k) + ps.params.rotation;
        if (std::abs(std::sin(theta)) >= 1e-12) {
            std::vector<double> xp(n);
            for (int i = 0; i < n; ++i) xp[i] = x_prime(ps.points[i], ps.params);
            flag_near_duplicates(xp, eps_dist, ViolationKind::DuplicateXPrime, report);
        }
    }

    return report;
}

PointSet perturb(const PointSet& ps, double magnitude, std::uint64_t seed) {
    if (!(magnitude > 0.0)) throw GuardError("perturbation magnitude must be positive");
    GeneralPositionReport last;
    for (int attempt = 0; attempt < kPerturbRetryBudget; ++attempt) {
        auto rng = make_rng(seed, static_cast<std::uint64_t>(attempt));
        PointSet out = ps;
        for (Point& p : out.points) {
            const double r = magnitude * std::sqrt(uniform01(rng));
            const double a = kTwoPi * uniform01(rng);
            p.x += r * std::cos(a);
            p.y += r * std::sin(a);
        }
        last = is_general_position(out);
        if (last.ok) return out;
    }
    throw ValidationError("perturbation failed", std::move(last));
}

PointSet rotate(const PointSet& ps, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    PointSet out = ps;
    for (Point& p : out.points) {
        const double x = p.x * c - p.y * s;
        const double y = p.x * s + p.y * c;
        p.x = x;
        p.y = y;
    }
    return out;
}

} // namespace yao
