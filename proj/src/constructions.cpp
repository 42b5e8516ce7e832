#include "yao/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "yao/rng.hpp"

namespace yao {

namespace {

constexpr double kPi = 3.14159265358979323846;

PointSet displace_once(const PointSet& ps, double magnitude, std::mt19937_64& rng) {
    PointSet out = ps;
    for (Point& p : out.points) {
        const double r = magnitude * std::sqrt(uniform01(rng));
        const double a = kTwoPi * uniform01(rng);
        p.x += r * std::cos(a);
        p.y += r * std::sin(a);
    }
    return out;
}

bool isosceles_free(const PointSet& ps, double eps) {
    const int n = ps.size();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const double dab = dist(ps.points[a], ps.points[b]);
            for (int c = b + 1; c < n; ++c) {
                const double dac = dist(ps.points[a], ps.points[c]);
                const double dbc = dist(ps.points[b], ps.points[c]);
                if (std::abs(dab - dac) <= eps || std::abs(dab - dbc) <= eps ||
                    std::abs(dac - dbc) <= eps)
                    return false;
            }
        }
    }
    return true;
}

double min_pairwise_distance(const PointSet& ps) {
    double best = std::numeric_limits<double>::infinity();
    for (int a = 0; a < ps.size(); ++a)
        for (int b = a + 1; b < ps.size(); ++b)
            best = std::min(best, dist(ps.points[a], ps.points[b]));
    return best;
}

} // namespace

PointSet collinear_generic(int n, int k, std::uint64_t seed) {
    if (n < 1) throw GuardError("collinear set needs n >= 1");
    if (k < 2) throw GuardError("collinear set needs k >= 2");

    // Half a half-sector keeps both the direction and its reverse at angular
    // distance pi/(2k) from every ray, for even and odd k alike.
    const double angle = kPi / (2.0 * k);
    const double ux = std::cos(angle);
    const double uy = std::sin(angle);

    std::vector<Point> pts(n);
    for (int i = 0; i < n; ++i) {
        const double t = i - 0.5 * (n - 1);
        pts[i] = {t * ux, t * uy};
    }
    PointSet base = make_point_set(std::move(pts), make_params(k));
    if (n == 1) return base;
    return perturb(base, 1e-4, seed);
}

PointSet triangle_k3() {
    // One vertex just off each ray; slightly unequal radii break the
    // equilateral distance ties without moving the centroid off the origin
    // by more than ~2e-7.
    const double nudge = 2.0 * kAngleTolerance;
    const double radius[3] = {1.0, 1.0 + 3e-7, 1.0 - 3e-7};
    std::vector<Point> pts(3);
    for (int i = 0; i < 3; ++i) {
        const double a = kTwoPi * i / 3.0 + nudge;
        pts[i] = {radius[i] * std::cos(a), radius[i] * std::sin(a)};
    }
    PointSet ps = make_point_set(std::move(pts), make_params(3));
    GeneralPositionReport report = is_general_position(ps);
    if (!report.ok) throw ValidationError("triangle construction failed validation", std::move(report));
    return ps;
}

PointSet figure9_k3(int n, std::uint64_t seed) {
    if (n < 4) throw GuardError("the k=3 edge-max witness needs n >= 4");

    std::vector<Point> pts;
    pts.reserve(n);
    pts.push_back({0.0, 0.0});                       // A
    pts.push_back({0.0, 1.0});                       // C
    pts.push_back({std::sqrt(3.0) / 2.0, 0.5});      // B
    for (int i = 0; i + 3 < n; ++i) pts.push_back({0.0, (i + 1.0) / (n - 2)});

    PointSet base = make_point_set(std::move(pts), make_params(3));
    return perturb(base, 1e-4 / (n - 2), seed);
}

PointSet d3_hard(int m, std::uint64_t seed) {
    if (m < 1) throw GuardError("d3 hard instance needs m >= 1");

    const double alpha = kPi / (10.0 * m);
    std::vector<Point> pts;
    pts.reserve(6 * m);
    const double centers[3] = {0.0, kTwoPi / 3.0, 2.0 * kTwoPi / 3.0};
    for (int g = 0; g < 3; ++g) {
        for (int sign : {+1, -1}) {
            for (int i = 1; i <= m; ++i) {
                const double a = centers[g] + sign * i * alpha;
                pts.push_back({std::cos(a), std::sin(a)});
            }
        }
    }

    PointSet base = make_point_set(std::move(pts), make_params(3));
    return perturb(base, 1e-4 * alpha, seed);
}

PointSet wk_clique(int k, std::optional<double> phi) {
    if (k < 2) throw GuardError("clique-set construction needs k >= 2");
    const double rot = phi.value_or(kPi / (64.0 * k));

    // z is the 2k-th root of unity with the smallest positive argument; the
    // sector rays point along its even powers. The chosen powers put every
    // pair direction on a ray or bisector, and the extra rotation moves the
    // on-ray ones strictly inside distinct sectors.
    std::vector<int> powers;
    if (k % 2 == 0) {
        for (int j = 0; j < k / 2; ++j) powers.push_back(4 * j);
    } else {
        const int m = (k - 1) / 2;
        if (m % 2 == 1) {
            for (int j = 0; j < m; ++j) powers.push_back(4 * j);
            powers.push_back(2 * k - 3);
        } else {
            for (int j = 0; j < m; ++j) powers.push_back(4 * j + 1);
            powers.push_back(2 * k - 2);
        }
    }

    std::vector<Point> pts;
    pts.reserve(powers.size());
    for (int e : powers) {
        const double a = kPi * e / k + rot;
        pts.push_back({std::cos(a), std::sin(a)});
    }

    PointSet ps = make_point_set(std::move(pts), make_params(k));
    GeneralPositionReport report = is_general_position(ps);
    if (!report.ok)
        throw ValidationError("clique-set rotation phi breaks general position", std::move(report));
    return ps;
}

PointSet grid_hard(int n, int k, std::uint64_t seed) {
    if (n < 4) throw GuardError("grid construction needs n >= 4");
    if (k < 2) throw GuardError("grid construction needs k >= 2");

    const int inner = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n))));
    const int outer = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    const double delta = 1.0 / (8.0 * std::sqrt(static_cast<double>(n)));
    const double gap = 1.0 + delta;

    std::vector<Point> pts;
    pts.reserve(n);
    for (int i = 0; i < inner; ++i)
        for (int j = 0; j < inner; ++j) pts.push_back({i * gap, j * gap});
    int surplus = n - inner * inner;
    for (int i = 0; i < outer && surplus > 0; ++i) {
        for (int j = 0; j < outer && surplus > 0; ++j) {
            if (i < inner && j < inner) continue; // inner cell already taken
            pts.push_back({i * gap, j * gap});
            --surplus;
        }
    }

    PointSet base = make_point_set(std::move(pts), make_params(k));
    const double diameter_cap = std::ceil(std::sqrt(2.0) * outer);

    // Breaking every grid-symmetric distance tie needs displacements far
    // above the tie tolerance, but they must not eat the gap margin; a
    // quarter of delta leaves the minimum distance above 1.
    const double magnitude = delta / 4.0;
    const double eps = distance_tolerance(base);

    for (int attempt = 0; attempt < kPerturbRetryBudget; ++attempt) {
        auto rng = make_rng(seed, static_cast<std::uint64_t>(attempt));
        PointSet out = displace_once(base, magnitude, rng);
        if (!is_general_position(out).ok) continue;
        if (!isosceles_free(out, eps)) continue;
        if (!(min_pairwise_distance(out) > 1.0)) continue;
        if (!(diameter(out) <= diameter_cap)) continue;
        return out;
    }
    throw ValidationError("perturbation failed");
}

PointSet random_validated(int n, int k, std::uint64_t seed) {
    if (n < 1) throw GuardError("random set needs n >= 1");
    for (int attempt = 0; attempt < kPerturbRetryBudget; ++attempt) {
        auto rng = make_rng(seed, 0x72616e646f6dULL + attempt);
        std::vector<Point> pts(n);
        for (Point& p : pts) {
            p.x = uniform01(rng);
            p.y = uniform01(rng);
        }
        PointSet ps = make_point_set(std::move(pts), make_params(k));
        if (is_general_position(ps).ok) return ps;
    }
    throw ValidationError("could not draw a random set in general position");
}

std::vector<std::string> construction_names() {
    return {"collinear", "triangle3", "figure9", "d3-hard", "clique-set", "grid", "random"};
}

} // namespace yao
