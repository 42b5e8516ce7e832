#pragma once

// Ground-truth extremal search over insertion orders: exhaustive enumeration
// for small n, seeded uniform sampling otherwise. Results are deterministic
// in (point set, spec, seed) regardless of worker count.

#include <cstdint>
#include <functional>
#include <optional>

#include "yao/graph.hpp"

namespace yao {

enum class Metric { Edges, MaxIndegree, Clique };
enum class Objective { Minimize, Maximize };

inline constexpr int kExhaustiveLimit = 9; // 9! orderings is the desk-scale cap

struct SearchSpec {
    Metric metric = Metric::Edges;
    Objective objective = Objective::Maximize;
    bool exhaustive = true;
    std::uint64_t samples = 0;  // sampled mode only
    std::uint64_t seed = 0;     // sampled mode only
    int threads = 0;            // 0 = hardware concurrency
};

struct SearchResult {
    long long value = 0;
    Ordering witness;
    bool exhaustive = true;
    std::uint64_t orderings_examined = 0;
};

using ProgressFn = std::function<void(std::uint64_t done, std::uint64_t total)>;

// Validates the set, then enumerates (all n! orders, lexicographic) or
// samples. The witness is the earliest ordering attaining the extremal value.
SearchResult search(const PointSet& ps, const SearchSpec& spec, const ProgressFn& progress = {});

enum class BoundOp { AtMost, AtLeast };

struct CertifyOutcome {
    bool ok = false;
    long long value = 0;
    std::optional<Ordering> counterexample; // violating ordering when !ok
};

CertifyOutcome certify_bound(const PointSet& ps, const SearchSpec& spec, BoundOp op,
                             long long bound, const ProgressFn& progress = {});

std::uint64_t factorial(int n);

// Lexicographic rank -> permutation of 0..n-1.
std::vector<int> unrank_permutation(std::uint64_t rank, int n);

} // namespace yao
