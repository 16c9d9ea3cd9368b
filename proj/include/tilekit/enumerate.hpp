#pragma once

#include <cstdint>
#include <vector>

#include "tilekit/group.hpp"

namespace tilekit {

/// Complete, duplicate-free list of tiling complements for one (quotient, tile)
/// pair. Solutions are index sets over the fundamental domain, each sorted
/// ascending, and the list itself is sorted lexicographically.
struct TilingCatalog {
    QuotientSpec quotient;
    std::vector<GroupElement> tile;
    std::vector<std::vector<std::int64_t>> solutions;
};

/// Enumerates every A with tile (+) A = quotient by exact cover backtracking,
/// branching on the smallest uncovered point. Returns an empty catalog when
/// |quotient| is not divisible by |tile|. Throws CapacityExceeded if the
/// number of solutions would exceed max_solutions.
TilingCatalog enumerate_tilings(const QuotientSpec& q, const std::vector<GroupElement>& tile,
                                std::int64_t max_solutions = 1 << 20);

struct OrbitSummary {
    std::int64_t count = 0;
    std::int64_t orbit_count = 0;
    /// orbit_of[i] = smallest solution index in the translation orbit of solution i.
    std::vector<std::size_t> orbit_of;
    /// rigid[i]: the membership bit of any single point determines solution i
    /// among all solutions (equivalently every other solution is its complement).
    std::vector<bool> rigid;
};

/// Groups catalog solutions into orbits under translation and computes the
/// per-solution rigidity flags.
OrbitSummary count_and_orbits(const TilingCatalog& catalog);

} // namespace tilekit
