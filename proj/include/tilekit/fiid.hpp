#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tilekit/group.hpp"

namespace tilekit {

/// Window of sites [start, start + length) carrying an i.i.d. uniform field
/// keyed by (seed, site, fiber). Re-simulating any window of the same seed
/// reproduces the same field values site by site.
struct FiidWindow {
    std::int64_t start = 0;
    std::int64_t length = 0;
    std::uint64_t seed = 0;
};

/// Outcome of replaying a construction against its defining local rules.
struct FiidValidation {
    std::int64_t core_start = 0;
    std::int64_t core_end = 0; // half-open
    std::int64_t coverage_violations = 0;
    std::int64_t constraint_violations = 0;
    std::map<std::int64_t, std::int64_t> gap_histogram;      // consecutive marker gaps
    std::map<std::int64_t, std::int64_t> fill_gap_histogram; // consecutive fill gaps
    std::vector<std::pair<std::string, double>> densities;   // label set fraction inside core
};

/// Two-tile construction on Z: strict local minima of the field become
/// markers; the stretches between markers are filled left to right in steps of
/// two, leaving gaps of 2 or 3; gap-2 points take the tile {0,1} and gap-3
/// points the tile {0,1,2}.
struct TwoTileTrace {
    FiidWindow window;
    std::vector<std::int64_t> minima;  // S
    std::vector<std::int64_t> fill;    // S'
    std::vector<std::int64_t> pair_sites;   // fill points followed by a gap of 2
    std::vector<std::int64_t> triple_sites; // fill points followed by a gap of 3
    std::int64_t core_start = 0;
    std::int64_t core_end = 0;
    std::int64_t ties = 0;
};

TwoTileTrace simulate_two_tile(std::int64_t length, std::uint64_t seed, std::int64_t start = 0);
FiidValidation validate_two_tile(const TwoTileTrace& trace,
                                 std::optional<std::pair<std::int64_t, std::int64_t>> core_override =
                                     std::nullopt);

/// Product construction on Z x G0: every site picks the group element with the
/// minimal field value and places a translated copy of the base complement.
struct VerticalTrace {
    FiidWindow window;
    QuotientSpec base;
    std::vector<std::int64_t> chosen; // per site: domain index of the argmin element
    std::vector<std::int64_t> set_indices;  // base complement A0
    std::vector<std::int64_t> tile_indices; // base tile F0
    std::int64_t ties = 0;
};

VerticalTrace simulate_vertical(std::int64_t length, std::uint64_t seed, const QuotientSpec& base,
                                const std::vector<GroupElement>& tile,
                                const std::vector<GroupElement>& set, std::int64_t start = 0);
FiidValidation validate_vertical(const VerticalTrace& trace);

/// Finite (possibly non-abelian) group as an explicit multiplication table.
/// Element i of the symmetric group S3 is the i-th permutation of 012 in
/// lexicographic one-line order.
struct FiniteGroupTable {
    std::vector<std::vector<int>> mul;
    std::vector<int> inverse;
    std::vector<std::string> names;
    int identity = 0;

    int order() const { return int(mul.size()); }
    int times(int a, int b) const { return mul[std::size_t(a)][std::size_t(b)]; }
    int inv(int a) const { return inverse[std::size_t(a)]; }

    /// Validates closure bounds, associativity, identity and inverses.
    void validate() const;

    static FiniteGroupTable symmetric3();
    static FiniteGroupTable cyclic(int n);
};

/// Is subset a subgroup? Throws InvalidSubgroup with the reason if not.
void require_subgroup(const FiniteGroupTable& g, const std::vector<int>& subset);

/// Checks H a H a H a = G by exhaustive expansion. Requires a outside H.
bool triple_product_check(const FiniteGroupTable& g, const std::vector<int>& subgroup, int a);

/// Marker-and-interpolation construction on Z x G for non-abelian G: widely
/// separated field minima anchor fiber elements; between anchors the chain
/// g_{x-1} in H a g_x is filled deterministically (a^{-1} steps, then the
/// first valid boundary pair in index order).
struct NonabelianTrace {
    FiidWindow window;
    std::vector<int> subgroup;
    int a = 0;
    std::vector<std::int64_t> minima; // S, spacing >= 3
    std::int64_t sites_start = 0;     // site of fiber[0] = first minimum
    std::vector<int> fiber;           // g_x for x in [sites_start, last minimum]
    std::int64_t core_start = 0;
    std::int64_t core_end = 0;
    std::int64_t ties = 0;
};

NonabelianTrace simulate_nonabelian_s3(std::int64_t length, std::uint64_t seed,
                                       const FiniteGroupTable& g, const std::vector<int>& subgroup,
                                       int a, std::int64_t start = 0);
FiidValidation validate_nonabelian(const FiniteGroupTable& g, const NonabelianTrace& trace,
                                   std::optional<std::pair<std::int64_t, std::int64_t>>
                                       core_override = std::nullopt);

} // namespace tilekit
