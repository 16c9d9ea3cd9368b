#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tilekit/group.hpp"
#include "tilekit/weight.hpp"

namespace tilekit {

/// Subset of a finite quotient, stored as a membership bitmap over the
/// fundamental domain (equivalently, a periodic subset of the parent group).
class PeriodicSet {
public:
    PeriodicSet() = default;
    PeriodicSet(QuotientSpec quotient, std::vector<GroupElement> elems);
    PeriodicSet(QuotientSpec quotient, std::vector<std::uint8_t> bitmap);

    const QuotientSpec& quotient() const { return quotient_; }
    const std::vector<std::uint8_t>& bitmap() const { return bitmap_; }
    bool contains_index(std::int64_t i) const { return bitmap_[std::size_t(i)] != 0; }
    std::int64_t size() const { return count_; }

    /// Members in index order.
    std::vector<GroupElement> elements() const;
    std::vector<std::int64_t> indices() const;

    PeriodicSet translated(const GroupElement& g) const;

    bool operator==(const PeriodicSet& o) const {
        return quotient_ == o.quotient_ && bitmap_ == o.bitmap_;
    }

private:
    QuotientSpec quotient_;
    std::vector<std::uint8_t> bitmap_;
    std::int64_t count_ = 0;
};

struct TilingReport {
    bool is_tiling = false;
    /// level -> number of points of the quotient covered exactly that often.
    std::map<std::int64_t, std::int64_t> level_histogram;
    /// Multiplicities >= 2 inside the (possibly dilated) tile multiset.
    Weight collision_multiplicities;
};

/// Checks whether tile (+) set covers every point of the quotient exactly once.
/// The tile may be a multiset (a Weight); levels then count with multiplicity.
TilingReport verify_tiling(const QuotientSpec& q, const Weight& tile, const PeriodicSet& set);
TilingReport verify_tiling(const QuotientSpec& q, const std::vector<GroupElement>& tile,
                           const PeriodicSet& set);

/// Number of tile translates covering each point, in index order.
std::vector<std::int64_t> level_function(const QuotientSpec& q, const Weight& tile,
                                         const PeriodicSet& set);

struct DilationEntry {
    std::int64_t r = 0;
    bool coprime_to_size = false;           // gcd(r, |F|) = 1
    bool coprime_to_small_primes = false;   // r not divisible by any prime <= |F|
    TilingReport report;
};

/// Verifies the base tiling, then replays verification with the tile dilated
/// by each r. Throws PremiseViolation if the base pair is not a tiling.
std::vector<DilationEntry> dilation_scan(const QuotientSpec& q,
                                         const std::vector<GroupElement>& tile,
                                         const PeriodicSet& set,
                                         const std::vector<std::int64_t>& r_values);

} // namespace tilekit
