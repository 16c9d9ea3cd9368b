#include "tilekit/tiling.hpp"

#include <numeric>

#include "tilekit/rational.hpp"

namespace tilekit {

PeriodicSet::PeriodicSet(QuotientSpec quotient, std::vector<GroupElement> elems)
    : quotient_(std::move(quotient)) {
    bitmap_.assign(std::size_t(quotient_.size()), 0);
    for (const auto& g : elems) {
        auto& bit = bitmap_[std::size_t(quotient_.index_of(g))];
        if (bit) throw InvalidArgument("duplicate element " + g.str() + " in periodic set");
        bit = 1;
    }
    count_ = std::int64_t(elems.size());
}

PeriodicSet::PeriodicSet(QuotientSpec quotient, std::vector<std::uint8_t> bitmap)
    : quotient_(std::move(quotient)), bitmap_(std::move(bitmap)) {
    if (std::int64_t(bitmap_.size()) != quotient_.size()) {
        throw SpecMismatch("bitmap size does not match quotient size");
    }
    for (auto b : bitmap_) count_ += (b != 0);
}

std::vector<GroupElement> PeriodicSet::elements() const {
    std::vector<GroupElement> out;
    out.reserve(std::size_t(count_));
    for (std::size_t i = 0; i < bitmap_.size(); ++i) {
        if (bitmap_[i]) out.push_back(quotient_.element_at(std::int64_t(i)));
    }
    return out;
}

std::vector<std::int64_t> PeriodicSet::indices() const {
    std::vector<std::int64_t> out;
    out.reserve(std::size_t(count_));
    for (std::size_t i = 0; i < bitmap_.size(); ++i) {
        if (bitmap_[i]) out.push_back(std::int64_t(i));
    }
    return out;
}

PeriodicSet PeriodicSet::translated(const GroupElement& g) const {
    const std::int64_t gi = quotient_.index_of(g);
    std::vector<std::uint8_t> out(bitmap_.size(), 0);
    for (std::size_t i = 0; i < bitmap_.size(); ++i) {
        if (bitmap_[i]) out[std::size_t(quotient_.index_add(std::int64_t(i), gi))] = 1;
    }
    return PeriodicSet(quotient_, std::move(out));
}

std::vector<std::int64_t> level_function(const QuotientSpec& q, const Weight& tile,
                                         const PeriodicSet& set) {
    if (!(set.quotient() == q)) throw SpecMismatch("set lives in a different quotient");
    std::vector<std::int64_t> level(std::size_t(q.size()), 0);
    for (const auto& [f, c] : tile.terms()) {
        const std::int64_t fi = q.index_of(f);
        for (std::size_t a = 0; a < level.size(); ++a) {
            if (!set.contains_index(std::int64_t(a))) continue;
            auto& cell = level[std::size_t(q.index_add(std::int64_t(a), fi))];
            cell = checked_add(cell, c);
        }
    }
    return level;
}

static TilingReport report_from(const QuotientSpec& q, const Weight& tile,
                                const PeriodicSet& set) {
    TilingReport rep;
    const auto level = level_function(q, tile, set);
    for (auto v : level) ++rep.level_histogram[v];
    rep.is_tiling = rep.level_histogram.size() == 1 && rep.level_histogram.count(1) == 1;
    if (level.empty()) rep.is_tiling = false;
    for (const auto& [g, c] : tile.terms()) {
        if (c >= 2) rep.collision_multiplicities.add(g, c);
    }
    return rep;
}

TilingReport verify_tiling(const QuotientSpec& q, const Weight& tile, const PeriodicSet& set) {
    return report_from(q, tile.reduced(q), set);
}

TilingReport verify_tiling(const QuotientSpec& q, const std::vector<GroupElement>& tile,
                           const PeriodicSet& set) {
    return verify_tiling(q, Weight::indicator(tile), set);
}

std::vector<DilationEntry> dilation_scan(const QuotientSpec& q,
                                         const std::vector<GroupElement>& tile,
                                         const PeriodicSet& set,
                                         const std::vector<std::int64_t>& r_values) {
    const auto base = verify_tiling(q, tile, set);
    if (!base.is_tiling) throw PremiseViolation("base pair is not a tiling");

    const std::int64_t fsize = std::int64_t(tile.size());
    std::vector<std::int64_t> small_primes;
    for (std::int64_t p = 2; p <= fsize; ++p) {
        if (is_prime(p)) small_primes.push_back(p);
    }

    std::vector<DilationEntry> out;
    out.reserve(r_values.size());
    for (std::int64_t r : r_values) {
        DilationEntry e;
        e.r = r;
        e.coprime_to_size = std::gcd(r, fsize) == 1;
        e.coprime_to_small_primes = true;
        for (std::int64_t p : small_primes) {
            if (r % p == 0) e.coprime_to_small_primes = false;
        }
        Weight dil;
        for (const auto& f : tile) dil.add(q.reduce(scalar_dilate(q.group(), r, f)), 1);
        e.report = verify_tiling(q, dil, set);
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace tilekit
