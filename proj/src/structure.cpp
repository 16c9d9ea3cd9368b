#include "tilekit/structure.hpp"

#include "tilekit/weight.hpp"

namespace tilekit {

std::int64_t small_prime_product_exponent(std::int64_t tile_size) {
    std::int64_t prod = 1;
    for (std::int64_t p = 2; p <= 2 * tile_size; ++p) {
        if (is_prime(p)) prod = checked_mul(prod, p);
    }
    return prod;
}

Decomposition decompose(const QuotientSpec& q, const std::vector<GroupElement>& tile,
                        const PeriodicSet& set, bool use_prime_product_exponent) {
    if (!verify_tiling(q, tile, set).is_tiling) {
        throw PremiseViolation("decompose requires a tiling");
    }

    Decomposition dec;
    dec.quotient = q;
    dec.tile = tile;
    dec.exponent = use_prime_product_exponent
                       ? small_prime_product_exponent(std::int64_t(tile.size()))
                       : std::int64_t(tile.size());

    const std::int64_t n = q.size();
    for (const auto& f : tile) {
        const std::int64_t fi = q.index_of(f);
        const std::int64_t stepi =
            q.index_of(scalar_dilate(q.group(), dec.exponent, f));
        const std::int64_t orbit = q.element_order(q.element_at(stepi));

        std::vector<Rational> phi(static_cast<std::size_t>(n));
        for (std::int64_t x = 0; x < n; ++x) {
            std::int64_t hits = 0;
            std::int64_t y = q.index_add(x, q.index_neg(fi));
            for (std::int64_t k = 0; k < orbit; ++k) {
                hits += set.contains_index(y);
                y = q.index_add(y, q.index_neg(stepi));
            }
            phi[std::size_t(x)] = Rational(hits, orbit);
        }
        dec.components.push_back(std::move(phi));
    }
    return dec;
}

DecompositionCheck check_decomposition(const QuotientSpec& q,
                                       const std::vector<GroupElement>& tile,
                                       const PeriodicSet& set, const Decomposition& dec) {
    if (!(dec.quotient == q) || dec.tile != tile ||
        dec.components.size() != tile.size()) {
        throw SpecMismatch("decomposition does not match the (quotient, tile) pair");
    }
    const std::int64_t n = q.size();
    for (const auto& phi : dec.components) {
        if (std::int64_t(phi.size()) != n) {
            throw SpecMismatch("component has wrong domain size");
        }
    }

    DecompositionCheck rep;

    for (std::int64_t x = 0; x < n; ++x) {
        Rational s(0);
        for (const auto& phi : dec.components) s += phi[std::size_t(x)];
        if (s != Rational(1)) {
            throw StructureViolation("partition-of-unity", q.element_at(x).str(),
                                     "sum of components is " + s.str());
        }
    }
    rep.partition_of_unity = true;

    for (std::size_t i = 0; i < tile.size(); ++i) {
        const std::int64_t stepi = q.index_of(scalar_dilate(q.group(), dec.exponent, tile[i]));
        for (std::int64_t x = 0; x < n; ++x) {
            const std::int64_t y = q.index_add(x, stepi);
            if (dec.components[i][std::size_t(x)] != dec.components[i][std::size_t(y)]) {
                throw StructureViolation("invariance", q.element_at(x).str(),
                                         "component " + tile[i].str() +
                                             " moves under its translation");
            }
        }
    }
    rep.invariant = true;

    const Rational density(set.size(), n);
    for (std::size_t i = 0; i < tile.size(); ++i) {
        Rational total(0);
        for (std::int64_t x = 0; x < n; ++x) total += dec.components[i][std::size_t(x)];
        if (total / Rational(n) != density) {
            throw StructureViolation("mean", tile[i].str(),
                                     "mean is " + (total / Rational(n)).str() +
                                         ", expected " + density.str());
        }
    }
    rep.mean_correct = true;

    for (std::size_t i = 0; i < tile.size(); ++i) {
        const std::int64_t stepi = q.index_of(scalar_dilate(q.group(), dec.exponent, tile[i]));
        const GroupElement step = q.element_at(stepi);
        if (!(set.translated(step) == set)) continue;
        ++rep.pure_translate_tiles;
        const std::int64_t fi = q.index_of(tile[i]);
        for (std::int64_t x = 0; x < n; ++x) {
            const Rational expect(
                set.contains_index(q.index_add(x, q.index_neg(fi))) ? 1 : 0);
            if (dec.components[i][std::size_t(x)] != expect) {
                throw StructureViolation("pure-translate", q.element_at(x).str(),
                                         "component " + tile[i].str() +
                                             " is not the indicator of its translate");
            }
        }
    }
    rep.pure_translates = true;

    return rep;
}

} // namespace tilekit
