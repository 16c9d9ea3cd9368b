#pragma once

#include <cstdint>
#include <vector>

#include "tilekit/group.hpp"
#include "tilekit/rational.hpp"
#include "tilekit/tiling.hpp"

namespace tilekit {

/// Exact decomposition of the constant function 1 into tile-indexed components:
/// one rational-valued function phi_f per tile element, phi_f invariant under
/// translation by exponent * f.
struct Decomposition {
    QuotientSpec quotient;
    std::vector<GroupElement> tile;
    std::int64_t exponent = 0; // the q in the invariance direction q*f
    /// components[i][x] = phi_{tile[i]} at domain index x
    std::vector<std::vector<Rational>> components;
};

/// Product of the primes <= 2*|tile|; the alternative exponent used over Z^d.
std::int64_t small_prime_product_exponent(std::int64_t tile_size);

/// Builds phi_f as the exact average of 1_set over the finite orbit
/// x -> x - f - n*(exponent*f). With use_prime_product_exponent the exponent
/// is the product of primes <= 2|F| instead of |F|.
Decomposition decompose(const QuotientSpec& q, const std::vector<GroupElement>& tile,
                        const PeriodicSet& set, bool use_prime_product_exponent = false);

struct DecompositionCheck {
    bool partition_of_unity = false;  // sum_f phi_f = 1 everywhere
    bool invariant = false;           // phi_f(x + q f) = phi_f(x)
    bool mean_correct = false;        // avg phi_f = |A| / |X| exactly
    bool pure_translates = false;     // phi_f = 1_{f+A} whenever A + q f = A
    std::int64_t pure_translate_tiles = 0; // how many f satisfied A + q f = A
};

/// Verifies the four defining identities. Throws StructureViolation naming the
/// failing check and point; returns the full report when everything holds.
DecompositionCheck check_decomposition(const QuotientSpec& q,
                                       const std::vector<GroupElement>& tile,
                                       const PeriodicSet& set, const Decomposition& dec);

} // namespace tilekit
