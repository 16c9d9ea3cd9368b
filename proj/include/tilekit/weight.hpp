#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tilekit/group.hpp"

namespace tilekit {

/// Finitely supported integer weight on a group (an element of the group ring
/// Z[G]). Zero coefficients are never stored, so equality of the maps is
/// equality of the weights.
class Weight {
public:
    Weight() = default;

    /// Indicator of a multiset of elements.
    static Weight indicator(const std::vector<GroupElement>& elems);
    static Weight delta(const GroupElement& g, std::int64_t coeff = 1);

    void add(const GroupElement& g, std::int64_t coeff);

    const std::map<GroupElement, std::int64_t>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Sum of coefficients.
    std::int64_t mass() const;

    /// Support as a sorted element list (multiplicities dropped).
    std::vector<GroupElement> support() const;

    Weight reduced(const QuotientSpec& q) const;
    Weight mod(std::int64_t p) const;

    bool operator==(const Weight& o) const { return terms_ == o.terms_; }

private:
    std::map<GroupElement, std::int64_t> terms_;
};

/// Exact convolution in Z[G]; keys are reduced into the quotient.
Weight convolve(const QuotientSpec& q, const Weight& a, const Weight& b);

/// r-dilation of a weight: sum of coefficients onto r*g.
Weight dilate_weight(const QuotientSpec& q, std::int64_t r, const Weight& w);

struct FrobeniusReport {
    bool holds = false;
    Weight lhs; // (sum_F delta_f)^{*p} with coefficients reduced mod p
    Weight rhs; // sum_F delta_{p f} reduced mod p
};

/// Checks the mod-p identity (sum_{f in F} delta_f)^{*p} = sum_{f in F} delta_{p f}
/// in the quotient group ring over F_p.
FrobeniusReport frobenius_check(const QuotientSpec& q, const std::vector<GroupElement>& tile,
                                std::int64_t p);

bool is_prime(std::int64_t p);

} // namespace tilekit
