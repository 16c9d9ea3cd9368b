#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tilekit/errors.hpp"

namespace tilekit {

/// A finitely generated abelian group Z^d x Z/n_1 x ... x Z/n_k.
struct GroupSpec {
    int free_rank = 0;
    std::vector<std::int64_t> torsion_orders; // each >= 2

    int rank() const { return free_rank + int(torsion_orders.size()); }

    bool operator==(const GroupSpec& o) const = default;

    /// Validates free_rank >= 0 and torsion orders >= 2.
    static GroupSpec make(int free_rank, std::vector<std::int64_t> torsion_orders);
};

/// Group element as a coordinate vector: free coordinates first (arbitrary
/// integers), then torsion coordinates (reduced into [0, n_j) by operations).
struct GroupElement {
    std::vector<std::int64_t> coords;

    GroupElement() = default;
    explicit GroupElement(std::vector<std::int64_t> c) : coords(std::move(c)) {}

    bool operator==(const GroupElement& o) const = default;
    friend bool operator<(const GroupElement& a, const GroupElement& b) {
        return a.coords < b.coords;
    }

    std::string str() const;
};

void require_element(const GroupSpec& spec, const GroupElement& g);

GroupElement group_zero(const GroupSpec& spec);
GroupElement group_add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
GroupElement group_neg(const GroupSpec& spec, const GroupElement& a);
GroupElement group_sub(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);

/// r * g for any integer r (negative and zero included).
GroupElement scalar_dilate(const GroupSpec& spec, std::int64_t r, const GroupElement& g);

/// Finite quotient of the group: free coordinate i is taken mod periods[i].
/// The fundamental domain [0,N_1) x ... x [0,N_d) x Z/n_1 x ... enumerates in
/// row-major order (first coordinate most significant).
class QuotientSpec {
public:
    QuotientSpec() = default;

    /// Validates periods (one per free coordinate, each >= 1) and the domain cap.
    static QuotientSpec make(GroupSpec group, std::vector<std::int64_t> periods);

    const GroupSpec& group() const { return group_; }
    const std::vector<std::int64_t>& periods() const { return periods_; }
    std::int64_t size() const { return size_; }

    /// All cyclic factors of the quotient in coordinate order
    /// (periods followed by torsion orders).
    const std::vector<std::int64_t>& radices() const { return radices_; }

    GroupElement reduce(const GroupElement& g) const;
    std::int64_t index_of(const GroupElement& g) const;
    GroupElement element_at(std::int64_t index) const;

    /// index_of(element_at(i) + element_at(j)) without materializing elements.
    std::int64_t index_add(std::int64_t i, std::int64_t j) const;
    std::int64_t index_neg(std::int64_t i) const;

    /// Additive order of g in the quotient.
    std::int64_t element_order(const GroupElement& g) const;

    bool operator==(const QuotientSpec& o) const {
        return group_ == o.group_ && periods_ == o.periods_;
    }

private:
    GroupSpec group_;
    std::vector<std::int64_t> periods_;
    std::vector<std::int64_t> radices_;
    std::vector<std::int64_t> strides_;
    std::int64_t size_ = 1;
};

/// Convenience: the full finite group Z/n_1 x ... x Z/n_k as its own quotient.
QuotientSpec finite_quotient(std::vector<std::int64_t> torsion_orders);

} // namespace tilekit
