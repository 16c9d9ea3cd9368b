#include "tilekit/group.hpp"

#include <numeric>

#include "tilekit/caps.hpp"
#include "tilekit/rational.hpp"

namespace tilekit {

GroupSpec GroupSpec::make(int free_rank, std::vector<std::int64_t> torsion_orders) {
    if (free_rank < 0) throw InvalidArgument("free rank must be nonnegative");
    for (std::int64_t n : torsion_orders) {
        if (n < 2) throw InvalidArgument("torsion orders must be >= 2");
    }
    GroupSpec s;
    s.free_rank = free_rank;
    s.torsion_orders = std::move(torsion_orders);
    return s;
}

std::string GroupElement::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(coords[i]);
    }
    out += ")";
    return out;
}

void require_element(const GroupSpec& spec, const GroupElement& g) {
    if (int(g.coords.size()) != spec.rank()) {
        throw SpecMismatch("element rank " + std::to_string(g.coords.size()) +
                           " does not match group rank " + std::to_string(spec.rank()));
    }
}

GroupElement group_zero(const GroupSpec& spec) {
    return GroupElement(std::vector<std::int64_t>(spec.rank(), 0));
}

static void reduce_torsion(const GroupSpec& spec, GroupElement& g) {
    for (std::size_t j = 0; j < spec.torsion_orders.size(); ++j) {
        auto& c = g.coords[spec.free_rank + j];
        c = floor_mod(c, spec.torsion_orders[j]);
    }
}

GroupElement group_add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
    require_element(spec, a);
    require_element(spec, b);
    GroupElement r = a;
    for (int i = 0; i < spec.rank(); ++i) r.coords[i] = checked_add(r.coords[i], b.coords[i]);
    reduce_torsion(spec, r);
    return r;
}

GroupElement group_neg(const GroupSpec& spec, const GroupElement& a) {
    require_element(spec, a);
    GroupElement r = a;
    for (int i = 0; i < spec.rank(); ++i) r.coords[i] = checked_neg(r.coords[i]);
    reduce_torsion(spec, r);
    return r;
}

GroupElement group_sub(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
    return group_add(spec, a, group_neg(spec, b));
}

GroupElement scalar_dilate(const GroupSpec& spec, std::int64_t r, const GroupElement& g) {
    require_element(spec, g);
    GroupElement out = g;
    for (int i = 0; i < spec.rank(); ++i) out.coords[i] = checked_mul(r, out.coords[i]);
    reduce_torsion(spec, out);
    return out;
}

QuotientSpec QuotientSpec::make(GroupSpec group, std::vector<std::int64_t> periods) {
    if (int(periods.size()) != group.free_rank) {
        throw SpecMismatch("need one period per free coordinate");
    }
    QuotientSpec q;
    q.size_ = 1;
    for (std::int64_t n : periods) {
        if (n < 1) throw InvalidArgument("quotient periods must be >= 1");
        q.size_ = checked_mul(q.size_, n);
    }
    for (std::int64_t n : group.torsion_orders) q.size_ = checked_mul(q.size_, n);
    check_domain_size(q.size_);
    q.radices_ = periods;
    q.radices_.insert(q.radices_.end(), group.torsion_orders.begin(), group.torsion_orders.end());
    q.strides_.assign(q.radices_.size(), 1);
    for (std::size_t k = q.radices_.size(); k-- > 1;) {
        q.strides_[k - 1] = q.strides_[k] * q.radices_[k];
    }
    q.group_ = std::move(group);
    q.periods_ = std::move(periods);
    return q;
}

GroupElement QuotientSpec::reduce(const GroupElement& g) const {
    require_element(group_, g);
    GroupElement r = g;
    for (std::size_t i = 0; i < radices_.size(); ++i) r.coords[i] = floor_mod(r.coords[i], radices_[i]);
    return r;
}

std::int64_t QuotientSpec::index_of(const GroupElement& g) const {
    require_element(group_, g);
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < radices_.size(); ++i) {
        idx = idx * radices_[i] + floor_mod(g.coords[i], radices_[i]);
    }
    return idx;
}

GroupElement QuotientSpec::element_at(std::int64_t index) const {
    if (index < 0 || index >= size_) throw InvalidArgument("element index out of range");
    GroupElement g(std::vector<std::int64_t>(radices_.size(), 0));
    for (std::size_t i = radices_.size(); i-- > 0;) {
        g.coords[i] = index % radices_[i];
        index /= radices_[i];
    }
    return g;
}

std::int64_t QuotientSpec::index_add(std::int64_t i, std::int64_t j) const {
    std::int64_t out = 0;
    for (std::size_t k = radices_.size(); k-- > 0;) {
        const std::int64_t n = radices_[k];
        const std::int64_t c = (i % n + j % n) % n;
        out += c * strides_[k];
        i /= n;
        j /= n;
    }
    return out;
}

std::int64_t QuotientSpec::index_neg(std::int64_t i) const {
    std::int64_t out = 0;
    for (std::size_t k = radices_.size(); k-- > 0;) {
        const std::int64_t n = radices_[k];
        const std::int64_t c = (n - i % n) % n;
        out += c * strides_[k];
        i /= n;
    }
    return out;
}

std::int64_t QuotientSpec::element_order(const GroupElement& g) const {
    const GroupElement z = reduce(g);
    std::int64_t order = 1;
    for (std::size_t i = 0; i < radices_.size(); ++i) {
        const std::int64_t n = radices_[i];
        const std::int64_t c = z.coords[i];
        const std::int64_t o = n / std::gcd(n, c == 0 ? n : c);
        order = std::lcm(order, o);
    }
    return order;
}

QuotientSpec finite_quotient(std::vector<std::int64_t> torsion_orders) {
    return QuotientSpec::make(GroupSpec::make(0, std::move(torsion_orders)), {});
}

} // namespace tilekit
