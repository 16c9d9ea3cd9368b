#include "tilekit/weight.hpp"

#include "tilekit/rational.hpp"

namespace tilekit {

Weight Weight::indicator(const std::vector<GroupElement>& elems) {
    Weight w;
    for (const auto& g : elems) w.add(g, 1);
    return w;
}

Weight Weight::delta(const GroupElement& g, std::int64_t coeff) {
    Weight w;
    w.add(g, coeff);
    return w;
}

void Weight::add(const GroupElement& g, std::int64_t coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(g);
    if (it == terms_.end()) {
        terms_.emplace(g, coeff);
        return;
    }
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
}

std::int64_t Weight::mass() const {
    std::int64_t m = 0;
    for (const auto& [g, c] : terms_) m = checked_add(m, c);
    return m;
}

std::vector<GroupElement> Weight::support() const {
    std::vector<GroupElement> out;
    out.reserve(terms_.size());
    for (const auto& [g, c] : terms_) out.push_back(g);
    return out;
}

Weight Weight::reduced(const QuotientSpec& q) const {
    Weight out;
    for (const auto& [g, c] : terms_) out.add(q.reduce(g), c);
    return out;
}

Weight Weight::mod(std::int64_t p) const {
    if (p < 2) throw InvalidArgument("modulus must be >= 2");
    Weight out;
    for (const auto& [g, c] : terms_) out.add(g, floor_mod(c, p));
    return out;
}

Weight convolve(const QuotientSpec& q, const Weight& a, const Weight& b) {
    Weight out;
    for (const auto& [g, cg] : a.terms()) {
        const GroupElement gr = q.reduce(g);
        for (const auto& [h, ch] : b.terms()) {
            out.add(q.reduce(group_add(q.group(), gr, h)), checked_mul(cg, ch));
        }
    }
    return out;
}

Weight dilate_weight(const QuotientSpec& q, std::int64_t r, const Weight& w) {
    Weight out;
    for (const auto& [g, c] : w.terms()) out.add(q.reduce(scalar_dilate(q.group(), r, g)), c);
    return out;
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

FrobeniusReport frobenius_check(const QuotientSpec& q, const std::vector<GroupElement>& tile,
                                std::int64_t p) {
    if (!is_prime(p)) throw InvalidPrime(std::to_string(p) + " is not prime");
    if (tile.empty()) throw InvalidArgument("tile must be nonempty");

    const Weight w = Weight::indicator(tile).reduced(q);
    Weight lhs = Weight::delta(group_zero(q.group()));
    for (std::int64_t i = 0; i < p; ++i) lhs = convolve(q, lhs, w).mod(p);

    Weight rhs;
    for (const auto& f : tile) rhs.add(q.reduce(scalar_dilate(q.group(), p, f)), 1);
    rhs = rhs.mod(p);

    FrobeniusReport rep;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.holds = (lhs == rhs);
    return rep;
}

} // namespace tilekit
