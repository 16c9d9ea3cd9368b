#include "tilekit/profile.hpp"

#include <algorithm>
#include <map>

#include "tilekit/errors.hpp"

namespace tilekit {

CircleProfile CircleProfile::constant(const Rational& value) {
    CircleProfile p;
    p.starts_ = {Rational(0)};
    p.values_ = {value};
    p.slopes_ = {Rational(0)};
    return p;
}

namespace {

struct Deltas {
    Rational jump;   // value jump at the knot
    Rational dslope; // slope change at the knot
};

void add_jump(std::map<Rational, Deltas>& acc, const Rational& pos, const Rational& jump) {
    acc[pos.mod1()].jump += jump;
}

void add_dslope(std::map<Rational, Deltas>& acc, const Rational& pos, const Rational& ds) {
    acc[pos.mod1()].dslope += ds;
}

} // namespace

CircleProfile CircleProfile::of_cellset(const CellSet& set, std::int64_t h1, std::int64_t h2) {
    if (set.dim() != 2) throw SpecMismatch("profiles are defined for planar cell sets");
    if (h1 == 0 && h2 == 0) throw InvalidArgument("direction covector must be nonzero");

    const std::int64_t q = set.resolution();
    std::map<Rational, Deltas> acc;

    for (std::int64_t flat : set.flat_cells()) {
        const auto c = set.coords_of(flat);
        const Rational tau(checked_add(checked_mul(h1, c[0]), checked_mul(h2, c[1])), q);
        if (h1 == 0 || h2 == 0) {
            const std::int64_t h = h1 == 0 ? h2 : h1;
            const Rational lo = tau + Rational(std::min<std::int64_t>(h, 0), q);
            const Rational height(1, checked_mul(q, h < 0 ? -h : h));
            add_jump(acc, lo, height);
            add_jump(acc, lo + Rational(h < 0 ? -h : h, q), -height);
        } else {
            const std::int64_t a1 = h1 < 0 ? -h1 : h1;
            const std::int64_t a2 = h2 < 0 ? -h2 : h2;
            const Rational lo = tau + Rational(std::min<std::int64_t>(h1, 0), q) +
                                Rational(std::min<std::int64_t>(h2, 0), q);
            const Rational sigma(1, checked_mul(a1, a2));
            const Rational lmin(std::min(a1, a2), q), lmax(std::max(a1, a2), q);
            add_dslope(acc, lo, sigma);
            add_dslope(acc, lo + lmin, -sigma);
            add_dslope(acc, lo + lmax, -sigma);
            add_dslope(acc, lo + lmin + lmax, sigma);
        }
    }

    for (auto it = acc.begin(); it != acc.end();) {
        it = (it->second.jump.is_zero() && it->second.dslope.is_zero()) ? acc.erase(it)
                                                                        : std::next(it);
    }
    if (acc.empty()) return constant(set.measure());

    CircleProfile p;
    std::vector<Rational> jumps;
    for (const auto& [pos, d] : acc) {
        p.starts_.push_back(pos);
        jumps.push_back(d.jump);
    }
    const std::size_t n = p.starts_.size();

    // Slopes are cumulative sums of the slope deltas plus an unknown base C;
    // going once around the circle the total rise must vanish:
    //   sum_i slope_i * len_i + sum_i jump_i = 0.
    std::vector<Rational> cum(n), len(n);
    {
        Rational run(0);
        std::size_t i = 0;
        for (const auto& [pos, d] : acc) {
            run += d.dslope;
            cum[i++] = run;
        }
    }
    Rational total_len_weighted(0), total_jump(0);
    for (std::size_t i = 0; i < n; ++i) {
        const Rational end = (i + 1 < n) ? p.starts_[i + 1] : p.starts_[0] + Rational(1);
        len[i] = end - p.starts_[i];
        total_len_weighted += cum[i] * len[i];
        total_jump += jumps[i];
    }
    const Rational base_slope = -(total_len_weighted + total_jump); // times unit circle length
    p.slopes_.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.slopes_[i] = cum[i] + base_slope;

    // Values: start from an unknown v0 and integrate; pin v0 by total mass.
    std::vector<Rational> rel(n); // value at start(i) assuming rel(0) = 0
    rel[0] = Rational(0);
    for (std::size_t i = 1; i < n; ++i) {
        rel[i] = rel[i - 1] + p.slopes_[i - 1] * len[i - 1] + jumps[i];
    }
    Rational rel_mass(0);
    for (std::size_t i = 0; i < n; ++i) {
        rel_mass += rel[i] * len[i] + p.slopes_[i] * len[i] * len[i] / Rational(2);
    }
    const Rational v0 = set.measure() - rel_mass;
    p.values_.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.values_[i] = rel[i] + v0;
    return p;
}

Rational CircleProfile::value_at(const Rational& t) const {
    const Rational x = t.mod1();
    auto it = std::upper_bound(starts_.begin(), starts_.end(), x);
    std::size_t i;
    Rational offset;
    if (it == starts_.begin()) {
        // before the first knot: wrapping part of the last segment
        i = starts_.size() - 1;
        offset = x + Rational(1) - starts_[i];
    } else {
        i = std::size_t(it - starts_.begin()) - 1;
        offset = x - starts_[i];
    }
    return values_[i] + slopes_[i] * offset;
}

Rational CircleProfile::mass() const {
    Rational m(0);
    const std::size_t n = starts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Rational end = (i + 1 < n) ? starts_[i + 1] : starts_[0] + Rational(1);
        const Rational len = end - starts_[i];
        m += values_[i] * len + slopes_[i] * len * len / Rational(2);
    }
    return m;
}

bool CircleProfile::is_step() const {
    for (const auto& s : slopes_) {
        if (!s.is_zero()) return false;
    }
    return true;
}

bool CircleProfile::is_zero_one() const {
    if (!is_step()) return false;
    for (const auto& v : values_) {
        if (!(v == Rational(0) || v == Rational(1))) return false;
    }
    return true;
}

std::vector<std::pair<Rational, Rational>> CircleProfile::step_segments() const {
    if (!is_step()) throw InvalidArgument("profile is not piecewise constant");
    std::vector<std::pair<Rational, Rational>> segs;
    for (std::size_t i = 0; i < starts_.size(); ++i) {
        if (!segs.empty() && segs.back().second == values_[i]) continue;
        segs.emplace_back(starts_[i], values_[i]);
    }
    // fuse across the wrap
    if (segs.size() > 1 && segs.front().second == segs.back().second) {
        // represent the wrapped run by its true start
        segs.front().first = segs.back().first - Rational(1);
        segs.pop_back();
    }
    return segs;
}

} // namespace tilekit
