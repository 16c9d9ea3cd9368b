#include "tilekit/intervals.hpp"

#include <algorithm>

namespace tilekit {

StepFunction::StepFunction(std::vector<Rational> breakpoints, std::vector<Rational> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (breakpoints_.empty() && values_.empty()) return;
    if (breakpoints_.size() != values_.size() + 1) {
        throw InvalidArgument("need one more breakpoint than segment values");
    }
    for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
        if (!(breakpoints_[i - 1] < breakpoints_[i])) {
            throw InvalidArgument("breakpoints must be strictly increasing");
        }
    }
    for (const auto& v : values_) {
        if (v < Rational(0)) throw InvalidArgument("step function values must be >= 0");
    }
    canonicalize();
}

StepFunction StepFunction::indicator(const Rational& a, const Rational& b) {
    if (!(a < b)) throw InvalidArgument("indicator needs a < b");
    return StepFunction({a, b}, {Rational(1)});
}

void StepFunction::canonicalize() {
    // merge equal neighbours
    std::vector<Rational> bp, vals;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!vals.empty() && vals.back() == values_[i]) {
            bp.back() = breakpoints_[i + 1];
            continue;
        }
        if (bp.empty()) bp.push_back(breakpoints_[i]);
        vals.push_back(values_[i]);
        bp.push_back(breakpoints_[i + 1]);
    }
    // trim zero ends
    std::size_t lo = 0, hi = vals.size();
    while (lo < hi && vals[lo].is_zero()) ++lo;
    while (hi > lo && vals[hi - 1].is_zero()) --hi;
    if (lo == hi) {
        breakpoints_.clear();
        values_.clear();
        return;
    }
    breakpoints_.assign(bp.begin() + lo, bp.begin() + hi + 1);
    values_.assign(vals.begin() + lo, vals.begin() + hi);
}

Rational StepFunction::value_at(const Rational& x) const {
    if (breakpoints_.empty()) return Rational(0);
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    if (it == breakpoints_.begin() || it == breakpoints_.end()) {
        // right-continuous at the first breakpoint, zero past the last
        if (it == breakpoints_.begin() && x == breakpoints_.front()) return values_.front();
        return Rational(0);
    }
    return values_[std::size_t(it - breakpoints_.begin()) - 1];
}

std::optional<std::pair<Rational, Rational>> StepFunction::support_bounds() const {
    if (breakpoints_.empty()) return std::nullopt;
    return std::make_pair(breakpoints_.front(), breakpoints_.back());
}

bool StepFunction::has_connected_support() const {
    if (breakpoints_.empty()) return false;
    for (const auto& v : values_) {
        if (v.is_zero()) return false; // canonical form: zero segments are interior
    }
    return true;
}

Rational StepFunction::mass() const {
    Rational m(0);
    for (std::size_t i = 0; i < values_.size(); ++i) {
        m += values_[i] * (breakpoints_[i + 1] - breakpoints_[i]);
    }
    return m;
}

StepFunction StepFunction::scaled(const Rational& k) const {
    if (k < Rational(0)) throw InvalidArgument("scale factor must be >= 0");
    std::vector<Rational> vals = values_;
    for (auto& v : vals) v *= k;
    return StepFunction(breakpoints_, std::move(vals));
}

StepFunction StepFunction::transformed(const Rational& scale, const Rational& shift) const {
    if (!(Rational(0) < scale)) throw InvalidArgument("scale must be positive");
    std::vector<Rational> bp = breakpoints_;
    for (auto& b : bp) b = b * scale + shift;
    return StepFunction(std::move(bp), values_);
}

RationalMultiset::RationalMultiset(const std::vector<Rational>& positions) {
    for (const auto& p : positions) add(p);
}

void RationalMultiset::add(const Rational& position, std::int64_t multiplicity) {
    if (multiplicity < 1) throw InvalidArgument("multiplicities must be >= 1");
    entries_[position] = checked_add(entries_[position], multiplicity);
}

std::int64_t RationalMultiset::total_size() const {
    std::int64_t n = 0;
    for (const auto& [p, m] : entries_) n = checked_add(n, m);
    return n;
}

StepFunction step_convolve(const RationalMultiset& tile, const StepFunction& psi) {
    if (tile.empty() || psi.is_zero()) return StepFunction();

    std::vector<Rational> cuts;
    for (const auto& [f, m] : tile.entries()) {
        for (const auto& b : psi.breakpoints()) cuts.push_back(f + b);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Rational> vals;
    vals.reserve(cuts.size() - 1);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Rational mid = (cuts[i] + cuts[i + 1]) / Rational(2);
        Rational v(0);
        for (const auto& [f, m] : tile.entries()) v += Rational(m) * psi.value_at(mid - f);
        vals.push_back(v);
    }
    return StepFunction(std::move(cuts), std::move(vals));
}

IntervalClassification classify_connected(const RationalMultiset& tile, const StepFunction& psi,
                                          const Rational& a, const Rational& b) {
    if (tile.empty()) throw InvalidArgument("tile must be nonempty");
    if (!(a < b)) throw InvalidArgument("need a < b");
    if (!psi.has_connected_support()) {
        throw ConnectedRequired("step function support is not a single interval");
    }
    if (!(step_convolve(tile, psi) == StepFunction::indicator(a, b))) {
        throw PremiseViolation("tile * psi is not the indicator of [a,b]");
    }

    const Rational scale = b - a;
    const Rational fmin = tile.entries().begin()->first;
    // normalized coordinates: u = (x - (a... shift)) / scale with [a,b] -> [0,1]
    // and min F -> 0; psi_hat(u) = psi(scale*u + a - fmin).
    const StepFunction psi_hat =
        psi.transformed(Rational(1) / scale, (fmin - a) / scale);

    const auto hat_support = psi_hat.support_bounds();
    if (!hat_support || !(hat_support->first == Rational(0))) {
        throw LemmaViolation("normalized support does not start at 0");
    }

    std::vector<std::pair<Rational, std::int64_t>> fs(tile.entries().begin(),
                                                      tile.entries().end());
    const std::int64_t m = fs.front().second;
    if (fs.back().second != m) {
        throw LemmaViolation("first and last multiplicities differ");
    }
    if (psi_hat.values().size() != 1 || !(psi_hat.values()[0] * Rational(m) == Rational(1))) {
        throw LemmaViolation("step function is not constant 1/m on its support");
    }
    if (fs.size() > 1) {
        const Rational gap = (fs[fs.size() - 1].first - fs[fs.size() - 2].first) / scale;
        if (hat_support->second > gap) {
            throw LemmaViolation("support longer than the last tile gap");
        }
    }

    const auto orig = psi.support_bounds();
    IntervalClassification out;
    out.m = m;
    out.c = orig->first;
    out.cprime = orig->second;
    return out;
}

} // namespace tilekit
