#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tilekit/rational.hpp"

namespace tilekit {

/// Nonnegative step function on the line with rational breakpoints, treated up
/// to null sets (endpoint values are immaterial). Canonical form: strictly
/// increasing breakpoints b_0 < ... < b_m with values v_1..v_m on the open
/// segments, adjacent values distinct, and no zero-valued segment at either
/// end. Zero segments strictly inside the support are kept; they make the
/// support disconnected.
class StepFunction {
public:
    StepFunction() = default;
    StepFunction(std::vector<Rational> breakpoints, std::vector<Rational> values);

    static StepFunction indicator(const Rational& a, const Rational& b);

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<Rational>& values() const { return values_; }
    bool is_zero() const { return breakpoints_.empty(); }

    /// Value at an interior point of a segment; at a breakpoint the value of
    /// the segment to the right (0 beyond the last breakpoint).
    Rational value_at(const Rational& x) const;

    /// [first, last] breakpoint of the canonical form; nullopt for the zero
    /// function. With connected support this is the closure of {f > 0}.
    std::optional<std::pair<Rational, Rational>> support_bounds() const;

    bool has_connected_support() const;

    Rational mass() const;

    StepFunction scaled(const Rational& k) const;
    /// Pullback under x -> (x - shift) / scale, i.e. the graph stretched by
    /// scale (> 0) and moved by shift.
    StepFunction transformed(const Rational& scale, const Rational& shift) const;

    bool operator==(const StepFunction& o) const {
        return breakpoints_ == o.breakpoints_ && values_ == o.values_;
    }

private:
    void canonicalize();

    std::vector<Rational> breakpoints_;
    std::vector<Rational> values_;
};

/// Finite multiset of rational positions with positive integer multiplicities.
class RationalMultiset {
public:
    RationalMultiset() = default;
    explicit RationalMultiset(const std::vector<Rational>& positions);

    void add(const Rational& position, std::int64_t multiplicity = 1);

    const std::map<Rational, std::int64_t>& entries() const { return entries_; }
    std::size_t distinct_size() const { return entries_.size(); }
    std::int64_t total_size() const;
    bool empty() const { return entries_.empty(); }

private:
    std::map<Rational, std::int64_t> entries_;
};

/// Exact convolution sum_{f in F} mult(f) * psi(x - f).
StepFunction step_convolve(const RationalMultiset& tile, const StepFunction& psi);

struct IntervalClassification {
    std::int64_t m = 0;
    Rational c;
    Rational cprime;
};

/// Given 1_F * psi = 1_{[a,b]} with psi of connected support, recovers the
/// forced form m * psi = 1_{[c,c']}. Checks run in normalized coordinates
/// ([a,b] mapped to [0,1], min F to 0); the result is reported in the caller's
/// coordinates. Throws ConnectedRequired or PremiseViolation when the
/// hypotheses fail, LemmaViolation if a forced conclusion does not hold.
IntervalClassification classify_connected(const RationalMultiset& tile, const StepFunction& psi,
                                          const Rational& a, const Rational& b);

} // namespace tilekit
