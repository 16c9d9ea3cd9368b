#pragma once

#include <cstdint>
#include <vector>

#include "tilekit/cellset.hpp"
#include "tilekit/rational.hpp"

namespace tilekit {

/// Density profile of a planar cell set along a direction: the pushforward of
/// the restricted Lebesgue measure under x -> h.x mod 1 for an integer
/// covector h. It is piecewise linear with rational knots, computed exactly:
/// each cell pushes to a wrapped box or trapezoid. A set is invariant (up to
/// null sets) along the direction annihilated by h iff its profile is the
/// indicator of a sub-circle set, i.e. slope zero everywhere with values in
/// {0,1}.
class CircleProfile {
public:
    /// Piecewise description: segment i runs from start(i) to start(i+1)
    /// (the last wraps around to start(0)+1).
    std::size_t segment_count() const { return starts_.size(); }
    const Rational& start(std::size_t i) const { return starts_[i]; }
    const Rational& value_at_start(std::size_t i) const { return values_[i]; }
    const Rational& slope(std::size_t i) const { return slopes_[i]; }

    /// Constant profiles have a single segment starting at 0 with slope 0.
    static CircleProfile constant(const Rational& value);
    static CircleProfile of_cellset(const CellSet& set, std::int64_t h1, std::int64_t h2);

    Rational value_at(const Rational& t) const;
    Rational mass() const;

    bool is_step() const;
    /// Step profile with every value 0 or 1.
    bool is_zero_one() const;

    /// For step profiles: merged (start, value) segments around the circle,
    /// adjacent equal values fused (including across the wrap at 0/1).
    std::vector<std::pair<Rational, Rational>> step_segments() const;

private:
    std::vector<Rational> starts_; // sorted, in [0,1)
    std::vector<Rational> values_; // value at segment start (right limit)
    std::vector<Rational> slopes_;
};

} // namespace tilekit
