#include <doctest.h>

#include "tilekit/errors.hpp"
#include "tilekit/intervals.hpp"
#include "tilekit/prng.hpp"

using namespace tilekit;

namespace {
Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }
}

TEST_CASE("step function canonical form") {
    auto ind = StepFunction::indicator(R(0), R(1));
    CHECK(ind.breakpoints() == std::vector<Rational>{R(0), R(1)});
    CHECK(ind.values() == std::vector<Rational>{R(1)});
    CHECK(ind.mass() == R(1));

    // equal neighbouring segments merge
    CHECK(StepFunction({R(0), R(1), R(2)}, {R(1), R(1)}) == ind.transformed(R(2), R(0)));
    // zero tails are trimmed away
    CHECK(StepFunction({R(-1), R(0), R(1), R(2)}, {R(0), R(1), R(0)}) == ind);
    // all-zero collapses to the zero function
    CHECK(StepFunction({R(0), R(5)}, {R(0)}).is_zero());
    CHECK(StepFunction().is_zero());

    // interior zero segments survive and disconnect the support
    StepFunction gap({R(0), R(1), R(2), R(3)}, {R(1), R(0), R(1)});
    CHECK_FALSE(gap.has_connected_support());
    CHECK(gap.support_bounds() == std::make_pair(R(0), R(3)));
    CHECK(ind.has_connected_support());
    CHECK_FALSE(StepFunction().has_connected_support());
}

TEST_CASE("step function constructor rejections") {
    CHECK_THROWS_AS(StepFunction({R(0), R(0)}, {R(1)}), InvalidArgument);
    CHECK_THROWS_AS(StepFunction({R(0), R(1)}, {R(1), R(2)}), InvalidArgument);
    CHECK_THROWS_AS(StepFunction({R(0), R(1)}, {R(-1)}), InvalidArgument);
    CHECK_THROWS_AS(StepFunction::indicator(R(1), R(1)), InvalidArgument);
}

TEST_CASE("pointwise evaluation follows right continuity") {
    StepFunction f({R(0), R(1), R(3)}, {R(2), R(1)});
    CHECK(f.value_at(R(-1)) == R(0));
    CHECK(f.value_at(R(0)) == R(2));
    CHECK(f.value_at(R(1, 2)) == R(2));
    CHECK(f.value_at(R(1)) == R(1));
    CHECK(f.value_at(R(2)) == R(1));
    CHECK(f.value_at(R(3)) == R(0));
    CHECK(f.mass() == R(4));
}

TEST_CASE("scaling and affine reparametrization") {
    StepFunction f({R(0), R(1), R(3)}, {R(2), R(1)});
    CHECK(f.scaled(R(1, 2)) == StepFunction({R(0), R(1), R(3)}, {R(1), R(1, 2)}));
    CHECK(f.scaled(R(0)).is_zero());
    CHECK_THROWS_AS(f.scaled(R(-1)), InvalidArgument);

    auto g = f.transformed(R(1, 2), R(5));
    CHECK(g.breakpoints() == std::vector<Rational>{R(5), R(11, 2), R(13, 2)});
    CHECK(g.values() == f.values());
    CHECK(g.mass() == f.mass() / R(2));
    CHECK_THROWS_AS(f.transformed(R(0), R(0)), InvalidArgument);
}

TEST_CASE("rational multisets") {
    RationalMultiset ms({R(0), R(1), R(0)});
    CHECK(ms.distinct_size() == 2);
    CHECK(ms.total_size() == 3);
    CHECK(ms.entries().at(R(0)) == 2);
    ms.add(R(1, 2), 5);
    CHECK(ms.total_size() == 8);
    CHECK_THROWS_AS(ms.add(R(2), 0), InvalidArgument);
    CHECK(RationalMultiset().empty());
}

TEST_CASE("convolution with indicator tiles") {
    RationalMultiset two({R(0), R(1)});
    CHECK(step_convolve(two, StepFunction::indicator(R(0), R(1))) ==
          StepFunction::indicator(R(0), R(2)));

    RationalMultiset three({R(0), R(1), R(2)});
    CHECK(step_convolve(three, StepFunction::indicator(R(0), R(1))) ==
          StepFunction::indicator(R(0), R(3)));

    // overlapping translates stack up
    RationalMultiset half({R(0), R(1, 2)});
    auto stacked = step_convolve(half, StepFunction::indicator(R(0), R(1)));
    CHECK(stacked == StepFunction({R(0), R(1, 2), R(1), R(3, 2)}, {R(1), R(2), R(1)}));

    // multiplicities act as scalar weights
    RationalMultiset doubled;
    doubled.add(R(0), 2);
    CHECK(step_convolve(doubled, StepFunction::indicator(R(0), R(1))) ==
          StepFunction({R(0), R(1)}, {R(2)}));

    CHECK(step_convolve(RationalMultiset(), StepFunction::indicator(R(0), R(1))).is_zero());
    CHECK(step_convolve(two, StepFunction()).is_zero());
}

TEST_CASE("classification of an exact interval cover") {
    SUBCASE("unit multiplicity") {
        auto got = classify_connected(RationalMultiset({R(0), R(1), R(2)}),
                                      StepFunction::indicator(R(0), R(1)), R(0), R(3));
        CHECK(got.m == 1);
        CHECK(got.c == R(0));
        CHECK(got.cprime == R(1));
    }
    SUBCASE("multiplicity two") {
        RationalMultiset tile;
        tile.add(R(0), 2);
        tile.add(R(1), 2);
        auto got = classify_connected(tile, StepFunction::indicator(R(0), R(1)).scaled(R(1, 2)),
                                      R(0), R(2));
        CHECK(got.m == 2);
        CHECK(got.c == R(0));
        CHECK(got.cprime == R(1));
    }
    SUBCASE("shifted, scaled coordinates") {
        auto got = classify_connected(RationalMultiset({R(5), R(7)}),
                                      StepFunction::indicator(R(1), R(3)), R(6), R(10));
        CHECK(got.m == 1);
        CHECK(got.c == R(1));
        CHECK(got.cprime == R(3));
    }
    SUBCASE("single position with multiplicity") {
        RationalMultiset tile;
        tile.add(R(5), 3);
        auto got = classify_connected(tile, StepFunction::indicator(R(0), R(2)).scaled(R(1, 3)),
                                      R(5), R(7));
        CHECK(got.m == 3);
        CHECK(got.c == R(0));
        CHECK(got.cprime == R(2));
    }
}

TEST_CASE("classification rejects broken hypotheses") {
    RationalMultiset two({R(0), R(1)});

    // disconnected factor
    StepFunction gap({R(0), R(1), R(2), R(3)}, {R(1), R(0), R(1)});
    CHECK_THROWS_AS(classify_connected(RationalMultiset({R(0)}), gap, R(0), R(3)),
                    ConnectedRequired);

    // convolution is not an indicator
    CHECK_THROWS_AS(
        classify_connected(two, StepFunction::indicator(R(0), R(2)), R(0), R(3)),
        PremiseViolation);

    // right convolution, wrong interval endpoints
    CHECK_THROWS_AS(
        classify_connected(two, StepFunction::indicator(R(0), R(1)), R(0), R(3)),
        PremiseViolation);

    // zero factor has empty (disconnected) support
    CHECK_THROWS_AS(classify_connected(two, StepFunction(), R(0), R(2)), ConnectedRequired);

    CHECK_THROWS_AS(
        classify_connected(RationalMultiset(), StepFunction::indicator(R(0), R(1)), R(0), R(1)),
        InvalidArgument);
    CHECK_THROWS_AS(
        classify_connected(two, StepFunction::indicator(R(0), R(1)), R(2), R(1)),
        InvalidArgument);
}

TEST_CASE("random flat families round-trip through the classifier") {
    // every exact cover of an interval by translates of a connected factor has
    // the form psi = (1/m) 1_[c,c+L] with F = m copies of an L-spaced run
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
        auto pick = [&](std::uint64_t k, std::int64_t lo, std::int64_t hi) {
            return lo + std::int64_t(counter_hash(4242, trial, k) % std::uint64_t(hi - lo + 1));
        };
        const std::int64_t m = pick(0, 1, 4);
        const std::int64_t k = pick(1, 1, 5);
        const Rational L(pick(2, 1, 9), pick(3, 1, 6));
        const Rational c(pick(4, -12, 12), pick(5, 1, 5));
        const Rational p0(pick(6, -12, 12), pick(7, 1, 5));

        RationalMultiset tile;
        for (std::int64_t i = 0; i < k; ++i) tile.add(p0 + Rational(i) * L, m);
        const StepFunction psi =
            StepFunction::indicator(c, c + L).scaled(Rational(1) / Rational(m));
        const Rational a = p0 + c;
        const Rational b = p0 + c + Rational(k) * L;

        CHECK(step_convolve(tile, psi) == StepFunction::indicator(a, b));
        auto got = classify_connected(tile, psi, a, b);
        CHECK(got.m == m);
        CHECK(got.c == c);
        CHECK(got.cprime == c + L);
    }
}
