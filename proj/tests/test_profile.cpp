#include <doctest.h>

#include "tilekit/cellset.hpp"
#include "tilekit/errors.hpp"
#include "tilekit/prng.hpp"
#include "tilekit/profile.hpp"

using namespace tilekit;

namespace {
Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }
}

TEST_CASE("constant profiles") {
    auto p = CircleProfile::constant(R(1, 3));
    CHECK(p.segment_count() == 1);
    CHECK(p.start(0) == R(0));
    CHECK(p.slope(0) == R(0));
    CHECK(p.value_at(R(7, 9)) == R(1, 3));
    CHECK(p.mass() == R(1, 3));
    CHECK(p.is_step());
    CHECK_FALSE(p.is_zero_one());
    CHECK(CircleProfile::constant(R(1)).is_zero_one());
    CHECK(CircleProfile::constant(R(0)).is_zero_one());
}

TEST_CASE("full torus pushes to the constant 1 in any direction") {
    for (auto [h1, h2] : {std::pair<std::int64_t, std::int64_t>{1, 0}, {0, 1}, {1, 1}, {2, -3}}) {
        auto p = CircleProfile::of_cellset(CellSet::full(2, 3), h1, h2);
        CHECK(p.is_zero_one());
        CHECK(p.mass() == R(1));
        CHECK(p.value_at(R(1, 7)) == R(1));
    }
}

TEST_CASE("a single cell pushes to a box along an axis covector") {
    CellSet cell(2, 4, {{0, 0}});
    auto p = CircleProfile::of_cellset(cell, 1, 0);
    CHECK(p.is_step());
    CHECK(p.value_at(R(1, 8)) == R(1, 4));
    CHECK(p.value_at(R(1, 2)) == R(0));
    CHECK(p.mass() == cell.measure());

    // doubling the covector doubles the box and halves the density
    auto p2 = CircleProfile::of_cellset(cell, 2, 0);
    CHECK(p2.value_at(R(1, 4)) == R(1, 8));
    CHECK(p2.value_at(R(3, 4)) == R(0));
    CHECK(p2.mass() == cell.measure());

    // a negative covector reflects the box
    auto pn = CircleProfile::of_cellset(cell, -1, 0);
    CHECK(pn.value_at(R(7, 8)) == R(1, 4));
    CHECK(pn.value_at(R(1, 8)) == R(0));
}

TEST_CASE("an axis strip is invariant exactly along its own direction") {
    // bottom half of the square: invariant along (1,0), so the (0,1) profile
    // is a 0/1 step; the (1,0) profile smears to the constant density
    auto strip = CellSet::box(2, 2, {0, 0}, {2, 1});
    auto along = CircleProfile::of_cellset(strip, 0, 1);
    CHECK(along.is_zero_one());
    CHECK(along.step_segments() ==
          std::vector<std::pair<Rational, Rational>>{{R(0), R(1)}, {R(1, 2), R(0)}});

    auto across = CircleProfile::of_cellset(strip, 1, 0);
    CHECK(across.is_step());
    CHECK_FALSE(across.is_zero_one());
    CHECK(across.value_at(R(1, 3)) == R(1, 2));
    CHECK(across.segment_count() == 1);

    auto skew = CircleProfile::of_cellset(strip, 1, -1);
    CHECK(skew.is_step());
    CHECK_FALSE(skew.is_zero_one());
    CHECK(skew.value_at(R(0)) == R(1, 2));
}

TEST_CASE("wrapped support is reported from its true start") {
    // columns x = 0 and x = 3 at resolution 4 form one arc through the seam
    auto cols = CellSet::box(2, 4, {0, 0}, {1, 4}).unioned(CellSet::box(2, 4, {3, 0}, {4, 4}));
    auto p = CircleProfile::of_cellset(cols, 1, 0);
    CHECK(p.is_zero_one());
    CHECK(p.step_segments() ==
          std::vector<std::pair<Rational, Rational>>{{R(1, 4), R(0)}, {R(3, 4), R(1)}});
    CHECK(p.value_at(R(0)) == R(1));
    CHECK(p.value_at(R(7, 8)) == R(1));
    CHECK(p.value_at(R(1, 2)) == R(0));
}

TEST_CASE("the checkerboard smears diagonally into a tent") {
    CellSet checker(2, 2, {{0, 0}, {1, 1}});
    auto p = CircleProfile::of_cellset(checker, 1, 1);
    CHECK_FALSE(p.is_step());
    CHECK(p.value_at(R(0)) == R(0));
    CHECK(p.value_at(R(1, 4)) == R(1, 2));
    CHECK(p.value_at(R(1, 2)) == R(1));
    CHECK(p.value_at(R(3, 4)) == R(1, 2));
    CHECK(p.mass() == R(1, 2));
    CHECK_THROWS_AS(p.step_segments(), InvalidArgument);

    // the reflected diagonal is just as bad
    auto q = CircleProfile::of_cellset(checker, 1, -1);
    CHECK_FALSE(q.is_step());
    CHECK(q.value_at(R(0)) == R(1));
    CHECK(q.value_at(R(1, 2)) == R(0));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(CircleProfile::of_cellset(CellSet::full(1, 4), 1, 0), SpecMismatch);
    CHECK_THROWS_AS(CircleProfile::of_cellset(CellSet::full(2, 2), 0, 0), InvalidArgument);
}

TEST_CASE("pushforward mass always equals the set measure") {
    const std::vector<std::pair<std::int64_t, std::int64_t>> covs = {
        {1, 2}, {-2, 3}, {3, -1}, {1, -1}, {5, 0}, {0, -4}};
    for (std::uint64_t trial = 0; trial < 24; ++trial) {
        std::vector<std::int64_t> flat;
        for (std::int64_t c = 0; c < 36; ++c) {
            if (counter_hash(31337, trial, std::uint64_t(c)) % 3 == 0) flat.push_back(c);
        }
        auto set = CellSet::from_flat(2, 6, std::move(flat));
        for (const auto& [h1, h2] : covs) {
            auto p = CircleProfile::of_cellset(set, h1, h2);
            CHECK(p.mass() == set.measure());
            // densities are never negative
            for (std::int64_t k = 0; k < 24; ++k) {
                CHECK_FALSE(p.value_at(R(k, 24) + R(1, 97)) < R(0));
            }
        }
    }
}
