#include <doctest.h>

#include <algorithm>
#include <set>

#include "tilekit/errors.hpp"
#include "tilekit/fiid.hpp"

using namespace tilekit;

namespace {

GroupElement e1(std::int64_t v) { return GroupElement({v}); }

std::vector<std::int64_t> in_range(const std::vector<std::int64_t>& xs, std::int64_t lo,
                                   std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (auto x : xs)
        if (x >= lo && x < hi) out.push_back(x);
    return out;
}

} // namespace

TEST_CASE("two-tile construction covers its core exactly once") {
    auto trace = simulate_two_tile(1000, 42);
    CHECK(trace.window.start == 0);
    CHECK(trace.window.length == 1000);
    CHECK(trace.ties == 0);
    REQUIRE(trace.minima.size() >= 2);
    CHECK(std::is_sorted(trace.minima.begin(), trace.minima.end()));
    // strict minima are never adjacent
    for (std::size_t i = 1; i < trace.minima.size(); ++i)
        CHECK(trace.minima[i] - trace.minima[i - 1] >= 2);

    CHECK(trace.fill.front() == trace.minima.front());
    CHECK(trace.fill.back() == trace.minima.back());
    CHECK(trace.core_start == trace.minima.front());
    CHECK(trace.core_end == trace.minima.back());
    CHECK(trace.pair_sites.size() + trace.triple_sites.size() == trace.fill.size() - 1);

    auto v = validate_two_tile(trace);
    CHECK(v.core_start == trace.core_start);
    CHECK(v.core_end == trace.core_end);
    CHECK(v.coverage_violations == 0);
    CHECK(v.constraint_violations == 0);
    for (const auto& [gap, n] : v.gap_histogram) CHECK(gap >= 2);
    std::int64_t fill_gaps = 0;
    for (const auto& [gap, n] : v.fill_gap_histogram) {
        CHECK((gap == 2 || gap == 3));
        fill_gaps += n;
    }
    CHECK(fill_gaps == std::int64_t(trace.fill.size()) - 1);
    CHECK(v.fill_gap_histogram[2] == std::int64_t(trace.pair_sites.size()));
    CHECK(v.fill_gap_histogram[3] == std::int64_t(trace.triple_sites.size()));

    // every core site belongs to exactly one tile, so the densities balance
    REQUIRE(v.densities.size() == 2);
    CHECK(v.densities[0].first == "A1");
    CHECK(v.densities[1].first == "A2");
    CHECK(2 * v.densities[0].second + 3 * v.densities[1].second == doctest::Approx(1.0));
}

TEST_CASE("two-tile windows of one seed agree where they overlap") {
    auto a = simulate_two_tile(1000, 7, 0);
    auto b = simulate_two_tile(1000, 7, 500);
    // interior sites seen by both windows
    auto ma = in_range(a.minima, 501, 999);
    auto mb = in_range(b.minima, 501, 999);
    REQUIRE(ma.size() >= 2);
    CHECK(ma == mb);
    // stretches between shared markers are filled identically
    auto fa = in_range(a.fill, ma.front(), ma.back());
    auto fb = in_range(b.fill, ma.front(), ma.back());
    CHECK(fa == fb);

    auto again = simulate_two_tile(1000, 7, 0);
    CHECK(again.minima == a.minima);
    CHECK(again.fill == a.fill);
    CHECK(again.pair_sites == a.pair_sites);
    CHECK(again.triple_sites == a.triple_sites);
}

TEST_CASE("two-tile validation flags sites outside the constructed core") {
    auto trace = simulate_two_tile(600, 3);
    auto widened = validate_two_tile(
        trace, std::make_pair(trace.core_start - 5, trace.core_end + 5));
    // five uncovered sites on each side (the last fill point carries no tile)
    CHECK(widened.coverage_violations == 10);
    CHECK(widened.constraint_violations == 0);

    auto empty = validate_two_tile(trace, std::make_pair(std::int64_t(5), std::int64_t(5)));
    CHECK(empty.coverage_violations == 0);
    CHECK_FALSE(empty.gap_histogram.empty());

    CHECK_THROWS_AS(simulate_two_tile(9, 1), InvalidArgument);
}

TEST_CASE("short two-tile windows can be degenerate") {
    bool found = false;
    for (std::uint64_t seed = 0; seed < 2000 && !found; ++seed) {
        try {
            simulate_two_tile(10, seed);
        } catch (const DegenerateWindow&) {
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("vertical product construction tiles every fiber") {
    auto z4 = finite_quotient({4});
    std::vector<GroupElement> tile = {e1(0), e1(2)};
    std::vector<GroupElement> set = {e1(0), e1(1)};
    auto trace = simulate_vertical(200, 9, z4, tile, set);
    CHECK(trace.chosen.size() == 200);
    CHECK(trace.ties == 0);
    CHECK(trace.set_indices == std::vector<std::int64_t>{0, 1});
    CHECK(trace.tile_indices == std::vector<std::int64_t>{0, 2});
    for (auto g : trace.chosen) {
        CHECK(g >= 0);
        CHECK(g < 4);
    }
    // not all sites pick the same fiber element over 200 draws
    CHECK(std::set<std::int64_t>(trace.chosen.begin(), trace.chosen.end()).size() > 1);

    auto v = validate_vertical(trace);
    CHECK(v.coverage_violations == 0);
    REQUIRE(v.densities.size() == 1);
    CHECK(v.densities[0].first == "A");
    CHECK(v.densities[0].second == doctest::Approx(0.5));

    // same seed, shifted window: per-site choices agree on the overlap
    auto shifted = simulate_vertical(100, 9, z4, tile, set, 50);
    for (std::size_t i = 0; i < 100; ++i) CHECK(shifted.chosen[i] == trace.chosen[i + 50]);
}

TEST_CASE("vertical construction input validation") {
    auto z4 = finite_quotient({4});
    CHECK_THROWS_AS(simulate_vertical(100, 1, z4, {e1(0), e1(1)}, {e1(0), e1(1)}),
                    PremiseViolation);
    CHECK_THROWS_AS(simulate_vertical(0, 1, z4, {e1(0), e1(2)}, {e1(0), e1(1)}),
                    InvalidArgument);
    // elements reduce before the duplicate check
    CHECK_THROWS_AS(simulate_vertical(100, 1, z4, {e1(0), e1(2)}, {e1(1), e1(5)}),
                    InvalidArgument);
    // a duplicated tile element doubles coverage, so the premise fails first
    CHECK_THROWS_AS(simulate_vertical(100, 1, z4, {e1(2), e1(6)}, {e1(0), e1(1)}),
                    PremiseViolation);

    auto trivial = QuotientSpec::make(GroupSpec::make(0, {}), {});
    auto t = simulate_vertical(50, 4, trivial, {GroupElement(std::vector<std::int64_t>{})}, {GroupElement(std::vector<std::int64_t>{})});
    CHECK(std::all_of(t.chosen.begin(), t.chosen.end(), [](auto g) { return g == 0; }));
    auto v = validate_vertical(t);
    CHECK(v.coverage_violations == 0);
    CHECK(v.densities[0].second == doctest::Approx(1.0));
}

TEST_CASE("symmetric group table composes permutations") {
    auto g = FiniteGroupTable::symmetric3();
    CHECK(g.order() == 6);
    CHECK(g.identity == 0);
    CHECK(g.names[0] == "012");
    CHECK(g.names[5] == "210");
    CHECK(g.times(1, 2) == 4);
    CHECK(g.times(2, 1) == 3);
    CHECK(g.times(1, 2) != g.times(2, 1));
    CHECK(g.inv(3) == 4); // the two 3-cycles invert each other
    CHECK_NOTHROW(g.validate());

    auto c4 = FiniteGroupTable::cyclic(4);
    CHECK(c4.times(3, 2) == 1);
    CHECK(c4.inv(1) == 3);
    CHECK_THROWS_AS(FiniteGroupTable::cyclic(0), InvalidArgument);

    auto broken = FiniteGroupTable::cyclic(3);
    broken.mul[1][1] = 1; // breaks associativity/latin-square structure
    CHECK_THROWS_AS(broken.validate(), InvalidArgument);
}

TEST_CASE("subgroup and triple product checks") {
    auto g = FiniteGroupTable::symmetric3();
    CHECK_NOTHROW(require_subgroup(g, {0, 1}));
    CHECK_NOTHROW(require_subgroup(g, {0, 3, 4})); // the 3-cycles
    CHECK_THROWS_AS(require_subgroup(g, {0, 3}), InvalidSubgroup);
    CHECK_THROWS_AS(require_subgroup(g, {1, 2}), InvalidSubgroup);
    CHECK_THROWS_AS(require_subgroup(g, {}), InvalidSubgroup);
    CHECK_THROWS_AS(require_subgroup(g, {0, 9}), InvalidSubgroup);
    CHECK_THROWS_AS(require_subgroup(g, {0, 1, 1}), InvalidSubgroup);

    CHECK(triple_product_check(g, {0, 1}, 3));
    CHECK(triple_product_check(g, {0, 1}, 2));
    CHECK_FALSE(triple_product_check(g, {0}, 3));

    auto c6 = FiniteGroupTable::cyclic(6);
    CHECK_FALSE(triple_product_check(c6, {0, 3}, 1));

    CHECK_THROWS_AS(triple_product_check(g, {0, 1}, 1), InvalidArgument);
    CHECK_THROWS_AS(triple_product_check(g, {0, 1}, 7), InvalidArgument);
    CHECK_THROWS_AS(triple_product_check(g, {0, 3}, 1), InvalidSubgroup);
}

TEST_CASE("nonabelian marker construction satisfies its local rules") {
    auto g = FiniteGroupTable::symmetric3();
    auto trace = simulate_nonabelian_s3(2000, 3, g, {0, 1}, 3);
    CHECK(trace.a == 3);
    CHECK(trace.subgroup == std::vector<int>{0, 1});
    CHECK(trace.ties == 0);
    REQUIRE(trace.minima.size() >= 2);
    for (std::size_t i = 1; i < trace.minima.size(); ++i)
        CHECK(trace.minima[i] - trace.minima[i - 1] >= 3);
    CHECK(trace.sites_start == trace.minima.front());
    CHECK(std::int64_t(trace.fiber.size()) == trace.minima.back() - trace.minima.front() + 1);
    CHECK(trace.core_start == trace.minima.front() + 1);
    CHECK(trace.core_end == trace.minima.back() + 1);

    auto v = validate_nonabelian(g, trace);
    CHECK(v.coverage_violations == 0);
    CHECK(v.constraint_violations == 0);
    for (const auto& [gap, n] : v.gap_histogram) CHECK(gap >= 3);
    REQUIRE(v.densities.size() == 1);
    CHECK(v.densities[0].second == doctest::Approx(1.0 / 6));

    // sites left of the first marker carry no fiber element
    auto widened = validate_nonabelian(
        g, trace, std::make_pair(trace.core_start - 2, trace.core_end));
    CHECK(widened.coverage_violations == 2 * 6);

    auto again = simulate_nonabelian_s3(2000, 3, g, {0, 1}, 3);
    CHECK(again.minima == trace.minima);
    CHECK(again.fiber == trace.fiber);
}

TEST_CASE("nonabelian minima agree across overlapping windows") {
    auto g = FiniteGroupTable::symmetric3();
    auto a = simulate_nonabelian_s3(2000, 17, g, {0, 1}, 3, 0);
    auto b = simulate_nonabelian_s3(1500, 17, g, {0, 1}, 3, 500);
    auto ma = in_range(a.minima, 502, 1498);
    auto mb = in_range(b.minima, 502, 1498);
    REQUIRE(ma.size() >= 2);
    CHECK(ma == mb);
}

TEST_CASE("nonabelian simulation rejects bad premises") {
    auto g = FiniteGroupTable::symmetric3();
    CHECK_THROWS_AS(simulate_nonabelian_s3(19, 1, g, {0, 1}, 3), InvalidArgument);
    CHECK_THROWS_AS(simulate_nonabelian_s3(100, 1, g, {0}, 3), PremiseViolation);
    CHECK_THROWS_AS(simulate_nonabelian_s3(100, 1, FiniteGroupTable::cyclic(6), {0, 3}, 1),
                    PremiseViolation);
    CHECK_THROWS_AS(simulate_nonabelian_s3(100, 1, g, {0, 3}, 1), InvalidSubgroup);

    bool degenerate = false;
    for (std::uint64_t seed = 0; seed < 2000 && !degenerate; ++seed) {
        try {
            simulate_nonabelian_s3(20, seed, g, {0, 1}, 3);
        } catch (const DegenerateWindow&) {
            degenerate = true;
        }
    }
    CHECK(degenerate);
}
