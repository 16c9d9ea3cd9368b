#include <doctest.h>

#include <numeric>

#include "tilekit/errors.hpp"
#include "tilekit/tiling.hpp"

using namespace tilekit;

namespace {
GroupElement e1(std::int64_t a) { return GroupElement({a}); }
}

TEST_CASE("periodic set membership") {
    auto q = finite_quotient({6});
    PeriodicSet s(q, {e1(0), e1(3)});
    CHECK(s.size() == 2);
    CHECK(s.contains_index(0));
    CHECK(s.contains_index(3));
    CHECK_FALSE(s.contains_index(1));
    CHECK(s.elements() == std::vector<GroupElement>{e1(0), e1(3)});
    CHECK_THROWS_AS(PeriodicSet(q, {e1(0), e1(6)}), InvalidArgument); // 6 == 0
}

TEST_CASE("translation of a periodic set") {
    auto q = finite_quotient({6});
    PeriodicSet s(q, {e1(0), e1(3)});
    auto t = s.translated(e1(2));
    CHECK(t.indices() == std::vector<std::int64_t>{2, 5});
}

TEST_CASE("exact tiling of Z/6 by an interval tile") {
    auto q = finite_quotient({6});
    auto report = verify_tiling(q, {e1(0), e1(1), e1(2)}, PeriodicSet(q, {e1(0), e1(3)}));
    CHECK(report.is_tiling);
    CHECK(report.level_histogram == std::map<std::int64_t, std::int64_t>{{1, 6}});
    CHECK(report.collision_multiplicities.empty());
}

TEST_CASE("a failed cover reports its level histogram") {
    auto q = finite_quotient({4});
    auto report = verify_tiling(q, {e1(0), e1(2)}, PeriodicSet(q, {e1(0), e1(2)}));
    CHECK_FALSE(report.is_tiling);
    CHECK(report.level_histogram == std::map<std::int64_t, std::int64_t>{{0, 2}, {2, 2}});
}

TEST_CASE("level function counts covers pointwise") {
    auto q = finite_quotient({6});
    auto levels =
        level_function(q, Weight::indicator({e1(0), e1(1), e1(2)}), PeriodicSet(q, {e1(0), e1(3)}));
    CHECK(levels == std::vector<std::int64_t>{1, 1, 1, 1, 1, 1});
    auto full = level_function(q, Weight::indicator({e1(0), e1(1), e1(2), e1(3), e1(4), e1(5)}),
                               PeriodicSet(q, {e1(0)}));
    CHECK(std::accumulate(full.begin(), full.end(), std::int64_t(0)) == 6);
}

TEST_CASE("dilation scan across coprime and non-coprime factors") {
    auto q = finite_quotient({6});
    PeriodicSet set(q, {e1(0), e1(3)});
    std::vector<std::int64_t> rs;
    for (std::int64_t r = -6; r <= 6; ++r) rs.push_back(r);
    auto entries = dilation_scan(q, {e1(0), e1(1), e1(2)}, set, rs);
    CHECK(entries.size() == 13);
    for (const auto& entry : entries) {
        bool coprime = std::gcd(entry.r, std::int64_t(3)) == 1;
        CHECK(entry.coprime_to_size == coprime);
        if (coprime) {
            CHECK(entry.report.is_tiling);
            CHECK(entry.report.collision_multiplicities.empty());
        }
        // r coprime to every prime <= |F| = 3 means r odd and not divisible by 3
        CHECK(entry.coprime_to_small_primes == (entry.r % 2 != 0 && entry.r % 3 != 0));
    }
    // r = 3 collapses the tile onto {0,0,3}: collision recorded, not a tiling
    const auto& r3 = entries[9];
    CHECK(r3.r == 3);
    CHECK_FALSE(r3.report.is_tiling);
    CHECK(r3.report.collision_multiplicities.terms().at(e1(0)) == 2);
}

TEST_CASE("dilation scan requires a tiling premise") {
    auto q = finite_quotient({4});
    PeriodicSet set(q, {e1(0), e1(2)});
    CHECK_THROWS_AS(dilation_scan(q, {e1(0), e1(2)}, set, {1}), PremiseViolation);
}

TEST_CASE("product group tiling") {
    auto q = finite_quotient({2, 2});
    auto report = verify_tiling(q, {GroupElement({0, 0}), GroupElement({1, 0})},
                                PeriodicSet(q, {GroupElement({0, 0}), GroupElement({0, 1})}));
    CHECK(report.is_tiling);
}
