#include <doctest.h>

#include "tilekit/errors.hpp"
#include "tilekit/group.hpp"

using namespace tilekit;

TEST_CASE("group spec validation") {
    CHECK_THROWS_AS(GroupSpec::make(-1, {}), InvalidArgument);
    CHECK_THROWS_AS(GroupSpec::make(0, {1}), InvalidArgument);
    auto spec = GroupSpec::make(1, {4});
    CHECK(spec.rank() == 2);
}

TEST_CASE("quotient indexing round trips") {
    auto q = QuotientSpec::make(GroupSpec::make(2, {}), {3, 4});
    CHECK(q.size() == 12);
    for (std::int64_t i = 0; i < q.size(); ++i) CHECK(q.index_of(q.element_at(i)) == i);
    // row-major: first coordinate most significant
    CHECK(q.element_at(0) == GroupElement({0, 0}));
    CHECK(q.element_at(1) == GroupElement({0, 1}));
    CHECK(q.element_at(4) == GroupElement({1, 0}));
}

TEST_CASE("index arithmetic matches element arithmetic") {
    auto q = QuotientSpec::make(GroupSpec::make(1, {2, 3}), {4});
    CHECK(q.size() == 24);
    for (std::int64_t i = 0; i < q.size(); ++i) {
        for (std::int64_t j = 0; j < q.size(); ++j) {
            auto sum = group_add(q.group(), q.element_at(i), q.element_at(j));
            CHECK(q.index_add(i, j) == q.index_of(q.reduce(sum)));
        }
        auto neg = group_neg(q.group(), q.element_at(i));
        CHECK(q.index_neg(i) == q.index_of(q.reduce(neg)));
    }
}

TEST_CASE("reduction wraps free coordinates by the periods") {
    auto q = QuotientSpec::make(GroupSpec::make(1, {6}), {5});
    CHECK(q.reduce(GroupElement({-1, 7})) == GroupElement({4, 1}));
    CHECK(q.reduce(GroupElement({12, -6})) == GroupElement({2, 0}));
}

TEST_CASE("element order divides the group size") {
    auto q = finite_quotient({6});
    CHECK(q.element_order(GroupElement({0})) == 1);
    CHECK(q.element_order(GroupElement({1})) == 6);
    CHECK(q.element_order(GroupElement({2})) == 3);
    CHECK(q.element_order(GroupElement({3})) == 2);
    auto q2 = QuotientSpec::make(GroupSpec::make(1, {4}), {6});
    CHECK(q2.element_order(GroupElement({3, 2})) == 2);
    CHECK(q2.element_order(GroupElement({1, 1})) == 12);
}

TEST_CASE("scalar dilation") {
    auto spec = GroupSpec::make(1, {6});
    CHECK(scalar_dilate(spec, -1, GroupElement({2, 5})) == GroupElement({-2, 1}));
    CHECK(scalar_dilate(spec, 3, GroupElement({1, 4})) == GroupElement({3, 0}));
}

TEST_CASE("domain cap rejects oversized quotients") {
    CHECK_THROWS_AS(QuotientSpec::make(GroupSpec::make(2, {}), {1 << 13, 1 << 13}),
                    CapacityExceeded);
}

TEST_CASE("malformed elements are rejected") {
    auto q = finite_quotient({4});
    CHECK_THROWS_AS(q.index_of(GroupElement({1, 2})), SpecMismatch);
    CHECK_THROWS_AS(require_element(q.group(), GroupElement(std::vector<std::int64_t>{})),
                    SpecMismatch);
}
