#include <doctest.h>

#include "tilekit/errors.hpp"
#include "tilekit/symbolic.hpp"

using namespace tilekit;

namespace {
Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }
}

TEST_CASE("scalar arithmetic is coefficientwise") {
    auto a = SymbolicScalar::symbol(0);
    auto x = SymbolicScalar(R(1, 2)) + a;

    CHECK(x.rational_part() == R(1, 2));
    CHECK(x.symbol_coeffs().at(0) == R(1));
    CHECK_FALSE(x.is_rational());
    CHECK_FALSE(x.is_zero());

    // the symbol cancels exactly
    auto y = x - a;
    CHECK(y.is_rational());
    CHECK(y.rational_part() == R(1, 2));

    CHECK((x - x).is_zero());
    CHECK((-x + x).is_zero());

    auto z = R(2) * x; // 1 + 2a
    CHECK(z.rational_part() == R(1));
    CHECK(z.symbol_coeffs().at(0) == R(2));
    CHECK((R(0) * x).is_zero());

    // zero coefficients are never stored
    CHECK(SymbolicScalar(R(3), {{1, R(0)}}).is_rational());
    CHECK(SymbolicScalar::symbol(4, R(0)).is_zero());
}

TEST_CASE("scalars with different symbols stay distinct") {
    auto a0 = SymbolicScalar::symbol(0);
    auto a1 = SymbolicScalar::symbol(1);
    CHECK_FALSE(a0 == a1);
    CHECK_FALSE((a0 - a1).is_zero());
    CHECK((a0 + a1).symbol_coeffs().size() == 2);

    // a0 and 1/3 + a0 share a symbolic part
    CHECK((SymbolicScalar(R(1, 3)) + a0).symbolic_part() == a0.symbolic_part());
    CHECK(a0.symbolic_part() == a0);
}

TEST_CASE("scalar substitution") {
    auto x = SymbolicScalar(R(1, 2)) + SymbolicScalar::symbol(0, R(2)) +
             SymbolicScalar::symbol(3, R(-1));
    CHECK(x.substitute({{0, R(1, 4)}, {3, R(1)}}) == R(0));
    CHECK_THROWS_AS(x.substitute({{0, R(1, 4)}}), InvalidArgument);
    CHECK(SymbolicScalar(R(7)).substitute({}) == R(7));
}

TEST_CASE("scalar ordering is total and consistent") {
    auto a = SymbolicScalar::symbol(0);
    auto b = SymbolicScalar(R(1)) + a;
    CHECK(SymbolicScalar(R(0)) < b);
    CHECK((a < b) != (b < a));
    CHECK_FALSE(a < a);
}

TEST_CASE("vector arithmetic and parts") {
    auto alpha = SymbolicScalar::symbol(0);
    SymbolicVector v({SymbolicScalar(R(1, 4)) + alpha, SymbolicScalar(R(1, 2))});
    CHECK(v.dim() == 2);
    CHECK_FALSE(v.is_rational());
    CHECK(v.rational_part() == std::vector<Rational>{R(1, 4), R(1, 2)});
    CHECK(v.symbolic_part() == SymbolicVector({alpha, SymbolicScalar(R(0))}));
    CHECK(v.symbols() == std::vector<int>{0});

    auto w = SymbolicVector::rational({R(3, 4), R(1, 2)});
    CHECK(w.is_rational());
    CHECK((v + w).rational_part() == std::vector<Rational>{R(1), R(1)});
    CHECK((v - v).is_zero());
    CHECK_THROWS_AS(v + SymbolicVector::rational({R(1)}), SpecMismatch);

    CHECK(v.substitute({{0, R(1, 8)}}) == std::vector<Rational>{R(3, 8), R(1, 2)});

    // two vectors sharing a symbolic part model parallel translates
    SymbolicVector u({alpha, SymbolicScalar(R(7))});
    CHECK(u.symbolic_part() == v.symbolic_part());
}
