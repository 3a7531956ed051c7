#include <doctest.h>

#include "qlax/error.hpp"
#include "qlax/expr.hpp"
#include "support/generators.hpp"

using namespace qlax;
using qlax::testing::Gen;

namespace {

PsdoSymbol xi(int k, const DiffPoly& c) { return PsdoSymbol::term(k, c); }

} // namespace

TEST_CASE("parse_expr: KdV operators") {
    const auto kdv = kdv_pair();
    CHECK(parse_operator("-d^2 + u") == kdv.L);
    CHECK(parse_operator("-4*d^3 + 3*(d*u + u*d)") == kdv.P);
    CHECK(parse_operator("d*u") == xi(1, DiffPoly::u(0)) + xi(0, DiffPoly::u(1)));
    CHECK(parse_operator("u*d") == xi(1, DiffPoly::u(0)));
}

TEST_CASE("parse_expr: literals, powers and precedence") {
    CHECK(parse_operator("3/7") == Rational(3, 7) * PsdoSymbol::one());
    CHECK(parse_operator("-u_2") == xi(0, -DiffPoly::u(2)));
    CHECK(parse_operator("d^0") == PsdoSymbol::one());
    CHECK(parse_operator("u^2") == xi(0, DiffPoly::u(0, 2)));
    CHECK(parse_operator("1 - 2 - 3") == Rational(-4) * PsdoSymbol::one());
    CHECK(parse_operator("2*d + 1*d^2") == parse_operator("d^2 + 2*d"));
    CHECK(parse_operator("-d^2") == Rational(-1) * PsdoSymbol::xi(2));
    // d^2 u = u d^2 + 2 u_1 d + u_2
    CHECK(parse_operator("d^2*u") == parse_operator("u*d^2 + 2*u_1*d + u_2"));
    CHECK(parse_operator("(d*u)^2") == parse_operator("d*u*d*u"));
    CHECK(parse_operator("  d\n*\tu ") == parse_operator("d*u"));
}

TEST_CASE("parse_expr: errors carry positions") {
    auto position = [](const char* text) {
        try {
            (void)parse_expr(text);
        } catch (const SyntaxError& e) {
            return std::pair{e.line(), e.column()};
        }
        return std::pair{0, 0};
    };
    CHECK(position("d +") == std::pair{1, 4});
    CHECK(position("(d") == std::pair{1, 3});
    CHECK(position("d\n  * )") == std::pair{2, 5});
    CHECK(position("d $ u") == std::pair{1, 3});
    CHECK_THROWS_AS(parse_expr("1/0"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("d^-1"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("d u"), SyntaxError);

    try {
        (void)parse_expr("d + v");
        FAIL("expected UnboundIdentifier");
    } catch (const UnboundIdentifier& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 5);
    }
    CHECK_THROWS_AS(parse_expr("x_1"), UnboundIdentifier);
    CHECK_THROWS_AS(dp_parse("u*d"), UnboundIdentifier);
}

TEST_CASE("property: render then parse is the identity on differential operators") {
    Gen g(101);
    for (int trial = 0; trial < 200; ++trial) {
        const PsdoSymbol a = g.diffop(4);
        CAPTURE(a.to_string());
        CHECK(parse_operator(a.to_string()) == a);
    }
}

TEST_CASE("property: elaboration is a ring homomorphism on sums and products") {
    Gen g(102);
    for (int trial = 0; trial < 50; ++trial) {
        const PsdoSymbol a = g.diffop(2);
        const PsdoSymbol b = g.diffop(2);
        const std::string sa = "(" + a.to_string() + ")";
        const std::string sb = "(" + b.to_string() + ")";
        CHECK(parse_operator(sa + " * " + sb) == a * b);
        CHECK(parse_operator(sa + " - " + sb) == a - b);
        CHECK(parse_operator(sa + "^2") == a * a);
    }
}
