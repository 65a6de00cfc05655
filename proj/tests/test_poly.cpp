#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chainlab/errors.hpp"
#include "chainlab/poly.hpp"

using namespace chainlab;

TEST_CASE("parse and canonical text round trip") {
    for (const char* text : {"0", "1", "-1", "x", "x*y - 1", "x^2 + 2*x + 1",
                             "3*x*y^2 - 7", "x1*t2 - x2"}) {
        int_poly p = int_poly::parse(text);
        CHECK(int_poly::parse(p.str()) == p);
    }
}

TEST_CASE("implicit multiplication and unary minus") {
    CHECK(int_poly::parse("2x") == int_poly::parse("2*x"));
    CHECK(int_poly::parse("x y") == int_poly::parse("x*y"));
    CHECK(int_poly::parse("(1 - a)c") == int_poly::parse("c - a*c"));
    CHECK(int_poly::parse("-x + x").is_zero());
}

TEST_CASE("arithmetic normalizes terms") {
    int_poly x = int_poly::variable("x");
    int_poly y = int_poly::variable("y");
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x + y).pow(2) == x * x + int_poly::constant(2) * x * y + y * y);
    CHECK((x - x).is_zero());
    CHECK(x * int_poly::constant(0) == int_poly());
}

TEST_CASE("substitution and renaming") {
    int_poly p = int_poly::parse("x^2 - 2");
    CHECK(p.substitute({{"x", int_poly::constant(3)}}) ==
          int_poly::constant(7));
    CHECK(int_poly::parse("x*y").substitute({{"y", int_poly::parse("x*t")}}) ==
          int_poly::parse("x^2*t"));
    CHECK(int_poly::parse("x*y").rename({{"y", "z"}}) == int_poly::parse("x*z"));
}

TEST_CASE("variable inventory") {
    int_poly p = int_poly::parse("x*y + z^3 - 4");
    CHECK(p.vars() == std::vector<std::string>{"x", "y", "z"});
    CHECK(int_poly::variable("u").as_single_variable() == std::string("u"));
    CHECK_FALSE(int_poly::parse("2*u").as_single_variable().has_value());
    CHECK_FALSE(int_poly::parse("u^2").as_single_variable().has_value());
    CHECK_FALSE(int_poly::parse("u + 1").as_single_variable().has_value());
}

TEST_CASE("syntax errors carry the stable name") {
    for (const char* bad : {"", "x +", "x ^ y", "(x", "x = y", "forall"}) {
        CHECK_THROWS_AS(int_poly::parse(bad), syntax_error);
    }
}

TEST_CASE("big coefficients survive") {
    int_poly p = int_poly::parse("123456789012345678901234567890*x");
    CHECK(p.str() == "123456789012345678901234567890*x");
}
