#include <catch_amalgamated.hpp>

#include "pairdepth/census.hpp"
#include "pairdepth/syntax.hpp"

using namespace pairdepth;

namespace {

std::size_t parse_error_position(const std::function<void()>& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.position();
    }
    FAIL("expected a ParseError");
    return 0;
}

}  // namespace

TEST_CASE("rings", "[syntax]") {
    const auto q = parse_ring("Q[x,y]");
    CHECK(q.nvars() == 2);
    CHECK(q.field().is_rational());
    CHECK(q.to_string() == "Q[x,y]");
    const auto f = parse_ring("F7[x,y,z]");
    CHECK(f.field().characteristic() == 7);
    CHECK(f.var_names() == std::vector<std::string>{"x", "y", "z"});
    CHECK_THROWS_AS(parse_ring("F8[x]"), InputError);
    CHECK_THROWS_AS(parse_ring("Q[x,x]"), ParseError);
    CHECK_THROWS_AS(parse_ring("Q[]"), ParseError);
}

TEST_CASE("monomials", "[syntax]") {
    const auto r = parse_ring("Q[x,y]");
    CHECK(parse_monomial(r, "x^2*y") == ExponentVector{2, 1});
    CHECK(parse_monomial(r, "x2y") == ExponentVector{2, 1});
    CHECK(parse_monomial(r, "1") == ExponentVector{0, 0});
    CHECK(parse_monomial(r, "y*x") == ExponentVector{1, 1});
    CHECK(parse_error_position([&] { parse_monomial(r, "x*z"); }) == 2);
    CHECK(parse_error_position([&] { parse_monomial(r, "x^"); }) == 2);
}

TEST_CASE("longest declared name wins", "[syntax]") {
    const auto r = parse_ring("Q[x,x1]");
    CHECK(parse_monomial(r, "x1") == ExponentVector{0, 1});
    CHECK(parse_monomial(r, "x^2*x1") == ExponentVector{2, 1});
}

TEST_CASE("ideals and modules", "[syntax]") {
    const auto r = parse_ring("Q[x,y]");
    CHECK(parse_ideal(r, "(0)").is_zero());
    CHECK(parse_ideal(r, "(1)").is_unit());
    CHECK(parse_ideal(r, "(x^2*y, y^3)").size() == 2);
    const auto M = parse_module(r, "(1)/(x*y)");
    CHECK(M.numerator().is_unit());
    CHECK(M.denominator() == parse_ideal(r, "(x*y)"));
    CHECK(parse_error_position([&] { parse_module(r, "(x)/(y)"); }) == 3);
    CHECK(parse_error_position([&] { parse_ideal(r, "(x, z)"); }) == 4);
    CHECK_THROWS_AS(parse_ideal(r, "(x"), ParseError);
    CHECK(parse_sequence(r, "[x, y^2]") == std::vector<ExponentVector>{{1, 0}, {0, 2}});
}

TEST_CASE("formatting round-trips every census ideal", "[syntax][property]") {
    const auto r = RingContext::standard(3);
    for (const auto& I : enumerate_ideals(3, 2, 3)) {
        CHECK(parse_ideal(r, r.format_ideal(I)) == I);
    }
    const auto r2 = RingContext::standard(2);
    const auto ideals = enumerate_ideals(2, 2, 4);
    for (const auto& M : enumerate_modules(ideals, true)) {
        CHECK(parse_module(r2, r2.format_module(M)) == M);
    }
}
