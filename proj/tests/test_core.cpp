#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "pairdepth/census.hpp"
#include "pairdepth/core.hpp"

using namespace pairdepth;

namespace {

const RingContext R2 = RingContext::standard(2);
const RingContext R3 = RingContext::standard(3);

MonomialIdeal I2(const std::string& s) { return oracle::ideal(R2, s); }
MonomialIdeal I3(const std::string& s) { return oracle::ideal(R3, s); }

}  // namespace

TEST_CASE("minimalize drops divisible generators", "[core]") {
    const MonomialIdeal I(2, {{2, 0}, {2, 1}, {0, 3}});
    CHECK(I.gens() == std::vector<ExponentVector>{{0, 3}, {2, 0}});
    CHECK(I == I2("(x^2, y^3)"));
    CHECK(MonomialIdeal(2, {}).is_zero());
    CHECK(MonomialIdeal(2, {{0, 0}, {1, 1}}).is_unit());
    CHECK(MonomialIdeal(2, {{0, 0}}).gens().size() == 1);
}

TEST_CASE("constructor rejects malformed generators", "[core]") {
    CHECK_THROWS_AS(MonomialIdeal(2, {{1, -1}}), InputError);
    CHECK_THROWS_AS(MonomialIdeal(2, {{1, 0, 0}}), InputError);
}

TEST_CASE("membership", "[core]") {
    const auto I = I2("(x^2, y^3)");
    CHECK(member({2, 1}, I));
    CHECK_FALSE(member({0, 2}, I));
    CHECK(member({0, 0}, MonomialIdeal::unit(2)));
    CHECK(member({5, 7}, MonomialIdeal::unit(2)));
    CHECK_FALSE(member({0, 0}, MonomialIdeal::zero(2)));
}

TEST_CASE("sum, product, power", "[core]") {
    CHECK(ideal_sum(I2("(x)"), I2("(y)")) == I2("(x, y)"));
    CHECK(ideal_power(I2("(x, y)"), 2) == I2("(x^2, x*y, y^2)"));
    CHECK(ideal_product(I2("(x)"), I2("(x, y)")) == I2("(x^2, x*y)"));
    CHECK(ideal_power(I2("(x, y)"), 0).is_unit());
    CHECK(ideal_product(I2("(x)"), MonomialIdeal::zero(2)).is_zero());
}

TEST_CASE("intersection", "[core]") {
    CHECK(ideal_intersect(I2("(x)"), I2("(y)")) == I2("(x*y)"));
    CHECK(ideal_intersect(I2("(x^2, y)"), I2("(x)")) == I2("(x^2, x*y)"));
    const auto I = I2("(x^2*y, y^3)");
    CHECK(ideal_intersect(I, MonomialIdeal::unit(2)) == I);
}

TEST_CASE("colon", "[core]") {
    CHECK(ideal_colon(I2("(x*y, y^2)"), ExponentVector{0, 1}) == I2("(x, y)"));
    CHECK(ideal_colon(I2("(x^2, x*y)"), ExponentVector{1, 0}) == I2("(x, y)"));
    const auto I = I2("(x^2, y^3)");
    CHECK(ideal_colon(I, MonomialIdeal::unit(2)) == I);
    CHECK(ideal_colon(I, MonomialIdeal::zero(2)).is_unit());
    CHECK(ideal_colon(I2("(x^2, x*y)"), I2("(x, y)")) == I2("(x)"));
}

TEST_CASE("radical", "[core]") {
    CHECK(radical(I2("(x^2, y^3)")) == I2("(x, y)"));
    CHECK(radical(I2("(x^2*y)")) == I2("(x*y)"));
    CHECK(radical(MonomialIdeal::zero(2)).is_zero());
    CHECK(radical_member({1, 0}, I2("(x^2, y)")));
    CHECK_FALSE(radical_member({1, 0}, I2("(y)")));
    CHECK(radical_member({1, 0}, ideal_sum(I2("(x^2)"), I2("(y)"))));
    CHECK(same_radical(I2("(x^3, y)"), I2("(x, y^2)")));
}

TEST_CASE("restriction to a variable subset", "[core]") {
    VarSet yz;
    yz = yz.with(1).with(2);
    CHECK(restrict(I3("(x*y, x*z)"), yz) == oracle::ideal(RingContext::standard(2), "(x, y)"));
    CHECK(restrict(I2("(x*y)"), VarSet::all(2)) == I2("(x*y)"));
    CHECK(restrict(I2("(x^2)"), VarSet::single(1)).is_unit());
    CHECK(restrict(I2("(x^2)"), VarSet::single(1)).nvars() == 1);
}

TEST_CASE("subquotient basics", "[core]") {
    const Subquotient M(I2("(x)"), I2("(x^2, x*y)"));
    CHECK_FALSE(M.is_zero());
    CHECK(M.has_basis_monomial({1, 0}));
    CHECK_FALSE(M.has_basis_monomial({1, 1}));
    CHECK_FALSE(M.has_basis_monomial({0, 1}));
    CHECK(Subquotient::quotient_ring(MonomialIdeal::unit(2)).is_zero());
    CHECK_THROWS_AS(Subquotient(I2("(x)"), I2("(y)")), InputError);
    CHECK(module_mod_ideal(Subquotient::quotient_ring(MonomialIdeal::zero(2)), I2("(x)")) ==
          Subquotient::quotient_ring(I2("(x)")));
}

TEST_CASE("extended depth arithmetic", "[core]") {
    const auto inf = ExtendedDepth::infinity();
    CHECK(ExtendedDepth(1) < ExtendedDepth(2));
    CHECK(ExtendedDepth(7) < inf);
    CHECK(inf == ExtendedDepth::infinity());
    CHECK(inf.shifted(-3) == inf);
    CHECK(ExtendedDepth(2).shifted(1) == ExtendedDepth(3));
    CHECK_THROWS_AS(inf.value(), DomainError);
    CHECK(inf.to_string() == "inf");
}

TEST_CASE("fields", "[core]") {
    CHECK(Field::prime(7).characteristic() == 7);
    CHECK_THROWS_AS(Field::prime(8), InputError);
    CHECK(Field::rationals().is_rational());
    CHECK(Field::prime(2).to_string() == "F2");
}

TEST_CASE("lattice laws on the n=2 census", "[core][property]") {
    const auto ideals = enumerate_ideals(2, 2, 4);
    for (const auto& a : ideals) {
        CHECK(radical(radical(a)) == radical(a));
        CHECK(ideal_sum(a, a) == a);
        CHECK(ideal_intersect(a, a) == a);
        for (const auto& b : ideals) {
            const auto prod = ideal_product(a, b);
            const auto meet = ideal_intersect(a, b);
            CHECK(ideal_sum(a, b) == ideal_sum(b, a));
            CHECK(prod == ideal_product(b, a));
            CHECK(meet == ideal_intersect(b, a));
            CHECK(is_subideal(prod, meet));
            CHECK(is_subideal(meet, ideal_sum(a, b)));
            CHECK(is_subideal(ideal_product(ideal_colon(a, b), b), a));
            CHECK(same_radical(prod, meet));
        }
    }
}

TEST_CASE("membership agrees with grid brute force", "[core][property]") {
    const auto ideals = enumerate_ideals(2, 2, 4);
    const auto points = oracle::grid(2, 4);
    for (const auto& a : ideals) {
        for (const auto& m : points) {
            CHECK(member(m, a) == oracle::in_ideal(m, a));
            CHECK(radical_member(m, a) == oracle::in_radical(m, a));
        }
    }
}
