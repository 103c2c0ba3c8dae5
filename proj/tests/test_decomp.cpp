#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "pairdepth/census.hpp"
#include "pairdepth/decomp.hpp"

using namespace pairdepth;

namespace {

const RingContext R2 = RingContext::standard(2);
const RingContext R3 = RingContext::standard(3);

MonomialIdeal I2(const std::string& s) { return oracle::ideal(R2, s); }
MonomialIdeal I3(const std::string& s) { return oracle::ideal(R3, s); }
Subquotient M2(const std::string& s) { return oracle::module(R2, s); }

MonomialPrime P(int n, std::initializer_list<int> vars) {
    VarSet s;
    for (int v : vars) s = s.with(v);
    return MonomialPrime(n, s);
}

std::vector<MonomialIdeal> sorted(std::vector<MonomialIdeal> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<MonomialIdeal> component_ideals(const MonomialIdeal& I) {
    std::vector<MonomialIdeal> out;
    for (const auto& c : irreducible_decomposition(I)) out.push_back(c.ideal());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("irreducible decompositions", "[decomp]") {
    CHECK(component_ideals(I2("(x^2, x*y)")) == sorted({I2("(x)"), I2("(x^2, y)")}));
    CHECK(component_ideals(I2("(x*y)")) == sorted({I2("(x)"), I2("(y)")}));
    CHECK(component_ideals(I2("(x^2, y^3)")) == std::vector<MonomialIdeal>{I2("(x^2, y^3)")});
    CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::zero(2)), DomainError);
    CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::unit(2)), DomainError);
}

TEST_CASE("minimal primes, height, dimension", "[decomp]") {
    CHECK(minimal_primes(I3("(x*y, x*z)")) == std::vector<MonomialPrime>{P(3, {0}), P(3, {1, 2})});
    CHECK(minimal_primes(MonomialIdeal::zero(2)) == std::vector<MonomialPrime>{P(2, {})});
    CHECK(minimal_primes(MonomialIdeal::unit(2)).empty());
    CHECK(height(I3("(x*y, x*z)")) == 1);
    CHECK_THROWS_AS(height(MonomialIdeal::unit(2)), DomainError);
    CHECK(krull_dim_quotient(I2("(x)")) == 1);
    CHECK(krull_dim_quotient(I3("(x*y, x*z)")) == 2);
    CHECK(krull_dim_quotient(MonomialIdeal::unit(2)) == kZeroModuleDim);
}

TEST_CASE("annihilators", "[decomp]") {
    CHECK(annihilator(M2("(1)/(x*y)")) == I2("(x*y)"));
    CHECK(annihilator(M2("(x)/(x^2, x*y)")) == I2("(x, y)"));
    CHECK(annihilator(M2("(1)/(1)")).is_unit());
}

TEST_CASE("associated primes", "[decomp]") {
    CHECK(associated_primes(M2("(1)/(x^2, x*y)")) == std::vector<MonomialPrime>{P(2, {0}), P(2, {0, 1})});
    CHECK(associated_primes(M2("(1)/(x*y)")) == std::vector<MonomialPrime>{P(2, {0}), P(2, {1})});
    CHECK(associated_primes(M2("(1)/(0)")) == std::vector<MonomialPrime>{P(2, {})});
    CHECK(associated_primes(M2("(1)/(1)")).empty());
    CHECK(associated_primes(M2("(x)/(x^2, x*y)")) == std::vector<MonomialPrime>{P(2, {0, 1})});
}

TEST_CASE("module dimension and support", "[decomp]") {
    CHECK(dim_module(M2("(1)/(x*y)")) == 1);
    CHECK(support_contains(P(2, {0}), M2("(1)/(x*y)")));
    CHECK_FALSE(support_contains(P(2, {}), M2("(1)/(x*y)")));
    CHECK(dim_module(module_mod_ideal(M2("(1)/(0)"), I2("(x)"))) == 1);
    CHECK(dim_module(M2("(1)/(1)")) == kZeroModuleDim);
}

TEST_CASE("decomposition invariants on the n=3 census", "[decomp][property]") {
    for (const auto& I : enumerate_ideals(3, 2, 3)) {
        if (I.is_zero() || I.is_unit()) continue;
        const auto comps = irreducible_decomposition(I);
        MonomialIdeal meet = MonomialIdeal::unit(3);
        for (const auto& c : comps) meet = ideal_intersect(meet, c.ideal());
        CHECK(meet == I);
        for (std::size_t i = 0; i < comps.size(); ++i) {
            MonomialIdeal others = MonomialIdeal::unit(3);
            for (std::size_t j = 0; j < comps.size(); ++j) {
                if (j != i) others = ideal_intersect(others, comps[j].ideal());
            }
            CHECK(others != I);
            const auto component = comps[i].ideal();
            for (const auto& g : component.gens()) CHECK(support(g).size() == 1);
        }
        CHECK(krull_dim_quotient(I) == oracle::dim_quotient(I));
    }
}

TEST_CASE("associated primes are exactly the prime colons", "[decomp][property]") {
    const auto ideals = enumerate_ideals(2, 2, 4);
    const auto points = oracle::grid(2, 3);
    for (const auto& M : enumerate_modules(ideals, true)) {
        std::vector<MonomialPrime> expected;
        for (const auto& u : points) {
            if (!M.has_basis_monomial(u)) continue;
            if (auto p = as_monomial_prime(ideal_colon(M.denominator(), u))) {
                if (std::find(expected.begin(), expected.end(), *p) == expected.end()) expected.push_back(*p);
            }
        }
        std::sort(expected.begin(), expected.end());
        CHECK(associated_primes(M) == expected);
        const auto ass = associated_primes(M);
        for (const auto& p : minimal_primes(annihilator(M))) {
            CHECK(std::find(ass.begin(), ass.end(), p) != ass.end());
        }
        CHECK(dim_module(M) == oracle::dim_quotient(annihilator(M)));
    }
}
