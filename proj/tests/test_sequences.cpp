#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "pairdepth/census.hpp"
#include "pairdepth/decomp.hpp"
#include "pairdepth/engine.hpp"
#include "pairdepth/sequences.hpp"

using namespace pairdepth;

namespace {

const RingContext R2 = RingContext::standard(2);
const Field QQ = Field::rationals();

MonomialIdeal I2(const std::string& s) { return oracle::ideal(R2, s); }
Subquotient M2(const std::string& s) { return oracle::module(R2, s); }
MonomialSequence S2(const std::string& s) { return parse_sequence(R2, s); }

MonomialPrime P(int n, std::initializer_list<int> vars) {
    VarSet s;
    for (int v : vars) s = s.with(v);
    return MonomialPrime(n, s);
}

}  // namespace

TEST_CASE("regular elements", "[sequences]") {
    CHECK_FALSE(is_regular_element({1, 0}, M2("(1)/(x*y)")));
    CHECK(is_regular_element({1, 0}, M2("(1)/(0)")));
    CHECK_FALSE(is_regular_element({0, 2}, M2("(1)/(x^2, x*y)")));
    CHECK(is_regular_element({1, 1}, M2("(1)/(1)")));
    CHECK_FALSE(is_regular_element_via_ass({1, 0}, M2("(1)/(x*y)")));
    CHECK(is_regular_element_via_ass({0, 1}, M2("(1)/(x^2)")));
}

TEST_CASE("poor k-regular sequences", "[sequences]") {
    CHECK(is_poor_k_regular(S2("[x]"), M2("(1)/(x*y)"), 1).verdict);
    const auto r = is_poor_k_regular(S2("[x]"), M2("(1)/(x*y)"), 0);
    CHECK_FALSE(r.verdict);
    CHECK(r.failing_index == std::optional<std::size_t>(0));
    CHECK(r.blocking_prime == std::optional<MonomialPrime>(P(2, {0})));
    CHECK(is_poor_k_regular(S2("[x, y]"), M2("(1)/(0)"), -1).verdict);
}

TEST_CASE("k-regular sequences", "[sequences]") {
    const auto r = is_k_regular(S2("[x]"), M2("(1)/(x*y)"), 1);
    CHECK_FALSE(r.verdict);
    CHECK(r.quotient_dim == std::optional<int>(1));
    CHECK(is_k_regular(S2("[x]"), M2("(1)/(0)"), 0).verdict);
    CHECK(is_k_regular(S2("[x, y]"), M2("(1)/(0)"), -1).verdict);
    CHECK_FALSE(is_k_regular(S2("[x, y]"), M2("(1)/(0)"), 0).verdict);
}

TEST_CASE("greedy regular sequences", "[sequences]") {
    const auto full = greedy_regular_sequence(I2("(x, y)"), M2("(1)/(0)"), 2);
    CHECK(full.success);
    CHECK(full.sequence == S2("[x, y]"));
    const auto blocked = greedy_regular_sequence(I2("(x, y)"), M2("(1)/(x*y)"), 1);
    CHECK_FALSE(blocked.success);
    CHECK(blocked.cover == std::vector<MonomialPrime>{P(2, {0}), P(2, {1})});
    CHECK(blocked.failed_step == 0);
    CHECK(greedy_regular_sequence(I2("(x)"), M2("(1)/(0)"), 1).sequence == S2("[x]"));
    const auto too_long = greedy_regular_sequence(I2("(x)"), M2("(1)/(0)"), 2);
    CHECK_FALSE(too_long.success);
    CHECK_FALSE(too_long.reason.empty());
}

TEST_CASE("k-regular reduction examples", "[sequences]") {
    const auto a = k_regular_reduction_check(S2("[x]"), I2("(x, y)"), I2("(y)"), M2("(1)/(0)"), -1);
    CHECK(a.hypothesis_holds);
    CHECK(a.depth_I == ExtendedDepth(1));
    CHECK(a.depth_a == ExtendedDepth(1));
    CHECK(a.consequence_holds);
    CHECK(a.status == "monomial-verified");
    const auto b = k_regular_reduction_check(S2("[x]"), I2("(x)"), MonomialIdeal::zero(2), M2("(1)/(0)"), -1);
    CHECK(b.consequence_holds);
    const auto c = k_regular_reduction_check(S2("[x]"), I2("(x, y)"), MonomialIdeal::zero(2), M2("(1)/(0)"), 0);
    CHECK(c.hypothesis_holds);
    CHECK(c.hypothesis_violations.empty());
    CHECK(c.consequence_holds);
    CHECK_THROWS_AS(k_regular_reduction_check(S2("[y]"), I2("(x)"), MonomialIdeal::zero(2), M2("(1)/(0)"), -1),
                    InputError);
    CHECK_THROWS_AS(k_regular_reduction_check({}, I2("(x)"), MonomialIdeal::zero(2), M2("(1)/(0)"), -1), InputError);
}

TEST_CASE("k-regular reduction fails once J absorbs the sequence", "[sequences][known]") {
    // a = J = (x^2y^2): Γ_{a,J}(R) = R while Γ_{I,J}(R) = 0, so H^0 differs even
    // though the hypothesis set is vacuous at k = -1.
    const auto r = k_regular_reduction_check(S2("[x^2*y^2]"), I2("(x^2, y^2)"), I2("(x^2*y^2)"), M2("(1)/(0)"), -1);
    CHECK(r.regularity.verdict);
    CHECK(r.hypothesis_holds);
    CHECK(r.depth_a == ExtendedDepth(0));
    CHECK_FALSE(r.consequence_holds);
}

TEST_CASE("regularity routes and monotonicity over the census", "[sequences][property]") {
    const auto ideals = enumerate_ideals(2, 2, 4);
    const auto modules = enumerate_modules(ideals, true);
    const auto monomials = grid_monomials(2, 2);
    DepthEngine engine(QQ);
    for (const auto& M : modules) {
        for (const auto& m : monomials) CHECK(is_regular_element(m, M) == is_regular_element_via_ass(m, M));
    }
    for (const auto& K : ideals) {
        const auto M = Subquotient::quotient_ring(K);
        for (const auto& seq : enumerate_sequences(2, 2, 2)) {
            for (int k = -1; k <= 1; ++k) {
                if (is_poor_k_regular(seq, M, k, engine).verdict) {
                    CHECK(is_poor_k_regular(seq, M, k + 1, engine).verdict);
                }
            }
        }
    }
}

TEST_CASE("greedy sequences are regular and bounded by grade", "[sequences][property]") {
    const auto ideals = enumerate_ideals(2, 2, 4);
    DepthEngine engine(QQ);
    for (const auto& a : ideals) {
        if (a.is_zero() || a.is_unit()) continue;
        for (const auto& K : ideals) {
            const auto M = Subquotient::quotient_ring(K);
            if (M.is_zero()) continue;
            const auto g = engine.grade(a, M).value;
            for (int target = 1; target <= 2; ++target) {
                const auto r = greedy_regular_sequence(a, M, target, engine);
                if (r.success) {
                    CHECK(static_cast<int>(r.sequence.size()) == target);
                    CHECK(ExtendedDepth(target) <= g);
                    CHECK(is_poor_k_regular(r.sequence, M, -1, engine).verdict);
                    for (const auto& m : r.sequence) CHECK(a.contains(m));
                } else {
                    CHECK_FALSE(r.reason.empty());
                    if (r.cover.empty()) {
                        CHECK(g < ExtendedDepth(target));
                        continue;
                    }
                    for (const auto& gen : a.gens()) {
                        CHECK(std::any_of(r.cover.begin(), r.cover.end(),
                                          [&](const MonomialPrime& p) { return p.contains(gen); }));
                    }
                }
            }
        }
    }
}
