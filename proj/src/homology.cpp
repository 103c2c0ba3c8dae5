#include "pairdepth/homology.hpp"

namespace pairdepth {

namespace {

GradeResult least_position(const NonvanishingProfile& profile) {
    GradeResult out;
    if (auto i = profile.first()) {
        out.value = *i;
        out.witness_degree = profile.witness[static_cast<std::size_t>(*i)];
    }
    return out;
}

void check_ring(const MonomialIdeal& ideal, const Subquotient& module) {
    if (ideal.nvars() != module.nvars()) throw InputError("ideal and module live in different rings");
}

}  // namespace

GradeResult grade(const MonomialIdeal& ideal, const Subquotient& module, const Field& field) {
    check_ring(ideal, module);
    if (module.is_zero()) return GradeResult{};
    auto out = least_position(nonvanishing_profile(ComplexTemplate::koszul(ideal), module, field));
    if (ideal.is_unit()) out.warning = "grade of the unit ideal is infinite (aM = M)";
    return out;
}

GradeResult grade_via_ext(const MonomialIdeal& ideal, const Subquotient& module, const Field& field) {
    check_ring(ideal, module);
    if (module.is_zero()) return GradeResult{};
    auto out = least_position(ext_profile(ideal, module, field));
    if (ideal.is_unit()) out.warning = "grade of the unit ideal is infinite (aM = M)";
    return out;
}

NonvanishingProfile ext_profile(const MonomialIdeal& ideal, const Subquotient& module, const Field& field) {
    check_ring(ideal, module);
    return nonvanishing_profile(ComplexTemplate::taylor(ideal), module, field);
}

bool ext_nonvanishing(const MonomialIdeal& ideal, const Subquotient& module, int i, const Field& field) {
    if (i < 0) throw InputError("negative Ext index");
    const auto profile = ext_profile(ideal, module, field);
    // The Taylor resolution has length r, so Ext vanishes beyond it.
    return static_cast<std::size_t>(i) < profile.nonzero.size() && profile.nonzero[static_cast<std::size_t>(i)];
}

GradeResult depth_at_prime(const MonomialPrime& prime, const Subquotient& module, const Field& field) {
    if (prime.nvars() != module.nvars()) throw InputError("prime and module live in different rings");
    if (module.is_zero() || !support_contains(prime, module)) return GradeResult{};
    const Subquotient local = restrict(module, prime.vars());
    const int m = prime.height();
    return least_position(
        nonvanishing_profile(ComplexTemplate::koszul(MonomialIdeal::prime(m, VarSet::all(m))), local, field));
}

}  // namespace pairdepth
