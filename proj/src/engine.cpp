#include "pairdepth/engine.hpp"

#include <algorithm>

namespace pairdepth {

DepthEngine::DepthEngine(Field field, int enumeration_cap) : field_(field), cap_(enumeration_cap) {}

GradeResult DepthEngine::grade(const MonomialIdeal& a, const Subquotient& module) {
    return koszul_.get({a, module}, [&] { return pairdepth::grade(a, module, field_); });
}

NonvanishingProfile DepthEngine::ext_profile(const MonomialIdeal& a, const Subquotient& module) {
    return ext_.get({a, module}, [&] { return pairdepth::ext_profile(a, module, field_); });
}

GradeResult DepthEngine::grade_via_ext(const MonomialIdeal& a, const Subquotient& module) {
    GradeResult out;
    if (module.is_zero()) return out;
    const auto profile = ext_profile(a, module);
    if (auto i = profile.first()) {
        out.value = *i;
        out.witness_degree = profile.witness[static_cast<std::size_t>(*i)];
    }
    return out;
}

bool DepthEngine::ext_nonvanishing(const MonomialIdeal& a, const Subquotient& module, int i) {
    if (i < 0) throw InputError("negative Ext index");
    const auto profile = ext_profile(a, module);
    return static_cast<std::size_t>(i) < profile.nonzero.size() && profile.nonzero[static_cast<std::size_t>(i)];
}

GradeResult DepthEngine::depth_at_prime(const MonomialPrime& prime, const Subquotient& module) {
    return local_.get({prime.ideal(), module}, [&] { return pairdepth::depth_at_prime(prime, module, field_); });
}

std::shared_ptr<const WSet> DepthEngine::w(const MonomialIdeal& I, const MonomialIdeal& J) {
    return w_.get({I, J}, [&] { return std::make_shared<const WSet>(enumerate_w(I, J, cap_)); });
}

std::shared_ptr<const DepthReport> DepthEngine::pair_depth(const MonomialIdeal& I, const MonomialIdeal& J,
                                                           const Subquotient& module) {
    return depth_.get({I, J, module}, [&] {
        const PrimeGradeFn fn = [this](const MonomialPrime& p, const Subquotient& m) {
            return grade(p.ideal(), m);
        };
        return std::make_shared<const DepthReport>(pairdepth::pair_depth(PairContext{I, J, module}, fn, cap_));
    });
}

ExtendedDepth DepthEngine::pair_depth_localized(const MonomialIdeal& I, const MonomialIdeal& J,
                                                const Subquotient& module) {
    return localized_.get({I, J, module}, [&] {
        ExtendedDepth best = ExtendedDepth::infinity();
        if (module.is_zero()) return best;
        for (const auto& p : w(I, J)->all_member_primes) best = std::min(best, depth_at_prime(p, module).value);
        return best;
    });
}

int DepthEngine::dim(const Subquotient& module) {
    return dim_.get(module, [&] { return dim_module(module); });
}

std::shared_ptr<const std::vector<MonomialPrime>> DepthEngine::ass(const Subquotient& module) {
    return ass_.get(module, [&] {
        return std::make_shared<const std::vector<MonomialPrime>>(associated_primes(module));
    });
}

EngineStats DepthEngine::stats() const {
    EngineStats s;
    auto add = [&s](const auto& memo) {
        s.hits += memo.hits();
        s.misses += memo.misses();
    };
    add(koszul_);
    add(ext_);
    add(local_);
    add(w_);
    add(depth_);
    add(localized_);
    add(dim_);
    add(ass_);
    return s;
}

}  // namespace pairdepth
