#include "pairdepth/pair_depth.hpp"

#include <algorithm>

#include <omp.h>

namespace pairdepth {

bool w_tilde_member(const MonomialIdeal& a, const MonomialIdeal& I, const MonomialIdeal& J) {
    const MonomialIdeal sum = ideal_sum(a, J);
    return std::all_of(I.gens().begin(), I.gens().end(),
                       [&](const ExponentVector& g) { return radical_member(g, sum); });
}

bool w_member(const MonomialPrime& p, const MonomialIdeal& I, const MonomialIdeal& J) {
    // g ∈ √(p_S + J) iff supp(g) meets S or g ∈ √J.
    return std::all_of(I.gens().begin(), I.gens().end(), [&](const ExponentVector& g) {
        return p.contains(g) || radical_member(g, J);
    });
}

WSet enumerate_w(const MonomialIdeal& I, const MonomialIdeal& J, int cap) {
    const int n = I.nvars();
    if (J.nvars() != n) throw InputError("I and J live in different rings");
    if (n > cap) {
        throw DomainError("W-set enumeration refuses n = " + std::to_string(n) + " (cap " +
                          std::to_string(cap) + ")");
    }
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<char> in_w(count, 0);
#pragma omp parallel for schedule(static) if (count >= 4096)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(count); ++s) {
        in_w[static_cast<std::size_t>(s)] =
            w_member(MonomialPrime(n, VarSet(static_cast<std::uint64_t>(s))), I, J) ? 1 : 0;
    }
    WSet out;
    for (std::uint64_t s = 0; s < count; ++s) {
        if (!in_w[s]) continue;
        const VarSet vars(s);
        out.all_member_primes.emplace_back(n, vars);
        // Upward closure: minimal iff no single deletion stays inside W.
        bool minimal = true;
        for (int i : vars.indices()) {
            if (in_w[vars.without(i).bits()]) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.minimal_primes.emplace_back(n, vars);
    }
    std::sort(out.all_member_primes.begin(), out.all_member_primes.end());
    std::sort(out.minimal_primes.begin(), out.minimal_primes.end());
    return out;
}

int dim_mod_ideal(const Subquotient& module, const MonomialIdeal& J) {
    return dim_module(module_mod_ideal(module, J));
}

DepthReport pair_depth(const PairContext& ctx, const PrimeGradeFn& grade_fn, int cap) {
    DepthReport report;
    report.w = enumerate_w(ctx.I, ctx.J, cap);
    report.dim_mod_JM = dim_mod_ideal(ctx.M, ctx.J);
    if (ctx.M.is_zero()) {
        report.diagnostic = "M = 0";
    } else if (report.w.minimal_primes.empty()) {
        report.diagnostic = "W(I,J) is empty";
    } else {
        for (const auto& p : report.w.minimal_primes) {
            const GradeResult g = grade_fn(p, ctx.M);
            report.grade_table.push_back(PrimeGrade{p, g.value, g.witness_degree});
            if (g.value < report.depth) {
                report.depth = g.value;
                report.witness_prime = p;
            }
        }
    }
    const bool j_proper = ctx.J.is_proper();
    report.is_cm = j_proper && (ctx.M.is_zero() || report.depth == ExtendedDepth(report.dim_mod_JM));
    if (!j_proper) report.diagnostic = "J is not a proper ideal";
    return report;
}

DepthReport pair_depth(const PairContext& ctx, const Field& field, int cap) {
    return pair_depth(
        ctx, [&field](const MonomialPrime& p, const Subquotient& m) { return grade(p.ideal(), m, field); },
        cap);
}

ExtendedDepth pair_depth_localized(const PairContext& ctx, const Field& field, int cap) {
    if (ctx.M.is_zero()) return ExtendedDepth::infinity();
    ExtendedDepth best = ExtendedDepth::infinity();
    for (const auto& p : enumerate_w(ctx.I, ctx.J, cap).all_member_primes) {
        best = std::min(best, depth_at_prime(p, ctx.M, field).value);
    }
    return best;
}

DepthReport is_pair_cm(const PairContext& ctx, const Field& field) { return pair_depth(ctx, field); }

bool is_ij_torsion(const PairContext& ctx) {
    if (ctx.M.is_zero()) return true;
    const auto mins = minimal_primes(annihilator(ctx.M));
    return std::all_of(mins.begin(), mins.end(),
                       [&](const MonomialPrime& p) { return w_member(p, ctx.I, ctx.J); });
}

bool artinian_conclusion(const PairContext& ctx) { return dim_mod_ideal(ctx.M, ctx.J) <= 0; }

ExtEquivalence ext_depth_equivalence(const PairContext& ctx, const MonomialIdeal& a, const Field& field) {
    if (!w_tilde_member(a, ctx.I, ctx.J)) throw DomainError("a is not in W~(I,J)");
    if (ctx.M.is_zero() || a.is_unit()) throw DomainError("aM = M");
    ExtEquivalence out;
    out.t = pair_depth(ctx, field).depth;
    out.grade_a = grade(a, ctx.M, field).value;
    out.ext_nonzero_at_t = out.t.is_finite() && ext_nonvanishing(a, ctx.M, out.t.value(), field);
    out.holds = out.ext_nonzero_at_t == (out.grade_a == out.t);
    return out;
}

}  // namespace pairdepth
