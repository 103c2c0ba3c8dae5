#include "pairdepth/sequences.hpp"

#include <algorithm>

namespace pairdepth {

namespace {

void check_element(const ExponentVector& m, int nvars) {
    if (static_cast<int>(m.size()) != nvars) throw InputError("sequence element lives in a different ring");
    if (!is_nonnegative(m)) throw InputError("negative exponent in sequence element");
    if (total_degree(m) == 0) throw InputError("sequence element is the unit monomial");
}

void check_sequence(const MonomialSequence& seq, int nvars) {
    if (seq.empty()) throw InputError("empty sequence");
    for (const auto& m : seq) check_element(m, nvars);
}

// Monomials of total degree 1..max_degree, degree ascending and then by
// exponent vector descending, so x precedes y.
std::vector<ExponentVector> monomials_up_to(int nvars, int max_degree) {
    std::vector<ExponentVector> out;
    ExponentVector e(static_cast<std::size_t>(nvars), 0);
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == nvars - 1) {
            e[static_cast<std::size_t>(var)] = left;
            out.push_back(e);
            return;
        }
        for (int v = left; v >= 0; --v) {
            e[static_cast<std::size_t>(var)] = v;
            self(self, var + 1, left - v);
        }
    };
    for (int d = 1; d <= max_degree; ++d) {
        if (nvars > 0) rec(rec, 0, d);
    }
    return out;
}

}  // namespace

MonomialIdeal sequence_ideal(int nvars, const MonomialSequence& seq) {
    return MonomialIdeal(nvars, seq);
}

bool is_regular_element(const ExponentVector& m, const Subquotient& module) {
    check_element(m, module.nvars());
    if (module.is_zero()) return true;
    const MonomialIdeal torsion = ideal_intersect(ideal_colon(module.denominator(), m), module.numerator());
    return is_subideal(torsion, module.denominator());
}

bool is_regular_element_via_ass(const ExponentVector& m, const Subquotient& module) {
    check_element(m, module.nvars());
    const auto primes = associated_primes(module);
    return std::none_of(primes.begin(), primes.end(), [&](const MonomialPrime& p) { return p.contains(m); });
}

RegularityReport is_poor_k_regular(const MonomialSequence& seq, const Subquotient& module, int k,
                                   DepthEngine& engine) {
    check_sequence(seq, module.nvars());
    if (k < -1) throw InputError("k must be at least -1");
    RegularityReport report;
    report.k = k;
    Subquotient current = module;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (const auto& p : *engine.ass(current)) {
            if (p.coheight() > k && p.contains(seq[i])) {
                report.verdict = false;
                report.failing_index = i;
                report.blocking_prime = p;
                return report;
            }
        }
        current = module_mod_ideal(current, MonomialIdeal::principal(seq[i]));
    }
    return report;
}

RegularityReport is_poor_k_regular(const MonomialSequence& seq, const Subquotient& module, int k) {
    DepthEngine engine;
    return is_poor_k_regular(seq, module, k, engine);
}

RegularityReport is_k_regular(const MonomialSequence& seq, const Subquotient& module, int k, DepthEngine& engine) {
    RegularityReport report = is_poor_k_regular(seq, module, k, engine);
    report.quotient_dim = engine.dim(module_mod_ideal(module, sequence_ideal(module.nvars(), seq)));
    if (report.verdict && *report.quotient_dim <= k) report.verdict = false;
    return report;
}

RegularityReport is_k_regular(const MonomialSequence& seq, const Subquotient& module, int k) {
    DepthEngine engine;
    return is_k_regular(seq, module, k, engine);
}

GreedyResult greedy_regular_sequence(const MonomialIdeal& a, const Subquotient& module, int target_len,
                                     DepthEngine& engine) {
    if (a.nvars() != module.nvars()) throw InputError("ideal and module live in different rings");
    if (a.is_zero() || a.is_unit()) throw InputError("greedy construction needs a proper nonzero ideal");
    if (target_len < 0) throw InputError("negative target length");
    GreedyResult out;
    const ExtendedDepth g = engine.grade(a, module).value;
    if (ExtendedDepth(target_len) > g) {
        out.reason = "target length exceeds grade " + g.to_string();
        return out;
    }
    int max_degree = 0;
    for (const auto& gen : a.gens()) max_degree = std::max(max_degree, total_degree(gen));
    std::vector<ExponentVector> candidates;
    for (auto& m : monomials_up_to(a.nvars(), max_degree + 1)) {
        if (a.contains(m)) candidates.push_back(std::move(m));
    }

    Subquotient current = module;
    for (int step = 0; step < target_len; ++step) {
        const auto primes = engine.ass(current);
        auto avoids = [&](const ExponentVector& m) {
            return std::none_of(primes->begin(), primes->end(), [&](const MonomialPrime& p) { return p.contains(m); });
        };
        auto it = std::find_if(candidates.begin(), candidates.end(), avoids);
        if (it == candidates.end()) {
            out.failed_step = static_cast<std::size_t>(step);
            out.reason = "every monomial of the ideal lies in an associated prime";
            for (const auto& gen : a.gens()) {
                for (const auto& p : *primes) {
                    if (p.contains(gen)) {
                        if (std::find(out.cover.begin(), out.cover.end(), p) == out.cover.end()) out.cover.push_back(p);
                        break;
                    }
                }
            }
            std::sort(out.cover.begin(), out.cover.end());
            return out;
        }
        out.sequence.push_back(*it);
        current = module_mod_ideal(current, MonomialIdeal::principal(*it));
    }
    out.success = true;
    return out;
}

GreedyResult greedy_regular_sequence(const MonomialIdeal& a, const Subquotient& module, int target_len,
                                     const Field& field) {
    DepthEngine engine(field);
    return greedy_regular_sequence(a, module, target_len, engine);
}

KRegularReductionReport k_regular_reduction_check(const MonomialSequence& seq, const MonomialIdeal& I,
                                                  const MonomialIdeal& J, const Subquotient& module, int k,
                                                  DepthEngine& engine) {
    const int n = module.nvars();
    check_sequence(seq, n);
    for (const auto& m : seq) {
        if (!I.contains(m)) throw InputError("sequence element outside I");
    }
    KRegularReductionReport report;
    report.regularity = is_k_regular(seq, module, k, engine);
    const MonomialIdeal a = sequence_ideal(n, seq);
    for (const auto& p : engine.w(a, J)->all_member_primes) {
        if (p.coheight() > k) continue;
        if (!support_contains(p, module)) continue;
        if (w_member(p, I, J)) continue;
        report.hypothesis_violations.push_back(p);
    }
    report.hypothesis_holds = report.regularity.verdict && report.hypothesis_violations.empty();
    report.length = static_cast<int>(seq.size());
    report.depth_I = engine.depth(I, J, module);
    report.depth_a = engine.depth(a, J, module);
    const ExtendedDepth len(report.length);
    report.consequence_holds = std::min(report.depth_I, len) == std::min(report.depth_a, len);
    return report;
}

KRegularReductionReport k_regular_reduction_check(const MonomialSequence& seq, const MonomialIdeal& I,
                                                  const MonomialIdeal& J, const Subquotient& module, int k,
                                                  const Field& field) {
    DepthEngine engine(field);
    return k_regular_reduction_check(seq, I, J, module, k, engine);
}

}  // namespace pairdepth
