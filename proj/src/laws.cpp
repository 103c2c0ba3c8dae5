#include "pairdepth/laws.hpp"

#include <algorithm>
#include <sstream>

namespace pairdepth {

namespace {

using D = ExtendedDepth;

std::string str(const D& d) { return d.to_string(); }
std::string str(bool b) { return b ? "true" : "false"; }

std::string join(std::initializer_list<D> values) {
    std::string out;
    for (const auto& v : values) {
        if (!out.empty()) out += ",";
        out += v.to_string();
    }
    return out;
}

LawOutcome skip(const std::string& id, const std::string& why) {
    LawOutcome o;
    o.law = id;
    o.applicable = false;
    o.detail = why;
    return o;
}

LawOutcome verdict(const std::string& id, bool holds, std::string lhs, std::string rhs, std::string detail = {}) {
    LawOutcome o;
    o.law = id;
    o.applicable = true;
    o.holds = holds;
    o.lhs = std::move(lhs);
    o.rhs = std::move(rhs);
    o.detail = std::move(detail);
    return o;
}

const MonomialIdeal& need_aux(const LawInput& in) {
    if (!in.aux) throw InputError("law needs an auxiliary ideal");
    return *in.aux;
}

MonomialIdeal maximal_ideal(int n) { return MonomialIdeal::prime(n, VarSet::all(n)); }

bool is_m_primary(const MonomialIdeal& ideal) {
    return ideal.is_proper() && krull_dim_quotient(ideal) == 0;
}

// Every generator of `inner` lies in √outer.
bool in_radical_of(const MonomialIdeal& inner, const MonomialIdeal& outer) {
    return std::all_of(inner.gens().begin(), inner.gens().end(),
                       [&](const ExponentVector& g) { return radical_member(g, outer); });
}

LawOutcome zero_j_reduction(DepthEngine& e, const LawInput& in) {
    const auto zero = MonomialIdeal::zero(in.I.nvars());
    const D lhs = e.depth(in.I, zero, in.M);
    const D rhs = e.grade(in.I, in.M).value;
    return verdict("zero-j-reduction", lhs == rhs, str(lhs), str(rhs));
}

LawOutcome grade_routes(DepthEngine& e, const LawInput& in) {
    const D koszul = e.grade(in.I, in.M).value;
    const D ext = e.grade_via_ext(in.I, in.M).value;
    bool holds = koszul == ext;
    std::string detail = "koszul=" + str(koszul) + " ext=" + str(ext);
    if (auto p = as_monomial_prime(in.I)) {
        // grade(p, M) is the least depth M_q over monomial primes q ⊇ p.
        D best = D::infinity();
        const VarSet all = VarSet::all(in.I.nvars());
        const std::uint64_t rest = all.bits() & ~p->vars().bits();
        for (std::uint64_t extra = rest;; extra = (extra - 1) & rest) {
            best = std::min(best, e.depth_at_prime(MonomialPrime(in.I.nvars(), VarSet(p->vars().bits() | extra)), in.M).value);
            if (extra == 0) break;
        }
        const D at_p = e.depth_at_prime(*p, in.M).value;
        holds = holds && best == koszul && koszul <= at_p;
        detail += " localized_min=" + str(best) + " at_p=" + str(at_p);
    }
    return verdict("grade-routes", holds, str(koszul), str(ext), detail);
}

LawOutcome localization_consistency(DepthEngine& e, const LawInput& in) {
    const D lhs = e.depth(in.I, in.J, in.M);
    const D rhs = e.pair_depth_localized(in.I, in.J, in.M);
    return verdict("localization-consistency", lhs == rhs, str(lhs), str(rhs));
}

LawOutcome chain_inequality(DepthEngine& e, const LawInput& in) {
    const auto& a = need_aux(in);
    if (!w_tilde_member(a, in.I, in.J)) return skip("chain-inequality", "a not in W~(I,J)");
    const D t = e.depth(in.I, in.J, in.M);
    const D mid = e.depth(a, in.J, in.M);
    const D g = e.grade(a, in.M).value;
    return verdict("chain-inequality", t <= mid && mid <= g, join({t, mid}), join({mid, g}));
}

LawOutcome infimum_over_ideals(DepthEngine& e, const LawInput& in) {
    const auto& a = need_aux(in);
    if (!w_tilde_member(a, in.I, in.J)) return skip("infimum-over-ideals", "a not in W~(I,J)");
    const auto report = e.pair_depth(in.I, in.J, in.M);
    const D g = e.grade(a, in.M).value;
    bool holds = report->depth <= g;
    std::string detail;
    if (report->witness_prime) {
        // The infimum is attained at the witness prime, itself a member of W~.
        const MonomialIdeal p = report->witness_prime->ideal();
        const D at_witness = e.grade(p, in.M).value;
        holds = holds && w_tilde_member(p, in.I, in.J) && at_witness == report->depth;
        detail = "grade at witness=" + str(at_witness);
    }
    return verdict("infimum-over-ideals", holds, str(report->depth), str(g), detail);
}

LawOutcome support_comparison(DepthEngine& e, const LawInput& in) {
    const auto& b = need_aux(in);
    if (!in_radical_of(in.J, b)) return skip("support-comparison", "J not in sqrt(b)");
    const D lhs = e.depth(in.I, b, in.M);
    const D rhs = e.depth(in.I, in.J, in.M);
    return verdict("support-comparison", lhs <= rhs, str(lhs), str(rhs));
}

LawOutcome absorb_c(DepthEngine& e, const LawInput& in) {
    const auto& c = need_aux(in);
    if (!in_radical_of(c, in.J)) return skip("absorb-c", "c not in sqrt(J)");
    const D lhs = e.depth(in.I, in.J, in.M);
    const D rhs = e.depth(ideal_sum(in.I, c), in.J, in.M);
    return verdict("absorb-c", lhs == rhs, str(lhs), str(rhs));
}

LawOutcome radical_i(DepthEngine& e, const LawInput& in) {
    const auto& b = need_aux(in);
    if (!same_radical(in.I, b)) return skip("radical-i", "sqrt(I) != sqrt(b)");
    const D lhs = e.depth(in.I, in.J, in.M);
    const D rhs = e.depth(b, in.J, in.M);
    return verdict("radical-i", lhs == rhs, str(lhs), str(rhs));
}

LawOutcome radical_j(DepthEngine& e, const LawInput& in) {
    const auto& c = need_aux(in);
    if (!same_radical(in.J, c)) return skip("radical-j", "sqrt(J) != sqrt(c)");
    const D lhs = e.depth(in.I, in.J, in.M);
    const D rhs = e.depth(in.I, c, in.M);
    return verdict("radical-j", lhs == rhs, str(lhs), str(rhs));
}

LawOutcome radical_both(DepthEngine& e, const LawInput& in) {
    const MonomialIdeal rI = radical(in.I);
    const MonomialIdeal rJ = radical(in.J);
    const D d0 = e.depth(in.I, in.J, in.M);
    const D d1 = e.depth(rI, in.J, in.M);
    const D d2 = e.depth(in.I, rJ, in.M);
    const D d3 = e.depth(rI, rJ, in.M);
    return verdict("radical-both", d0 == d1 && d0 == d2 && d0 == d3, str(d0), join({d1, d2, d3}));
}

LawOutcome product_intersection(DepthEngine& e, const LawInput& in) {
    const auto& b = need_aux(in);
    const D lhs = e.depth(in.I, ideal_product(in.J, b), in.M);
    const D rhs = e.depth(in.I, ideal_intersect(in.J, b), in.M);
    return verdict("product-intersection", lhs == rhs, str(lhs), str(rhs));
}

struct ExtensionDepths {
    D r, t, s;
};

std::optional<ExtensionDepths> extension_depths(DepthEngine& e, const LawInput& in) {
    if (!in.middle) throw InputError("law needs a middle relation ideal");
    const MonomialIdeal& mid = *in.middle;
    if (!is_subideal(in.M.denominator(), mid) || !is_subideal(mid, in.M.numerator())) return std::nullopt;
    const Subquotient U(mid, in.M.denominator());
    const Subquotient N(in.M.numerator(), mid);
    return ExtensionDepths{e.depth(in.I, in.J, U), e.depth(in.I, in.J, in.M), e.depth(in.I, in.J, N)};
}

LawOutcome ses_bounds(DepthEngine& e, const LawInput& in) {
    const auto d = extension_depths(e, in);
    if (!d) return skip("ses-bounds", "middle ideal not between B and A");
    const bool i = d->t >= std::min(d->r, d->s);
    const bool ii = d->r >= std::min(d->t, d->s.shifted(1));
    const bool iii = d->s >= std::min(d->r.shifted(-1), d->t);
    return verdict("ses-bounds", i && ii && iii, "r,t,s=" + join({d->r, d->t, d->s}),
                   "i=" + str(i) + " ii=" + str(ii) + " iii=" + str(iii));
}

LawOutcome ses_quadrichotomy(DepthEngine& e, const LawInput& in) {
    const auto d = extension_depths(e, in);
    if (!d) return skip("ses-quadrichotomy", "middle ideal not between B and A");
    const bool holds = d->t == d->r || d->t == d->s || d->s == d->r.shifted(-1);
    return verdict("ses-quadrichotomy", holds, "r,t,s=" + join({d->r, d->t, d->s}), "");
}

LawOutcome ext_equivalence(DepthEngine& e, const LawInput& in, const std::string& id, const MonomialIdeal& J_tilde) {
    const auto& a = need_aux(in);
    if (!w_tilde_member(a, in.I, J_tilde)) return skip(id, "ideal outside W~");
    if (a.is_unit() || in.M.is_zero()) return skip(id, "aM = M");
    const D t = e.depth(in.I, in.J, in.M);
    if (t.is_infinite()) return verdict(id, false, "t=inf", "", "finite depth expected when aM != M");
    const D g = e.grade(a, in.M).value;
    const bool ext = e.ext_nonvanishing(a, in.M, t.value());
    return verdict(id, ext == (g == t), "ext^t!=0:" + str(ext), "grade==t:" + str(g == t),
                   "t=" + str(t) + " grade=" + str(g));
}

LawOutcome ext_characterization(DepthEngine& e, const LawInput& in) {
    return ext_equivalence(e, in, "ext-characterization", in.J);
}

LawOutcome ext_characterization_zero_j(DepthEngine& e, const LawInput& in) {
    return ext_equivalence(e, in, "ext-characterization-zero-j", MonomialIdeal::zero(in.I.nvars()));
}

LawOutcome top_local_cohomology(DepthEngine& e, const LawInput& in) {
    if (in.I.is_unit() || in.M.is_zero()) return skip("top-local-cohomology", "IM = M");
    const D t = e.depth(in.I, in.J, in.M);
    const D g = e.grade(in.I, in.M).value;
    if (t.is_infinite()) return verdict("top-local-cohomology", false, "t=inf", str(g));
    const bool ext = e.ext_nonvanishing(in.I, in.M, t.value());
    return verdict("top-local-cohomology", t <= g && ext == (t == g), "t=" + str(t), "grade=" + str(g),
                   "ext^t!=0:" + str(ext));
}

LawOutcome cm_inheritance(DepthEngine& e, const LawInput& in) {
    const auto& a = need_aux(in);
    if (a.is_unit()) return skip("cm-inheritance", "a is the unit ideal");
    if (!w_tilde_member(a, in.I, in.J)) return skip("cm-inheritance", "a not in W~(I,J)");
    if (!e.is_cm(in.I, in.J, in.M)) return skip("cm-inheritance", "M not (I,J)-CM");
    const bool cm_a = e.is_cm(a, in.J, in.M);
    return verdict("cm-inheritance", cm_a, "cm(I,J)=true", "cm(a,J)=" + str(cm_a),
                   "depth(a,J,M)=" + str(e.depth(a, in.J, in.M)) + " dim=" + std::to_string(e.dim_mod(in.M, in.J)));
}

LawOutcome maximal_ideal_cm(DepthEngine& e, const LawInput& in) {
    const MonomialIdeal m = maximal_ideal(in.I.nvars());
    const bool cm_i = e.is_cm(in.I, in.J, in.M);
    const bool cm_m = e.is_cm(m, in.J, in.M);
    const bool primary = is_m_primary(ideal_sum(in.I, in.J));
    const bool holds = (!cm_i || cm_m) && (!primary || cm_i == cm_m);
    return verdict("maximal-ideal-cm", holds, "cm(I,J)=" + str(cm_i), "cm(m,J)=" + str(cm_m),
                   primary ? "I+J m-primary" : "");
}

LawOutcome dimension_bound(DepthEngine& e, const LawInput& in) {
    if (in.M.is_zero() || in.J.is_unit()) return skip("dimension-bound", "needs M != 0 and J proper");
    const D lhs = e.depth(maximal_ideal(in.I.nvars()), in.J, in.M);
    const int dim = e.dim_mod(in.M, in.J);
    return verdict("dimension-bound", lhs <= D(dim), str(lhs), std::to_string(dim));
}

LawOutcome primary_sum_cm(DepthEngine& e, const LawInput& in) {
    if (in.M.is_zero() || !is_m_primary(ideal_sum(in.I, in.J))) return skip("primary-sum-cm", "needs M != 0, I+J m-primary");
    const D t = e.depth(in.I, in.J, in.M);
    const int dim = e.dim_mod(in.M, in.J);
    const bool cm = e.is_cm(in.I, in.J, in.M);
    return verdict("primary-sum-cm", cm == (t == D(dim)), "cm=" + str(cm), "depth=" + str(t) + " dim=" + std::to_string(dim));
}

LawOutcome torsion_artinian(DepthEngine& e, const LawInput& in) {
    const PairContext ctx{in.I, in.J, in.M};
    if (!is_ij_torsion(ctx)) return skip("torsion-artinian", "M not (I,J)-torsion");
    if (!e.is_cm(in.I, in.J, in.M)) return skip("torsion-artinian", "M not (I,J)-CM");
    const int dim = e.dim_mod(in.M, in.J);
    return verdict("torsion-artinian", dim <= 0, "dim M/JM=" + std::to_string(dim), "<= 0");
}

LawOutcome faithful_dimension(DepthEngine& e, const LawInput& in) {
    if (in.M.is_zero() || !in.M.denominator().is_zero()) return skip("faithful-dimension", "M not faithful");
    const int d = e.dim(in.M);
    const int dim = e.dim_mod(in.M, in.J);
    const bool full = dim == d;
    return verdict("faithful-dimension", full == in.J.is_zero(), "dim M/JM=" + std::to_string(dim),
                   "dim M=" + std::to_string(d) + " J=0:" + str(in.J.is_zero()));
}

bool cover_is_certificate(DepthEngine& e, const MonomialIdeal& a, const Subquotient& M, const GreedyResult& g) {
    Subquotient current = M;
    for (const auto& m : g.sequence) current = module_mod_ideal(current, MonomialIdeal::principal(m));
    const auto ass = e.ass(current);
    for (const auto& p : g.cover) {
        if (std::find(ass->begin(), ass->end(), p) == ass->end()) return false;
    }
    return !g.cover.empty() &&
           std::all_of(a.gens().begin(), a.gens().end(), [&](const ExponentVector& gen) {
               return std::any_of(g.cover.begin(), g.cover.end(),
                                  [&](const MonomialPrime& p) { return p.contains(gen); });
           });
}

LawOutcome regular_sequence_witness(DepthEngine& e, const LawInput& in) {
    const auto report = e.pair_depth(in.I, in.J, in.M);
    if (report->depth.is_infinite() || !report->witness_prime) return skip("regular-sequence-witness", "infinite depth");
    const int t = report->depth.value();
    const MonomialIdeal p = report->witness_prime->ideal();
    if (t == 0 || p.is_zero()) return verdict("regular-sequence-witness", true, "0", "0", "empty sequence");
    const GreedyResult g = greedy_regular_sequence(p, in.M, t, e);
    if (g.success) {
        const bool ok = static_cast<int>(g.sequence.size()) == t &&
                        std::all_of(g.sequence.begin(), g.sequence.end(), [&](const auto& m) { return p.contains(m); }) &&
                        is_poor_k_regular(g.sequence, in.M, -1, e).verdict;
        return verdict("regular-sequence-witness", ok, std::to_string(g.sequence.size()), std::to_string(t),
                       "constructed");
    }
    const bool ok = cover_is_certificate(e, p, in.M, g);
    return verdict("regular-sequence-witness", ok, "cover of size " + std::to_string(g.cover.size()),
                   std::to_string(t), "monomial witness impossible at step " + std::to_string(g.failed_step));
}

LawOutcome poor_regular_monotone(DepthEngine& e, const LawInput& in) {
    if (!is_poor_k_regular(in.seq, in.M, in.k, e).verdict) return skip("poor-regular-monotone", "not poor k-regular");
    const bool next = is_poor_k_regular(in.seq, in.M, in.k + 1, e).verdict;
    return verdict("poor-regular-monotone", next, "poor k=" + std::to_string(in.k), "poor k+1=" + str(next));
}

LawOutcome regular_element_routes(DepthEngine& e, const LawInput& in) {
    (void)e;
    for (const auto& m : in.seq) {
        const bool colon = is_regular_element(m, in.M);
        const bool ass = is_regular_element_via_ass(m, in.M);
        if (colon != ass) return verdict("regular-element-routes", false, str(colon), str(ass));
    }
    return verdict("regular-element-routes", true, "agree", "agree");
}

LawOutcome k_regular_reduction(DepthEngine& e, const LawInput& in) {
    if (in.seq.empty()) return skip("k-regular-reduction", "empty sequence");
    for (const auto& m : in.seq) {
        if (!in.I.contains(m)) return skip("k-regular-reduction", "sequence element outside I");
    }
    const auto r = k_regular_reduction_check(in.seq, in.I, in.J, in.M, in.k, e);
    if (!r.hypothesis_holds) return skip("k-regular-reduction", "hypothesis fails");
    const D len(r.length);
    return verdict("k-regular-reduction", r.consequence_holds, str(std::min(r.depth_I, len)),
                   str(std::min(r.depth_a, len)), "depth(I,J,M)=" + str(r.depth_I) + " depth(a,J,M)=" + str(r.depth_a));
}

std::vector<LawSpec> build_catalog() {
    using S = LawShape;
    return {
        {"zero-j-reduction", "depth(I,0,M) = grade(I,M)", S::IdealModule, zero_j_reduction},
        {"grade-routes", "Koszul grade = Ext grade; prime grade = least localized depth", S::IdealModule, grade_routes},
        {"localization-consistency", "depth(I,J,M) = inf depth M_p over W(I,J)", S::Triple, localization_consistency},
        {"chain-inequality", "a in W~: depth(I,J,M) <= depth(a,J,M) <= grade(a,M)", S::TripleWithIdeal, chain_inequality},
        {"infimum-over-ideals", "depth(I,J,M) is the least grade over W~(I,J), attained", S::TripleWithIdeal,
         infimum_over_ideals},
        {"support-comparison", "J in sqrt(b): depth(I,b,M) <= depth(I,J,M)", S::TripleWithIdeal, support_comparison},
        {"absorb-c", "c in sqrt(J): depth(I,J,M) = depth(I+c,J,M)", S::TripleWithIdeal, absorb_c},
        {"radical-i", "sqrt(I) = sqrt(b): equal depth", S::TripleWithIdeal, radical_i},
        {"radical-j", "sqrt(J) = sqrt(c): equal depth", S::TripleWithIdeal, radical_j},
        {"radical-both", "depth unchanged by radicals of I and J", S::Triple, radical_both},
        {"product-intersection", "depth(I,Jb,M) = depth(I,J cap b,M)", S::TripleWithIdeal, product_intersection},
        {"ses-bounds", "depth lemma on 0 -> U -> M -> N -> 0", S::Extension, ses_bounds},
        {"ses-quadrichotomy", "t=r or t=s or s=r-1", S::Extension, ses_quadrichotomy},
        {"ext-characterization", "a in W~(I,J): Ext^t(R/a,M) != 0 iff grade(a,M) = t", S::TripleWithIdeal,
         ext_characterization},
        {"ext-characterization-zero-j", "b in W~(I,0): Ext^t(R/b,M) != 0 iff grade(b,M) = t", S::TripleWithIdeal,
         ext_characterization_zero_j},
        {"top-local-cohomology", "Ext^t(R/I,M) != 0 iff t = grade(I,M)", S::Triple, top_local_cohomology},
        {"cm-inheritance", "(I,J)-CM implies (a,J)-CM for proper a in W~", S::TripleWithIdeal, cm_inheritance},
        {"maximal-ideal-cm", "(I,J)-CM implies (m,J)-CM, equivalence when I+J is m-primary", S::Triple,
         maximal_ideal_cm},
        {"dimension-bound", "depth(m,J,M) <= dim M/JM", S::Triple, dimension_bound},
        {"primary-sum-cm", "I+J m-primary: CM iff depth = dim M/JM", S::Triple, primary_sum_cm},
        {"torsion-artinian", "torsion and CM imply dim M/JM <= 0", S::Triple, torsion_artinian},
        {"faithful-dimension", "faithful M: dim M/JM = dim M iff J = 0", S::Triple, faithful_dimension},
        {"regular-sequence-witness", "monomial regular sequence of length t in the witness prime, or a cover",
         S::Triple, regular_sequence_witness},
        {"poor-regular-monotone", "poor k-regular implies poor (k+1)-regular", S::ModuleSequence,
         poor_regular_monotone},
        {"regular-element-routes", "colon and Ass regularity tests agree", S::ModuleSequence, regular_element_routes},
        {"k-regular-reduction", "k-regular sequence in I: min(depth, len) preserved", S::FullSequence,
         k_regular_reduction},
    };
}

}  // namespace

const std::vector<LawSpec>& law_catalog() {
    static const std::vector<LawSpec> catalog = build_catalog();
    return catalog;
}

const LawSpec& find_law(std::string_view id) {
    for (const auto& law : law_catalog()) {
        if (law.id == id) return law;
    }
    throw InputError("unknown law '" + std::string(id) + "'");
}

std::vector<const LawSpec*> select_laws(std::string_view selector) {
    std::vector<const LawSpec*> out;
    if (selector == "all") {
        for (const auto& law : law_catalog()) out.push_back(&law);
        return out;
    }
    std::size_t start = 0;
    while (start <= selector.size()) {
        std::size_t comma = selector.find(',', start);
        if (comma == std::string_view::npos) comma = selector.size();
        auto id = selector.substr(start, comma - start);
        while (!id.empty() && id.front() == ' ') id.remove_prefix(1);
        while (!id.empty() && id.back() == ' ') id.remove_suffix(1);
        if (!id.empty()) {
            const LawSpec* law = &find_law(id);
            if (std::find(out.begin(), out.end(), law) == out.end()) out.push_back(law);
        }
        start = comma + 1;
    }
    if (out.empty()) throw InputError("empty law selection");
    return out;
}

LawOutcome evaluate_law(const LawSpec& law, DepthEngine& engine, const LawInput& input) {
    LawOutcome out = law.check(engine, input);
    out.law = law.id;
    return out;
}

std::vector<LawOutcome> depth_law_suite(DepthEngine& engine, const PairContext& ctx, const MonomialIdeal& b,
                                        const MonomialIdeal& c, const std::optional<MonomialIdeal>& middle) {
    std::vector<LawOutcome> out;
    for (const auto& law : law_catalog()) {
        LawInput in{ctx.I, ctx.J, ctx.M, std::nullopt, middle, {}, -1};
        switch (law.shape) {
            case LawShape::IdealModule:
            case LawShape::Triple:
                break;
            case LawShape::TripleWithIdeal:
                in.aux = (law.id == "absorb-c" || law.id == "radical-j") ? c : b;
                break;
            case LawShape::Extension:
                if (!middle) continue;
                break;
            case LawShape::ModuleSequence:
            case LawShape::FullSequence:
                continue;
        }
        out.push_back(evaluate_law(law, engine, in));
    }
    return out;
}

}  // namespace pairdepth
