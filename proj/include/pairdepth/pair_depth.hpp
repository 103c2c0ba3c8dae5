#ifndef PAIRDEPTH_PAIR_DEPTH_HPP
#define PAIRDEPTH_PAIR_DEPTH_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pairdepth/core.hpp"
#include "pairdepth/decomp.hpp"
#include "pairdepth/homology.hpp"

namespace pairdepth {

/// The triple (I, J, M).
struct PairContext {
    MonomialIdeal I;
    MonomialIdeal J;
    Subquotient M;
};

/// Monomial primes p with I ⊆ √(p + J); upward closed.
struct WSet {
    std::vector<MonomialPrime> minimal_primes;
    std::vector<MonomialPrime> all_member_primes;
};

inline constexpr int kDefaultEnumerationCap = 16;

/// a ∈ W̃(I,J): some power of I lands in a + J, i.e. I ⊆ √(a + J).
bool w_tilde_member(const MonomialIdeal& a, const MonomialIdeal& I, const MonomialIdeal& J);
bool w_member(const MonomialPrime& p, const MonomialIdeal& I, const MonomialIdeal& J);

/// Tests all 2^n monomial primes. Throws DomainError when n exceeds `cap`.
WSet enumerate_w(const MonomialIdeal& I, const MonomialIdeal& J, int cap = kDefaultEnumerationCap);

struct PrimeGrade {
    MonomialPrime prime;
    ExtendedDepth grade;
    std::optional<ExponentVector> witness_degree;
};

struct DepthReport {
    ExtendedDepth depth = ExtendedDepth::infinity();
    std::optional<MonomialPrime> witness_prime;
    int dim_mod_JM = kZeroModuleDim;
    bool is_cm = false;
    /// One row per minimal W-prime, canonical prime order.
    std::vector<PrimeGrade> grade_table;
    WSet w;
    std::string diagnostic;
};

/// grade(p_S, M) supplier; lets callers plug in a memo.
using PrimeGradeFn = std::function<GradeResult(const MonomialPrime&, const Subquotient&)>;

/// Minimum of grade(p, M) over the minimal monomial W-primes (grade is
/// monotone in the ideal, so the minimal ones suffice). Infinite for M = 0 or
/// an empty W-set.
DepthReport pair_depth(const PairContext& ctx, const Field& field, int cap = kDefaultEnumerationCap);
DepthReport pair_depth(const PairContext& ctx, const PrimeGradeFn& grade_fn, int cap = kDefaultEnumerationCap);

/// Minimum of depth M_p over every monomial W-prime, each computed after
/// localizing by coordinate deletion. Must agree with pair_depth.
ExtendedDepth pair_depth_localized(const PairContext& ctx, const Field& field,
                                   int cap = kDefaultEnumerationCap);

/// dim M/JM, with M/JM = A/(B + J·A).
int dim_mod_ideal(const Subquotient& module, const MonomialIdeal& J);

/// M = 0, or depth(I,J,M) = dim M/JM. A non-proper J yields false plus a diagnostic.
DepthReport is_pair_cm(const PairContext& ctx, const Field& field);

/// Supp(M) ⊆ W(I,J), checked on the minimal primes of ann M.
bool is_ij_torsion(const PairContext& ctx);

/// M/JM has dimension at most 0 (the zero module counts as artinian).
bool artinian_conclusion(const PairContext& ctx);

struct ExtEquivalence {
    ExtendedDepth t;
    ExtendedDepth grade_a;
    bool ext_nonzero_at_t = false;
    bool holds = false;
};

/// For a ∈ W̃(I,J) with aM ≠ M: grade(a,M) = t exactly when Ext^t(R/a, M) ≠ 0,
/// where t = depth(I,J,M). Throws DomainError when the preconditions fail.
ExtEquivalence ext_depth_equivalence(const PairContext& ctx, const MonomialIdeal& a, const Field& field);

}  // namespace pairdepth

#endif  // PAIRDEPTH_PAIR_DEPTH_HPP
