#ifndef PAIRDEPTH_SEQUENCES_HPP
#define PAIRDEPTH_SEQUENCES_HPP

#include <optional>
#include <string>
#include <vector>

#include "pairdepth/engine.hpp"

namespace pairdepth {

using MonomialSequence = std::vector<ExponentVector>;

/// Colon test: (B : m) ∩ A ⊆ B. The zero module is vacuously regular.
bool is_regular_element(const ExponentVector& m, const Subquotient& module);
/// Same answer via avoidance of every associated prime.
bool is_regular_element_via_ass(const ExponentVector& m, const Subquotient& module);

struct RegularityReport {
    bool verdict = true;
    std::optional<std::size_t> failing_index;
    std::optional<MonomialPrime> blocking_prime;
    int k = -1;
    /// dim of M/(a)M, filled by the k-regular check.
    std::optional<int> quotient_dim;
};

/// a_i avoids every p ∈ Ass(M/(a_1..a_{i-1})M) with dim R/p > k.
RegularityReport is_poor_k_regular(const MonomialSequence& seq, const Subquotient& module, int k,
                                   DepthEngine& engine);
RegularityReport is_poor_k_regular(const MonomialSequence& seq, const Subquotient& module, int k);

/// Poor k-regular and dim M/(a)M > k.
RegularityReport is_k_regular(const MonomialSequence& seq, const Subquotient& module, int k, DepthEngine& engine);
RegularityReport is_k_regular(const MonomialSequence& seq, const Subquotient& module, int k);

struct GreedyResult {
    bool success = false;
    MonomialSequence sequence;
    /// On failure: associated primes of the current quotient covering every
    /// monomial of the ideal.
    std::vector<MonomialPrime> cover;
    std::size_t failed_step = 0;
    std::string reason;
};

/// Picks, step by step, the first monomial of `a` (degree ascending, then x
/// before y) that is regular on the current quotient. Candidates go up to
/// degree 1 + the largest generator degree of a.
GreedyResult greedy_regular_sequence(const MonomialIdeal& a, const Subquotient& module, int target_len,
                                     DepthEngine& engine);
GreedyResult greedy_regular_sequence(const MonomialIdeal& a, const Subquotient& module, int target_len,
                                     const Field& field = Field::rationals());

struct KRegularReductionReport {
    RegularityReport regularity;
    /// Monomial primes with dim R/p ≤ k in Supp(M) ∩ W((a),J) but outside W(I,J).
    std::vector<MonomialPrime> hypothesis_violations;
    bool hypothesis_holds = false;
    ExtendedDepth depth_I;
    ExtendedDepth depth_a;
    int length = 0;
    bool consequence_holds = false;
    /// Only monomial primes are inspected.
    std::string status = "monomial-verified";
};

/// k-regular sequence in I: checks the hypothesis and compares
/// min(depth(I,J,M), len) with min(depth((a),J,M), len).
/// Throws InputError when an element lies outside I or the sequence is empty.
KRegularReductionReport k_regular_reduction_check(const MonomialSequence& seq, const MonomialIdeal& I,
                                                  const MonomialIdeal& J, const Subquotient& module, int k,
                                                  DepthEngine& engine);
KRegularReductionReport k_regular_reduction_check(const MonomialSequence& seq, const MonomialIdeal& I,
                                                  const MonomialIdeal& J, const Subquotient& module, int k,
                                                  const Field& field = Field::rationals());

MonomialIdeal sequence_ideal(int nvars, const MonomialSequence& seq);

}  // namespace pairdepth

#endif  // PAIRDEPTH_SEQUENCES_HPP
