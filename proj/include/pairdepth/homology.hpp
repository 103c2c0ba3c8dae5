#ifndef PAIRDEPTH_HOMOLOGY_HPP
#define PAIRDEPTH_HOMOLOGY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pairdepth/core.hpp"
#include "pairdepth/decomp.hpp"
#include "pairdepth/linalg.hpp"

namespace pairdepth {

// Degree convention
// -----------------
// Every complex here is Hom(F, M) for a free complex F = ⊕ R(-s) built on
// monomial generators, so position i is cohomological. A summand with shift s
// contributes M_{b+s} to the strand at multidegree b. For the Koszul template
// position i corresponds to Koszul homology H_{r-i} (self-duality), which makes
// grade the least nonvanishing position. For the Taylor template position i is
// Ext^i(R/a, M).

enum class ShiftRule {
    Sum,  // Koszul: shift of a subset is the sum of its generator degrees
    Lcm,  // Taylor: shift of a subset is the lcm of its generator degrees
};

struct Summand {
    ExponentVector shift;
    std::uint64_t label = 0;  // subset of generator indices
};

/// δ(e_from) contributes sign · x^monomial · e_to.
struct TemplateEntry {
    std::size_t from = 0;
    std::size_t to = 0;
    int sign = 1;
    ExponentVector monomial;
};

/// Signed monomial-matrix complex indexed by subsets of a generator list.
class ComplexTemplate {
public:
    static ComplexTemplate koszul(int nvars, std::vector<ExponentVector> gens);
    static ComplexTemplate koszul(const MonomialIdeal& ideal) { return koszul(ideal.nvars(), ideal.gens()); }
    static ComplexTemplate taylor(const MonomialIdeal& ideal);

    int nvars() const { return nvars_; }
    /// Number of generators; positions run 0..length().
    int length() const { return static_cast<int>(gens_.size()); }
    ShiftRule rule() const { return rule_; }
    const std::vector<ExponentVector>& generators() const { return gens_; }
    const std::vector<Summand>& summands(int pos) const { return summands_.at(static_cast<std::size_t>(pos)); }
    /// Map from position pos to pos + 1.
    const std::vector<TemplateEntry>& differential(int pos) const {
        return entries_.at(static_cast<std::size_t>(pos));
    }
    /// Coordinate-wise maximum over all summand shifts.
    const ExponentVector& max_shift() const { return max_shift_; }

    /// Formal check that consecutive signed monomial matrices compose to zero.
    bool composes_to_zero() const;

private:
    ComplexTemplate(int nvars, std::vector<ExponentVector> gens, ShiftRule rule);

    int nvars_ = 0;
    ShiftRule rule_ = ShiftRule::Sum;
    std::vector<ExponentVector> gens_;
    std::vector<std::vector<Summand>> summands_;
    std::vector<std::vector<TemplateEntry>> entries_;
    ExponentVector max_shift_;
};

inline constexpr int kMaxTemplateGenerators = 20;

/// Finite window [-L_i, E_i] of multidegrees. Above E_i every divisibility test
/// has saturated, so clamping down changes nothing; below -L_i the strand is zero.
class DegreeBox {
public:
    DegreeBox(const ComplexTemplate& tpl, const Subquotient& module);

    const std::vector<int>& lower() const { return lower_; }
    const std::vector<int>& upper() const { return upper_; }
    std::size_t size() const { return size_; }
    /// Mixed-radix decoding, first coordinate most significant (lex order).
    ExponentVector at(std::size_t linear) const;
    bool contains(const ExponentVector& b) const;
    /// Some coordinate lies below the window: the strand there is zero.
    bool below(const ExponentVector& b) const;
    /// Pulls coordinates above the window down to its upper face.
    ExponentVector clamp(const ExponentVector& b) const;

private:
    std::vector<int> lower_;
    std::vector<int> upper_;
    std::size_t size_ = 1;
};

/// One multidegree of Hom(F, M): field vector spaces with 0/±1 differentials.
struct StrandComplex {
    /// Per position, the template summand indices whose monomial survives in M.
    std::vector<std::vector<std::size_t>> basis;
    /// differentials[i] : C^i -> C^{i+1}, stored with dim C^{i+1} rows.
    std::vector<IntMatrix> differentials;

    std::vector<std::size_t> dims() const;
    bool is_zero() const;
    bool composes_to_zero() const;
};

StrandComplex strand(const ComplexTemplate& tpl, const Subquotient& module, const ExponentVector& degree);

/// dim H^i = dim C^i - rank δ^i - rank δ^{i-1}
std::vector<std::size_t> homology_dims(const StrandComplex& complex, const Field& field);

/// Positions with nonzero cohomology somewhere in the box, with the lex-least
/// witnessing multidegree for each.
struct NonvanishingProfile {
    std::vector<bool> nonzero;
    std::vector<std::optional<ExponentVector>> witness;

    std::vector<int> positions() const;
    /// For Koszul templates: the Koszul homology indices r - i.
    std::vector<int> homological_positions() const;
    std::optional<int> first() const;

    friend bool operator==(const NonvanishingProfile&, const NonvanishingProfile&) = default;
};

/// OpenMP box scan.
NonvanishingProfile nonvanishing_profile(const ComplexTemplate& tpl, const Subquotient& module,
                                         const Field& field);

/// Serial reference scan: builds every strand with `strand` and `homology_dims`.
NonvanishingProfile nonvanishing_profile_serial(const ComplexTemplate& tpl, const Subquotient& module,
                                                const Field& field);

struct GradeResult {
    ExtendedDepth value = ExtendedDepth::infinity();
    std::optional<ExponentVector> witness_degree;
    std::string warning;
};

/// Koszul codepth: least i with H^i(Hom(K(gens a), M)) != 0.
GradeResult grade(const MonomialIdeal& ideal, const Subquotient& module, const Field& field);

/// Least i with Ext^i(R/a, M) != 0, through the Taylor resolution.
GradeResult grade_via_ext(const MonomialIdeal& ideal, const Subquotient& module, const Field& field);

NonvanishingProfile ext_profile(const MonomialIdeal& ideal, const Subquotient& module, const Field& field);
bool ext_nonvanishing(const MonomialIdeal& ideal, const Subquotient& module, int i, const Field& field);

/// depth M_p through coordinate deletion onto k[x_S]; infinite off the support.
/// The witness degree is expressed in the |S| surviving coordinates.
GradeResult depth_at_prime(const MonomialPrime& prime, const Subquotient& module, const Field& field);

}  // namespace pairdepth

#endif  // PAIRDEPTH_HOMOLOGY_HPP
