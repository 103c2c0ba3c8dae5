#ifndef PAIRDEPTH_CENSUS_HPP
#define PAIRDEPTH_CENSUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pairdepth/core.hpp"
#include "pairdepth/sequences.hpp"

namespace pairdepth {

/// Bounds for enumerating small monomial data.
struct CensusSpec {
    int n = 2;
    int max_exponent = 2;
    int max_generators = 4;
    bool include_subquotients = false;
    std::uint64_t seed = 42;
    /// 0 runs every law exhaustively; otherwise each law draws this many instances.
    std::size_t samples = 0;
    /// Per-law evaluation budget; exceeding it truncates and flags the run incomplete.
    std::size_t max_evaluations = 20'000'000;
    /// Draws for the (I, J, M, sequence, k) laws, which are always sampled.
    std::size_t sequence_samples = 4000;
    /// Longest sequence in the module-sequence pool.
    int max_sequence_length = 2;

    void validate() const;
};

/// Every monomial ideal whose minimal generators have exponents ≤ max_exponent
/// and number at most max_generators, including (0) and (1). Canonical order.
std::vector<MonomialIdeal> enumerate_ideals(int n, int max_exponent, int max_generators);

/// Same set via minimalizing every subset of the exponent grid. Refuses grids
/// with more than 20 points.
std::vector<MonomialIdeal> enumerate_ideals_brute_force(int n, int max_exponent, int max_generators);

/// R/K for every K, then (if requested) A/B for B ⊊ A with A proper and nonzero.
/// Large ideal lists get a seeded sample of subquotients instead of all pairs.
std::vector<Subquotient> enumerate_modules(const std::vector<MonomialIdeal>& ideals, bool include_subquotients,
                                           std::uint64_t seed = 0);

/// Nonconstant monomials with exponents ≤ max_exponent, degree ascending.
std::vector<ExponentVector> grid_monomials(int n, int max_exponent);

/// All sequences of length 1..max_length over grid_monomials.
std::vector<MonomialSequence> enumerate_sequences(int n, int max_exponent, int max_length);

/// Core operations checked by the grid oracle.
enum class GridOp { Sum, Product, Power, Intersect, ColonMonomial, ColonIdeal, Radical };

std::string to_string(GridOp op);
const std::vector<GridOp>& all_grid_ops();

struct GridCase {
    GridOp op = GridOp::Sum;
    MonomialIdeal lhs;
    MonomialIdeal rhs;        // second ideal for binary ops
    ExponentVector monomial;  // colon by a monomial
    int power = 0;
};

struct GridResult {
    std::size_t points = 0;
    std::size_t disagreements = 0;
    std::optional<ExponentVector> first_disagreement;
};

/// Compares membership in the computed ideal with the defining set
/// comprehension at every monomial with exponents ≤ cap.
GridResult grid_oracle(const GridCase& input, int cap);

struct GridSummary {
    std::size_t cases = 0;
    std::size_t points = 0;
    std::size_t disagreements = 0;
    std::vector<std::string> failures;
};

/// All ops over all pairs of census ideals, powers 0..3 and every grid monomial.
GridSummary grid_census(int n, int max_exponent, int cap);

}  // namespace pairdepth

#endif  // PAIRDEPTH_CENSUS_HPP
