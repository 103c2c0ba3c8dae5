#ifndef PAIRDEPTH_DECOMP_HPP
#define PAIRDEPTH_DECOMP_HPP

#include <optional>
#include <vector>

#include "pairdepth/core.hpp"

namespace pairdepth {

/// p_S = (x_i : i in S). The empty set is the zero prime.
class MonomialPrime {
public:
    MonomialPrime() = default;
    MonomialPrime(int nvars, VarSet vars);

    static MonomialPrime maximal(int nvars) { return MonomialPrime(nvars, VarSet::all(nvars)); }

    int nvars() const { return nvars_; }
    VarSet vars() const { return vars_; }
    int height() const { return vars_.size(); }
    /// dim R/p_S = n - |S|
    int coheight() const { return nvars_ - vars_.size(); }
    MonomialIdeal ideal() const { return MonomialIdeal::prime(nvars_, vars_); }
    /// A monomial lies in p_S iff its support meets S.
    bool contains(const ExponentVector& m) const { return support(m).intersects(vars_); }
    bool contains(const MonomialIdeal& ideal) const;

    friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;

private:
    int nvars_ = 0;
    VarSet vars_;
};

/// Canonical prime order: lexicographic on variable index lists.
bool operator<(const MonomialPrime& a, const MonomialPrime& b);

/// Returns the prime when `ideal` is generated by variables (the zero ideal
/// counts as the zero prime); otherwise an empty optional.
std::optional<MonomialPrime> as_monomial_prime(const MonomialIdeal& ideal);

/// (x_i^{e_i} : e_i > 0). Stored as a dense exponent vector with 0 meaning absent.
class IrreducibleComponent {
public:
    explicit IrreducibleComponent(ExponentVector powers) : powers_(std::move(powers)) {}

    const ExponentVector& powers() const { return powers_; }
    MonomialIdeal ideal() const;
    MonomialPrime radical_prime() const;

    friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
    friend auto operator<=>(const IrreducibleComponent&, const IrreducibleComponent&) = default;

private:
    ExponentVector powers_;
};

/// Irredundant irreducible decomposition of a proper nonzero ideal, sorted.
/// Throws DomainError on the zero or unit ideal.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal);

/// Minimal primes in canonical order. Zero ideal: {(0)}. Unit ideal: {}.
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal);

/// Minimal |S| over minimal primes. Throws DomainError on the unit ideal.
int height(const MonomialIdeal& ideal);

/// dim R/I; kZeroModuleDim for the unit ideal.
int krull_dim_quotient(const MonomialIdeal& ideal);

/// (B : A); the unit ideal iff M = 0.
MonomialIdeal annihilator(const Subquotient& module);

/// Ass(A/B) in canonical order; empty for M = 0.
std::vector<MonomialPrime> associated_primes(const Subquotient& module);

int dim_module(const Subquotient& module);
bool support_contains(const MonomialPrime& prime, const Subquotient& module);

}  // namespace pairdepth

#endif  // PAIRDEPTH_DECOMP_HPP
