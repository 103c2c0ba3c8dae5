#ifndef PAIRDEPTH_CORE_HPP
#define PAIRDEPTH_CORE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pairdepth {

/// Malformed input: bad syntax, negative exponents, mismatched rings.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A well-formed request that has no answer (undefined operation, cap exceeded).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline constexpr int kMaxVariables = 64;

/// Dimension of the zero module. Every comparison `dim > k` with k >= -1 is
/// false for it, which is all the k-regular machinery needs.
inline constexpr int kZeroModuleDim = -1;

using ExponentVector = std::vector<int>;

int total_degree(const ExponentVector& e);
bool divides(const ExponentVector& d, const ExponentVector& m);
ExponentVector monomial_product(const ExponentVector& a, const ExponentVector& b);
ExponentVector monomial_lcm(const ExponentVector& a, const ExponentVector& b);
bool is_nonnegative(const ExponentVector& e);

/// Subset of variable indices, stored as a bit mask.
class VarSet {
public:
    constexpr VarSet() = default;
    explicit constexpr VarSet(std::uint64_t bits) : bits_(bits) {}

    static VarSet all(int nvars);
    static VarSet single(int var) { return VarSet(std::uint64_t{1} << var); }

    bool contains(int var) const { return (bits_ >> var) & 1U; }
    bool empty() const { return bits_ == 0; }
    int size() const;
    bool subset_of(VarSet other) const { return (bits_ & ~other.bits_) == 0; }
    bool intersects(VarSet other) const { return (bits_ & other.bits_) != 0; }
    std::uint64_t bits() const { return bits_; }
    std::vector<int> indices() const;

    VarSet with(int var) const { return VarSet(bits_ | (std::uint64_t{1} << var)); }
    VarSet without(int var) const { return VarSet(bits_ & ~(std::uint64_t{1} << var)); }

    friend bool operator==(VarSet, VarSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic on the sorted index lists: (x) < (x,y) < (y).
bool var_set_lex_less(VarSet a, VarSet b);

VarSet support(const ExponentVector& e);

/// Coefficient field: rationals or a prime field.
class Field {
public:
    Field() = default;
    static Field rationals() { return Field(); }
    static Field prime(std::uint64_t p);

    bool is_rational() const { return characteristic_ == 0; }
    std::uint64_t characteristic() const { return characteristic_; }
    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    std::uint64_t characteristic_ = 0;
};

bool is_prime_number(std::uint64_t p);

/// Monomial ideal held as its minimal generating set, sorted lexicographically.
/// The zero ideal has no generators; the unit ideal is generated by the zero vector.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    /// Minimalizes `gens`. Throws InputError on negative exponents or wrong length.
    MonomialIdeal(int nvars, std::vector<ExponentVector> gens);

    static MonomialIdeal zero(int nvars);
    static MonomialIdeal unit(int nvars);
    static MonomialIdeal principal(const ExponentVector& m);
    /// (x_i : i in vars)
    static MonomialIdeal prime(int nvars, VarSet vars);

    int nvars() const { return nvars_; }
    const std::vector<ExponentVector>& gens() const { return gens_; }
    std::size_t size() const { return gens_.size(); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;
    bool is_proper() const { return !is_unit(); }
    bool contains(const ExponentVector& m) const;
    int max_exponent(int var) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
    friend auto operator<=>(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    int nvars_ = 0;
    std::vector<ExponentVector> gens_;
};

struct MonomialIdealHash {
    std::size_t operator()(const MonomialIdeal& ideal) const noexcept;
};

MonomialIdeal minimalize(int nvars, std::vector<ExponentVector> gens);
bool member(const ExponentVector& m, const MonomialIdeal& ideal);
/// inner ⊆ outer
bool is_subideal(const MonomialIdeal& inner, const MonomialIdeal& outer);

MonomialIdeal ideal_sum(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
MonomialIdeal ideal_product(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
/// k == 0 gives the unit ideal.
MonomialIdeal ideal_power(const MonomialIdeal& ideal, int k);
MonomialIdeal ideal_intersect(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
MonomialIdeal ideal_colon(const MonomialIdeal& ideal, const ExponentVector& m);
MonomialIdeal ideal_colon(const MonomialIdeal& ideal, const MonomialIdeal& by);
MonomialIdeal radical(const MonomialIdeal& ideal);
bool radical_member(const ExponentVector& m, const MonomialIdeal& ideal);
bool same_radical(const MonomialIdeal& lhs, const MonomialIdeal& rhs);

/// Sets the variables outside `keep` to 1; the result lives in |keep| variables,
/// ordered by original index.
MonomialIdeal restrict(const MonomialIdeal& ideal, VarSet keep);
ExponentVector restrict(const ExponentVector& e, VarSet keep);

/// The module A/B for monomial ideals B ⊆ A.
class Subquotient {
public:
    Subquotient() = default;
    Subquotient(MonomialIdeal numerator, MonomialIdeal denominator);

    /// R/K
    static Subquotient quotient_ring(MonomialIdeal relations);

    const MonomialIdeal& numerator() const { return numerator_; }
    const MonomialIdeal& denominator() const { return denominator_; }
    int nvars() const { return numerator_.nvars(); }
    bool is_zero() const;
    /// x^m represents a nonzero element of A/B.
    bool has_basis_monomial(const ExponentVector& m) const;

    friend bool operator==(const Subquotient&, const Subquotient&) = default;
    friend auto operator<=>(const Subquotient&, const Subquotient&) = default;

private:
    MonomialIdeal numerator_;
    MonomialIdeal denominator_;
};

struct SubquotientHash {
    std::size_t operator()(const Subquotient& module) const noexcept;
};

/// M / J·M = A / (B + J·A)
Subquotient module_mod_ideal(const Subquotient& module, const MonomialIdeal& ideal);
Subquotient restrict(const Subquotient& module, VarSet keep);

/// A natural number or +infinity.
class ExtendedDepth {
public:
    constexpr ExtendedDepth() = default;
    constexpr ExtendedDepth(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    static constexpr ExtendedDepth infinity() {
        ExtendedDepth d;
        d.infinite_ = true;
        return d;
    }

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }
    /// Throws DomainError when infinite.
    int value() const;
    /// Saturating shift; infinity absorbs.
    ExtendedDepth shifted(int delta) const;
    std::string to_string() const;

    friend bool operator==(const ExtendedDepth& a, const ExtendedDepth& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const ExtendedDepth& a, const ExtendedDepth& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }

private:
    int value_ = 0;
    bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const ExtendedDepth& d);

/// Variable names plus coefficient field.
class RingContext {
public:
    RingContext() = default;
    RingContext(std::vector<std::string> var_names, Field field);
    /// x, y, z, w for n <= 4, else x1..xn.
    static RingContext standard(int nvars, Field field = Field::rationals());

    int nvars() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& var_names() const { return names_; }
    const Field& field() const { return field_; }
    void set_field(Field field) { field_ = field; }

    std::string to_string() const;  // Q[x,y]
    std::string format_monomial(const ExponentVector& m) const;
    std::string format_ideal(const MonomialIdeal& ideal) const;
    std::string format_module(const Subquotient& module) const;
    std::string format_var_set(VarSet vars) const;  // (x,y) or (0)
    std::vector<std::string> var_list(VarSet vars) const;

    friend bool operator==(const RingContext&, const RingContext&) = default;

private:
    std::vector<std::string> names_;
    Field field_;
};

}  // namespace pairdepth

#endif  // PAIRDEPTH_CORE_HPP
