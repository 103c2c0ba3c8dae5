#include "pairdepth/core.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

namespace pairdepth {

namespace {

int checked_add(int a, int b) {
    int out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw DomainError("exponent overflow");
    }
    return out;
}

void check_shape(int nvars, const ExponentVector& e) {
    if (static_cast<int>(e.size()) != nvars) {
        throw InputError("exponent vector has length " + std::to_string(e.size()) +
                         ", ring has " + std::to_string(nvars) + " variables");
    }
}

void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars() != b.nvars()) {
        throw InputError("ideals live in rings with different variable counts");
    }
}

std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

int total_degree(const ExponentVector& e) {
    int d = 0;
    for (int x : e) d = checked_add(d, x);
    return d;
}

bool divides(const ExponentVector& d, const ExponentVector& m) {
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] > m[i]) return false;
    }
    return true;
}

ExponentVector monomial_product(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
    return out;
}

ExponentVector monomial_lcm(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

bool is_nonnegative(const ExponentVector& e) {
    return std::all_of(e.begin(), e.end(), [](int x) { return x >= 0; });
}

// ---------------------------------------------------------------- VarSet

VarSet VarSet::all(int nvars) {
    if (nvars >= 64) return VarSet(~std::uint64_t{0});
    return VarSet((std::uint64_t{1} << nvars) - 1);
}

int VarSet::size() const { return std::popcount(bits_); }

std::vector<int> VarSet::indices() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
        out.push_back(std::countr_zero(b));
    }
    return out;
}

bool var_set_lex_less(VarSet a, VarSet b) {
    const auto ia = a.indices();
    const auto ib = b.indices();
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

VarSet support(const ExponentVector& e) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] > 0) bits |= std::uint64_t{1} << i;
    }
    return VarSet(bits);
}

// ---------------------------------------------------------------- Field

bool is_prime_number(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime_number(p)) {
        throw InputError("field characteristic " + std::to_string(p) + " is not prime");
    }
    if (p >= (std::uint64_t{1} << 31)) {
        throw InputError("prime fields are limited to p < 2^31");
    }
    Field f;
    f.characteristic_ = p;
    return f;
}

std::string Field::to_string() const {
    return is_rational() ? "Q" : "F" + std::to_string(characteristic_);
}

// ---------------------------------------------------------------- MonomialIdeal

MonomialIdeal minimalize(int nvars, std::vector<ExponentVector> gens) {
    return MonomialIdeal(nvars, std::move(gens));
}

MonomialIdeal::MonomialIdeal(int nvars, std::vector<ExponentVector> gens) : nvars_(nvars) {
    if (nvars < 0 || nvars > kMaxVariables) {
        throw InputError("variable count out of range");
    }
    for (const auto& g : gens) {
        check_shape(nvars, g);
        if (!is_nonnegative(g)) throw InputError("negative exponent in monomial generator");
    }
    std::sort(gens.begin(), gens.end(), [](const ExponentVector& a, const ExponentVector& b) {
        const int da = total_degree(a);
        const int db = total_degree(b);
        return da != db ? da < db : a < b;
    });
    for (auto& g : gens) {
        const bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                           [&](const ExponentVector& k) { return divides(k, g); });
        if (!redundant) gens_.push_back(std::move(g));
    }
    std::sort(gens_.begin(), gens_.end());
}

MonomialIdeal MonomialIdeal::zero(int nvars) { return MonomialIdeal(nvars, {}); }

MonomialIdeal MonomialIdeal::unit(int nvars) {
    return MonomialIdeal(nvars, {ExponentVector(static_cast<std::size_t>(nvars), 0)});
}

MonomialIdeal MonomialIdeal::principal(const ExponentVector& m) {
    return MonomialIdeal(static_cast<int>(m.size()), {m});
}

MonomialIdeal MonomialIdeal::prime(int nvars, VarSet vars) {
    std::vector<ExponentVector> gens;
    for (int i : vars.indices()) {
        if (i >= nvars) throw InputError("prime uses a variable outside the ring");
        ExponentVector e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i)] = 1;
        gens.push_back(std::move(e));
    }
    return MonomialIdeal(nvars, std::move(gens));
}

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 && total_degree(gens_.front()) == 0;
}

bool MonomialIdeal::contains(const ExponentVector& m) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const ExponentVector& g) { return divides(g, m); });
}

int MonomialIdeal::max_exponent(int var) const {
    int out = 0;
    for (const auto& g : gens_) out = std::max(out, g[static_cast<std::size_t>(var)]);
    return out;
}

std::size_t MonomialIdealHash::operator()(const MonomialIdeal& ideal) const noexcept {
    std::size_t h = std::hash<int>{}(ideal.nvars());
    for (const auto& g : ideal.gens()) {
        for (int x : g) h = hash_combine(h, std::hash<int>{}(x));
        h = hash_combine(h, 0x51ed27U);
    }
    return h;
}

bool member(const ExponentVector& m, const MonomialIdeal& ideal) { return ideal.contains(m); }

bool is_subideal(const MonomialIdeal& inner, const MonomialIdeal& outer) {
    check_same_ring(inner, outer);
    return std::all_of(inner.gens().begin(), inner.gens().end(),
                       [&](const ExponentVector& g) { return outer.contains(g); });
}

MonomialIdeal ideal_sum(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
    check_same_ring(lhs, rhs);
    std::vector<ExponentVector> gens = lhs.gens();
    gens.insert(gens.end(), rhs.gens().begin(), rhs.gens().end());
    return MonomialIdeal(lhs.nvars(), std::move(gens));
}

MonomialIdeal ideal_product(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
    check_same_ring(lhs, rhs);
    std::vector<ExponentVector> gens;
    gens.reserve(lhs.size() * rhs.size());
    for (const auto& a : lhs.gens()) {
        for (const auto& b : rhs.gens()) gens.push_back(monomial_product(a, b));
    }
    return MonomialIdeal(lhs.nvars(), std::move(gens));
}

MonomialIdeal ideal_power(const MonomialIdeal& ideal, int k) {
    if (k < 0) throw InputError("negative ideal power");
    MonomialIdeal out = MonomialIdeal::unit(ideal.nvars());
    for (int i = 0; i < k; ++i) out = ideal_product(out, ideal);
    return out;
}

MonomialIdeal ideal_intersect(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
    check_same_ring(lhs, rhs);
    std::vector<ExponentVector> gens;
    gens.reserve(lhs.size() * rhs.size());
    for (const auto& a : lhs.gens()) {
        for (const auto& b : rhs.gens()) gens.push_back(monomial_lcm(a, b));
    }
    return MonomialIdeal(lhs.nvars(), std::move(gens));
}

MonomialIdeal ideal_colon(const MonomialIdeal& ideal, const ExponentVector& m) {
    check_shape(ideal.nvars(), m);
    if (!is_nonnegative(m)) throw InputError("negative exponent in colon monomial");
    std::vector<ExponentVector> gens;
    gens.reserve(ideal.size());
    for (const auto& g : ideal.gens()) {
        ExponentVector q(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) q[i] = std::max(0, g[i] - m[i]);
        gens.push_back(std::move(q));
    }
    return MonomialIdeal(ideal.nvars(), std::move(gens));
}

MonomialIdeal ideal_colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
    check_same_ring(ideal, by);
    MonomialIdeal out = MonomialIdeal::unit(ideal.nvars());
    for (const auto& g : by.gens()) out = ideal_intersect(out, ideal_colon(ideal, g));
    return out;
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
    std::vector<ExponentVector> gens;
    gens.reserve(ideal.size());
    for (const auto& g : ideal.gens()) {
        ExponentVector s(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) s[i] = g[i] > 0 ? 1 : 0;
        gens.push_back(std::move(s));
    }
    return MonomialIdeal(ideal.nvars(), std::move(gens));
}

bool radical_member(const ExponentVector& m, const MonomialIdeal& ideal) {
    check_shape(ideal.nvars(), m);
    const VarSet sm = support(m);
    return std::any_of(ideal.gens().begin(), ideal.gens().end(),
                       [&](const ExponentVector& g) { return support(g).subset_of(sm); });
}

bool same_radical(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
    return radical(lhs) == radical(rhs);
}

ExponentVector restrict(const ExponentVector& e, VarSet keep) {
    ExponentVector out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (keep.contains(static_cast<int>(i))) out.push_back(e[i]);
    }
    return out;
}

MonomialIdeal restrict(const MonomialIdeal& ideal, VarSet keep) {
    if (!keep.subset_of(VarSet::all(ideal.nvars()))) {
        throw InputError("restriction set names a variable outside the ring");
    }
    std::vector<ExponentVector> gens;
    gens.reserve(ideal.size());
    for (const auto& g : ideal.gens()) gens.push_back(restrict(g, keep));
    return MonomialIdeal(keep.size(), std::move(gens));
}

// ---------------------------------------------------------------- Subquotient

Subquotient::Subquotient(MonomialIdeal numerator, MonomialIdeal denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
    if (numerator_.nvars() != denominator_.nvars()) {
        throw InputError("module numerator and denominator live in different rings");
    }
    if (!is_subideal(denominator_, numerator_)) {
        throw InputError("module denominator is not contained in its numerator");
    }
}

Subquotient Subquotient::quotient_ring(MonomialIdeal relations) {
    const int n = relations.nvars();
    return Subquotient(MonomialIdeal::unit(n), std::move(relations));
}

bool Subquotient::is_zero() const { return is_subideal(numerator_, denominator_); }

bool Subquotient::has_basis_monomial(const ExponentVector& m) const {
    return is_nonnegative(m) && numerator_.contains(m) && !denominator_.contains(m);
}

std::size_t SubquotientHash::operator()(const Subquotient& module) const noexcept {
    MonomialIdealHash h;
    return hash_combine(h(module.numerator()), h(module.denominator()));
}

Subquotient module_mod_ideal(const Subquotient& module, const MonomialIdeal& ideal) {
    return Subquotient(module.numerator(),
                       ideal_sum(module.denominator(), ideal_product(ideal, module.numerator())));
}

Subquotient restrict(const Subquotient& module, VarSet keep) {
    return Subquotient(restrict(module.numerator(), keep), restrict(module.denominator(), keep));
}

// ---------------------------------------------------------------- ExtendedDepth

int ExtendedDepth::value() const {
    if (infinite_) throw DomainError("depth is infinite");
    return value_;
}

ExtendedDepth ExtendedDepth::shifted(int delta) const {
    if (infinite_) return *this;
    return ExtendedDepth(value_ + delta);
}

std::string ExtendedDepth::to_string() const {
    return infinite_ ? "inf" : std::to_string(value_);
}

std::ostream& operator<<(std::ostream& os, const ExtendedDepth& d) { return os << d.to_string(); }

// ---------------------------------------------------------------- RingContext

RingContext::RingContext(std::vector<std::string> var_names, Field field)
    : names_(std::move(var_names)), field_(field) {
    if (names_.empty()) throw InputError("a ring needs at least one variable");
    if (static_cast<int>(names_.size()) > kMaxVariables) {
        throw InputError("at most 64 variables are supported");
    }
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InputError("variable names must be distinct");
    }
}

RingContext RingContext::standard(int nvars, Field field) {
    static const char* kShort[] = {"x", "y", "z", "w"};
    std::vector<std::string> names;
    for (int i = 0; i < nvars; ++i) {
        names.push_back(nvars <= 4 ? std::string(kShort[i]) : "x" + std::to_string(i + 1));
    }
    return RingContext(std::move(names), field);
}

std::string RingContext::to_string() const {
    std::string out = field_.to_string() + "[";
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (i > 0) out += ",";
        out += names_[i];
    }
    return out + "]";
}

std::string RingContext::format_monomial(const ExponentVector& m) const {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names_.at(i);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string RingContext::format_ideal(const MonomialIdeal& ideal) const {
    if (ideal.is_zero()) return "(0)";
    std::string out = "(";
    // Descending lex, so x-heavy generators come first.
    const auto& gens = ideal.gens();
    for (std::size_t i = gens.size(); i-- > 0;) {
        if (i + 1 < gens.size()) out += ", ";
        out += format_monomial(gens[i]);
    }
    return out + ")";
}

std::string RingContext::format_module(const Subquotient& module) const {
    return format_ideal(module.numerator()) + "/" + format_ideal(module.denominator());
}

std::vector<std::string> RingContext::var_list(VarSet vars) const {
    std::vector<std::string> out;
    for (int i : vars.indices()) out.push_back(names_.at(static_cast<std::size_t>(i)));
    return out;
}

std::string RingContext::format_var_set(VarSet vars) const {
    if (vars.empty()) return "(0)";
    std::string out = "(";
    const auto names = var_list(vars);
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i > 0) out += ",";
        out += names[i];
    }
    return out + ")";
}

}  // namespace pairdepth
