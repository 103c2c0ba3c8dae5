#include "pairdepth/decomp.hpp"

#include <algorithm>
#include <set>

namespace pairdepth {

MonomialPrime::MonomialPrime(int nvars, VarSet vars) : nvars_(nvars), vars_(vars) {
    if (!vars.subset_of(VarSet::all(nvars))) {
        throw InputError("prime uses a variable outside the ring");
    }
}

bool MonomialPrime::contains(const MonomialIdeal& ideal) const {
    return std::all_of(ideal.gens().begin(), ideal.gens().end(),
                       [&](const ExponentVector& g) { return contains(g); });
}

bool operator<(const MonomialPrime& a, const MonomialPrime& b) {
    return var_set_lex_less(a.vars(), b.vars());
}

std::optional<MonomialPrime> as_monomial_prime(const MonomialIdeal& ideal) {
    VarSet vars;
    for (const auto& g : ideal.gens()) {
        if (total_degree(g) != 1) return std::nullopt;
        vars = VarSet(vars.bits() | support(g).bits());
    }
    return MonomialPrime(ideal.nvars(), vars);
}

MonomialIdeal IrreducibleComponent::ideal() const {
    const int n = static_cast<int>(powers_.size());
    std::vector<ExponentVector> gens;
    for (int i = 0; i < n; ++i) {
        if (powers_[static_cast<std::size_t>(i)] == 0) continue;
        ExponentVector e(powers_.size(), 0);
        e[static_cast<std::size_t>(i)] = powers_[static_cast<std::size_t>(i)];
        gens.push_back(std::move(e));
    }
    return MonomialIdeal(n, std::move(gens));
}

MonomialPrime IrreducibleComponent::radical_prime() const {
    return MonomialPrime(static_cast<int>(powers_.size()), support(powers_));
}

namespace {

bool is_pure_power(const ExponentVector& e) { return support(e).size() == 1; }

void split(const MonomialIdeal& ideal, std::vector<IrreducibleComponent>& out) {
    // First generator in lex order that is not a pure power.
    const auto& gens = ideal.gens();
    auto it = std::find_if(gens.begin(), gens.end(),
                           [](const ExponentVector& g) { return !is_pure_power(g); });
    if (it == gens.end()) {
        ExponentVector powers(static_cast<std::size_t>(ideal.nvars()), 0);
        for (const auto& g : gens) {
            for (std::size_t i = 0; i < g.size(); ++i) {
                if (g[i] > 0) powers[i] = g[i];
            }
        }
        out.emplace_back(std::move(powers));
        return;
    }
    const ExponentVector& m = *it;
    const auto first = static_cast<std::size_t>(
        std::find_if(m.begin(), m.end(), [](int x) { return x > 0; }) - m.begin());
    ExponentVector u(m.size(), 0);
    u[first] = m[first];
    ExponentVector v = m;
    v[first] = 0;
    split(ideal_sum(ideal, MonomialIdeal::principal(u)), out);
    split(ideal_sum(ideal, MonomialIdeal::principal(v)), out);
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw DomainError("irreducible decomposition of the zero ideal");
    if (ideal.is_unit()) throw DomainError("irreducible decomposition of the unit ideal");
    std::vector<IrreducibleComponent> raw;
    split(ideal, raw);
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    // A component containing another one is redundant.
    std::vector<MonomialIdeal> ideals;
    ideals.reserve(raw.size());
    for (const auto& c : raw) ideals.push_back(c.ideal());
    std::vector<IrreducibleComponent> out;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < raw.size() && !redundant; ++j) {
            redundant = j != i && is_subideal(ideals[j], ideals[i]);
        }
        if (!redundant) out.push_back(raw[i]);
    }
    return out;
}

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal) {
    const int n = ideal.nvars();
    if (ideal.is_unit()) return {};
    if (ideal.is_zero()) return {MonomialPrime(n, VarSet())};
    std::vector<VarSet> supports;
    for (const auto& c : irreducible_decomposition(ideal)) supports.push_back(support(c.powers()));
    std::vector<MonomialPrime> out;
    for (std::size_t i = 0; i < supports.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < supports.size() && minimal; ++j) {
            if (supports[j] == supports[i]) {
                minimal = j >= i;  // keep the first copy
            } else if (supports[j].subset_of(supports[i])) {
                minimal = false;
            }
        }
        if (minimal) out.emplace_back(n, supports[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int height(const MonomialIdeal& ideal) {
    if (ideal.is_unit()) throw DomainError("height of the unit ideal");
    int h = ideal.nvars();
    for (const auto& p : minimal_primes(ideal)) h = std::min(h, p.height());
    return h;
}

int krull_dim_quotient(const MonomialIdeal& ideal) {
    if (ideal.is_unit()) return kZeroModuleDim;
    return ideal.nvars() - height(ideal);
}

MonomialIdeal annihilator(const Subquotient& module) {
    return ideal_colon(module.denominator(), module.numerator());
}

std::vector<MonomialPrime> associated_primes(const Subquotient& module) {
    if (module.is_zero()) return {};
    const int n = module.nvars();
    // Past the largest exponent in A or B every divisibility test is constant,
    // so witnesses x^b only need b inside this box.
    std::vector<int> upper(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        upper[static_cast<std::size_t>(i)] =
            std::max(module.numerator().max_exponent(i), module.denominator().max_exponent(i));
    }
    std::set<std::uint64_t> found;
    ExponentVector b(static_cast<std::size_t>(n), 0);
    while (true) {
        if (module.has_basis_monomial(b)) {
            if (auto p = as_monomial_prime(ideal_colon(module.denominator(), b))) {
                found.insert(p->vars().bits());
            }
        }
        int i = n - 1;
        while (i >= 0 && b[static_cast<std::size_t>(i)] == upper[static_cast<std::size_t>(i)]) {
            b[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++b[static_cast<std::size_t>(i)];
    }
    std::vector<MonomialPrime> out;
    for (auto bits : found) out.emplace_back(n, VarSet(bits));
    std::sort(out.begin(), out.end());
    return out;
}

int dim_module(const Subquotient& module) { return krull_dim_quotient(annihilator(module)); }

bool support_contains(const MonomialPrime& prime, const Subquotient& module) {
    return prime.contains(annihilator(module));
}

}  // namespace pairdepth
