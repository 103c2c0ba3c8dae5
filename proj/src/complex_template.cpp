#include <algorithm>
#include <bit>
#include <map>

#include "pairdepth/homology.hpp"

namespace pairdepth {

namespace {

// All r-bit masks with the given popcount, ordered lexicographically by their
// index lists.
std::vector<std::uint64_t> subsets_of_size(int r, int k) {
    std::vector<std::uint64_t> out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int i : idx) mask |= std::uint64_t{1} << i;
        out.push_back(mask);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == r - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace

ComplexTemplate::ComplexTemplate(int nvars, std::vector<ExponentVector> gens, ShiftRule rule)
    : nvars_(nvars), rule_(rule), gens_(std::move(gens)) {
    const int r = static_cast<int>(gens_.size());
    if (r > kMaxTemplateGenerators) {
        throw DomainError("complex templates are limited to " + std::to_string(kMaxTemplateGenerators) +
                          " generators");
    }
    for (const auto& g : gens_) {
        if (static_cast<int>(g.size()) != nvars) throw InputError("generator has the wrong length");
    }
    const auto width = static_cast<std::size_t>(nvars);
    std::vector<ExponentVector> shift_of(std::size_t{1} << r);
    shift_of[0] = ExponentVector(width, 0);
    for (std::uint64_t mask = 1; mask < shift_of.size(); ++mask) {
        const int low = std::countr_zero(mask);
        const auto& rest = shift_of[mask & (mask - 1)];
        const auto& g = gens_[static_cast<std::size_t>(low)];
        shift_of[mask] = rule_ == ShiftRule::Sum ? monomial_product(rest, g) : monomial_lcm(rest, g);
    }
    max_shift_ = ExponentVector(width, 0);
    for (const auto& s : shift_of) max_shift_ = monomial_lcm(max_shift_, s);

    std::vector<std::size_t> index_of(shift_of.size());
    summands_.resize(static_cast<std::size_t>(r) + 1);
    for (int k = 0; k <= r; ++k) {
        for (auto mask : subsets_of_size(r, k)) {
            index_of[mask] = summands_[static_cast<std::size_t>(k)].size();
            summands_[static_cast<std::size_t>(k)].push_back(Summand{shift_of[mask], mask});
        }
    }
    entries_.resize(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) {
        auto& entries = entries_[static_cast<std::size_t>(k)];
        const auto& from_list = summands_[static_cast<std::size_t>(k)];
        for (std::size_t from = 0; from < from_list.size(); ++from) {
            const std::uint64_t s = from_list[from].label;
            for (int j = 0; j < r; ++j) {
                const std::uint64_t bit = std::uint64_t{1} << j;
                if (s & bit) continue;
                const std::uint64_t t = s | bit;
                const int before = std::popcount(s & (bit - 1));
                ExponentVector mono(width);
                for (std::size_t v = 0; v < width; ++v) mono[v] = shift_of[t][v] - shift_of[s][v];
                entries.push_back(TemplateEntry{from, index_of[t], before % 2 == 0 ? 1 : -1, std::move(mono)});
            }
        }
    }
}

ComplexTemplate ComplexTemplate::koszul(int nvars, std::vector<ExponentVector> gens) {
    return ComplexTemplate(nvars, std::move(gens), ShiftRule::Sum);
}

ComplexTemplate ComplexTemplate::taylor(const MonomialIdeal& ideal) {
    return ComplexTemplate(ideal.nvars(), ideal.gens(), ShiftRule::Lcm);
}

bool ComplexTemplate::composes_to_zero() const {
    for (int k = 0; k + 1 < length(); ++k) {
        const auto& first = entries_[static_cast<std::size_t>(k)];
        const auto& second = entries_[static_cast<std::size_t>(k) + 1];
        std::multimap<std::size_t, const TemplateEntry*> by_from;
        for (const auto& e : second) by_from.emplace(e.from, &e);
        std::map<std::tuple<std::size_t, std::size_t, ExponentVector>, int> total;
        for (const auto& e1 : first) {
            auto [lo, hi] = by_from.equal_range(e1.to);
            for (auto it = lo; it != hi; ++it) {
                const auto& e2 = *it->second;
                total[{e1.from, e2.to, monomial_product(e1.monomial, e2.monomial)}] += e1.sign * e2.sign;
            }
        }
        for (const auto& [key, coefficient] : total) {
            if (coefficient != 0) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- DegreeBox

DegreeBox::DegreeBox(const ComplexTemplate& tpl, const Subquotient& module) {
    const int n = tpl.nvars();
    if (module.nvars() != n) throw InputError("template and module live in different rings");
    lower_.resize(static_cast<std::size_t>(n));
    upper_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        int e = std::max(module.numerator().max_exponent(i), module.denominator().max_exponent(i));
        for (const auto& g : tpl.generators()) e = std::max(e, g[ui]);
        lower_[ui] = -tpl.max_shift()[ui];
        upper_[ui] = e;
        const auto extent = static_cast<std::size_t>(upper_[ui] - lower_[ui] + 1);
        if (size_ > (std::size_t{1} << 40) / extent) throw DomainError("degree box is too large to scan");
        size_ *= extent;
    }
}

ExponentVector DegreeBox::at(std::size_t linear) const {
    const std::size_t n = lower_.size();
    ExponentVector b(n);
    for (std::size_t k = n; k-- > 0;) {
        const auto extent = static_cast<std::size_t>(upper_[k] - lower_[k] + 1);
        b[k] = lower_[k] + static_cast<int>(linear % extent);
        linear /= extent;
    }
    return b;
}

bool DegreeBox::contains(const ExponentVector& b) const {
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] < lower_[i] || b[i] > upper_[i]) return false;
    }
    return true;
}

bool DegreeBox::below(const ExponentVector& b) const {
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] < lower_[i]) return true;
    }
    return false;
}

ExponentVector DegreeBox::clamp(const ExponentVector& b) const {
    ExponentVector out = b;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = std::min(out[i], upper_[i]);
    return out;
}

}  // namespace pairdepth
