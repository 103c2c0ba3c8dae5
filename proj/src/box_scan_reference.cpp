// Straightforward strand construction and the serial box scan that the OpenMP
// kernel in box_scan.cpp is tested against.

#include <algorithm>

#include "pairdepth/homology.hpp"

namespace pairdepth {

namespace {

std::optional<ExponentVector> shifted_monomial(const ExponentVector& degree, const ExponentVector& shift) {
    ExponentVector u(degree.size());
    for (std::size_t i = 0; i < degree.size(); ++i) {
        u[i] = degree[i] + shift[i];
        if (u[i] < 0) return std::nullopt;
    }
    return u;
}

}  // namespace

StrandComplex strand(const ComplexTemplate& tpl, const Subquotient& module, const ExponentVector& degree) {
    if (static_cast<int>(degree.size()) != tpl.nvars() || module.nvars() != tpl.nvars()) {
        throw InputError("strand degree, template and module must share a ring");
    }
    const auto positions = static_cast<std::size_t>(tpl.length()) + 1;
    StrandComplex out;
    out.basis.resize(positions);
    std::vector<std::vector<long>> slot(positions);
    for (std::size_t k = 0; k < positions; ++k) {
        const auto& summands = tpl.summands(static_cast<int>(k));
        slot[k].assign(summands.size(), -1);
        for (std::size_t s = 0; s < summands.size(); ++s) {
            auto u = shifted_monomial(degree, summands[s].shift);
            if (u && module.has_basis_monomial(*u)) {
                slot[k][s] = static_cast<long>(out.basis[k].size());
                out.basis[k].push_back(s);
            }
        }
    }
    for (std::size_t k = 0; k + 1 < positions; ++k) {
        IntMatrix d(out.basis[k + 1].size(), out.basis[k].size());
        for (const auto& e : tpl.differential(static_cast<int>(k))) {
            const long col = slot[k][e.from];
            const long row = slot[k + 1][e.to];
            if (col >= 0 && row >= 0) d(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) = e.sign;
        }
        out.differentials.push_back(std::move(d));
    }
    return out;
}

std::vector<std::size_t> StrandComplex::dims() const {
    std::vector<std::size_t> out;
    for (const auto& b : basis) out.push_back(b.size());
    return out;
}

bool StrandComplex::is_zero() const {
    return std::all_of(basis.begin(), basis.end(), [](const auto& b) { return b.empty(); });
}

bool StrandComplex::composes_to_zero() const {
    for (std::size_t k = 0; k + 1 < differentials.size(); ++k) {
        const auto& f = differentials[k];
        const auto& g = differentials[k + 1];
        for (std::size_t r = 0; r < g.rows(); ++r) {
            for (std::size_t c = 0; c < f.cols(); ++c) {
                std::int64_t sum = 0;
                for (std::size_t m = 0; m < f.rows(); ++m) sum += g(r, m) * f(m, c);
                if (sum != 0) return false;
            }
        }
    }
    return true;
}

std::vector<std::size_t> homology_dims(const StrandComplex& complex, const Field& field) {
    const std::size_t positions = complex.basis.size();
    std::vector<std::size_t> ranks(complex.differentials.size());
    for (std::size_t k = 0; k < ranks.size(); ++k) ranks[k] = rank(complex.differentials[k], field);
    std::vector<std::size_t> out(positions);
    for (std::size_t k = 0; k < positions; ++k) {
        std::size_t d = complex.basis[k].size();
        if (k < ranks.size()) d -= ranks[k];
        if (k > 0) d -= ranks[k - 1];
        out[k] = d;
    }
    return out;
}

NonvanishingProfile nonvanishing_profile_serial(const ComplexTemplate& tpl, const Subquotient& module,
                                                const Field& field) {
    const auto positions = static_cast<std::size_t>(tpl.length()) + 1;
    NonvanishingProfile out;
    out.nonzero.assign(positions, false);
    out.witness.assign(positions, std::nullopt);
    if (module.is_zero()) return out;
    const DegreeBox box(tpl, module);
    for (std::size_t linear = 0; linear < box.size(); ++linear) {
        const ExponentVector b = box.at(linear);
        const auto dims = homology_dims(strand(tpl, module, b), field);
        for (std::size_t k = 0; k < positions; ++k) {
            if (dims[k] > 0 && !out.nonzero[k]) {
                out.nonzero[k] = true;
                out.witness[k] = b;
            }
        }
    }
    return out;
}

std::vector<int> NonvanishingProfile::positions() const {
    std::vector<int> out;
    for (std::size_t k = 0; k < nonzero.size(); ++k) {
        if (nonzero[k]) out.push_back(static_cast<int>(k));
    }
    return out;
}

std::vector<int> NonvanishingProfile::homological_positions() const {
    const int r = static_cast<int>(nonzero.size()) - 1;
    std::vector<int> out;
    for (int k = r; k >= 0; --k) {
        if (nonzero[static_cast<std::size_t>(k)]) out.push_back(r - k);
    }
    return out;
}

std::optional<int> NonvanishingProfile::first() const {
    for (std::size_t k = 0; k < nonzero.size(); ++k) {
        if (nonzero[k]) return static_cast<int>(k);
    }
    return std::nullopt;
}

}  // namespace pairdepth
