#include <omp.h>

#include <algorithm>
#include <limits>

#include "pairdepth/homology.hpp"

namespace pairdepth {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

bool divides_shifted(const ExponentVector& g, const int* u, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (g[i] > u[i]) return false;
    }
    return true;
}

// Reused per thread across degrees.
struct Workspace {
    std::vector<int> u;
    std::vector<std::vector<long>> slot;
    std::vector<std::size_t> count;
};

struct KernelInput {
    const ComplexTemplate& tpl;
    const Subquotient& module;
    const Field& field;
    std::size_t nvars;
    std::size_t positions;
};

bool present(const KernelInput& in, const ExponentVector& degree, const ExponentVector& shift, Workspace& ws) {
    for (std::size_t i = 0; i < in.nvars; ++i) {
        ws.u[i] = degree[i] + shift[i];
        if (ws.u[i] < 0) return false;
    }
    const auto& num = in.module.numerator().gens();
    const auto& den = in.module.denominator().gens();
    const bool in_numerator = std::any_of(num.begin(), num.end(), [&](const ExponentVector& g) {
        return divides_shifted(g, ws.u.data(), in.nvars);
    });
    if (!in_numerator) return false;
    return std::none_of(den.begin(), den.end(), [&](const ExponentVector& g) {
        return divides_shifted(g, ws.u.data(), in.nvars);
    });
}

// Homology dimensions at one degree, written into `dims`.
void strand_homology(const KernelInput& in, const ExponentVector& degree, Workspace& ws,
                     std::vector<std::size_t>& dims) {
    bool any = false;
    for (std::size_t k = 0; k < in.positions; ++k) {
        const auto& summands = in.tpl.summands(static_cast<int>(k));
        auto& slot = ws.slot[k];
        slot.assign(summands.size(), -1);
        std::size_t c = 0;
        for (std::size_t s = 0; s < summands.size(); ++s) {
            if (present(in, degree, summands[s].shift, ws)) slot[s] = static_cast<long>(c++);
        }
        ws.count[k] = c;
        any = any || c > 0;
    }
    std::fill(dims.begin(), dims.end(), 0);
    if (!any) return;
    std::vector<std::size_t> ranks(in.positions, 0);
    for (std::size_t k = 0; k + 1 < in.positions; ++k) {
        if (ws.count[k] == 0 || ws.count[k + 1] == 0) continue;
        IntMatrix d(ws.count[k + 1], ws.count[k]);
        bool nonzero = false;
        for (const auto& e : in.tpl.differential(static_cast<int>(k))) {
            const long col = ws.slot[k][e.from];
            const long row = ws.slot[k + 1][e.to];
            if (col >= 0 && row >= 0) {
                d(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) = e.sign;
                nonzero = true;
            }
        }
        if (nonzero) ranks[k] = rank(d, in.field);
    }
    for (std::size_t k = 0; k < in.positions; ++k) {
        std::size_t v = ws.count[k] - ranks[k];
        if (k > 0) v -= ranks[k - 1];
        dims[k] = v;
    }
}

}  // namespace

NonvanishingProfile nonvanishing_profile(const ComplexTemplate& tpl, const Subquotient& module,
                                         const Field& field) {
    const auto positions = static_cast<std::size_t>(tpl.length()) + 1;
    NonvanishingProfile out;
    out.nonzero.assign(positions, false);
    out.witness.assign(positions, std::nullopt);
    if (module.is_zero()) return out;

    const DegreeBox box(tpl, module);
    const KernelInput in{tpl, module, field, static_cast<std::size_t>(tpl.nvars()), positions};
    std::vector<std::size_t> first(positions, kNone);
    const auto total = static_cast<std::int64_t>(box.size());

#pragma omp parallel
    {
        Workspace ws;
        ws.u.resize(in.nvars);
        ws.slot.resize(positions);
        ws.count.resize(positions);
        std::vector<std::size_t> dims(positions);
        std::vector<std::size_t> local(positions, kNone);

#pragma omp for schedule(dynamic, 16)
        for (std::int64_t linear = 0; linear < total; ++linear) {
            const auto idx = static_cast<std::size_t>(linear);
            strand_homology(in, box.at(idx), ws, dims);
            for (std::size_t k = 0; k < positions; ++k) {
                if (dims[k] > 0 && idx < local[k]) local[k] = idx;
            }
        }

#pragma omp critical(pairdepth_profile_merge)
        for (std::size_t k = 0; k < positions; ++k) first[k] = std::min(first[k], local[k]);
    }

    for (std::size_t k = 0; k < positions; ++k) {
        if (first[k] != kNone) {
            out.nonzero[k] = true;
            out.witness[k] = box.at(first[k]);
        }
    }
    return out;
}

}  // namespace pairdepth
