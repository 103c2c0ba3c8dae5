#include "pairdepth/census.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace pairdepth {

void CensusSpec::validate() const {
    if (n < 1 || n > 8) throw InputError("census n must be in 1..8");
    if (max_exponent < 1 || max_exponent > 4) throw InputError("census max_exponent must be in 1..4");
    if (max_generators < 1 || max_generators > 6) throw InputError("census max_generators must be in 1..6");
    if (max_sequence_length < 1 || max_sequence_length > 4) throw InputError("census sequence length must be in 1..4");
    if (max_evaluations == 0) throw InputError("census evaluation budget must be positive");
}

namespace {

// Every point of {0..e}^n in odometer order.
std::vector<ExponentVector> grid_points(int n, int e) {
    std::vector<ExponentVector> out;
    ExponentVector v(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(v);
        int i = n - 1;
        while (i >= 0 && v[static_cast<std::size_t>(i)] == e) {
            v[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++v[static_cast<std::size_t>(i)];
    }
    return out;
}

bool comparable(const ExponentVector& a, const ExponentVector& b) { return divides(a, b) || divides(b, a); }

bool in_ideal(const ExponentVector& m, const MonomialIdeal& ideal) {
    for (const auto& g : ideal.gens()) {
        bool ok = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (g[i] > m[i]) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

// Visits every u with 0 ≤ u ≤ m.
template <class F>
bool any_divisor(const ExponentVector& m, F&& pred) {
    ExponentVector u(m.size(), 0);
    while (true) {
        if (pred(u)) return true;
        std::size_t i = m.size();
        while (i > 0 && u[i - 1] == m[i - 1]) {
            u[i - 1] = 0;
            --i;
        }
        if (i == 0) return false;
        ++u[i - 1];
    }
}

ExponentVector minus(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

ExponentVector plus(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

bool in_power(const ExponentVector& m, const MonomialIdeal& ideal, int k) {
    if (k == 0) return true;
    return any_divisor(m, [&](const ExponentVector& u) {
        return in_ideal(u, ideal) && in_power(minus(m, u), ideal, k - 1);
    });
}

bool comprehension(const GridCase& c, const ExponentVector& m) {
    switch (c.op) {
        case GridOp::Sum:
            return in_ideal(m, c.lhs) || in_ideal(m, c.rhs);
        case GridOp::Product:
            return any_divisor(m, [&](const ExponentVector& u) {
                return in_ideal(u, c.lhs) && in_ideal(minus(m, u), c.rhs);
            });
        case GridOp::Power:
            return in_power(m, c.lhs, c.power);
        case GridOp::Intersect:
            return in_ideal(m, c.lhs) && in_ideal(m, c.rhs);
        case GridOp::ColonMonomial:
            return in_ideal(plus(m, c.monomial), c.lhs);
        case GridOp::ColonIdeal:
            return std::all_of(c.rhs.gens().begin(), c.rhs.gens().end(),
                               [&](const ExponentVector& g) { return in_ideal(plus(m, g), c.lhs); });
        case GridOp::Radical: {
            int bound = 1;
            for (int i = 0; i < c.lhs.nvars(); ++i) bound = std::max(bound, c.lhs.max_exponent(i));
            for (int p = 1; p <= std::max(bound, 4); ++p) {
                ExponentVector mp(m.size());
                for (std::size_t i = 0; i < m.size(); ++i) mp[i] = p * m[i];
                if (in_ideal(mp, c.lhs)) return true;
            }
            return false;
        }
    }
    return false;
}

MonomialIdeal computed(const GridCase& c) {
    switch (c.op) {
        case GridOp::Sum:
            return ideal_sum(c.lhs, c.rhs);
        case GridOp::Product:
            return ideal_product(c.lhs, c.rhs);
        case GridOp::Power:
            return ideal_power(c.lhs, c.power);
        case GridOp::Intersect:
            return ideal_intersect(c.lhs, c.rhs);
        case GridOp::ColonMonomial:
            return ideal_colon(c.lhs, c.monomial);
        case GridOp::ColonIdeal:
            return ideal_colon(c.lhs, c.rhs);
        case GridOp::Radical:
            return radical(c.lhs);
    }
    throw InputError("unknown grid op");
}

}  // namespace

std::vector<MonomialIdeal> enumerate_ideals(int n, int max_exponent, int max_generators) {
    const auto points = grid_points(n, max_exponent);
    std::vector<MonomialIdeal> out;
    std::vector<ExponentVector> chosen;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        out.emplace_back(n, chosen);
        if (static_cast<int>(chosen.size()) == max_generators) return;
        for (std::size_t i = from; i < points.size(); ++i) {
            const bool free = std::none_of(chosen.begin(), chosen.end(),
                                           [&](const ExponentVector& c) { return comparable(c, points[i]); });
            if (!free) continue;
            chosen.push_back(points[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MonomialIdeal> enumerate_ideals_brute_force(int n, int max_exponent, int max_generators) {
    const auto points = grid_points(n, max_exponent);
    if (points.size() > 20) throw DomainError("brute-force ideal enumeration limited to 20 grid points");
    std::set<MonomialIdeal> seen;
    const std::uint64_t count = std::uint64_t{1} << points.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::vector<ExponentVector> gens;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if ((mask >> i) & 1U) gens.push_back(points[i]);
        }
        MonomialIdeal ideal(n, std::move(gens));
        if (static_cast<int>(ideal.size()) <= max_generators) seen.insert(std::move(ideal));
    }
    return {seen.begin(), seen.end()};
}

std::vector<Subquotient> enumerate_modules(const std::vector<MonomialIdeal>& ideals, bool include_subquotients,
                                           std::uint64_t seed) {
    std::vector<Subquotient> out;
    out.reserve(ideals.size());
    for (const auto& k : ideals) out.push_back(Subquotient::quotient_ring(k));
    if (!include_subquotients) return out;

    std::vector<const MonomialIdeal*> numerators;
    for (const auto& a : ideals) {
        if (!a.is_zero() && a.is_proper()) numerators.push_back(&a);
    }
    constexpr std::size_t kAllPairsLimit = 400;
    if (ideals.size() <= kAllPairsLimit) {
        for (const auto* a : numerators) {
            for (const auto& b : ideals) {
                if (b != *a && is_subideal(b, *a)) out.emplace_back(*a, b);
            }
        }
        return out;
    }
    // Too many pairs: intersect random pairs down into A.
    std::mt19937_64 rng(seed);
    std::set<Subquotient> seen;
    const std::size_t target = 4 * ideals.size();
    std::uniform_int_distribution<std::size_t> pick_a(0, numerators.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_b(0, ideals.size() - 1);
    for (std::size_t attempt = 0; attempt < 20 * target && seen.size() < target; ++attempt) {
        const MonomialIdeal& a = *numerators[pick_a(rng)];
        MonomialIdeal b = ideal_intersect(ideals[pick_b(rng)], a);
        if (b != a) seen.emplace(a, std::move(b));
    }
    out.insert(out.end(), seen.begin(), seen.end());
    return out;
}

std::vector<ExponentVector> grid_monomials(int n, int max_exponent) {
    auto points = grid_points(n, max_exponent);
    points.erase(points.begin());  // the unit monomial
    std::stable_sort(points.begin(), points.end(), [](const ExponentVector& a, const ExponentVector& b) {
        const int da = total_degree(a);
        const int db = total_degree(b);
        return da != db ? da < db : a > b;
    });
    return points;
}

std::vector<MonomialSequence> enumerate_sequences(int n, int max_exponent, int max_length) {
    const auto monomials = grid_monomials(n, max_exponent);
    std::vector<MonomialSequence> out;
    MonomialSequence current;
    auto rec = [&](auto&& self) -> void {
        if (!current.empty()) out.push_back(current);
        if (static_cast<int>(current.size()) == max_length) return;
        for (const auto& m : monomials) {
            current.push_back(m);
            self(self);
            current.pop_back();
        }
    };
    rec(rec);
    return out;
}

std::string to_string(GridOp op) {
    switch (op) {
        case GridOp::Sum:
            return "sum";
        case GridOp::Product:
            return "product";
        case GridOp::Power:
            return "power";
        case GridOp::Intersect:
            return "intersect";
        case GridOp::ColonMonomial:
            return "colon-monomial";
        case GridOp::ColonIdeal:
            return "colon-ideal";
        case GridOp::Radical:
            return "radical";
    }
    return "?";
}

const std::vector<GridOp>& all_grid_ops() {
    static const std::vector<GridOp> ops = {GridOp::Sum,       GridOp::Product,       GridOp::Power,
                                            GridOp::Intersect, GridOp::ColonMonomial, GridOp::ColonIdeal,
                                            GridOp::Radical};
    return ops;
}

GridResult grid_oracle(const GridCase& input, int cap) {
    if (cap < 0) throw InputError("negative grid cap");
    const int n = input.lhs.nvars();
    const MonomialIdeal fast = computed(input);
    GridResult out;
    for (const auto& m : grid_points(n, cap)) {
        ++out.points;
        if (fast.contains(m) != comprehension(input, m)) {
            if (out.disagreements++ == 0) out.first_disagreement = m;
        }
    }
    return out;
}

GridSummary grid_census(int n, int max_exponent, int cap) {
    const auto ideals = enumerate_ideals(n, max_exponent, 4);
    auto monomials = grid_monomials(n, max_exponent);
    monomials.insert(monomials.begin(), ExponentVector(static_cast<std::size_t>(n), 0));
    std::vector<GridCase> cases;
    for (GridOp op : all_grid_ops()) {
        for (const auto& lhs : ideals) {
            switch (op) {
                case GridOp::Power:
                    for (int k = 0; k <= 3; ++k) cases.push_back({op, lhs, {}, {}, k});
                    break;
                case GridOp::Radical:
                    cases.push_back({op, lhs, {}, {}, 0});
                    break;
                case GridOp::ColonMonomial:
                    for (const auto& m : monomials) cases.push_back({op, lhs, {}, m, 0});
                    break;
                default:
                    for (const auto& rhs : ideals) cases.push_back({op, lhs, rhs, {}, 0});
            }
        }
    }
    GridSummary summary;
    std::vector<GridResult> results(cases.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(cases.size()); ++i) {
        results[static_cast<std::size_t>(i)] = grid_oracle(cases[static_cast<std::size_t>(i)], cap);
    }
    for (std::size_t i = 0; i < cases.size(); ++i) {
        ++summary.cases;
        summary.points += results[i].points;
        summary.disagreements += results[i].disagreements;
        if (results[i].disagreements > 0 && summary.failures.size() < 20) {
            summary.failures.push_back(to_string(cases[i].op) + " case " + std::to_string(i));
        }
    }
    return summary;
}

}  // namespace pairdepth
