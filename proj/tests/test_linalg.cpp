#include <catch_amalgamated.hpp>

#include <limits>
#include <random>

#include "pairdepth/linalg.hpp"

using namespace pairdepth;

namespace {

IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
    }
    return m;
}

}  // namespace

TEST_CASE("small ranks", "[linalg]") {
    CHECK(rank_rational(IntMatrix(0, 0)) == 0);
    CHECK(rank_rational(IntMatrix(3, 2)) == 0);
    CHECK(rank_rational(from_rows({{1, 2}, {2, 4}})) == 1);
    CHECK(rank_rational(from_rows({{1, 1}, {1, -1}})) == 2);
    CHECK(rank_mod_prime(from_rows({{1, 1}, {1, -1}}), 2) == 1);
    CHECK(rank_mod_prime(from_rows({{3, 0}, {0, 1}}), 3) == 1);
    CHECK(rank(from_rows({{1, 1}, {1, -1}}), Field::prime(2)) == 1);
    CHECK(rank(from_rows({{1, 1}, {1, -1}}), Field::rationals()) == 2);
}

TEST_CASE("Koszul-shaped differentials", "[linalg]") {
    // k -> k^2 -> k for a regular pair: ranks 1 and 1.
    CHECK(rank_rational(from_rows({{1}, {-1}})) == 1);
    CHECK(rank_rational(from_rows({{1, 1}})) == 1);
}

TEST_CASE("overflow falls back to arbitrary precision", "[linalg]") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 3;
    const auto m = from_rows({{big, big - 1, 7}, {big - 5, big, 11}, {3, 5, big}});
    CHECK(rank_rational(m) == rank_rational_bigint(m));
    CHECK(rank_rational(m) == 3);
    const auto dependent = from_rows({{big, big - 1}, {2 * (big / 2), 2 * ((big - 1) / 2)}});
    CHECK(rank_rational(dependent) == rank_rational_bigint(dependent));
}

TEST_CASE("int64 and bigint elimination agree on random matrices", "[linalg][property]") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> dim(1, 7);
    std::uniform_int_distribution<std::int64_t> entry(-3, 3);
    for (int trial = 0; trial < 400; ++trial) {
        IntMatrix m(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng) * (trial % 3 == 0 ? 0 : 1) + entry(rng);
        }
        const auto q = rank_rational(m);
        CHECK(q == rank_rational_bigint(m));
        CHECK(rank_mod_prime(m, 1000003) == q);
        CHECK(rank_mod_prime(m, 2) <= q);
    }
}
