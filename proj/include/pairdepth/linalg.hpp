#ifndef PAIRDEPTH_LINALG_HPP
#define PAIRDEPTH_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pairdepth/core.hpp"

namespace pairdepth {

/// Dense row-major integer matrix. Strand differentials only carry 0/±1, but the
/// rank routines accept any 64-bit entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<std::int64_t>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination. Runs in int64 and
/// restarts in arbitrary precision the moment an intermediate would overflow.
std::size_t rank_rational(const IntMatrix& m);

/// Same elimination carried out in arbitrary precision from the start.
std::size_t rank_rational_bigint(const IntMatrix& m);

/// Rank over F_p, p < 2^31.
std::size_t rank_mod_prime(const IntMatrix& m, std::uint64_t p);

std::size_t rank(const IntMatrix& m, const Field& field);

}  // namespace pairdepth

#endif  // PAIRDEPTH_LINALG_HPP
