#include "pairdepth/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <utility>

namespace pairdepth {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

// Checked int64 arithmetic used by the fast path.
struct CheckedOps {
    using T = std::int64_t;
    static T mul(T a, T b) {
        T out;
        if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
        return out;
    }
    static T sub(T a, T b) {
        T out;
        if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
        return out;
    }
    static T div(T a, T b) { return a / b; }
};

struct BigOps {
    using T = BigInt;
    static T mul(const T& a, const T& b) { return a * b; }
    static T sub(const T& a, const T& b) { return a - b; }
    static T div(const T& a, const T& b) { return a / b; }
};

// Fraction-free row echelon; entries below each pivot are cleared and the
// division by the previous pivot is exact.
template <class Ops>
std::size_t bareiss_rank(std::vector<typename Ops::T> a, std::size_t rows, std::size_t cols) {
    using T = typename Ops::T;
    auto at = [&](std::size_t r, std::size_t c) -> T& { return a[r * cols + c]; };
    T prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && at(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
        }
        const T p = at(rank, c);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const T f = at(r, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                at(r, j) = Ops::div(Ops::sub(Ops::mul(p, at(r, j)), Ops::mul(f, at(rank, j))), prev);
            }
            at(r, c) = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

std::vector<BigInt> to_big(const IntMatrix& m) {
    std::vector<BigInt> out;
    out.reserve(m.data().size());
    for (auto v : m.data()) out.emplace_back(v);
    return out;
}

}  // namespace

std::size_t rank_rational(const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    try {
        return bareiss_rank<CheckedOps>(m.data(), m.rows(), m.cols());
    } catch (const Overflow&) {
        return rank_rational_bigint(m);
    }
}

std::size_t rank_rational_bigint(const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return bareiss_rank<BigOps>(to_big(m), m.rows(), m.cols());
}

std::size_t rank_mod_prime(const IntMatrix& m, std::uint64_t p) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    const auto pm = static_cast<std::int64_t>(p);
    std::vector<std::uint64_t> a(m.data().size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t v = m.data()[i] % pm;
        if (v < 0) v += pm;
        a[i] = static_cast<std::uint64_t>(v);
    }
    auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return a[r * cols + c]; };
    auto inverse = [p](std::uint64_t x) {
        std::uint64_t result = 1;
        std::uint64_t e = p - 2;
        while (e > 0) {
            if (e & 1U) result = result * x % p;
            x = x * x % p;
            e >>= 1U;
        }
        return result;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && at(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
        }
        const std::uint64_t inv = inverse(at(rank, c));
        for (std::size_t j = c; j < cols; ++j) at(rank, j) = at(rank, j) * inv % p;
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const std::uint64_t f = at(r, c);
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                at(r, j) = (at(r, j) + (p - f) * at(rank, j)) % p;
            }
        }
        ++rank;
    }
    return rank;
}

std::size_t rank(const IntMatrix& m, const Field& field) {
    return field.is_rational() ? rank_rational(m) : rank_mod_prime(m, field.characteristic());
}

}  // namespace pairdepth
