#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "bit_matrix.hpp"

namespace skewhad {

enum class RankObject { tournament, hadamard };

struct RankReport {
    RankObject object;
    std::uint32_t field;
    std::size_t size;
    std::size_t rank;

    /// "object field size rank"
    std::string line() const;
};

/// Rank over GF(2) by XOR row reduction on packed words.
std::size_t rank_gf2(BitMatrix m);

/// Rank over GF(p) of a row-major residue matrix; entries must already lie in [0, p).
std::size_t rank_mod_p(std::vector<std::uint32_t> residues, std::size_t rows, std::size_t cols, std::uint32_t p);

/// Rank of an integer matrix reduced modulo the prime p. Throws skewhad::Error if p is not prime.
template <typename Derived>
std::size_t rank_gfp(const Eigen::MatrixBase<Derived>& x, std::uint32_t p);

RankReport rank_report_gf2(const BitMatrix& m, RankObject object = RankObject::tournament);

template <typename Derived>
RankReport rank_report_gfp(const Eigen::MatrixBase<Derived>& x, std::uint32_t p,
                           RankObject object = RankObject::hadamard) {
    return {object, p, static_cast<std::size_t>(x.rows()), rank_gfp(x, p)};
}

namespace detail {
void require_prime(std::uint32_t p);
}

template <typename Derived>
std::size_t rank_gfp(const Eigen::MatrixBase<Derived>& x, std::uint32_t p) {
    detail::require_prime(p);
    const auto rows = static_cast<std::size_t>(x.rows());
    const auto cols = static_cast<std::size_t>(x.cols());
    std::vector<std::uint32_t> residues(rows * cols);
    const long long mod = p;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            long long r = static_cast<long long>(x(i, j)) % mod;
            residues[i * cols + j] = static_cast<std::uint32_t>(r < 0 ? r + mod : r);
        }
    return rank_mod_p(std::move(residues), rows, cols, p);
}

} // namespace skewhad
