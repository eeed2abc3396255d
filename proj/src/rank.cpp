#include "skewhad/rank.hpp"

#include <utility>

#include "skewhad/error.hpp"
#include "skewhad/field.hpp"

namespace skewhad {

namespace detail {
void require_prime(std::uint32_t p) {
    if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
}
} // namespace detail

std::string RankReport::line() const {
    return std::string(object == RankObject::tournament ? "tournament" : "hadamard") + ' ' + std::to_string(field) +
           ' ' + std::to_string(size) + ' ' + std::to_string(rank);
}

std::size_t rank_gf2(BitMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && !m.test(pivot, c)) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            auto a = m.row(pivot), b = m.row(rank);
            for (std::size_t w = 0; w < a.size(); ++w) std::swap(a[w], b[w]);
        }
        const auto prow = m.row(rank);
        const std::size_t first_word = c / kWordBits;
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (!m.test(r, c)) continue;
            auto target = m.row(r);
            for (std::size_t w = first_word; w < target.size(); ++w) target[w] ^= prow[w];
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_mod_p(std::vector<std::uint32_t> a, std::size_t rows, std::size_t cols, std::uint32_t p) {
    detail::require_prime(p);
    auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return a[i * cols + j]; };
    auto inverse = [p](std::uint32_t x) {
        std::uint64_t r = 1, b = x, k = p - 2;
        while (k) {
            if (k & 1) r = r * b % p;
            b = b * b % p;
            k >>= 1;
        }
        return static_cast<std::uint32_t>(r);
    };

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && at(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
        const std::uint64_t inv = inverse(at(rank, c));
        for (std::size_t j = c; j < cols; ++j) at(rank, j) = static_cast<std::uint32_t>(at(rank, j) * inv % p);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const std::uint32_t f = at(r, c);
            if (f == 0) continue;
            const std::uint64_t neg = p - f;
            std::uint32_t* dst = &at(r, 0);
            const std::uint32_t* src = &at(rank, 0);
            for (std::size_t j = c; j < cols; ++j) dst[j] = static_cast<std::uint32_t>((dst[j] + neg * src[j]) % p);
        }
        ++rank;
    }
    return rank;
}

RankReport rank_report_gf2(const BitMatrix& m, RankObject object) {
    return {object, 2, m.rows(), rank_gf2(m)};
}

} // namespace skewhad
