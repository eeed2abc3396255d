#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "skewhad/error.hpp"
#include "skewhad/hadamard.hpp"
#include "skewhad/rank.hpp"

using namespace skewhad;

namespace {

std::vector<std::vector<long>> nested(const Eigen::MatrixXi& m) {
    std::vector<std::vector<long>> out(m.rows(), std::vector<long>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

PmMatrix desk(std::uint32_t v) {
    const auto g = GroupSpec::cyclic(v);
    if (v == 3) return build_skew_hadamard(g, {{}, {}, Subset(3, {1}), Subset(3, {1})});
    return build_skew_hadamard(g, {{}, {}, Subset(5, {1, 2}), Subset(5, {1, 4})});
}

} // namespace

TEST_CASE("GF(2) rank basics") {
    CHECK(rank_gf2(BitMatrix(9, 9)) == 0);
    BitMatrix id(7, 7);
    for (std::size_t i = 0; i < 7; ++i) id.set(i, i);
    CHECK(rank_gf2(id) == 7);
    BitMatrix wide(2, 130);
    wide.set(0, 129);
    wide.set(1, 129);
    wide.set(1, 64);
    CHECK(rank_gf2(wide) == 2);
    CHECK(rank_report_gf2(id).line() == "tournament 2 7 7");
}

TEST_CASE("GF(2) elimination matches the naive oracle up to size 64") {
    std::mt19937_64 rng(77);
    for (std::size_t n = 1; n <= 64; ++n) {
        for (double density : {0.1, 0.5}) {
            std::bernoulli_distribution coin(density);
            BitMatrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (coin(rng)) m.set(i, j);
            // Force some dependent rows.
            if (n > 3)
                for (std::size_t j = 0; j < n; ++j) m.set(n - 1, j, m.test(0, j) != m.test(1, j));
            CHECK(rank_gf2(m) == oracle::naive_rank(nested(m.to_dense<int>()), 2));
        }
    }
}

TEST_CASE("GF(p) elimination matches the naive oracle up to size 64") {
    std::mt19937_64 rng(99);
    for (std::uint32_t p : {3u, 5u, 7u}) {
        for (std::size_t n = 1; n <= 64; n += 3) {
            Eigen::MatrixXi m(n, n + 2);
            std::uniform_int_distribution<int> entry(-3, 3);
            for (Eigen::Index i = 0; i < m.rows(); ++i)
                for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
            if (n > 4) m.row(n - 1) = 2 * m.row(0) - m.row(2);
            CHECK(rank_gfp(m, p) == oracle::naive_rank(nested(m), p));
        }
    }
    CHECK_THROWS_AS(rank_gfp(Eigen::MatrixXi::Identity(3, 3), 4), Error);
}

TEST_CASE("rank is invariant under signed permutations") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 12 + trial;
        Eigen::MatrixXi m(n, n);
        std::uniform_int_distribution<int> entry(0, 1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = entry(rng) ? 1 : -1;
        std::vector<int> pr(n), pc(n);
        std::iota(pr.begin(), pr.end(), 0);
        std::iota(pc.begin(), pc.end(), 0);
        std::shuffle(pr.begin(), pr.end(), rng);
        std::shuffle(pc.begin(), pc.end(), rng);
        Eigen::MatrixXi t(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t(i, j) = m(pr[i], pc[j]) * ((i % 3 == 0) ? -1 : 1) * ((j % 5 == 1) ? -1 : 1);
        for (std::uint32_t p : {2u, 3u, 5u}) CHECK(rank_gfp(m, p) == rank_gfp(t, p));
    }
}

TEST_CASE("desk instance ranks") {
    const PmMatrix h8 = desk(3), h12 = desk(5);
    CHECK(rank_gfp(h8.to_dense<int>(), 3) == 8);
    CHECK(rank_gfp(h8.to_dense<int>(), 5) == 8);
    CHECK(rank_gfp(h12.to_dense<int>(), 5) == 12);
    CHECK(rank_gfp(h12.to_dense<int>(), 3) == 6); // 3 divides 12
    CHECK(rank_gf2(normalize_core_tournament(h8).tournament) == 4);
    CHECK(rank_gf2(normalize_core_tournament(h12).tournament) == 11);
    CHECK(rank_report_gfp(h8.to_dense<int>(), 3).line() == "hadamard 3 8 8");
}
