#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "skewhad/error.hpp"
#include "skewhad/hadamard.hpp"
#include "skewhad/sketch.hpp"

using namespace skewhad;

namespace {

PmMatrix desk8() {
    return build_skew_hadamard(GroupSpec::cyclic(3), {{}, {}, Subset(3, {1}), Subset(3, {1})});
}
PmMatrix desk12() {
    return build_skew_hadamard(GroupSpec::cyclic(5), {{}, {}, Subset(5, {1, 2}), Subset(5, {1, 4})});
}

Eigen::VectorXd random_vector(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Eigen::VectorXd x(n);
    for (auto& v : x) v = g(rng);
    return x;
}

} // namespace

TEST_CASE("byte accounting") {
    const auto acc = byte_accounting({1252, 300, 8});
    CHECK(acc.raw_bytes == 5008);
    CHECK(acc.sketch_bytes == 908);
    CHECK(acc.ratio == doctest::Approx(5.52).epsilon(0.001));
    CHECK(granularity_gain(1252, 1024) == doctest::Approx(22.27).epsilon(0.0005));
    const auto full = byte_accounting({1252, 1252, 8});
    CHECK(full.sketch_bytes == 3764);
    CHECK(std::round(full.ratio * 100) / 100 == doctest::Approx(1.33));
}

TEST_CASE("transform matches the dense product") {
    std::mt19937_64 rng(1);
    const PmMatrix h = desk12();
    const Eigen::MatrixXd hd = h.to_dense<double>();
    const Eigen::VectorXd x = random_vector(12, rng);
    const Eigen::VectorXd y = sketch_transform(x, h);
    CHECK((y - hd * x / std::sqrt(12.0)).norm() < 1e-12);
    CHECK((inverse_transform(y, h) - x).norm() < 1e-12);
    CHECK(std::abs(y.norm() - x.norm()) <= 1e-9 * x.norm());
}

TEST_CASE("energy preservation on desk orders") {
    std::mt19937_64 rng(2);
    for (const PmMatrix& h : {desk8(), desk12()}) {
        for (int t = 0; t < 20; ++t) {
            const Eigen::VectorXd x = random_vector(h.order(), rng);
            CHECK(std::abs(sketch_transform(x, h).norm() - x.norm()) <= 1e-9 * x.norm());
        }
    }
}

TEST_CASE("first row concentrates in one coefficient") {
    // H H^T = nI, so H maps its own first row to n e_0.
    const PmMatrix h = desk8();
    const Eigen::VectorXd x = h.to_dense<double>().row(0).transpose();
    const auto s = sketch_topk(x, h, 1);
    REQUIRE(s.indices.size() == 1);
    CHECK(s.indices[0] == 0);
    CHECK(std::abs(s.values[0]) == doctest::Approx(x.norm()));
    CHECK((reconstruct(s, h) - x).norm() < 1e-12);
}

TEST_CASE("top-k ordering and ties") {
    const PmMatrix h = desk8();
    // x = H^T e / sqrt(8) * c puts chosen magnitudes into y.
    Eigen::VectorXd y(8);
    y << 1, -3, 3, 0.5, -2, 2, 0, 1;
    const Eigen::VectorXd x = inverse_transform(y, h);
    const auto s = sketch_topk(x, h, 4);
    CHECK(s.indices == std::vector<std::uint16_t>{1, 2, 4, 5});
    const auto s3 = sketch_topk(x, h, 3);
    CHECK(s3.indices == std::vector<std::uint16_t>{1, 2, 4}); // tie |y4| = |y5| goes to 4
    CHECK_THROWS_AS(sketch_topk(x, h, 0), Error);
    CHECK_THROWS_AS(sketch_topk(x, h, 9), Error);
}

TEST_CASE("lossless round trip without quantization") {
    std::mt19937_64 rng(3);
    for (const PmMatrix& h : {desk8(), desk12()}) {
        const Eigen::VectorXd x = random_vector(h.order(), rng);
        const auto s = sketch_topk(x, h, h.order());
        CHECK((reconstruct(s, h) - x).norm() <= 1e-9 * x.norm());
    }
}

TEST_CASE("zero vector") {
    const PmMatrix h = desk12();
    const auto p = encode(Eigen::VectorXd::Zero(12), h, {12, 5, 8});
    CHECK(p.scale == 1.0f);
    for (auto q : p.qvalues) CHECK(q == 0);
    CHECK(decode(p, h).isZero());
}

TEST_CASE("quantized reconstruction bounds") {
    std::mt19937_64 rng(4);
    const PmMatrix h = desk12();
    for (int t = 0; t < 50; ++t) {
        const Eigen::VectorXd x = random_vector(12, rng);
        const auto p = encode(x, h, {12, 12, 8});
        const Eigen::VectorXd xr = decode(p, h);
        CHECK((x - xr).cwiseAbs().maxCoeff() <= p.scale * std::sqrt(12.0) / 2 + 1e-12);
    }
    for (const PmMatrix& hh : {desk8(), desk12()}) {
        const std::size_t n = hh.order();
        for (std::size_t k = 1; k <= n; ++k) {
            const Eigen::VectorXd x = random_vector(n, rng);
            const Eigen::VectorXd y = sketch_transform(x, hh);
            const auto s = sketch_topk(x, hh, k);
            double tail = y.squaredNorm();
            for (double v : s.values) tail -= v * v;
            const auto p = quantize(s);
            const double err = (x - decode(p, hh)).squaredNorm();
            const double step = p.scale / 2.0;
            CHECK(err <= tail + static_cast<double>(k) * step * step + 1e-9);
        }
    }
}

TEST_CASE("packet wire format") {
    SketchPacket p;
    p.scale = 0.5f;
    p.n = 12;
    p.indices = {1, 300};
    p.qvalues = {-127, 5};
    p.n = 1252;
    const auto bytes = p.serialize();
    CHECK(bytes == std::vector<std::uint8_t>{0x00, 0x00, 0x00, 0x3f, 2, 0, 0xe4, 0x04, 1, 0, 0x81, 0x2c, 0x01, 5});
    const auto back = SketchPacket::parse(bytes);
    CHECK(back.serialize() == bytes);

    auto bad = bytes;
    bad.pop_back();
    CHECK_THROWS_AS(SketchPacket::parse(bad), Error);
    bad = bytes;
    bad[10] = 0x80; // -128
    CHECK_THROWS_AS(SketchPacket::parse(bad), Error);
    bad = bytes;
    bad[11] = 0x01;
    bad[12] = 0x00; // second index 1 repeats the first
    CHECK_THROWS_AS(SketchPacket::parse(bad), Error);
    CHECK_THROWS_AS(SketchPacket::parse(std::vector<std::uint8_t>{1, 2, 3}), Error);
}

TEST_CASE("encode is deterministic and validates input") {
    std::mt19937_64 rng(6);
    const PmMatrix h = desk12();
    const Eigen::VectorXd x = random_vector(12, rng);
    CHECK(encode(x, h, {12, 4, 8}).serialize() == encode(x, h, {12, 4, 8}).serialize());
    CHECK(encode(x, h, {12, 4, 8}).byte_size() == 8 + 12);
    CHECK_THROWS_AS(encode(Eigen::VectorXd::Zero(11), h, {12, 4, 8}), Error);
    Eigen::VectorXd nan = x;
    nan[3] = std::nan("");
    CHECK_THROWS_AS(encode(nan, h, {12, 4, 8}), Error);
    CHECK_THROWS_AS(decode(encode(x, h, {12, 4, 8}), desk8()), Error);
}
