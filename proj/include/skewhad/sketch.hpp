#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "bit_matrix.hpp"

namespace skewhad {

struct SketchConfig {
    std::size_t n = 1252;
    std::size_t k = 300;
    unsigned quant_bits = 8;
};

/// Selected transform coefficients before quantization.
struct SparseSketch {
    std::size_t n = 0;
    std::vector<std::uint16_t> indices; // strictly increasing
    std::vector<double> values;
};

/// Wire packet: f32 scale, u16 k, u16 n, then k records of (u16 index, i8 value); all little-endian.
struct SketchPacket {
    float scale = 1.0f;
    std::uint16_t n = 0;
    std::vector<std::uint16_t> indices;
    std::vector<std::int8_t> qvalues;

    std::size_t byte_size() const noexcept { return 8 + 3 * indices.size(); }
    std::vector<std::uint8_t> serialize() const;
    /// Throws skewhad::Error on a malformed buffer.
    static SketchPacket parse(std::span<const std::uint8_t> bytes);
};

/// y = H x / sqrt(n) with +/-1 accumulation.
Eigen::VectorXd sketch_transform(const Eigen::Ref<const Eigen::VectorXd>& x, const PmMatrix& h);

/// x = H^T y / sqrt(n).
Eigen::VectorXd inverse_transform(const Eigen::Ref<const Eigen::VectorXd>& y, const PmMatrix& h);

/// k largest |y_i|, ties to the smaller index, reported in index order.
SparseSketch sketch_topk(const Eigen::Ref<const Eigen::VectorXd>& x, const PmMatrix& h, std::size_t k);

/// Symmetric quantization to [-127, 127] with scale = max|value| / 127 (1 when all zero).
SketchPacket quantize(const SparseSketch& sketch);
SparseSketch dequantize(const SketchPacket& packet);

/// Scatter the retained coefficients and invert the transform.
Eigen::VectorXd reconstruct(const SparseSketch& sketch, const PmMatrix& h);

SketchPacket encode(const Eigen::Ref<const Eigen::VectorXd>& x, const PmMatrix& h, const SketchConfig& cfg);
Eigen::VectorXd decode(const SketchPacket& packet, const PmMatrix& h);

struct ByteAccounting {
    std::size_t raw_bytes;
    std::size_t sketch_bytes;
    double ratio;
};

ByteAccounting byte_accounting(const SketchConfig& cfg);

/// Percentage by which order n exceeds order m: 100 (n/m - 1).
double granularity_gain(std::size_t n, std::size_t m);

} // namespace skewhad
