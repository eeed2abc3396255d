#include "skewhad/sketch.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "skewhad/error.hpp"

namespace skewhad {

namespace {

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

std::uint16_t get_u16(std::span<const std::uint8_t> b, std::size_t at) {
    return static_cast<std::uint16_t>(b[at] | (b[at + 1] << 8));
}

} // namespace

std::vector<std::uint8_t> SketchPacket::serialize() const {
    std::vector<std::uint8_t> out;
    out.reserve(byte_size());
    const auto bits = std::bit_cast<std::uint32_t>(scale);
    for (int s = 0; s < 32; s += 8) out.push_back(static_cast<std::uint8_t>(bits >> s));
    put_u16(out, static_cast<std::uint16_t>(indices.size()));
    put_u16(out, n);
    for (std::size_t r = 0; r < indices.size(); ++r) {
        put_u16(out, indices[r]);
        out.push_back(static_cast<std::uint8_t>(qvalues[r]));
    }
    return out;
}

SketchPacket SketchPacket::parse(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 8) throw Error("sketch packet shorter than its 8-byte header");
    SketchPacket p;
    std::uint32_t bits = 0;
    for (int s = 0; s < 4; ++s) bits |= std::uint32_t{bytes[s]} << (8 * s);
    p.scale = std::bit_cast<float>(bits);
    const std::size_t k = get_u16(bytes, 4);
    p.n = get_u16(bytes, 6);
    if (bytes.size() != 8 + 3 * k)
        throw Error("sketch packet length " + std::to_string(bytes.size()) + " does not match 8 + 3k = " +
                    std::to_string(8 + 3 * k));
    if (!std::isfinite(p.scale) || p.scale <= 0.0f) throw Error("sketch packet scale must be positive and finite");
    if (k > p.n) throw Error("sketch packet keeps more components than its order");
    p.indices.resize(k);
    p.qvalues.resize(k);
    for (std::size_t r = 0; r < k; ++r) {
        p.indices[r] = get_u16(bytes, 8 + 3 * r);
        p.qvalues[r] = static_cast<std::int8_t>(bytes[8 + 3 * r + 2]);
        if (p.indices[r] >= p.n) throw Error("sketch index out of range");
        if (r > 0 && p.indices[r] <= p.indices[r - 1]) throw Error("sketch indices not strictly increasing");
        if (p.qvalues[r] == -128) throw Error("quantized value -128 outside [-127, 127]");
    }
    return p;
}

Eigen::VectorXd sketch_transform(const Eigen::Ref<const Eigen::VectorXd>& x, const PmMatrix& h) {
    const std::size_t n = h.order();
    if (static_cast<std::size_t>(x.size()) != n) throw Error("vector length does not match transform order");
    if (!x.allFinite()) throw Error("non-finite input");
    const double total = x.sum();
    Eigen::VectorXd y(n);
    for (std::size_t i = 0; i < n; ++i) {
        // sum_j H_ij x_j = total - 2 * (sum over the -1 entries)
        double neg = 0.0;
        const auto row = h.bits().row(i);
        for (std::size_t w = 0; w < row.size(); ++w) {
            Word bits = row[w];
            while (bits) {
                neg += x[w * kWordBits + std::countr_zero(bits)];
                bits &= bits - 1;
            }
        }
        y[i] = total - 2.0 * neg;
    }
    return y / std::sqrt(static_cast<double>(n));
}

Eigen::VectorXd inverse_transform(const Eigen::Ref<const Eigen::VectorXd>& y, const PmMatrix& h) {
    const std::size_t n = h.order();
    if (static_cast<std::size_t>(y.size()) != n) throw Error("vector length does not match transform order");
    // (H^T y)_j = sum_i H_ij y_i
    Eigen::VectorXd x = Eigen::VectorXd::Constant(n, y.sum());
    for (std::size_t i = 0; i < n; ++i) {
        if (y[i] == 0.0) continue;
        const auto row = h.bits().row(i);
        for (std::size_t w = 0; w < row.size(); ++w) {
            Word bits = row[w];
            while (bits) {
                x[w * kWordBits + std::countr_zero(bits)] -= 2.0 * y[i];
                bits &= bits - 1;
            }
        }
    }
    return x / std::sqrt(static_cast<double>(n));
}

SparseSketch sketch_topk(const Eigen::Ref<const Eigen::VectorXd>& x, const PmMatrix& h, std::size_t k) {
    const std::size_t n = h.order();
    if (k < 1 || k > n) throw Error("k must lie in [1, n]");
    if (n > 0xffff) throw Error("transform order does not fit a 16-bit index");
    const Eigen::VectorXd y = sketch_transform(x, h);

    std::vector<std::uint16_t> order(n);
    std::iota(order.begin(), order.end(), std::uint16_t{0});
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                      [&](std::uint16_t a, std::uint16_t b) {
                          const double ya = std::abs(y[a]), yb = std::abs(y[b]);
                          return ya != yb ? ya > yb : a < b;
                      });
    order.resize(k);
    std::sort(order.begin(), order.end());

    SparseSketch s;
    s.n = n;
    s.indices = std::move(order);
    s.values.reserve(k);
    for (auto i : s.indices) s.values.push_back(y[i]);
    return s;
}

SketchPacket quantize(const SparseSketch& sketch) {
    SketchPacket p;
    p.n = static_cast<std::uint16_t>(sketch.n);
    p.indices = sketch.indices;
    double peak = 0.0;
    for (double v : sketch.values) peak = std::max(peak, std::abs(v));
    if (peak > 0.0) {
        p.scale = static_cast<float>(peak / 127.0);
        // Keep peak / scale <= 127 after the float rounding.
        while (static_cast<double>(p.scale) * 127.0 < peak) p.scale = std::nextafter(p.scale, HUGE_VALF);
    }
    p.qvalues.reserve(sketch.values.size());
    for (double v : sketch.values) {
        const double q = std::round(v / static_cast<double>(p.scale));
        p.qvalues.push_back(static_cast<std::int8_t>(std::clamp(q, -127.0, 127.0)));
    }
    return p;
}

SparseSketch dequantize(const SketchPacket& packet) {
    SparseSketch s;
    s.n = packet.n;
    s.indices = packet.indices;
    s.values.reserve(packet.qvalues.size());
    for (auto q : packet.qvalues) s.values.push_back(static_cast<double>(q) * static_cast<double>(packet.scale));
    return s;
}

Eigen::VectorXd reconstruct(const SparseSketch& sketch, const PmMatrix& h) {
    if (sketch.n != h.order()) throw Error("sketch order does not match the transform matrix");
    Eigen::VectorXd y = Eigen::VectorXd::Zero(sketch.n);
    for (std::size_t r = 0; r < sketch.indices.size(); ++r) {
        if (sketch.indices[r] >= sketch.n) throw Error("sketch index out of range");
        y[sketch.indices[r]] = sketch.values[r];
    }
    return inverse_transform(y, h);
}

SketchPacket encode(const Eigen::Ref<const Eigen::VectorXd>& x, const PmMatrix& h, const SketchConfig& cfg) {
    if (cfg.n != h.order()) throw Error("configured order does not match the transform matrix");
    if (cfg.quant_bits != 8) throw Error("only 8-bit quantization is supported");
    return quantize(sketch_topk(x, h, cfg.k));
}

Eigen::VectorXd decode(const SketchPacket& packet, const PmMatrix& h) { return reconstruct(dequantize(packet), h); }

ByteAccounting byte_accounting(const SketchConfig& cfg) {
    const std::size_t raw = 4 * cfg.n;
    const std::size_t sketch = 8 + 3 * cfg.k;
    return {raw, sketch, static_cast<double>(raw) / static_cast<double>(sketch)};
}

double granularity_gain(std::size_t n, std::size_t m) {
    return 100.0 * (static_cast<double>(n) / static_cast<double>(m) - 1.0);
}

} // namespace skewhad
