#include "skewhad/bit_matrix.hpp"

namespace skewhad {

std::vector<std::uint32_t> BitVector::ones() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for (std::size_t w = 0; w < words_.size(); ++w) {
        Word bits = words_[w];
        while (bits) {
            out.push_back(static_cast<std::uint32_t>(w * kWordBits + std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        auto r = row(i);
        for (std::size_t w = 0; w < stride_; ++w) {
            Word bits = r[w];
            while (bits) {
                t.set(w * kWordBits + std::countr_zero(bits), i);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

} // namespace skewhad
