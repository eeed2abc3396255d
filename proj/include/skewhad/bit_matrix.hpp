#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace skewhad {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t i) const {
        assert(i < size_);
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
    }
    void set(std::size_t i, bool value = true) {
        assert(i < size_);
        const Word mask = Word{1} << (i % kWordBits);
        if (value)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Indices of set bits, ascending.
    std::vector<std::uint32_t> ones() const;

    std::span<const Word> words() const noexcept { return words_; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

/// Row-major bit matrix; each row is padded with zero bits to a whole number of words.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t stride() const noexcept { return stride_; }

    bool test(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return (data_[i * stride_ + j / kWordBits] >> (j % kWordBits)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool value = true) {
        assert(i < rows_ && j < cols_);
        const Word mask = Word{1} << (j % kWordBits);
        Word& w = data_[i * stride_ + j / kWordBits];
        w = value ? (w | mask) : (w & ~mask);
    }
    void flip(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        data_[i * stride_ + j / kWordBits] ^= Word{1} << (j % kWordBits);
    }

    std::span<const Word> row(std::size_t i) const { return {data_.data() + i * stride_, stride_}; }
    std::span<Word> row(std::size_t i) { return {data_.data() + i * stride_, stride_}; }

    std::size_t row_count(std::size_t i) const {
        std::size_t c = 0;
        for (Word w : row(i)) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    BitMatrix transpose() const;

    /// 0/1 entries as an Eigen matrix.
    template <typename Scalar>
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> to_dense() const {
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(i, j) = test(i, j) ? Scalar(1) : Scalar(0);
        return out;
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

/// Square matrix with entries in {+1, -1}; a set bit stores -1.
class PmMatrix {
public:
    PmMatrix() = default;
    /// All-ones matrix of order n.
    explicit PmMatrix(std::size_t n) : bits_(n, n) {}

    std::size_t order() const noexcept { return bits_.rows(); }

    int operator()(std::size_t i, std::size_t j) const { return bits_.test(i, j) ? -1 : 1; }
    void set(std::size_t i, std::size_t j, int sign) { bits_.set(i, j, sign < 0); }
    void flip(std::size_t i, std::size_t j) { bits_.flip(i, j); }

    const BitMatrix& bits() const noexcept { return bits_; }
    BitMatrix& bits() noexcept { return bits_; }

    /// Row sum: order() - 2 * (number of -1 entries).
    long row_sum(std::size_t i) const {
        return static_cast<long>(order()) - 2 * static_cast<long>(bits_.row_count(i));
    }

    PmMatrix transpose() const {
        PmMatrix t;
        t.bits_ = bits_.transpose();
        return t;
    }

    template <typename Scalar>
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> to_dense() const {
        const auto n = order();
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) = Scalar((*this)(i, j));
        return out;
    }

    /// Negative entries map to -1, everything else to +1.
    template <typename Derived>
    static PmMatrix from_dense(const Eigen::MatrixBase<Derived>& m) {
        assert(m.rows() == m.cols());
        PmMatrix out(static_cast<std::size_t>(m.rows()));
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                if (m(i, j) < 0) out.bits_.set(i, j);
        return out;
    }

    friend bool operator==(const PmMatrix&, const PmMatrix&) = default;

private:
    BitMatrix bits_;
};

} // namespace skewhad
