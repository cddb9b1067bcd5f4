#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fdpc {

/// Packed bit vector over GF(2), 64 bits per word, LSB-first within a word.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : words_((n + 63) / 64, 0), size_(n) {}

    static BitVec from_indices(std::size_t n, std::span<const std::uint32_t> ones);

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    BitVec& operator^=(const BitVec& o);
    friend BitVec operator^(BitVec a, const BitVec& b) { a ^= b; return a; }
    bool operator==(const BitVec& o) const = default;

    std::size_t weight() const;
    bool any() const;
    /// Index of the lowest set bit, or size() if none.
    std::size_t lowest_set_bit() const;
    std::vector<std::uint32_t> one_indices() const;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

private:
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

/// GF(2) parity of the AND of two equal-length vectors.
bool dot_parity(const BitVec& a, const BitVec& b);

/// Dense row-major binary matrix.
struct BitMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<BitVec> row;

    BitMatrix() = default;
    BitMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), row(r, BitVec(c)) {}

    static BitMatrix identity(std::size_t n);
    bool get(std::size_t r, std::size_t c) const { return row[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { row[r].set(c, v); }
};

/// GF(2) row rank via elimination; the input is taken by value and not modified.
std::size_t rank(BitMatrix m);

/// Basis of {v : m v = 0}; size is cols - rank(m), vectors are linearly independent.
std::vector<BitVec> nullspace_basis(const BitMatrix& m);

/// m * x over GF(2). Throws std::invalid_argument on length mismatch.
BitVec syndrome(const BitMatrix& m, const BitVec& x);

/// Reduced row echelon form in place; returns pivot column per eliminated row.
std::vector<std::uint32_t> rref_in_place(BitMatrix& m);

}  // namespace fdpc
