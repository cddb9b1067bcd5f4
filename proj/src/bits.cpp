#include "fdpc/bits.hpp"

#include <bit>
#include <stdexcept>

namespace fdpc {

BitVec BitVec::from_indices(std::size_t n, std::span<const std::uint32_t> ones) {
    BitVec v(n);
    for (auto i : ones) v.set(i, true);
    return v;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (o.size_ != size_) throw std::invalid_argument("BitVec xor: size mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
}

std::size_t BitVec::weight() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool BitVec::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

std::size_t BitVec::lowest_set_bit() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return size_;
}

std::vector<std::uint32_t> BitVec::one_indices() const {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            out.push_back(static_cast<std::uint32_t>(i * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

bool dot_parity(const BitVec& a, const BitVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot_parity: size mismatch");
    std::uint64_t acc = 0;
    auto wa = a.words(), wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i) acc ^= wa[i] & wb[i];
    return std::popcount(acc) & 1;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

std::vector<std::uint32_t> rref_in_place(BitMatrix& m) {
    std::vector<std::uint32_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m.cols && pr < m.rows; ++c) {
        std::size_t sel = pr;
        while (sel < m.rows && !m.row[sel].get(c)) ++sel;
        if (sel == m.rows) continue;
        std::swap(m.row[pr], m.row[sel]);
        for (std::size_t r = 0; r < m.rows; ++r)
            if (r != pr && m.row[r].get(c)) m.row[r] ^= m.row[pr];
        pivots.push_back(static_cast<std::uint32_t>(c));
        ++pr;
    }
    return pivots;
}

std::size_t rank(BitMatrix m) { return rref_in_place(m).size(); }

std::vector<BitVec> nullspace_basis(const BitMatrix& m) {
    BitMatrix r = m;
    auto pivots = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<BitVec> basis;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        BitVec v(m.cols);
        v.set(f, true);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (r.row[i].get(f)) v.set(pivots[i], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

BitVec syndrome(const BitMatrix& m, const BitVec& x) {
    if (x.size() != m.cols) throw std::invalid_argument("syndrome: length mismatch");
    BitVec s(m.rows);
    for (std::size_t r = 0; r < m.rows; ++r)
        if (dot_parity(m.row[r], x)) s.set(r, true);
    return s;
}

}  // namespace fdpc
