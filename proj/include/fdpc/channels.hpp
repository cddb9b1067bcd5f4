#pragma once

#include <vector>

#include "fdpc/bits.hpp"
#include "fdpc/rng.hpp"

namespace fdpc {

/// Channel-side word for the BEC: known values plus an erasure mask
/// (value bits under the mask are zero and meaningless).
struct ErasureWord {
    BitVec values;
    BitVec erased;

    explicit ErasureWord(std::size_t n = 0) : values(n), erased(n) {}
    static ErasureWord from_codeword(const BitVec& c) { return ErasureWord{c, BitVec(c.size())}; }
    ErasureWord(BitVec v, BitVec e) : values(std::move(v)), erased(std::move(e)) {}

    std::size_t size() const { return values.size(); }
    std::size_t erasure_count() const { return erased.weight(); }
};

/// BEC(eps): each symbol independently erased with probability eps, never flipped.
ErasureWord bec_transmit(const BitVec& c, double eps, SplitMix64& rng);

/// BPSK (0 -> +1, 1 -> -1) plus N(0, sigma^2) noise; raw outputs, unscaled.
std::vector<double> awgn_transmit(const BitVec& c, double sigma, SplitMix64& rng);

}  // namespace fdpc
