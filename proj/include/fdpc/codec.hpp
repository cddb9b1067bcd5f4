#pragma once

#include <cstdint>
#include <vector>

#include "fdpc/bits.hpp"
#include "fdpc/sparse.hpp"

namespace fdpc {

/// Systematic encoder: k generator rows (each a codeword) plus the k
/// systematic column positions; generator rows restricted to the systematic
/// positions form the identity.
struct Encoder {
    std::uint32_t n = 0;
    std::vector<BitVec> generatorRows;          // size k, each length n
    std::vector<std::uint32_t> systematic;      // size k, ascending

    std::uint32_t k() const { return static_cast<std::uint32_t>(generatorRows.size()); }
};

/// Gaussian elimination on h; pivot columns carry parity, the remaining
/// columns are the systematic message positions.
Encoder build_encoder(const SparseBitMatrix& h);

/// msg has length k; returns the codeword whose systematic positions equal msg.
BitVec encode(const Encoder& e, const BitVec& msg);

}  // namespace fdpc
