#pragma once

#include <cstdint>

#include "fdpc/bits.hpp"

namespace fdpc {

enum class DecodeStatus {
    Decoded,    // one unique codeword produced
    NotUnique,  // two or more distinct codewords completed (BEC ambiguity)
    Failure     // list exhausted, stage cap hit, or all paths dead
};

const char* to_string(DecodeStatus s);

struct DecodeResult {
    DecodeStatus status = DecodeStatus::Failure;
    BitVec word;                      // decoded codeword on Decoded, best effort otherwise
    std::uint64_t iterations = 0;     // MP iterations summed over all paths
    std::uint32_t stages = 0;
    std::uint32_t peakList = 1;
    std::uint32_t finalList = 1;
};

}  // namespace fdpc
