#pragma once

#include <cstdint>
#include <vector>

#include "fdpc/channels.hpp"
#include "fdpc/decode.hpp"
#include "fdpc/sparse.hpp"

namespace fdpc {

/// One decoding path of the erasure MP-PL decoder. Check-side bookkeeping is
/// kept incrementally: per-check erased-neighbor counts and the parity of the
/// known neighbors.
struct BecPath {
    ErasureWord word;
    bool alive = true;
    std::vector<std::pair<std::uint32_t, bool>> history;  // (split column, assigned bit)

    std::vector<std::uint16_t> rowErased;  // erased neighbors per check
    std::vector<std::uint8_t> rowParity;   // parity of known neighbors per check
    std::uint32_t erasures = 0;

    BecPath() = default;
    /// Initializes the check-side state; the path dies immediately when a
    /// fully known check is already unsatisfied.
    BecPath(ErasureWord y, const SparseBitMatrix& h);

    bool finished() const { return alive && erasures == 0; }

    /// Assigns a value to an erased position and updates the check state;
    /// kills the path if a newly completed check is unsatisfied.
    void assign(std::uint32_t col, bool value, const SparseBitMatrix& h);
};

/// One flooding iteration of the standard erasure MP decoder: every check
/// with exactly one erased neighbor (relative to the pre-iteration word)
/// resolves it. Returns the number of erasures resolved; inconsistent
/// resolutions or an unsatisfied completed check kill the path.
std::uint32_t mp_iter_bec(BecPath& p, const SparseBitMatrix& h);

/// Path-splitting column: among checks, take the one with the fewest (but
/// non-zero) erased neighbors (lowest row index on ties) and return its
/// lowest-indexed erased column. Throws if the path has no erasures.
std::uint32_t path_split_index(const BecPath& p, const SparseBitMatrix& h);

/// MP-PL decoding for the BEC: stages of at most lambda_it MP iterations per
/// live path (a stage ends early once no erasure is resolved), then every
/// live unfinished path forks on its path-splitting index. Stops when a stage
/// produces completed paths (unique word -> Decoded, several -> NotUnique),
/// when a further split would exceed maxList, or when all paths are dead.
/// maxList must be a power of two; lambda_it >= 1.
DecodeResult decode_bec_mppl(const ErasureWord& y, const SparseBitMatrix& h,
                             std::uint32_t maxList = 1024, std::uint32_t lambda_it = 4);

/// Exact erased-bit solver by Gaussian elimination on the erased sub-system:
/// Decoded with the unique completion, or NotUnique when the sub-system has
/// free variables. Failure only for words inconsistent with every codeword.
DecodeResult ml_oracle_bec(const ErasureWord& y, const SparseBitMatrix& h);

}  // namespace fdpc
