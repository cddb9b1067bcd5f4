#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fdpc/codespec.hpp"
#include "fdpc/sparse.hpp"

namespace fdpc {

/// Base matrix for block length n = 4t^2: the 4t x n matrix whose columns are
/// exactly all weight-2 vectors of length 4t whose two non-zero row indices
/// differ by an odd number. Canonical column order: pairs (i, j) with i < j,
/// sorted lexicographically. Every row has weight 2t, every column weight 2.
/// Throws std::invalid_argument for t < 2.
SparseBitMatrix build_base(std::uint32_t t);

/// Order-s parity-check matrix: vertical stack of the base matrix and s-1
/// column-permuted copies (Fisher-Yates permutations seeded from
/// spec.permSeeds), followed by deletion of spec.shortenedColumns.
/// Deterministic: the same spec always yields the identical matrix.
SparseBitMatrix build_order_s(const CodeSpec& spec);

/// cols - rank(h).
std::uint32_t code_dimension(const SparseBitMatrix& h);

/// All codewords of weight <= wmax, wmax in {4, 6}; complete and
/// duplicate-free. Weight-4 search is a meet-in-the-middle over column-pair
/// XOR sums; weight-6 extends pair sums by one more pair via a hash join
/// (quadratic in the pair count, intended for small-to-moderate n).
std::vector<BitVec> find_low_weight_codewords(const SparseBitMatrix& h, std::uint32_t wmax);

/// Shortens per-weight: for each targeted weight w (ascending), removes
/// alphas[w] columns, each chosen as the lowest-indexed support column of the
/// lexicographically-first weight-w codeword still present; once no weight-w
/// codeword remains, further removals take the lowest-indexed surviving
/// column. Returns the spec with shortenedColumns extended (original-index
/// coordinates). Throws if the total removals reach the original dimension.
CodeSpec shorten(const CodeSpec& spec, const std::map<std::uint32_t, std::uint32_t>& alphas);

}  // namespace fdpc
