#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fdpc/bits.hpp"

namespace fdpc {

/// Sparse binary parity-check matrix with both Tanner-graph views:
/// per-check (row) and per-variable (column) adjacency. Adjacency lists are
/// sorted, duplicate-free and mutually consistent.
struct SparseBitMatrix {
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    std::vector<std::vector<std::uint32_t>> rowAdj;  // column indices per check
    std::vector<std::vector<std::uint32_t>> colAdj;  // row indices per variable

    SparseBitMatrix() = default;

    /// Builds from per-row column lists (need not be sorted); validates indices.
    static SparseBitMatrix from_rows(std::uint32_t rows, std::uint32_t cols,
                                     std::vector<std::vector<std::uint32_t>> rowAdj);

    std::size_t edge_count() const;
    BitMatrix to_dense() const;
    /// Column c as a packed length-`rows` bit vector.
    BitVec column(std::uint32_t c) const;

    /// New matrix with the given columns removed (indices into this matrix);
    /// remaining columns are renumbered, empty rows are kept.
    SparseBitMatrix without_columns(const std::vector<std::uint32_t>& cols_to_drop) const;

    bool operator==(const SparseBitMatrix&) const = default;
};

/// Text format: header "rows cols", then one line per row with the 1-based
/// column indices of its non-zeros in ascending order.
void save_matrix(const SparseBitMatrix& m, const std::string& path);
SparseBitMatrix load_matrix(const std::string& path);

BitVec sparse_syndrome(const SparseBitMatrix& h, const BitVec& x);
bool is_codeword(const SparseBitMatrix& h, const BitVec& x);

}  // namespace fdpc
