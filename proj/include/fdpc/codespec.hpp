#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fdpc {

/// Everything that determines one code instance: base parameter t (block
/// length n = 4t^2), stacking order s, the seeds of the s-1 column
/// permutations, and the ordered list of shortened (removed) columns given
/// as indices into the original n columns.
struct CodeSpec {
    std::uint32_t t = 2;
    std::uint32_t s = 1;
    std::vector<std::uint64_t> permSeeds;            // size s-1
    std::vector<std::uint32_t> shortenedColumns;     // distinct, < n

    std::uint32_t n() const { return 4 * t * t; }
    /// Throws std::invalid_argument if any invariant is violated.
    void validate() const;
};

/// Flat key-value text file: t, n, s, perm_seed_1..., shortened_columns.
void save_spec(const CodeSpec& spec, const std::string& path);
CodeSpec load_spec(const std::string& path);

}  // namespace fdpc
