#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fdpc/decode.hpp"
#include "fdpc/sparse.hpp"

namespace fdpc {

/// Saturation magnitude for accumulated soft values and forced split bits.
inline constexpr float kLlrMax = 64.0f;

struct SoftConfig {
    double beta = 0.05;
    std::uint32_t itersPerStage = 4;
    std::uint32_t maxStages = 16;
    std::uint32_t maxList = 1u << 16;
    bool checkEveryIteration = true;  // parity test after each iteration, not only at stage end
};

/// One decoding path: accumulated per-bit soft values, variable-to-check edge
/// messages (row-major edge order), current hard decisions, and the split
/// history whose variables stay saturated at +/-kLlrMax.
struct SoftPath {
    std::vector<float> y;
    std::vector<float> q;
    std::vector<std::uint64_t> hard;         // packed hard decisions (1 = bit one)
    std::vector<std::int8_t> forcedSign;     // 0 none, +1/-1 forced
    std::vector<std::pair<std::uint32_t, std::int8_t>> splitHistory;
};

/// bit = 0 iff y_i >= 0 (ties to 0).
BitVec hard_decision(std::span<const double> y);

/// One full flooding iteration of the weighted min-sum update on path p.
void min_sum_iteration(SoftPath& p, const SparseBitMatrix& h, double beta = 0.05);

/// Per-variable deficiency: number of parity checks that are unsatisfied
/// under the path's current hard decisions, summed over each variable's
/// neighboring checks.
std::vector<std::uint32_t> deficiency(const SoftPath& p, const SparseBitMatrix& h);

/// Weighted min-sum MP with progressive list splitting. Messages are
/// initialized from the (internally rescaled) channel output, so any positive
/// scaling of the input leaves the decoding trajectory unchanged.
class SoftMpplDecoder {
public:
    SoftMpplDecoder(const SparseBitMatrix& h, SoftConfig cfg = {});

    DecodeResult decode(std::span<const double> yin) const;

    const SoftConfig& config() const { return cfg_; }
    std::uint32_t n() const { return n_; }

    /// Initializes a path from channel outputs (q = y = scaled input).
    SoftPath make_path(std::span<const double> yin) const;

private:
    friend void min_sum_iteration(SoftPath&, const SparseBitMatrix&, double);

    struct Scratch {
        std::vector<float> r;    // per-edge check-to-variable messages
        std::vector<float> acc;  // per-variable sums of incoming r
    };

    void iterate(SoftPath& p, Scratch& s) const;
    bool checks_satisfied(const SoftPath& p) const;
    std::uint32_t pick_split_variable(const SoftPath& p) const;

    SoftConfig cfg_;
    std::uint32_t n_ = 0, r_ = 0;
    std::vector<std::uint32_t> rowPtr_;   // r_+1 edge offsets
    std::vector<std::uint32_t> rowCols_;  // column of each edge
};

/// Convenience wrapper around SoftMpplDecoder for one-shot use.
DecodeResult decode_soft_mppl(std::span<const double> yin, const SparseBitMatrix& h,
                              const SoftConfig& cfg = {});

}  // namespace fdpc
