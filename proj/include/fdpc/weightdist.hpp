#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "fdpc/bits.hpp"
#include "fdpc/sparse.hpp"

namespace fdpc {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

enum class WeightKind { Exact, UpperBound, EnsembleAverage };

const char* to_string(WeightKind k);

struct SpectrumEntry {
    BigRat value;
    WeightKind kind = WeightKind::Exact;
};

/// Per-weight codeword counts (or bounds / ensemble averages on them).
struct WeightSpectrum {
    std::map<std::uint32_t, SpectrumEntry> entries;

    bool has(std::uint32_t w) const { return entries.count(w) != 0; }
    const SpectrumEntry& at(std::uint32_t w) const { return entries.at(w); }
    void set(std::uint32_t w, BigRat value, WeightKind kind) {
        entries[w] = SpectrumEntry{std::move(value), kind};
    }
};

BigInt binomial(const BigInt& n, std::uint64_t k);

/// Number of irreducible (single-loop) codewords of even weight m in the
/// order-1 code: prod_{i=0}^{m/2-1} (2t-i)^2 / m for 4 <= m <= 4t, else 0.
BigInt irreducible_count(std::uint32_t t, std::uint32_t m);

/// Upper bound on A_w of the order-1 code: sum over all collections of
/// irreducible codewords with total weight w of prod_m C(A_m_ir, a_m),
/// computed by dynamic programming in exact big-integer arithmetic.
BigInt weight_upper_bound(std::uint32_t t, std::uint32_t w);

/// Pair-corrected variant: subtracts the exact number of overlapping
/// two-loop collections (computable for t <= 3 by enumerating all loops);
/// falls back to weight_upper_bound for t > 3. Still an upper bound.
BigInt improved_weight_upper_bound(std::uint32_t t, std::uint32_t w);

/// Expected weight-w count of the order-2 ensemble: A_w^2 / C(n, w), with
/// aw the exact A_w of the order-1 code. Zero for odd w or w < 4.
double ensemble_avg_weight(std::uint64_t n, std::uint32_t w, const BigInt& aw);
BigRat ensemble_avg_weight_exact(std::uint64_t n, std::uint32_t w, const BigInt& aw);

/// E{A_w} spectrum of the order-2 ensemble for even w in [4, wmax]: exact via
/// irreducible counts for w in {4, 6}, upper-bound-backed beyond (flagged).
WeightSpectrum ensemble_average_spectrum(std::uint32_t t, std::uint32_t wmax);

/// Exact spectrum by iterating all 2^k codewords with Gray-code stepping over
/// the nullspace basis. Throws if the code dimension exceeds 26.
WeightSpectrum enumerate_exhaustive(const SparseBitMatrix& h);

/// Exhaustive enumeration of a column-weight-2 matrix that additionally
/// classifies each codeword as single-loop or not.
struct LoopCensus {
    std::map<std::uint32_t, std::uint64_t> total;       // weight -> count
    std::map<std::uint32_t, std::uint64_t> singleLoop;  // weight -> irreducible count
};
LoopCensus enumerate_loop_census(const SparseBitMatrix& hb);

/// Splits a codeword of a column-weight-2 code into support-disjoint
/// single-loop codewords whose XOR is the input, by walking loops in the
/// induced subgraph (lowest-index tie-breaks). Throws if c is not a codeword.
std::vector<BitVec> decompose_into_loops(const SparseBitMatrix& hb, const BitVec& c);

/// All irreducible codewords of the order-1 code as support vectors
/// (enumerated as simple cycles of the check multigraph); small t only.
std::vector<BitVec> enumerate_irreducible(std::uint32_t t);

/// CSV: header "weight,value,kind"; integral values printed exactly.
void write_spectrum_csv(std::ostream& os, const WeightSpectrum& s);

}  // namespace fdpc
