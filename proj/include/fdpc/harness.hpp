#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <vector>

#include "fdpc/codec.hpp"
#include "fdpc/codespec.hpp"
#include "fdpc/decode_soft.hpp"
#include "fdpc/sparse.hpp"

namespace fdpc {

enum class ChannelKind { Bec, Awgn };
enum class DecoderKind { BecMppl, SoftMppl, BecMlOracle };

struct DecoderConfig {
    DecoderKind kind = DecoderKind::BecMppl;
    std::uint32_t maxList = 1024;  // BEC MP-PL list cap (power of two)
    std::uint32_t lambdaIt = 4;    // BEC MP iterations per stage
    SoftConfig soft;
};

struct SimConfig {
    CodeSpec codeSpec;
    ChannelKind channel = ChannelKind::Bec;
    std::vector<double> grid;  // eps for BEC, SNR in dB for AWGN
    DecoderConfig decoder;
    std::uint64_t trials = 10000;
    std::uint64_t masterSeed = 1;
    std::uint64_t stopEarlyErrors = 200;  // 0 disables early stopping
    std::uint32_t threads = 0;            // 0 = hardware concurrency
    std::uint64_t chunkSize = 0;          // 0 = auto; must not depend on threads

    void validate() const;
};

struct SimRecord {
    double param = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t blockErrors = 0;
    std::uint64_t bitErrors = 0;
    std::uint64_t undetected = 0;  // decoded to a wrong codeword
    std::uint64_t notUnique = 0;   // BEC ambiguity outcomes
    double bler = 0.0;
    double ber = 0.0;
    double avgIters = 0.0;  // MP iterations per trial, all paths counted
    double avgList = 0.0;   // final list size per trial
    double seconds = 0.0;
};

/// Pre-built matrix/encoder/decoder shared by all points of one grid.
class SimRunner {
public:
    explicit SimRunner(const SimConfig& cfg);

    SimRecord run_point(double param) const;
    std::vector<SimRecord> run_grid() const;

    const SparseBitMatrix& matrix() const { return h_; }
    const Encoder& encoder() const { return enc_; }
    double rate() const;

private:
    SimConfig cfg_;
    SparseBitMatrix h_;
    Encoder enc_;
    std::unique_ptr<SoftMpplDecoder> soft_;
};

SimRecord run_point(const SimConfig& cfg, double param);
std::vector<SimRecord> run_grid(const SimConfig& cfg);

/// CSV with the mandatory header:
/// param,trials,block_errors,bler,ber,undetected,not_unique,avg_iters,avg_list,seconds
void write_sim_csv_header(std::ostream& os);
void write_sim_csv_row(std::ostream& os, const SimRecord& r);

}  // namespace fdpc
