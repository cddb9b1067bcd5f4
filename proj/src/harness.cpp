#include "fdpc/harness.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <future>
#include <stdexcept>
#include <thread>

#include "fdpc/channels.hpp"
#include "fdpc/construction.hpp"
#include "fdpc/decode_bec.hpp"
#include "fdpc/mlbounds.hpp"
#include "fdpc/rng.hpp"

namespace fdpc {

namespace {

constexpr std::uint64_t kPurposeMessage = 1;
constexpr std::uint64_t kPurposeChannel = 2;

struct Tally {
    std::uint64_t trials = 0, blockErrors = 0, bitErrors = 0, undetected = 0, notUnique = 0;
    std::uint64_t iterSum = 0, listSum = 0;

    void operator+=(const Tally& o) {
        trials += o.trials;
        blockErrors += o.blockErrors;
        bitErrors += o.bitErrors;
        undetected += o.undetected;
        notUnique += o.notUnique;
        iterSum += o.iterSum;
        listSum += o.listSum;
    }
};

std::uint64_t hamming(const BitVec& a, const BitVec& b) {
    std::uint64_t d = 0;
    auto wa = a.words(), wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i)
        d += static_cast<std::uint64_t>(std::popcount(wa[i] ^ wb[i]));
    return d;
}

}  // namespace

void SimConfig::validate() const {
    codeSpec.validate();
    if (trials < 1) throw std::invalid_argument("SimConfig: trials must be >= 1");
    if (grid.empty()) throw std::invalid_argument("SimConfig: empty parameter grid");
    if (channel == ChannelKind::Bec) {
        for (double e : grid)
            if (e < 0.0 || e > 1.0) throw std::invalid_argument("SimConfig: eps outside [0,1]");
    }
    if (channel == ChannelKind::Awgn && decoder.kind != DecoderKind::SoftMppl)
        throw std::invalid_argument("SimConfig: AWGN requires the soft decoder");
    if (channel == ChannelKind::Bec && decoder.kind == DecoderKind::SoftMppl)
        throw std::invalid_argument("SimConfig: soft decoder runs on AWGN only");
}

SimRunner::SimRunner(const SimConfig& cfg) : cfg_(cfg) {
    cfg_.validate();
    h_ = build_order_s(cfg_.codeSpec);
    enc_ = build_encoder(h_);
    if (enc_.k() == 0) throw std::invalid_argument("SimRunner: code dimension is zero");
    if (cfg_.decoder.kind == DecoderKind::SoftMppl)
        soft_ = std::make_unique<SoftMpplDecoder>(h_, cfg_.decoder.soft);
}

double SimRunner::rate() const { return static_cast<double>(enc_.k()) / h_.cols; }

SimRecord SimRunner::run_point(double param) const {
    auto t0 = std::chrono::steady_clock::now();

    const double sigma =
        cfg_.channel == ChannelKind::Awgn ? snr_db_to_sigma(param, rate()) : 0.0;
    const std::uint32_t k = enc_.k();

    auto run_trial = [&](std::uint64_t trial, Tally& tally) {
        SplitMix64 msgRng(derive_seed(cfg_.masterSeed, trial, kPurposeMessage));
        BitVec msg(k);
        {
            auto words = msg.words();
            for (std::size_t w = 0; w < words.size(); ++w) words[w] = msgRng.next_u64();
            if (k % 64) words[words.size() - 1] &= (std::uint64_t(1) << (k % 64)) - 1;
        }
        BitVec c = encode(enc_, msg);
        SplitMix64 chanRng(derive_seed(cfg_.masterSeed, trial, kPurposeChannel));

        DecodeResult res;
        if (cfg_.channel == ChannelKind::Bec) {
            ErasureWord y = bec_transmit(c, param, chanRng);
            if (cfg_.decoder.kind == DecoderKind::BecMlOracle)
                res = ml_oracle_bec(y, h_);
            else
                res = decode_bec_mppl(y, h_, cfg_.decoder.maxList, cfg_.decoder.lambdaIt);
        } else {
            auto y = awgn_transmit(c, sigma, chanRng);
            res = soft_->decode(y);
        }

        bool ok = res.status == DecodeStatus::Decoded && res.word == c;
        tally.trials++;
        if (!ok) {
            tally.blockErrors++;
            tally.bitErrors += hamming(res.word, c);
        }
        if (res.status == DecodeStatus::Decoded && !(res.word == c)) tally.undetected++;
        if (res.status == DecodeStatus::NotUnique) tally.notUnique++;
        tally.iterSum += res.iterations;
        tally.listSum += res.finalList;
    };

    const std::uint64_t chunk =
        cfg_.chunkSize ? cfg_.chunkSize
                       : std::max<std::uint64_t>(1, std::min<std::uint64_t>(1024, cfg_.trials / 64 + 1));
    const std::uint64_t numChunks = (cfg_.trials + chunk - 1) / chunk;
    unsigned threads = cfg_.threads ? cfg_.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, numChunks));

    auto run_chunk = [&](std::uint64_t ci) {
        Tally t;
        std::uint64_t lo = ci * chunk;
        std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, cfg_.trials);
        for (std::uint64_t trial = lo; trial < hi; ++trial) run_trial(trial, t);
        return t;
    };

    // chunks are accumulated strictly in order, and the early-stop decision is
    // taken at chunk boundaries, so serial and parallel runs agree exactly
    Tally total;
    if (threads <= 1) {
        for (std::uint64_t ci = 0; ci < numChunks; ++ci) {
            total += run_chunk(ci);
            if (cfg_.stopEarlyErrors && total.blockErrors >= cfg_.stopEarlyErrors) break;
        }
    } else {
        std::vector<std::future<Tally>> inflight;
        std::uint64_t nextToLaunch = 0;
        auto launch = [&]() {
            if (nextToLaunch < numChunks)
                inflight.push_back(std::async(std::launch::async, run_chunk, nextToLaunch++));
        };
        for (unsigned i = 0; i < threads; ++i) launch();
        for (std::size_t ci = 0; ci < inflight.size(); ++ci) {
            total += inflight[ci].get();
            if (cfg_.stopEarlyErrors && total.blockErrors >= cfg_.stopEarlyErrors) {
                for (std::size_t j = ci + 1; j < inflight.size(); ++j) inflight[j].wait();
                break;
            }
            launch();
        }
    }

    SimRecord rec;
    rec.param = param;
    rec.trials = total.trials;
    rec.blockErrors = total.blockErrors;
    rec.bitErrors = total.bitErrors;
    rec.undetected = total.undetected;
    rec.notUnique = total.notUnique;
    rec.bler = static_cast<double>(total.blockErrors) / static_cast<double>(total.trials);
    rec.ber = static_cast<double>(total.bitErrors) /
              (static_cast<double>(total.trials) * static_cast<double>(h_.cols));
    rec.avgIters = static_cast<double>(total.iterSum) / static_cast<double>(total.trials);
    rec.avgList = static_cast<double>(total.listSum) / static_cast<double>(total.trials);
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

std::vector<SimRecord> SimRunner::run_grid() const {
    std::vector<SimRecord> out;
    out.reserve(cfg_.grid.size());
    for (double p : cfg_.grid) out.push_back(run_point(p));
    return out;
}

SimRecord run_point(const SimConfig& cfg, double param) { return SimRunner(cfg).run_point(param); }

std::vector<SimRecord> run_grid(const SimConfig& cfg) { return SimRunner(cfg).run_grid(); }

void write_sim_csv_header(std::ostream& os) {
    os << "param,trials,block_errors,bler,ber,undetected,not_unique,avg_iters,avg_list,seconds\n";
}

void write_sim_csv_row(std::ostream& os, const SimRecord& r) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%.17g,%llu,%llu,%.17g,%.17g,%llu,%llu,%.17g,%.17g,%.3f\n",
                  r.param, static_cast<unsigned long long>(r.trials),
                  static_cast<unsigned long long>(r.blockErrors), r.bler, r.ber,
                  static_cast<unsigned long long>(r.undetected),
                  static_cast<unsigned long long>(r.notUnique), r.avgIters, r.avgList, r.seconds);
    os << buf;
}

}  // namespace fdpc
