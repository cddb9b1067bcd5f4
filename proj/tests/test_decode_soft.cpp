#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "fdpc/channels.hpp"
#include "fdpc/codec.hpp"
#include "fdpc/construction.hpp"
#include "fdpc/decode_soft.hpp"
#include "test_support.hpp"

using namespace fdpc;

namespace {

std::vector<double> bpsk(const BitVec& c) {
    std::vector<double> y(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) y[i] = c.get(i) ? -1.0 : 1.0;
    return y;
}

}  // namespace

TEST_CASE("hard_decision: sign convention with ties to zero") {
    std::vector<double> y = {1.0, -1.0, 0.0, 2.5, -0.1};
    auto b = hard_decision(y);
    CHECK_FALSE(b.get(0));
    CHECK(b.get(1));
    CHECK_FALSE(b.get(2));  // tie -> bit 0
    CHECK_FALSE(b.get(3));
    CHECK(b.get(4));
}

TEST_CASE("decode_soft_mppl: noiseless input decodes in one iteration") {
    auto hb = build_base(2);
    auto cw = test::example2_codeword(hb);
    auto res = decode_soft_mppl(bpsk(cw), hb);
    CHECK(res.status == DecodeStatus::Decoded);
    CHECK(res.word == cw);
    CHECK(res.iterations <= 1);
    CHECK(res.finalList == 1);

    auto all1 = decode_soft_mppl(std::vector<double>(16, -1.0), hb);  // all-ones word
    CHECK(all1.status == DecodeStatus::Decoded);
    CHECK(all1.word.weight() == 16);
}

TEST_CASE("min_sum_iteration: noiseless hard decisions are stable") {
    auto hb = build_base(2);
    auto cw = test::example2_codeword(hb);
    SoftMpplDecoder dec(hb);
    auto p = dec.make_path(bpsk(cw));
    for (int i = 0; i < 10; ++i) {
        min_sum_iteration(p, hb);
        BitVec hard(16);
        for (int j = 0; j < 16; ++j)
            if ((p.hard[0] >> j) & 1) hard.set(j, true);
        CHECK(hard == cw);
    }
}

TEST_CASE("positive homogeneity: scaling inputs by 2 changes nothing") {
    CodeSpec spec;
    spec.t = 4;
    spec.s = 2;
    spec.permSeeds = {31};
    auto h = build_order_s(spec);
    auto enc = build_encoder(h);

    SoftConfig cfg;
    cfg.maxStages = 6;
    cfg.maxList = 64;
    SoftMpplDecoder dec(h, cfg);

    for (std::uint64_t trial = 0; trial < 40; ++trial) {
        SplitMix64 mg(derive_seed(1234, trial, 1));
        BitVec c = encode(enc, test::random_bits(enc.k(), mg));
        SplitMix64 cg(derive_seed(1234, trial, 2));
        auto y = awgn_transmit(c, 0.8, cg);
        std::vector<double> y2(y);
        for (auto& v : y2) v *= 2.0;

        auto a = dec.decode(y);
        auto b = dec.decode(y2);
        CHECK(a.status == b.status);
        CHECK(a.word == b.word);
        CHECK(a.iterations == b.iterations);
        CHECK(a.stages == b.stages);
        CHECK(a.finalList == b.finalList);
    }
}

TEST_CASE("deficiency: zero when satisfied; localized around an unsatisfied check") {
    // custom 2x3 matrix: row0 = {0,1}, row1 = {1,2}
    auto m = SparseBitMatrix::from_rows(2, 3, {{0, 1}, {1, 2}});
    SoftPath p;
    p.hard.assign(1, 0);
    auto defsAllSat = deficiency(p, m);
    CHECK(defsAllSat == std::vector<std::uint32_t>{0, 0, 0});

    p.hard[0] = 1;  // bit 0 set -> row0 unsatisfied, row1 satisfied
    auto defs = deficiency(p, m);
    CHECK(defs == std::vector<std::uint32_t>{1, 1, 0});
}

TEST_CASE("deficiency: bounded by the column weight 2s") {
    CodeSpec spec;
    spec.t = 4;
    spec.s = 2;
    spec.permSeeds = {5};
    auto h = build_order_s(spec);
    SoftMpplDecoder dec(h);
    SplitMix64 g(6);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> y(h.cols);
        for (auto& v : y) v = g.next_gaussian();
        auto p = dec.make_path(y);
        for (auto d : deficiency(p, h)) CHECK(d <= 4);
    }
}

TEST_CASE("plain weighted min-sum is the maxList=1/maxStages=1 configuration") {
    CodeSpec spec;
    spec.t = 4;
    spec.s = 2;
    spec.permSeeds = {41};
    auto h = build_order_s(spec);
    auto enc = build_encoder(h);

    SoftConfig plain;
    plain.maxList = 1;
    plain.maxStages = 1;
    plain.itersPerStage = 50;
    SoftMpplDecoder minsum(h, plain);

    SplitMix64 mg(derive_seed(55, 1, 1));
    BitVec c = encode(enc, test::random_bits(enc.k(), mg));
    SplitMix64 cg(derive_seed(55, 1, 2));
    auto res = minsum.decode(awgn_transmit(c, 0.45, cg));
    CHECK(res.finalList == 1);
    CHECK(res.peakList == 1);
    CHECK(res.stages == 1);
    CHECK(res.iterations <= 50);
}

TEST_CASE("list decoding recovers at least as many blocks as plain min-sum") {
    CodeSpec spec;
    spec.t = 4;
    spec.s = 2;
    spec.permSeeds = {41};
    auto h = build_order_s(spec);
    auto enc = build_encoder(h);

    SoftConfig plain;
    plain.maxList = 1;
    plain.maxStages = 1;
    plain.itersPerStage = 4;
    SoftMpplDecoder minsum(h, plain);

    SoftConfig listy;
    listy.itersPerStage = 4;
    listy.maxStages = 8;
    listy.maxList = 256;
    SoftMpplDecoder mppl(h, listy);

    int okPlain = 0, okList = 0, undetected = 0;
    for (std::uint64_t trial = 0; trial < 300; ++trial) {
        SplitMix64 mg(derive_seed(77, trial, 1));
        BitVec c = encode(enc, test::random_bits(enc.k(), mg));
        SplitMix64 cg(derive_seed(77, trial, 2));
        auto y = awgn_transmit(c, 0.55, cg);
        auto a = minsum.decode(y);
        auto b = mppl.decode(y);
        if (a.status == DecodeStatus::Decoded && a.word == c) ++okPlain;
        if (b.status == DecodeStatus::Decoded) {
            CHECK(is_codeword(h, b.word));
            if (b.word == c)
                ++okList;
            else
                ++undetected;
        }
    }
    CHECK(okList + undetected >= okPlain);
    CHECK(okList > okPlain / 2);
}

TEST_CASE("decoded output always satisfies the parity checks") {
    CodeSpec spec;
    spec.t = 4;
    spec.s = 2;
    spec.permSeeds = {9};
    auto h = build_order_s(spec);
    SoftConfig cfg;
    cfg.maxStages = 6;
    cfg.maxList = 64;
    SoftMpplDecoder dec(h, cfg);
    SplitMix64 g(12);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<double> y(h.cols);
        for (auto& v : y) v = 0.3 * g.next_gaussian();  // heavy noise
        auto res = dec.decode(y);
        CHECK(res.stages <= cfg.maxStages);
        CHECK(res.finalList <= cfg.maxList);
        if (res.status == DecodeStatus::Decoded) CHECK(is_codeword(h, res.word));
    }
}

TEST_CASE("configuration validation") {
    auto h = build_base(2);
    SoftConfig bad;
    bad.beta = 0.0;
    CHECK_THROWS_AS(SoftMpplDecoder(h, bad), std::invalid_argument);

    auto degenerate = SparseBitMatrix::from_rows(2, 3, {{0, 1, 2}, {1}});
    CHECK_THROWS_AS(SoftMpplDecoder(degenerate, SoftConfig{}), std::invalid_argument);
}
