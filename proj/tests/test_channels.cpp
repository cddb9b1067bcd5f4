#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "fdpc/channels.hpp"
#include "fdpc/mlbounds.hpp"
#include "test_support.hpp"

using namespace fdpc;

TEST_CASE("bec_transmit: deterministic per (seed, trial)") {
    BitVec c(200);
    for (int i = 0; i < 200; i += 3) c.set(i, true);
    ChannelRng rng{42, 7};
    auto s1 = rng.stream();
    auto s2 = rng.stream();
    auto y1 = bec_transmit(c, 0.3, s1);
    auto y2 = bec_transmit(c, 0.3, s2);
    CHECK(y1.values == y2.values);
    CHECK(y1.erased == y2.erased);

    auto s3 = ChannelRng{42, 8}.stream();
    auto y3 = bec_transmit(c, 0.3, s3);
    CHECK(y1.erased != y3.erased);
}

TEST_CASE("bec_transmit: eps 0 and 1, and no bit flips ever") {
    BitVec c(500);
    SplitMix64 g(3);
    for (int i = 0; i < 500; ++i)
        if (g.next_u64() & 1) c.set(i, true);

    auto s0 = ChannelRng{1, 1}.stream();
    auto y0 = bec_transmit(c, 0.0, s0);
    CHECK(y0.values == c);
    CHECK(y0.erasure_count() == 0);

    auto s1 = ChannelRng{1, 2}.stream();
    auto y1 = bec_transmit(c, 1.0, s1);
    CHECK(y1.erasure_count() == 500);

    auto s2 = ChannelRng{1, 3}.stream();
    auto y = bec_transmit(c, 0.4, s2);
    for (int i = 0; i < 500; ++i)
        if (!y.erased.get(i)) CHECK(y.values.get(i) == c.get(i));
}

TEST_CASE("bec_transmit: erased fraction concentrates") {
    const std::size_t n = 1000000;
    BitVec c(n);
    auto s = ChannelRng{99, 0}.stream();
    auto y = bec_transmit(c, 0.15, s);
    double frac = static_cast<double>(y.erasure_count()) / n;
    double sigma = std::sqrt(0.15 * 0.85 / n);
    CHECK(std::fabs(frac - 0.15) <= 4 * sigma);
}

TEST_CASE("awgn_transmit: noiseless mapping and determinism") {
    BitVec c(10);
    c.set(1, true);
    c.set(4, true);
    auto s = ChannelRng{5, 5}.stream();
    auto y = awgn_transmit(c, 0.0, s);
    for (int i = 0; i < 10; ++i) CHECK(y[i] == (c.get(i) ? -1.0 : 1.0));

    auto sa = ChannelRng{5, 6}.stream();
    auto sb = ChannelRng{5, 6}.stream();
    CHECK(awgn_transmit(c, 0.7, sa) == awgn_transmit(c, 0.7, sb));
}

TEST_CASE("awgn_transmit: gaussian statistics on the zero codeword") {
    const std::size_t n = 1000000;
    BitVec c(n);
    auto s = ChannelRng{123, 0}.stream();
    auto y = awgn_transmit(c, 1.0, s);
    double mean = 0;
    for (double v : y) mean += v;
    mean /= n;
    double var = 0;
    for (double v : y) var += (v - mean) * (v - mean);
    var /= (n - 1);
    CHECK(std::fabs(mean - 1.0) <= 4.0 / std::sqrt(double(n)));
    CHECK(std::fabs(var - 1.0) <= 4.0 * std::sqrt(2.0 / double(n)));

    // per-bit sign flips happen with probability Q(1/sigma)
    std::size_t flips = 0;
    for (double v : y)
        if (v < 0) ++flips;
    double p = qfunc(1.0);
    double se = std::sqrt(p * (1 - p) / n);
    CHECK(std::fabs(static_cast<double>(flips) / n - p) <= 4 * se);
}
