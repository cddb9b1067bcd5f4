#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "fdpc/construction.hpp"
#include "fdpc/mlbounds.hpp"
#include "fdpc/rng.hpp"
#include "fdpc/weightdist.hpp"

using namespace fdpc;

TEST_CASE("qfunc: frozen references, symmetry, monotonicity") {
    CHECK(qfunc(0.0) == 0.5);
    const struct {
        double x, q;
    } ref[] = {
        {0.5, 0.30853753872598689636},
        {1.0, 0.15865525393145705141},
        {2.0, 0.0227501319481792072},
        {3.0, 0.0013498980316300945267},
        {6.807, 4.9827465748823475219e-12},
        {10.0, 7.619853024160526066e-24},
        {20.0, 2.7536241186062336951e-89},
        {37.0, 5.7255712225245768227e-300},
    };
    for (auto& r : ref) CHECK(std::fabs(qfunc(r.x) - r.q) <= 1e-12 * r.q);

    SplitMix64 g(17);
    double prev = 1.0;
    for (double x = -5; x <= 8; x += 0.25) {
        double q = qfunc(x);
        CHECK(q < prev);
        prev = q;
        CHECK(qfunc(-x) == doctest::Approx(1.0 - q).epsilon(1e-14));
    }
}

TEST_CASE("snr_db_to_sigma: convention") {
    CHECK(snr_db_to_sigma(0.0, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(snr_db_to_sigma(6.0, 0.97) == doctest::Approx(0.359831463378).epsilon(1e-10));
    CHECK(std::sqrt(6.0) / snr_db_to_sigma(6.0, 0.97) == doctest::Approx(6.80732507322).epsilon(1e-10));
    CHECK(snr_db_to_sigma(100.0, 0.9) < 2e-5);
    CHECK_THROWS_AS(snr_db_to_sigma(3.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(snr_db_to_sigma(3.0, 1.5), std::invalid_argument);
}

namespace {

// direct per-codeword oracles over the full t=2 code
long double direct_bec_sum(const SparseBitMatrix& hb, double eps, std::uint32_t wt) {
    auto basis = nullspace_basis(hb.to_dense());
    long double acc = 0.0L;
    for (std::uint64_t mask = 1; mask < 512; ++mask) {
        BitVec v(16);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if ((mask >> i) & 1) v ^= basis[i];
        auto w = v.weight();
        if (w <= wt) acc += std::pow(static_cast<long double>(eps), static_cast<int>(w));
    }
    return acc;
}

long double direct_awgn_sum(const SparseBitMatrix& hb, double sigma, std::uint32_t wt) {
    auto basis = nullspace_basis(hb.to_dense());
    long double acc = 0.0L;
    for (std::uint64_t mask = 1; mask < 512; ++mask) {
        BitVec v(16);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if ((mask >> i) & 1) v ^= basis[i];
        auto w = v.weight();
        if (w <= wt) acc += qfunc(std::sqrt(static_cast<double>(w)) / sigma);
    }
    return acc;
}

}  // namespace

TEST_CASE("bec_union_bound: equals the direct per-codeword sum for t=2") {
    auto hb = build_base(2);
    auto spectrum = enumerate_exhaustive(hb);
    for (double eps : {0.5, 0.1, 0.25}) {
        double bound = bec_union_bound(spectrum, eps, 16);
        long double direct = direct_bec_sum(hb, eps, 16);
        CHECK(bound == doctest::Approx(static_cast<double>(direct)).epsilon(1e-12));
    }
    CHECK(bec_union_bound(spectrum, 0.0, 16) == 0.0);

    WeightSpectrum single;
    single.set(6, BigRat(20), WeightKind::Exact);
    CHECK(bec_union_bound(single, 0.1, 20) == doctest::Approx(2e-5).epsilon(1e-12));

    WeightSpectrum empty;
    CHECK_THROWS_AS(bec_union_bound(empty, 0.1, 20), std::invalid_argument);
    CHECK_THROWS_AS(bec_union_bound(single, 1.5, 20), std::invalid_argument);
}

TEST_CASE("bec_union_bound: truncation monotone in wt and eps") {
    auto spectrum = enumerate_exhaustive(build_base(2));
    double prev = 0.0;
    for (std::uint32_t wt = 4; wt <= 16; wt += 2) {
        double b = bec_union_bound(spectrum, 0.3, wt);
        CHECK(b >= prev);
        prev = b;
    }
    prev = 0.0;
    for (double eps = 0.05; eps <= 0.5; eps += 0.05) {
        double b = bec_union_bound(spectrum, eps, 16);
        CHECK(b >= prev);
        prev = b;
    }
}

TEST_CASE("awgn_union_bound: oracle equivalence and limits") {
    auto hb = build_base(2);
    auto spectrum = enumerate_exhaustive(hb);
    double bound = awgn_union_bound(spectrum, 1.0, 16);
    CHECK(bound == doctest::Approx(static_cast<double>(direct_awgn_sum(hb, 1.0, 16))).epsilon(1e-12));

    // sigma -> infinity: every included term approaches A_w * 0.5
    double big = awgn_union_bound(spectrum, 1e9, 16);
    CHECK(big == doctest::Approx(0.5 * 511.0).epsilon(1e-6));

    CHECK_THROWS_AS(awgn_union_bound(spectrum, 0.0, 16), std::invalid_argument);
}

TEST_CASE("awgn_union_bound: error-floor term at rate 0.97") {
    WeightSpectrum floor;
    floor.set(6, BigRat(20), WeightKind::UpperBound);
    double at6 = awgn_union_bound(floor, snr_db_to_sigma(6.0, 0.97), 6);
    double at7 = awgn_union_bound(floor, snr_db_to_sigma(7.0, 0.97), 6);
    CHECK(at6 == doctest::Approx(9.94300936844e-11).epsilon(1e-9));
    CHECK(at7 == doctest::Approx(2.2071720369e-13).epsilon(1e-9));
    // within a factor of two of the stated approximate values
    CHECK(at6 > 0.5e-10);
    CHECK(at6 < 2e-10);
    CHECK(at7 > 1e-13);
    CHECK(at7 < 4e-13);
}

TEST_CASE("gamma_mass: values and edge cases") {
    auto avg1024 = ensemble_average_spectrum(16, 8);
    double g = gamma_mass(avg1024, {{4, 1}}, 3);
    CHECK(g == doctest::Approx(1.3288798598929682 / 2).epsilon(1e-12));

    CHECK(gamma_mass(avg1024, {}, 2) == 0.0);  // empty sum
    CHECK(gamma_mass(avg1024, {{4, 1000000000}}, 3) < 1e-8);

    WeightSpectrum missing;
    CHECK_THROWS_AS(gamma_mass(missing, {{4, 1}}, 3), std::invalid_argument);
}

TEST_CASE("ensemble_bound_bec: reduction, domination and diagnostics") {
    auto avg = ensemble_average_spectrum(8, 20);  // n = 256

    BoundConfig cfg;
    cfg.wt = 20;
    cfg.d = 3;
    cfg.alphas = {{4, 1000000000}};  // gamma ~ 0
    cfg.channelParam = 0.15;
    long double direct = 0.0L;
    for (std::uint32_t w = 6; w <= 20; w += 2)
        if (avg.has(w))
            direct += avg.at(w).value.convert_to<long double>() *
                      std::pow(static_cast<long double>(0.15), w);
    CHECK(ensemble_bound_bec(cfg, avg) == doctest::Approx(static_cast<double>(direct)).epsilon(1e-9));

    // alpha_4 = 0 at n=256 has E{A_4} > 1, so gamma >= 1
    BoundConfig bad = cfg;
    bad.alphas = {{4, 0}};
    CHECK_THROWS_AS(ensemble_bound_bec(bad, avg), std::domain_error);

    // and at n=64 the same setting stays applicable (E{A_4} < 1)
    auto avg64 = ensemble_average_spectrum(4, 16);
    BoundConfig small;
    small.wt = 16;
    small.d = 3;
    small.alphas = {{4, 0}};
    small.channelParam = 0.1;
    CHECK(ensemble_bound_bec(small, avg64) > 0.0);

    // at eps = 0.1 the weight-6 term dominates
    BoundConfig dom;
    dom.wt = 20;
    dom.d = 3;
    dom.alphas = {{4, 1}};
    dom.channelParam = 0.1;
    double whole = ensemble_bound_bec(dom, avg);
    double w6only = avg.at(6).value.convert_to<double>() * std::pow(0.1, 6) /
                    (1.0 - gamma_mass(avg, dom.alphas, 3));
    CHECK(w6only / whole > 0.5);

    // monotone increasing in eps
    double prev = 0.0;
    for (double eps = 0.10; eps <= 0.201; eps += 0.01) {
        BoundConfig c = dom;
        c.channelParam = eps;
        double b = ensemble_bound_bec(c, avg);
        CHECK(b > prev);
        prev = b;
    }
}

TEST_CASE("ensemble_bound_awgn: reduction and monotonicity") {
    auto avg = ensemble_average_spectrum(16, 30);  // n = 1024

    BoundConfig cfg;
    cfg.wt = 30;
    cfg.d = 3;
    cfg.alphas = {{4, 1}};

    double prev = 1e9;
    for (double snr = 4.0; snr <= 6.01; snr += 0.25) {
        cfg.channelParam = snr_db_to_sigma(snr, 899.0 / 1024.0);
        double b = ensemble_bound_awgn(cfg, avg);
        CHECK(b < prev);
        prev = b;
    }

    // doubling every alpha halves each gamma summand and lowers the bound
    BoundConfig doubled = cfg;
    doubled.alphas = {{4, 3}};
    cfg.channelParam = doubled.channelParam = snr_db_to_sigma(4.5, 899.0 / 1024.0);
    CHECK(ensemble_bound_awgn(doubled, avg) < ensemble_bound_awgn(cfg, avg));

    // gamma = 0 limit reduces to the plain union bound over the averages
    BoundConfig loose = cfg;
    loose.alphas = {{4, 1000000000}};
    long double direct = 0.0L;
    for (std::uint32_t w = 6; w <= 30; w += 2)
        if (avg.has(w))
            direct += avg.at(w).value.convert_to<long double>() *
                      qfunc(std::sqrt(static_cast<double>(w)) / loose.channelParam);
    CHECK(ensemble_bound_awgn(loose, avg) ==
          doctest::Approx(static_cast<double>(direct)).epsilon(1e-9));
}
