#pragma once

#include <cstdint>
#include <map>

#include "fdpc/weightdist.hpp"

namespace fdpc {

/// Gaussian upper-tail probability Q(x) = P(N(0,1) > x), via erfc.
double qfunc(double x);

/// Noise std-dev from SNR in dB at the given code rate:
/// sigma = 1 / sqrt(2 * rate * 10^(snr_db/10)).
double snr_db_to_sigma(double snr_db, double rate);

struct BoundConfig {
    std::uint32_t wt = 20;                          // truncation weight
    std::uint32_t d = 3;                            // target d_min is 2d
    std::map<std::uint32_t, std::uint32_t> alphas;  // weight -> shortened bits
    double channelParam = 0.0;                      // eps for BEC, sigma for AWGN
};

/// Truncated union bound over the BEC: sum_{w <= wt} A_w eps^w,
/// smallest weight first, accumulated in extended precision.
double bec_union_bound(const WeightSpectrum& spectrum, double eps, std::uint32_t wt);

/// Truncated union bound over the B-AWGN: sum_{w <= wt} A_w Q(sqrt(w)/sigma).
double awgn_union_bound(const WeightSpectrum& spectrum, double sigma, std::uint32_t wt);

/// Markov mass of ensemble members violating the shortened minimum-distance
/// target: sum_{i=2}^{d-1} E{A_2i} / (alpha_2i + 1). Throws if a needed
/// average is missing from avg.
double gamma_mass(const WeightSpectrum& avg, const std::map<std::uint32_t, std::uint32_t>& alphas,
                  std::uint32_t d);

/// Shortened-ensemble bound over the BEC:
/// (1/(1-gamma)) sum_{w=2d}^{wt} E{A_w} eps^w. Throws if gamma >= 1.
double ensemble_bound_bec(const BoundConfig& cfg, const WeightSpectrum& avg);

/// Shortened-ensemble bound over the B-AWGN:
/// (1/(1-gamma)) sum_{w=2d}^{wt} E{A_w} Q(sqrt(w)/sigma). Throws if gamma >= 1.
double ensemble_bound_awgn(const BoundConfig& cfg, const WeightSpectrum& avg);

}  // namespace fdpc
