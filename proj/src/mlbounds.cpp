#include "fdpc/mlbounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fdpc {

double qfunc(double x) { return 0.5 * std::erfc(x * (1.0 / std::numbers::sqrt2)); }

double snr_db_to_sigma(double snr_db, double rate) {
    if (rate <= 0.0 || rate > 1.0) throw std::invalid_argument("snr_db_to_sigma: bad rate");
    return 1.0 / std::sqrt(2.0 * rate * std::pow(10.0, snr_db / 10.0));
}

namespace {

// smallest-weight-first truncated sum of value(w) * term(w) in long double
template <typename TermFn>
double truncated_sum(const WeightSpectrum& spectrum, std::uint32_t wmin, std::uint32_t wt,
                     TermFn term) {
    long double acc = 0.0L;
    for (auto& [w, e] : spectrum.entries) {
        if (w < wmin || w > wt || w == 0) continue;
        acc += e.value.template convert_to<long double>() * term(w);
    }
    return static_cast<double>(acc);
}

}  // namespace

double bec_union_bound(const WeightSpectrum& spectrum, double eps, std::uint32_t wt) {
    if (spectrum.entries.empty()) throw std::invalid_argument("bec_union_bound: empty spectrum");
    if (eps < 0.0 || eps > 1.0) throw std::invalid_argument("bec_union_bound: eps outside [0,1]");
    return truncated_sum(spectrum, 1, wt,
                         [eps](std::uint32_t w) { return std::pow(static_cast<long double>(eps), w); });
}

double awgn_union_bound(const WeightSpectrum& spectrum, double sigma, std::uint32_t wt) {
    if (sigma <= 0.0) throw std::invalid_argument("awgn_union_bound: sigma must be > 0");
    return truncated_sum(spectrum, 1, wt, [sigma](std::uint32_t w) {
        return static_cast<long double>(qfunc(std::sqrt(static_cast<double>(w)) / sigma));
    });
}

double gamma_mass(const WeightSpectrum& avg, const std::map<std::uint32_t, std::uint32_t>& alphas,
                  std::uint32_t d) {
    double g = 0.0;
    for (std::uint32_t i = 2; i + 1 <= d; ++i) {
        std::uint32_t w = 2 * i;
        if (!avg.has(w)) throw std::invalid_argument("gamma_mass: missing ensemble average for weight " +
                                                     std::to_string(w));
        std::uint32_t alpha = 0;
        if (auto it = alphas.find(w); it != alphas.end()) alpha = it->second;
        g += avg.at(w).value.convert_to<double>() / (alpha + 1.0);
    }
    return g;
}

namespace {

double ensemble_bound(const BoundConfig& cfg, const WeightSpectrum& avg, bool bec) {
    double g = gamma_mass(avg, cfg.alphas, cfg.d);
    if (g >= 1.0)
        throw std::domain_error("ensemble bound inapplicable: gamma = " + std::to_string(g) +
                                " >= 1");
    long double acc = 0.0L;
    for (auto& [w, e] : avg.entries) {
        if (w < 2 * cfg.d || w > cfg.wt) continue;
        long double term =
            bec ? std::pow(static_cast<long double>(cfg.channelParam), w)
                : static_cast<long double>(qfunc(std::sqrt(static_cast<double>(w)) / cfg.channelParam));
        acc += e.value.template convert_to<long double>() * term;
    }
    return static_cast<double>(acc / (1.0L - static_cast<long double>(g)));
}

}  // namespace

double ensemble_bound_bec(const BoundConfig& cfg, const WeightSpectrum& avg) {
    if (cfg.channelParam < 0.0 || cfg.channelParam > 1.0)
        throw std::invalid_argument("ensemble_bound_bec: eps outside [0,1]");
    return ensemble_bound(cfg, avg, true);
}

double ensemble_bound_awgn(const BoundConfig& cfg, const WeightSpectrum& avg) {
    if (cfg.channelParam <= 0.0) throw std::invalid_argument("ensemble_bound_awgn: sigma must be > 0");
    return ensemble_bound(cfg, avg, false);
}

}  // namespace fdpc
