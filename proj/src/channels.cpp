#include "fdpc/channels.hpp"

#include <stdexcept>

namespace fdpc {

ErasureWord bec_transmit(const BitVec& c, double eps, SplitMix64& rng) {
    if (eps < 0.0 || eps > 1.0) throw std::invalid_argument("bec_transmit: eps outside [0,1]");
    ErasureWord y(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (rng.next_double() < eps)
            y.erased.set(i, true);
        else
            y.values.set(i, c.get(i));
    }
    return y;
}

std::vector<double> awgn_transmit(const BitVec& c, double sigma, SplitMix64& rng) {
    if (sigma < 0.0) throw std::invalid_argument("awgn_transmit: sigma must be >= 0");
    std::vector<double> y(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        double sym = c.get(i) ? -1.0 : 1.0;
        y[i] = sigma == 0.0 ? sym : sym + sigma * rng.next_gaussian();
    }
    return y;
}

}  // namespace fdpc
