#include "fdpc/codec.hpp"

#include <stdexcept>

namespace fdpc {

Encoder build_encoder(const SparseBitMatrix& h) {
    BitMatrix m = h.to_dense();
    auto pivots = rref_in_place(m);
    std::vector<bool> isPivot(h.cols, false);
    for (auto p : pivots) isPivot[p] = true;

    Encoder e;
    e.n = h.cols;
    for (std::uint32_t f = 0; f < h.cols; ++f) {
        if (isPivot[f]) continue;
        BitVec g(h.cols);
        g.set(f, true);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (m.row[i].get(f)) g.set(pivots[i], true);
        e.generatorRows.push_back(std::move(g));
        e.systematic.push_back(f);
    }
    return e;
}

BitVec encode(const Encoder& e, const BitVec& msg) {
    if (msg.size() != e.k()) throw std::invalid_argument("encode: message length != k");
    BitVec c(e.n);
    for (std::uint32_t i = 0; i < e.k(); ++i)
        if (msg.get(i)) c ^= e.generatorRows[i];
    return c;
}

}  // namespace fdpc
