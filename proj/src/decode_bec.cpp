#include "fdpc/decode_bec.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fdpc {

const char* to_string(DecodeStatus s) {
    switch (s) {
        case DecodeStatus::Decoded: return "decoded";
        case DecodeStatus::NotUnique: return "not_unique";
        case DecodeStatus::Failure: return "failure";
    }
    return "?";
}

BecPath::BecPath(ErasureWord y, const SparseBitMatrix& h) : word(std::move(y)) {
    if (word.size() != h.cols) throw std::invalid_argument("BecPath: length mismatch");
    rowErased.assign(h.rows, 0);
    rowParity.assign(h.rows, 0);
    erasures = static_cast<std::uint32_t>(word.erasure_count());
    for (std::uint32_t r = 0; r < h.rows; ++r) {
        std::uint16_t e = 0;
        std::uint8_t par = 0;
        for (auto c : h.rowAdj[r]) {
            if (word.erased.get(c))
                ++e;
            else
                par ^= static_cast<std::uint8_t>(word.values.get(c));
        }
        rowErased[r] = e;
        rowParity[r] = par;
        if (e == 0 && par) alive = false;
    }
}

void BecPath::assign(std::uint32_t col, bool value, const SparseBitMatrix& h) {
    word.erased.set(col, false);
    word.values.set(col, value);
    --erasures;
    for (auto r : h.colAdj[col]) {
        --rowErased[r];
        rowParity[r] ^= static_cast<std::uint8_t>(value);
        if (rowErased[r] == 0 && rowParity[r]) alive = false;
    }
}

std::uint32_t mp_iter_bec(BecPath& p, const SparseBitMatrix& h) {
    if (!p.alive) throw std::invalid_argument("mp_iter_bec: dead path");
    // collect resolutions against the pre-iteration word
    std::vector<std::pair<std::uint32_t, bool>> found;
    for (std::uint32_t r = 0; r < h.rows; ++r) {
        if (p.rowErased[r] != 1) continue;
        std::uint32_t col = h.cols;
        for (auto c : h.rowAdj[r]) {
            if (p.word.erased.get(c)) {
                col = c;
                break;
            }
        }
        found.emplace_back(col, p.rowParity[r] != 0);
    }
    if (found.empty()) return 0;

    std::sort(found.begin(), found.end());
    std::uint32_t resolved = 0;
    for (std::size_t i = 0; i < found.size(); ++i) {
        if (i > 0 && found[i].first == found[i - 1].first) {
            if (found[i].second != found[i - 1].second) {
                p.alive = false;  // two checks disagree about this variable
                return resolved;
            }
            continue;
        }
        p.assign(found[i].first, found[i].second, h);
        ++resolved;
        if (!p.alive) return resolved;
    }
    return resolved;
}

std::uint32_t path_split_index(const BecPath& p, const SparseBitMatrix& h) {
    if (p.erasures == 0) throw std::invalid_argument("path_split_index: no erasures");
    std::uint32_t bestRow = h.rows;
    std::uint16_t bestCount = 0;
    for (std::uint32_t r = 0; r < h.rows; ++r) {
        std::uint16_t m = p.rowErased[r];
        if (m == 0) continue;
        if (bestRow == h.rows || m < bestCount) {
            bestRow = r;
            bestCount = m;
        }
    }
    for (auto c : h.rowAdj[bestRow])
        if (p.word.erased.get(c)) return c;
    throw std::logic_error("path_split_index: inconsistent state");
}

DecodeResult decode_bec_mppl(const ErasureWord& y, const SparseBitMatrix& h,
                             std::uint32_t maxList, std::uint32_t lambda_it) {
    if (maxList == 0 || (maxList & (maxList - 1)) != 0)
        throw std::invalid_argument("decode_bec_mppl: maxList must be a power of two");
    if (lambda_it < 1) throw std::invalid_argument("decode_bec_mppl: lambda_it must be >= 1");

    DecodeResult res;
    res.word = y.values;

    std::vector<BecPath> paths;
    paths.emplace_back(y, h);
    if (!paths[0].alive) return res;  // received word already violates a known check
    if (paths[0].finished()) {
        res.status = DecodeStatus::Decoded;
        res.word = paths[0].word.values;
        return res;
    }

    for (;;) {
        ++res.stages;
        // run one stage of MP on every live path
        std::vector<const BitVec*> completed;
        for (auto& p : paths) {
            if (!p.alive) continue;
            for (std::uint32_t it = 0; it < lambda_it; ++it) {
                std::uint32_t got = mp_iter_bec(p, h);
                ++res.iterations;
                if (!p.alive || p.erasures == 0 || got == 0) break;
            }
            if (p.finished()) completed.push_back(&p.word.values);
        }

        if (!completed.empty()) {
            res.word = *completed[0];
            bool unique = true;
            for (std::size_t i = 1; i < completed.size(); ++i)
                if (!(*completed[i] == *completed[0])) unique = false;
            res.status = unique ? DecodeStatus::Decoded : DecodeStatus::NotUnique;
            std::uint32_t live = 0;
            for (auto& p : paths)
                if (p.alive) ++live;
            res.finalList = live;
            return res;
        }

        // drop dead paths
        std::vector<BecPath> live;
        live.reserve(paths.size());
        for (auto& p : paths)
            if (p.alive) live.push_back(std::move(p));
        paths = std::move(live);
        res.finalList = static_cast<std::uint32_t>(paths.size());
        if (paths.empty()) return res;  // all paths dead

        if (2 * paths.size() > maxList) return res;  // splitting would exceed the list cap

        // fork every path on its splitting index (child order: all zeros, then all ones)
        std::size_t count = paths.size();
        paths.reserve(2 * count);
        for (std::size_t i = 0; i < count; ++i) {
            std::uint32_t col = path_split_index(paths[i], h);
            BecPath child = paths[i];
            paths[i].history.emplace_back(col, false);
            paths[i].assign(col, false, h);
            child.history.emplace_back(col, true);
            child.assign(col, true, h);
            paths.push_back(std::move(child));
        }
        res.peakList = std::max<std::uint32_t>(res.peakList, static_cast<std::uint32_t>(paths.size()));
        res.finalList = static_cast<std::uint32_t>(paths.size());
    }
}

DecodeResult ml_oracle_bec(const ErasureWord& y, const SparseBitMatrix& h) {
    if (y.size() != h.cols) throw std::invalid_argument("ml_oracle_bec: length mismatch");
    DecodeResult res;
    res.word = y.values;

    auto erasedCols = y.erased.one_indices();
    const std::size_t ne = erasedCols.size();
    if (ne == 0) {
        res.status = is_codeword(h, y.values) ? DecodeStatus::Decoded : DecodeStatus::Failure;
        return res;
    }

    // column position within the erased sub-system
    std::vector<std::uint32_t> posOf(h.cols, 0);
    for (std::size_t i = 0; i < ne; ++i) posOf[erasedCols[i]] = static_cast<std::uint32_t>(i);

    // rows: [ H_E | rhs ], rhs = parity of the known neighbors
    BitMatrix sys(h.rows, ne + 1);
    for (std::uint32_t r = 0; r < h.rows; ++r) {
        bool rhs = false;
        for (auto c : h.rowAdj[r]) {
            if (y.erased.get(c))
                sys.row[r].flip(posOf[c]);
            else
                rhs ^= y.values.get(c);
        }
        sys.row[r].set(ne, rhs);
    }

    auto pivots = rref_in_place(sys);
    // inconsistent system: pivot in the rhs column
    if (!pivots.empty() && pivots.back() == ne) return res;

    if (pivots.size() < ne) {
        res.status = DecodeStatus::NotUnique;
        return res;
    }

    BitVec word = y.values;
    for (std::size_t i = 0; i < pivots.size(); ++i)
        word.set(erasedCols[pivots[i]], sys.row[i].get(ne));
    res.status = DecodeStatus::Decoded;
    res.word = std::move(word);
    return res;
}

}  // namespace fdpc
