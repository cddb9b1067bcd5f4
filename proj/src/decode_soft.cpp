#include "fdpc/decode_soft.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fdpc {

BitVec hard_decision(std::span<const double> y) {
    BitVec b(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        if (y[i] < 0.0) b.set(i, true);
    return b;
}

SoftMpplDecoder::SoftMpplDecoder(const SparseBitMatrix& h, SoftConfig cfg)
    : cfg_(cfg), n_(h.cols), r_(h.rows) {
    if (cfg_.beta <= 0.0) throw std::invalid_argument("SoftMpplDecoder: beta must be > 0");
    if (cfg_.itersPerStage < 1 || cfg_.maxStages < 1 || cfg_.maxList < 1)
        throw std::invalid_argument("SoftMpplDecoder: bad config");
    rowPtr_.assign(r_ + 1, 0);
    for (std::uint32_t j = 0; j < r_; ++j) {
        if (h.rowAdj[j].size() < 2)
            throw std::invalid_argument("SoftMpplDecoder: check row of weight < 2");
        rowPtr_[j + 1] = rowPtr_[j] + static_cast<std::uint32_t>(h.rowAdj[j].size());
    }
    rowCols_.reserve(rowPtr_[r_]);
    for (std::uint32_t j = 0; j < r_; ++j)
        for (auto c : h.rowAdj[j]) rowCols_.push_back(c);
}

SoftPath SoftMpplDecoder::make_path(std::span<const double> yin) const {
    if (yin.size() != n_) throw std::invalid_argument("decode: length mismatch");
    // one scalar conditions the input to unit mean magnitude; decisions are
    // invariant to positive input scaling and forced bits dominate reliably
    double sum = 0.0;
    for (double v : yin) sum += std::fabs(v);
    double scale = sum > 0.0 ? static_cast<double>(n_) / sum : 1.0;

    SoftPath p;
    p.y.resize(n_);
    for (std::uint32_t i = 0; i < n_; ++i) p.y[i] = static_cast<float>(yin[i] * scale);
    p.q.resize(rowCols_.size());
    for (std::size_t e = 0; e < rowCols_.size(); ++e) p.q[e] = p.y[rowCols_[e]];
    p.hard.assign((n_ + 63) / 64, 0);
    for (std::uint32_t i = 0; i < n_; ++i)
        if (p.y[i] < 0.0f) p.hard[i >> 6] |= std::uint64_t(1) << (i & 63);
    p.forcedSign.assign(n_, 0);
    return p;
}

void SoftMpplDecoder::iterate(SoftPath& p, Scratch& s) const {
    const float beta = static_cast<float>(cfg_.beta);
    s.r.resize(p.q.size());
    s.acc.assign(n_, 0.0f);

    // check update: r_{j,i} = prod of signs * min of magnitudes over the row minus i
    for (std::uint32_t j = 0; j < r_; ++j) {
        const std::uint32_t b = rowPtr_[j], e = rowPtr_[j + 1];
        float m1 = std::numeric_limits<float>::infinity();
        float m2 = m1;
        std::uint32_t am = b;
        unsigned negPar = 0;
        for (std::uint32_t k = b; k < e; ++k) {
            float v = p.q[k];
            negPar ^= (v < 0.0f);
            float a = std::fabs(v);
            if (a < m1) {
                m2 = m1;
                m1 = a;
                am = k;
            } else if (a < m2) {
                m2 = a;
            }
        }
        for (std::uint32_t k = b; k < e; ++k) {
            float mag = (k == am) ? m2 : m1;
            bool neg = (negPar ^ (p.q[k] < 0.0f)) != 0;
            float r = neg ? -mag : mag;
            s.r[k] = r;
            s.acc[rowCols_[k]] += r;
        }
    }

    // accumulate into the soft values, clip, re-saturate forced bits
    for (std::uint32_t i = 0; i < n_; ++i) {
        float v = p.y[i] + beta * s.acc[i];
        v = std::min(kLlrMax, std::max(-kLlrMax, v));
        if (p.forcedSign[i]) v = p.forcedSign[i] > 0 ? kLlrMax : -kLlrMax;
        p.y[i] = v;
    }
    for (auto& w : p.hard) w = 0;
    for (std::uint32_t i = 0; i < n_; ++i)
        if (p.y[i] < 0.0f) p.hard[i >> 6] |= std::uint64_t(1) << (i & 63);

    // variable update: q_{i,j} = y_i - beta * r_{j,i}
    for (std::size_t k = 0; k < p.q.size(); ++k) p.q[k] = p.y[rowCols_[k]] - beta * s.r[k];
}

bool SoftMpplDecoder::checks_satisfied(const SoftPath& p) const {
    for (std::uint32_t j = 0; j < r_; ++j) {
        unsigned par = 0;
        for (std::uint32_t k = rowPtr_[j]; k < rowPtr_[j + 1]; ++k) {
            std::uint32_t c = rowCols_[k];
            par ^= static_cast<unsigned>((p.hard[c >> 6] >> (c & 63)) & 1u);
        }
        if (par) return false;
    }
    return true;
}

std::uint32_t SoftMpplDecoder::pick_split_variable(const SoftPath& p) const {
    // deficiency = number of unsatisfied neighboring checks per variable
    std::vector<std::uint32_t> def(n_, 0);
    for (std::uint32_t j = 0; j < r_; ++j) {
        unsigned par = 0;
        for (std::uint32_t k = rowPtr_[j]; k < rowPtr_[j + 1]; ++k) {
            std::uint32_t c = rowCols_[k];
            par ^= static_cast<unsigned>((p.hard[c >> 6] >> (c & 63)) & 1u);
        }
        if (par)
            for (std::uint32_t k = rowPtr_[j]; k < rowPtr_[j + 1]; ++k) ++def[rowCols_[k]];
    }
    std::uint32_t best = n_;
    std::uint32_t bestDef = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (p.forcedSign[i]) continue;
        if (def[i] > bestDef || best == n_) {
            best = i;
            bestDef = def[i];
        }
    }
    return best;
}

DecodeResult SoftMpplDecoder::decode(std::span<const double> yin) const {
    DecodeResult res;
    std::vector<SoftPath> paths;
    paths.push_back(make_path(yin));

    Scratch scratch;
    auto word_of = [this](const SoftPath& p) {
        BitVec w(n_);
        for (std::uint32_t i = 0; i < n_; ++i)
            if ((p.hard[i >> 6] >> (i & 63)) & 1u) w.set(i, true);
        return w;
    };

    for (std::uint32_t stage = 1; stage <= cfg_.maxStages; ++stage) {
        res.stages = stage;
        for (std::size_t pi = 0; pi < paths.size(); ++pi) {
            auto& p = paths[pi];
            for (std::uint32_t it = 1; it <= cfg_.itersPerStage; ++it) {
                iterate(p, scratch);
                ++res.iterations;
                if ((cfg_.checkEveryIteration || it == cfg_.itersPerStage) &&
                    checks_satisfied(p)) {
                    res.status = DecodeStatus::Decoded;
                    res.word = word_of(p);
                    res.finalList = static_cast<std::uint32_t>(paths.size());
                    return res;
                }
            }
        }
        if (stage == cfg_.maxStages) break;
        if (2 * paths.size() > cfg_.maxList) break;

        // fork every path on its maximum-deficiency variable (+sat keeps the
        // parent index, -sat goes to the appended child)
        std::size_t count = paths.size();
        paths.reserve(2 * count);
        for (std::size_t i = 0; i < count; ++i) {
            std::uint32_t var = pick_split_variable(paths[i]);
            if (var == n_) continue;  // every variable already forced
            SoftPath child = paths[i];
            paths[i].forcedSign[var] = +1;
            paths[i].y[var] = kLlrMax;
            paths[i].splitHistory.emplace_back(var, +1);
            child.forcedSign[var] = -1;
            child.y[var] = -kLlrMax;
            child.splitHistory.emplace_back(var, -1);
            paths.push_back(std::move(child));
        }
        res.peakList = std::max<std::uint32_t>(res.peakList,
                                               static_cast<std::uint32_t>(paths.size()));
    }

    res.status = DecodeStatus::Failure;
    res.word = word_of(paths.front());
    res.finalList = static_cast<std::uint32_t>(paths.size());
    return res;
}

void min_sum_iteration(SoftPath& p, const SparseBitMatrix& h, double beta) {
    SoftConfig cfg;
    cfg.beta = beta;
    SoftMpplDecoder dec(h, cfg);
    SoftMpplDecoder::Scratch s;
    dec.iterate(p, s);
}

std::vector<std::uint32_t> deficiency(const SoftPath& p, const SparseBitMatrix& h) {
    std::vector<std::uint32_t> def(h.cols, 0);
    for (std::uint32_t j = 0; j < h.rows; ++j) {
        unsigned par = 0;
        for (auto c : h.rowAdj[j]) par ^= static_cast<unsigned>((p.hard[c >> 6] >> (c & 63)) & 1u);
        if (par)
            for (auto c : h.rowAdj[j]) ++def[c];
    }
    return def;
}

DecodeResult decode_soft_mppl(std::span<const double> yin, const SparseBitMatrix& h,
                              const SoftConfig& cfg) {
    return SoftMpplDecoder(h, cfg).decode(yin);
}

}  // namespace fdpc
