#include "fdpc/construction.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "fdpc/rng.hpp"

namespace fdpc {

SparseBitMatrix build_base(std::uint32_t t) {
    if (t < 2) throw std::invalid_argument("build_base: t must be >= 2");
    std::uint32_t r = 4 * t;
    std::vector<std::vector<std::uint32_t>> rowAdj(r);
    std::uint32_t col = 0;
    for (std::uint32_t i = 0; i < r; ++i) {
        for (std::uint32_t j = i + 1; j < r; j += 2) {
            rowAdj[i].push_back(col);
            rowAdj[j].push_back(col);
            ++col;
        }
    }
    if (col != 4 * t * t) throw std::logic_error("build_base: column count mismatch");
    return SparseBitMatrix::from_rows(r, col, std::move(rowAdj));
}

SparseBitMatrix build_order_s(const CodeSpec& spec) {
    spec.validate();
    SparseBitMatrix base = build_base(spec.t);
    std::uint32_t n = spec.n();
    std::uint32_t blockRows = base.rows;

    std::vector<std::vector<std::uint32_t>> rowAdj;
    rowAdj.reserve(static_cast<std::size_t>(blockRows) * spec.s);
    for (auto& row : base.rowAdj) rowAdj.push_back(row);

    for (std::uint32_t b = 1; b < spec.s; ++b) {
        auto perm = random_permutation(n, spec.permSeeds[b - 1]);
        for (std::uint32_t r = 0; r < blockRows; ++r) {
            std::vector<std::uint32_t> row;
            row.reserve(base.rowAdj[r].size());
            for (auto c : base.rowAdj[r]) row.push_back(perm[c]);
            rowAdj.push_back(std::move(row));
        }
    }

    auto h = SparseBitMatrix::from_rows(blockRows * spec.s, n, std::move(rowAdj));
    if (!spec.shortenedColumns.empty()) {
        auto sorted = spec.shortenedColumns;
        std::sort(sorted.begin(), sorted.end());
        h = h.without_columns(sorted);
    }
    return h;
}

std::uint32_t code_dimension(const SparseBitMatrix& h) {
    return h.cols - static_cast<std::uint32_t>(rank(h.to_dense()));
}

namespace {

std::uint64_t sig_hash(const BitVec& v) {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : v.words()) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdull;
        h ^= h >> 33;
    }
    return h;
}

struct PairSum {
    std::uint64_t hash;
    std::uint32_t i, j;
};

/// True when the all-ones vector lies in the row space of h, in which case
/// every codeword has even weight and odd-weight searches can be skipped.
bool even_weight_only(const SparseBitMatrix& h) {
    BitMatrix d = h.to_dense();
    std::size_t r0 = rank(d);
    BitMatrix ext = d;
    ext.row.emplace_back(h.cols);
    for (std::uint32_t c = 0; c < h.cols; ++c) ext.row.back().set(c, true);
    ext.rows += 1;
    return rank(ext) == r0;
}

}  // namespace

std::vector<BitVec> find_low_weight_codewords(const SparseBitMatrix& h, std::uint32_t wmax) {
    if (wmax != 4 && wmax != 6)
        throw std::invalid_argument("find_low_weight_codewords: wmax must be 4 or 6");

    const std::uint32_t n = h.cols;
    std::vector<BitVec> sigs;
    sigs.reserve(n);
    std::vector<std::uint64_t> colHash(n);
    for (std::uint32_t c = 0; c < n; ++c) {
        sigs.push_back(h.column(c));
        colHash[c] = sig_hash(sigs[c]);
    }

    std::vector<std::vector<std::uint32_t>> supports;
    auto add = [&supports](std::vector<std::uint32_t> s) {
        std::sort(s.begin(), s.end());
        supports.push_back(std::move(s));
    };

    // weight 1: zero columns
    for (std::uint32_t c = 0; c < n; ++c)
        if (!sigs[c].any()) add({c});

    // weight 2: identical columns
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> byHash;
    for (std::uint32_t c = 0; c < n; ++c) byHash[colHash[c]].push_back(c);
    for (auto& [hh, group] : byHash)
        for (std::size_t a = 0; a < group.size(); ++a)
            for (std::size_t b = a + 1; b < group.size(); ++b)
                if (sigs[group[a]] == sigs[group[b]]) add({group[a], group[b]});

    const bool evenOnly = even_weight_only(h);

    // all column pairs with the hash of their XOR sum, sorted by hash
    std::vector<PairSum> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (std::uint32_t i = 0; i < n; ++i) {
        BitVec acc = sigs[i];
        for (std::uint32_t j = i + 1; j < n; ++j) {
            BitVec sum = acc;
            sum ^= sigs[j];
            pairs.push_back({sig_hash(sum), i, j});
        }
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const PairSum& a, const PairSum& b) { return a.hash < b.hash; });

    auto pair_sum = [&sigs](const PairSum& p) {
        BitVec s = sigs[p.i];
        s ^= sigs[p.j];
        return s;
    };
    auto pair_range = [&pairs](std::uint64_t hh) {
        return std::equal_range(pairs.begin(), pairs.end(), hh,
                                [](const auto& a, const auto& b) {
                                    if constexpr (std::is_same_v<std::decay_t<decltype(a)>, PairSum>)
                                        return a.hash < b;
                                    else
                                        return a < b.hash;
                                });
    };

    // weight 3: a pair sum equal to a third column
    if (!evenOnly) {
        for (const auto& p : pairs) {
            auto it = byHash.find(p.hash);
            if (it == byHash.end()) continue;
            BitVec sum = pair_sum(p);
            for (auto c : it->second)
                if (c != p.i && c != p.j && sigs[c] == sum) add({p.i, p.j, c});
        }
    }

    // weight 4: two disjoint pairs with equal sums (meet in the middle)
    for (std::size_t lo = 0; lo < pairs.size();) {
        std::size_t hi = lo + 1;
        while (hi < pairs.size() && pairs[hi].hash == pairs[lo].hash) ++hi;
        for (std::size_t a = lo; a < hi; ++a) {
            for (std::size_t b = a + 1; b < hi; ++b) {
                const auto &pa = pairs[a], &pb = pairs[b];
                if (pa.i == pb.i || pa.i == pb.j || pa.j == pb.i || pa.j == pb.j) continue;
                if (pair_sum(pa) == pair_sum(pb)) add({pa.i, pa.j, pb.i, pb.j});
            }
        }
        lo = hi;
    }

    if (wmax == 6) {
        // weight 5: two disjoint pairs plus one column
        if (!evenOnly) {
            for (const auto& p : pairs) {
                for (std::uint32_t c = 0; c < n; ++c) {
                    if (c == p.i || c == p.j) continue;
                    BitVec sum = pair_sum(p);
                    sum ^= sigs[c];
                    auto [lo, hi] = pair_range(sig_hash(sum));
                    for (auto it = lo; it != hi; ++it) {
                        if (it->i == p.i || it->i == p.j || it->i == c || it->j == p.i ||
                            it->j == p.j || it->j == c)
                            continue;
                        if (pair_sum(*it) == sum) add({p.i, p.j, c, it->i, it->j});
                    }
                }
            }
        }

        // weight 6: hash join of two pair sums against a third pair
        for (std::size_t a = 0; a < pairs.size(); ++a) {
            const auto& pa = pairs[a];
            BitVec sa = pair_sum(pa);
            for (std::size_t b = a + 1; b < pairs.size(); ++b) {
                const auto& pb = pairs[b];
                if (pa.i == pb.i || pa.i == pb.j || pa.j == pb.i || pa.j == pb.j) continue;
                BitVec sum = sa;
                sum ^= pair_sum(pb);
                auto [lo, hi] = pair_range(sig_hash(sum));
                for (auto it = lo; it != hi; ++it) {
                    if (it->i == pa.i || it->i == pa.j || it->i == pb.i || it->i == pb.j ||
                        it->j == pa.i || it->j == pa.j || it->j == pb.i || it->j == pb.j)
                        continue;
                    if (pair_sum(*it) == sum) add({pa.i, pa.j, pb.i, pb.j, it->i, it->j});
                }
            }
        }
    }

    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());

    std::vector<BitVec> out;
    out.reserve(supports.size());
    for (auto& s : supports) {
        if (s.size() > wmax) continue;
        out.push_back(BitVec::from_indices(n, s));
    }
    return out;
}

CodeSpec shorten(const CodeSpec& spec, const std::map<std::uint32_t, std::uint32_t>& alphas) {
    spec.validate();
    for (auto& [w, cnt] : alphas) {
        if (w < 4 || w % 2 != 0)
            throw std::invalid_argument("shorten: alpha weights must be even and >= 4");
        if (w > 6 && cnt > 0)
            throw std::invalid_argument("shorten: weight-" + std::to_string(w) +
                                        " search not supported (only 4 and 6)");
        (void)cnt;
    }

    CodeSpec cur = spec;
    const std::uint32_t n = spec.n();
    std::uint32_t k0 = code_dimension(build_order_s(CodeSpec{spec.t, spec.s, spec.permSeeds, {}}));

    // current-column -> original-column map
    auto alive_of = [&](const CodeSpec& c) {
        std::vector<bool> removed(n, false);
        for (auto i : c.shortenedColumns) removed[i] = true;
        std::vector<std::uint32_t> alive;
        for (std::uint32_t i = 0; i < n; ++i)
            if (!removed[i]) alive.push_back(i);
        return alive;
    };

    for (auto& [w, count] : alphas) {
        for (std::uint32_t rep = 0; rep < count; ++rep) {
            if (cur.shortenedColumns.size() + 1 >= k0)
                throw std::invalid_argument("shorten: removals would reach code dimension");
            auto alive = alive_of(cur);
            SparseBitMatrix hcur = build_order_s(cur);
            auto cws = find_low_weight_codewords(hcur, w);
            const BitVec* best = nullptr;
            std::vector<std::uint32_t> bestSupport;
            for (auto& c : cws) {
                if (c.weight() != w) continue;
                auto sup = c.one_indices();
                if (!best || sup < bestSupport) {
                    best = &c;
                    bestSupport = sup;
                }
            }
            std::uint32_t victim;
            if (best) {
                victim = alive[bestSupport.front()];
            } else {
                victim = alive.front();  // no weight-w codeword left; shorten anyway
            }
            cur.shortenedColumns.push_back(victim);
        }
    }
    return cur;
}

}  // namespace fdpc
