#include "fdpc/weightdist.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "fdpc/construction.hpp"

namespace fdpc {

const char* to_string(WeightKind k) {
    switch (k) {
        case WeightKind::Exact: return "exact";
        case WeightKind::UpperBound: return "upper_bound";
        case WeightKind::EnsembleAverage: return "ensemble_average";
    }
    return "?";
}

BigInt binomial(const BigInt& n, std::uint64_t k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (BigInt(k) > n) return 0;
    BigInt num = 1, den = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

BigInt irreducible_count(std::uint32_t t, std::uint32_t m) {
    if (t < 2) throw std::invalid_argument("irreducible_count: t must be >= 2");
    if (m % 2 != 0 || m < 4 || m > 4 * t) return 0;
    BigInt p = 1;
    for (std::uint32_t i = 0; i < m / 2; ++i) {
        BigInt f = 2 * t - i;
        p *= f * f;
    }
    if (p % m != 0) throw std::logic_error("irreducible_count: non-integral result");
    return p / m;
}

BigInt weight_upper_bound(std::uint32_t t, std::uint32_t w) {
    if (t < 2) throw std::invalid_argument("weight_upper_bound: t must be >= 2");
    if (w % 2 != 0 || w < 4) return 0;
    // knapsack over loop weights m = 4, 6, ..., min(4t, w)
    std::vector<BigInt> f(w + 1, 0);
    f[0] = 1;
    for (std::uint32_t m = 4; m <= std::min(4 * t, w); m += 2) {
        BigInt am = irreducible_count(t, m);
        std::vector<BigInt> g(w + 1, 0);
        for (std::uint32_t v = 0; v <= w; ++v) {
            if (f[v] == 0) continue;
            for (std::uint32_t a = 0; v + a * m <= w; ++a) {
                g[v + a * m] += f[v] * binomial(am, a);
            }
        }
        f = std::move(g);
    }
    return f[w];
}

double ensemble_avg_weight(std::uint64_t n, std::uint32_t w, const BigInt& aw) {
    return ensemble_avg_weight_exact(n, w, aw).convert_to<double>();
}

BigRat ensemble_avg_weight_exact(std::uint64_t n, std::uint32_t w, const BigInt& aw) {
    if (w % 2 != 0 || w < 4) return 0;
    return BigRat(aw * aw, binomial(BigInt(n), w));
}

WeightSpectrum ensemble_average_spectrum(std::uint32_t t, std::uint32_t wmax) {
    WeightSpectrum s;
    std::uint64_t n = 4ull * t * t;
    for (std::uint32_t w = 4; w <= wmax; w += 2) {
        BigInt aw;
        WeightKind kind;
        if (w <= 6) {
            // no combination of smaller loops reaches weight 4 or 6
            aw = irreducible_count(t, w);
            kind = WeightKind::EnsembleAverage;
        } else {
            aw = weight_upper_bound(t, w);
            kind = WeightKind::UpperBound;
        }
        s.set(w, ensemble_avg_weight_exact(n, w, aw), kind);
    }
    return s;
}

WeightSpectrum enumerate_exhaustive(const SparseBitMatrix& h) {
    auto basis = nullspace_basis(h.to_dense());
    std::size_t k = basis.size();
    if (k > 26) throw std::invalid_argument("enumerate_exhaustive: dimension > 26");

    std::vector<std::uint64_t> counts(h.cols + 1, 0);
    BitVec cur(h.cols);
    counts[0] = 1;
    std::uint64_t total = std::uint64_t(1) << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        cur ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
        counts[cur.weight()]++;
    }

    WeightSpectrum s;
    for (std::uint32_t w = 0; w <= h.cols; ++w)
        if (counts[w]) s.set(w, BigRat(counts[w]), WeightKind::Exact);
    return s;
}

namespace {

void require_column_weight_two(const SparseBitMatrix& hb) {
    for (auto& col : hb.colAdj)
        if (col.size() != 2)
            throw std::invalid_argument("expected a column-weight-2 matrix");
}

}  // namespace

LoopCensus enumerate_loop_census(const SparseBitMatrix& hb) {
    require_column_weight_two(hb);
    auto basis = nullspace_basis(hb.to_dense());
    std::size_t k = basis.size();
    if (k > 26) throw std::invalid_argument("enumerate_loop_census: dimension > 26");

    std::vector<std::pair<std::uint32_t, std::uint32_t>> checks(hb.cols);
    for (std::uint32_t c = 0; c < hb.cols; ++c) checks[c] = {hb.colAdj[c][0], hb.colAdj[c][1]};

    LoopCensus census;
    std::vector<std::uint64_t> total(hb.cols + 1, 0), single(hb.cols + 1, 0);
    std::vector<std::uint8_t> deg(hb.rows, 0);
    // per-check incident support vars; valid only while deg[x] <= 2
    std::vector<std::array<std::uint32_t, 2>> inc(hb.rows);

    BitVec cur(hb.cols);
    total[0] = 1;
    std::uint64_t count = std::uint64_t(1) << k;
    std::vector<std::uint32_t> support;
    support.reserve(hb.cols);

    for (std::uint64_t i = 1; i < count; ++i) {
        cur ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
        support.clear();
        auto words = cur.words();
        for (std::size_t wi = 0; wi < words.size(); ++wi) {
            std::uint64_t w = words[wi];
            while (w) {
                support.push_back(static_cast<std::uint32_t>(wi * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
        std::uint32_t wgt = static_cast<std::uint32_t>(support.size());
        total[wgt]++;

        // single loop <=> every incident check has exactly 2 support columns
        // and the walk from the first support column covers all of them
        bool degOk = true;
        for (auto v : support) {
            for (auto x : {checks[v].first, checks[v].second}) {
                if (deg[x] < 2) inc[x][deg[x]] = v;
                if (++deg[x] > 2) degOk = false;
            }
        }
        if (degOk) {
            std::uint32_t v0 = support.front();
            std::uint32_t prevCheck = checks[v0].first;
            std::uint32_t curCheck = checks[v0].second;
            std::uint32_t v = v0;
            std::uint32_t visited = 1;
            while (true) {
                std::uint32_t next = inc[curCheck][0] == v ? inc[curCheck][1] : inc[curCheck][0];
                if (next == v0) break;
                ++visited;
                std::uint32_t nc = checks[next].first == curCheck ? checks[next].second
                                                                  : checks[next].first;
                v = next;
                prevCheck = curCheck;
                curCheck = nc;
            }
            (void)prevCheck;
            if (visited == wgt) single[wgt]++;
        }
        for (auto v : support) {
            deg[checks[v].first] = 0;
            deg[checks[v].second] = 0;
        }
    }

    for (std::uint32_t w = 0; w <= hb.cols; ++w) {
        if (total[w]) census.total[w] = total[w];
        if (single[w]) census.singleLoop[w] = single[w];
    }
    return census;
}

std::vector<BitVec> decompose_into_loops(const SparseBitMatrix& hb, const BitVec& c) {
    require_column_weight_two(hb);
    if (!is_codeword(hb, c)) throw std::invalid_argument("decompose_into_loops: not a codeword");

    std::vector<std::uint32_t> remaining = c.one_indices();
    std::vector<BitVec> pieces;

    while (!remaining.empty()) {
        // incidence of remaining support at each check
        std::vector<std::vector<std::uint32_t>> inc(hb.rows);
        for (auto v : remaining)
            for (auto x : hb.colAdj[v]) inc[x].push_back(v);

        // walk from the lowest remaining variable until a check repeats
        std::uint32_t v0 = remaining.front();
        std::vector<std::uint32_t> walkChecks{hb.colAdj[v0][0], hb.colAdj[v0][1]};
        std::vector<std::uint32_t> walkVars{v0};
        std::vector<int> posOfCheck(hb.rows, -1);
        posOfCheck[walkChecks[0]] = 0;
        posOfCheck[walkChecks[1]] = 1;
        std::vector<bool> inWalk(hb.cols, false);
        inWalk[v0] = true;

        std::size_t closeAt = 0;
        for (;;) {
            std::uint32_t x = walkChecks.back();
            std::uint32_t arrived = walkVars.back();
            std::uint32_t next = hb.cols;
            for (auto cand : inc[x]) {
                if (cand != arrived && !inWalk[cand]) {
                    next = cand;
                    break;
                }
            }
            if (next == hb.cols)
                throw std::logic_error("decompose_into_loops: walk stalled");
            inWalk[next] = true;
            walkVars.push_back(next);
            std::uint32_t nx = hb.colAdj[next][0] == x ? hb.colAdj[next][1] : hb.colAdj[next][0];
            if (posOfCheck[nx] >= 0) {
                closeAt = static_cast<std::size_t>(posOfCheck[nx]);
                break;
            }
            posOfCheck[nx] = static_cast<int>(walkChecks.size());
            walkChecks.push_back(nx);
        }

        // vars from the first occurrence of the repeated check onward form the loop
        std::vector<std::uint32_t> loop(walkVars.begin() + static_cast<std::ptrdiff_t>(closeAt),
                                        walkVars.end());
        std::sort(loop.begin(), loop.end());
        pieces.push_back(BitVec::from_indices(hb.cols, loop));

        std::vector<std::uint32_t> rest;
        rest.reserve(remaining.size() - loop.size());
        std::set_difference(remaining.begin(), remaining.end(), loop.begin(), loop.end(),
                            std::back_inserter(rest));
        remaining = std::move(rest);
    }
    return pieces;
}

std::vector<BitVec> enumerate_irreducible(std::uint32_t t) {
    if (t < 2 || t > 3)
        throw std::invalid_argument("enumerate_irreducible: supported for t in {2, 3}");
    SparseBitMatrix hb = build_base(t);
    const std::uint32_t r = hb.rows;

    // column index of each check pair
    std::vector<std::vector<std::int32_t>> colOf(r, std::vector<std::int32_t>(r, -1));
    for (std::uint32_t c = 0; c < hb.cols; ++c) {
        auto a = hb.colAdj[c][0], b = hb.colAdj[c][1];
        colOf[a][b] = colOf[b][a] = static_cast<std::int32_t>(c);
    }

    // simple cycles of the check graph: start at the cycle's smallest vertex,
    // kill the direction by requiring second vertex < last vertex
    std::vector<BitVec> loops;
    std::vector<std::uint32_t> path;
    std::vector<bool> onPath(r, false);

    auto neighbors = [&](std::uint32_t v) {
        std::vector<std::uint32_t> out;
        for (std::uint32_t u = 0; u < r; ++u)
            if (colOf[v][u] >= 0) out.push_back(u);
        return out;
    };

    auto emit = [&]() {
        std::vector<std::uint32_t> support;
        for (std::size_t i = 0; i < path.size(); ++i) {
            auto a = path[i], b = path[(i + 1) % path.size()];
            support.push_back(static_cast<std::uint32_t>(colOf[a][b]));
        }
        std::sort(support.begin(), support.end());
        loops.push_back(BitVec::from_indices(hb.cols, support));
    };

    std::function<void()> dfs = [&]() {
        std::uint32_t u = path.back();
        for (auto w : neighbors(u)) {
            if (w == path.front()) {
                if (path.size() >= 4 && path[1] < path.back()) emit();
            } else if (w > path.front() && !onPath[w]) {
                onPath[w] = true;
                path.push_back(w);
                dfs();
                path.pop_back();
                onPath[w] = false;
            }
        }
    };

    for (std::uint32_t v0 = 0; v0 < r; ++v0) {
        path.assign(1, v0);
        std::fill(onPath.begin(), onPath.end(), false);
        onPath[v0] = true;
        dfs();
    }
    return loops;
}

BigInt improved_weight_upper_bound(std::uint32_t t, std::uint32_t w) {
    BigInt base = weight_upper_bound(t, w);
    if (t > 3 || w % 2 != 0 || w < 8) return base;

    auto loops = enumerate_irreducible(t);
    std::map<std::uint32_t, std::vector<const BitVec*>> byWeight;
    for (auto& l : loops) byWeight[static_cast<std::uint32_t>(l.weight())].push_back(&l);

    auto intersects = [](const BitVec& a, const BitVec& b) {
        auto wa = a.words(), wb = b.words();
        for (std::size_t i = 0; i < wa.size(); ++i)
            if (wa[i] & wb[i]) return true;
        return false;
    };

    BigInt overlapping = 0;
    for (std::uint32_t m1 = 4; 2 * m1 <= w; m1 += 2) {
        std::uint32_t m2 = w - m1;
        if (m2 > 4 * t) continue;
        auto i1 = byWeight.find(m1);
        auto i2 = byWeight.find(m2);
        if (i1 == byWeight.end() || i2 == byWeight.end()) continue;
        auto& l1 = i1->second;
        auto& l2 = i2->second;
        if (m1 == m2) {
            for (std::size_t a = 0; a < l1.size(); ++a)
                for (std::size_t b = a + 1; b < l1.size(); ++b)
                    if (intersects(*l1[a], *l1[b])) ++overlapping;
        } else {
            for (auto* pa : l1)
                for (auto* pb : l2)
                    if (intersects(*pa, *pb)) ++overlapping;
        }
    }
    return base - overlapping;
}

void write_spectrum_csv(std::ostream& os, const WeightSpectrum& s) {
    os << "weight,value,kind\n";
    for (auto& [w, e] : s.entries) {
        os << w << ',';
        if (denominator(e.value) == 1) {
            os << numerator(e.value);
        } else {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", e.value.convert_to<double>());
            os << buf;
        }
        os << ',' << to_string(e.kind) << '\n';
    }
}

}  // namespace fdpc
