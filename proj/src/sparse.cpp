#include "fdpc/sparse.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fdpc/rng.hpp"

namespace fdpc {

std::vector<std::uint32_t> random_permutation(std::uint32_t n, std::uint64_t seed) {
    std::vector<std::uint32_t> p(n);
    for (std::uint32_t i = 0; i < n; ++i) p[i] = i;
    SplitMix64 g(seed);
    for (std::uint32_t i = n; i > 1; --i) {
        std::uint32_t j = static_cast<std::uint32_t>(g.next_below(i));
        std::swap(p[i - 1], p[j]);
    }
    return p;
}

SparseBitMatrix SparseBitMatrix::from_rows(std::uint32_t rows, std::uint32_t cols,
                                           std::vector<std::vector<std::uint32_t>> rowAdj) {
    if (rowAdj.size() != rows) throw std::invalid_argument("from_rows: row count mismatch");
    SparseBitMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.rowAdj = std::move(rowAdj);
    m.colAdj.assign(cols, {});
    for (std::uint32_t r = 0; r < rows; ++r) {
        auto& adj = m.rowAdj[r];
        std::sort(adj.begin(), adj.end());
        if (std::adjacent_find(adj.begin(), adj.end()) != adj.end())
            throw std::invalid_argument("from_rows: duplicate column in row");
        for (auto c : adj) {
            if (c >= cols) throw std::invalid_argument("from_rows: column index out of range");
            m.colAdj[c].push_back(r);
        }
    }
    return m;
}

std::size_t SparseBitMatrix::edge_count() const {
    std::size_t e = 0;
    for (auto& r : rowAdj) e += r.size();
    return e;
}

BitMatrix SparseBitMatrix::to_dense() const {
    BitMatrix d(rows, cols);
    for (std::uint32_t r = 0; r < rows; ++r)
        for (auto c : rowAdj[r]) d.set(r, c, true);
    return d;
}

BitVec SparseBitMatrix::column(std::uint32_t c) const {
    BitVec v(rows);
    for (auto r : colAdj[c]) v.set(r, true);
    return v;
}

SparseBitMatrix SparseBitMatrix::without_columns(const std::vector<std::uint32_t>& cols_to_drop) const {
    std::vector<bool> drop(cols, false);
    for (auto c : cols_to_drop) {
        if (c >= cols) throw std::invalid_argument("without_columns: index out of range");
        drop[c] = true;
    }
    std::vector<std::uint32_t> remap(cols, 0);
    std::uint32_t next = 0;
    for (std::uint32_t c = 0; c < cols; ++c)
        if (!drop[c]) remap[c] = next++;

    std::vector<std::vector<std::uint32_t>> newRows(rows);
    for (std::uint32_t r = 0; r < rows; ++r)
        for (auto c : rowAdj[r])
            if (!drop[c]) newRows[r].push_back(remap[c]);
    return from_rows(rows, next, std::move(newRows));
}

void save_matrix(const SparseBitMatrix& m, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << m.rows << ' ' << m.cols << '\n';
    for (std::uint32_t r = 0; r < m.rows; ++r) {
        for (std::size_t i = 0; i < m.rowAdj[r].size(); ++i) {
            if (i) f << ' ';
            f << (m.rowAdj[r][i] + 1);
        }
        f << '\n';
    }
    if (!f) throw std::runtime_error("write failed: " + path);
}

SparseBitMatrix load_matrix(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::string line;
    if (!std::getline(f, line)) throw std::runtime_error("empty matrix file: " + path);
    std::istringstream header(line);
    std::uint32_t rows, cols;
    if (!(header >> rows >> cols)) throw std::runtime_error("bad matrix header: " + path);

    std::vector<std::vector<std::uint32_t>> rowAdj(rows);
    for (std::uint32_t r = 0; r < rows; ++r) {
        if (!std::getline(f, line)) throw std::runtime_error("truncated matrix file: " + path);
        std::istringstream ss(line);
        std::uint32_t c;
        while (ss >> c) {
            if (c == 0 || c > cols) throw std::runtime_error("column index out of range in: " + path);
            rowAdj[r].push_back(c - 1);
        }
    }
    return SparseBitMatrix::from_rows(rows, cols, std::move(rowAdj));
}

BitVec sparse_syndrome(const SparseBitMatrix& h, const BitVec& x) {
    if (x.size() != h.cols) throw std::invalid_argument("sparse_syndrome: length mismatch");
    BitVec s(h.rows);
    for (std::uint32_t r = 0; r < h.rows; ++r) {
        bool p = false;
        for (auto c : h.rowAdj[r]) p ^= x.get(c);
        if (p) s.set(r, true);
    }
    return s;
}

bool is_codeword(const SparseBitMatrix& h, const BitVec& x) {
    if (x.size() != h.cols) throw std::invalid_argument("is_codeword: length mismatch");
    for (std::uint32_t r = 0; r < h.rows; ++r) {
        bool p = false;
        for (auto c : h.rowAdj[r]) p ^= x.get(c);
        if (p) return false;
    }
    return true;
}

}  // namespace fdpc
