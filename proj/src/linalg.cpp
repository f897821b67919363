#include "zlkb/linalg.hpp"

namespace zlkb {

std::vector<std::size_t> rref(std::vector<QVecRow>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        Rat inv = rows[r][c];
        for (std::size_t j = c; j < ncols; ++j) rows[r][j] /= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat f = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

std::size_t rank(std::vector<QVecRow> rows) {
    return rref(rows).size();
}

std::vector<QVecRow> kernel_basis(const std::vector<QVecRow>& equations, std::size_t nvars) {
    std::vector<QVecRow> rows = equations;
    for (auto& r : rows) r.resize(nvars);
    auto pivots = rref(rows);
    std::vector<bool> is_pivot(nvars, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<QVecRow> basis;
    for (std::size_t c = 0; c < nvars; ++c) {
        if (is_pivot[c]) continue;
        QVecRow v(nvars, Rat(0));
        v[c] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

QVecRow Span::residue(QVecRow v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (v[pivots_[i]] == 0) continue;
        Rat f = v[pivots_[i]];
        for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * rows_[i][j];
    }
    return v;
}

bool Span::add(QVecRow v) {
    v = residue(std::move(v));
    std::size_t c = 0;
    while (c < dim_ && v[c] == 0) ++c;
    if (c == dim_) return false;
    Rat inv = v[c];
    for (std::size_t j = 0; j < dim_; ++j) v[j] /= inv;
    // keep rows ordered by pivot for determinism
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < c) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, c);
    // re-reduce existing rows above against the new one
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i == pos || rows_[i][c] == 0) continue;
        Rat f = rows_[i][c];
        for (std::size_t j = 0; j < dim_; ++j) rows_[i][j] -= f * rows_[pos][j];
    }
    return true;
}

} // namespace zlkb
