#include "pairstab/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace pairstab {

std::vector<int> rref(RatMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        Rational inv = Rational(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int rank(RatMatrix m) { return static_cast<int>(rref(m).size()); }

int rank_at_least(RatMatrix m, int stop) {
    if (m.empty() || stop <= 0) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        Rational inv = Rational(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
        if (static_cast<int>(r) >= stop) break;
    }
    return static_cast<int>(r);
}

std::vector<std::vector<Rational>> nullspace(RatMatrix m) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;

    std::vector<std::vector<Rational>> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[c] = Rational(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<size_t>(pivots[r])] = -m[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool solvable(RatMatrix m, std::vector<Rational> rhs) {
    if (m.size() != rhs.size()) throw std::invalid_argument("solvable: shape mismatch");
    RatMatrix aug = std::move(m);
    for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
    size_t cols = aug.empty() ? 0 : aug[0].size();
    std::vector<int> pivots = rref(aug);
    for (int p : pivots)
        if (static_cast<size_t>(p) + 1 == cols) return false;  // pivot in the rhs column
    return true;
}

bool IncrementalRank::add(std::vector<Rational> row) {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rational& f = row[pivot_cols_[r]];
        if (f.is_zero()) continue;
        Rational factor = f;
        for (size_t j = 0; j < row.size(); ++j) row[j] -= factor * rows_[r][j];
    }
    size_t p = 0;
    while (p < row.size() && row[p].is_zero()) ++p;
    if (p == row.size()) return false;
    Rational inv = Rational(1) / row[p];
    for (size_t j = p; j < row.size(); ++j) row[j] *= inv;
    pivot_cols_.push_back(p);
    rows_.push_back(std::move(row));
    return true;
}

Rational determinant(RatMatrix m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant: not square");
    Rational det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Rational inv = Rational(1) / m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            Rational f = m[i][c] * inv;
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

}  // namespace pairstab
