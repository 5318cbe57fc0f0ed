#include "ds/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ds {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix product: dimension mismatch");
    RationalMatrix m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            if (a_[i][k] == 0) continue;
            for (int j = 0; j < o.c_; ++j)
                if (o.a_[k][j] != 0) m.at(i, j) += a_[i][k] * o.a_[k][j];
        }
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m.at(j, i) = a_[i][j];
    return m;
}

std::pair<RationalMatrix, std::vector<int>> RationalMatrix::rref() const {
    RationalMatrix m = *this;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
        int p = -1;
        for (int i = row; i < r_; ++i)
            if (m.a_[i][col] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m.a_[row], m.a_[p]);
        Rat inv = 1 / m.a_[row][col];
        for (int j = col; j < c_; ++j) m.a_[row][j] *= inv;
        for (int i = 0; i < r_; ++i) {
            if (i == row || m.a_[i][col] == 0) continue;
            Rat f = m.a_[i][col];
            for (int j = col; j < c_; ++j) m.a_[i][j] -= f * m.a_[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return {m, pivots};
}

int RationalMatrix::rank() const { return (int)rref().second.size(); }

std::vector<std::vector<Rat>> RationalMatrix::kernel() const {
    auto [R, pivots] = rref();
    std::vector<char> is_pivot(c_, 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < c_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(c_, 0);
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -R.at((int)i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool RationalMatrix::member(const std::vector<Rat>& v) const {
    if ((int)v.size() != c_) throw std::invalid_argument("member: width mismatch");
    auto [R, pivots] = rref();
    std::vector<Rat> w = v;
    for (size_t i = 0; i < pivots.size(); ++i) {
        int p = pivots[i];
        if (w[p] == 0) continue;
        Rat f = w[p];
        for (int j = p; j < c_; ++j) w[j] -= f * R.at((int)i, j);
    }
    for (const Rat& e : w)
        if (e != 0) return false;
    return true;
}

SparseRow sparse_axpy(const SparseRow& a, const Rat& s, const SparseRow& b) {
    SparseRow r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Rat c = s * b[j].second;
            if (c != 0) r.push_back({b[j].first, std::move(c)});
            ++j;
        } else {
            Rat c = a[i].second + s * b[j].second;
            if (c != 0) r.push_back({a[i].first, std::move(c)});
            ++i;
            ++j;
        }
    }
    return r;
}

SparseRow EchelonBasis::reduce(SparseRow r) const {
    size_t scan = 0;
    while (scan < r.size()) {
        int col = r[scan].first;
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), col);
        if (it == pivots_.end() || *it != col) {
            ++scan;
            continue;
        }
        size_t idx = (size_t)(it - pivots_.begin());
        r = sparse_axpy(r, -r[scan].second, rows_[idx]);
        // entries before scan are untouched (their columns precede col)
    }
    return r;
}

bool EchelonBasis::insert(SparseRow r) {
    r = reduce(std::move(r));
    if (r.empty()) return false;
    Rat inv = 1 / r[0].second;
    if (inv != 1)
        for (auto& [c, v] : r) v *= inv;
    int piv = r[0].first;
    // back-reduce existing rows against the new pivot
    for (size_t i = 0; i < rows_.size(); ++i) {
        auto it = std::lower_bound(rows_[i].begin(), rows_[i].end(), piv,
                                   [](const std::pair<int, Rat>& e, int c) { return e.first < c; });
        if (it != rows_[i].end() && it->first == piv) rows_[i] = sparse_axpy(rows_[i], -it->second, r);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    size_t idx = (size_t)(pos - pivots_.begin());
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + idx, std::move(r));
    return true;
}

bool EchelonBasis::has_pivot(int col) const {
    return std::binary_search(pivots_.begin(), pivots_.end(), col);
}

} // namespace ds
