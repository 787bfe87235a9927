#include "chowfano/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace chowfano {

QMat QMat::identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.a_[i][i] = 1;
    return m;
}

QMat QMat::from_columns(const std::vector<QVec>& cols) {
    if (cols.empty()) return {};
    QMat m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.r_) throw std::invalid_argument("from_columns: ragged input");
        for (std::size_t i = 0; i < m.r_; ++i) m.a_[i][j] = cols[j][i];
    }
    return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows) {
    if (rows.empty()) return {};
    QMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.c_) throw std::invalid_argument("from_rows: ragged input");
        m.a_[i] = rows[i];
    }
    return m;
}

QVec QMat::column(std::size_t j) const {
    QVec v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = a_[i][j];
    return v;
}

QMat QMat::transpose() const {
    QMat m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m.a_[j][i] = a_[i][j];
    return m;
}

QMat QMat::mul(const QMat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("mul: dimension mismatch");
    QMat m(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            if (a_[i][k] == 0) continue;
            for (std::size_t j = 0; j < o.c_; ++j) m.a_[i][j] += a_[i][k] * o.a_[k][j];
        }
    return m;
}

QVec QMat::apply(const QVec& v) const {
    if (v.size() != c_) throw std::invalid_argument("apply: dimension mismatch");
    QVec out(r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if (a_[i][j] != 0) out[i] += a_[i][j] * v[j];
    return out;
}

std::vector<std::size_t> QMat::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < c_ && row < r_; ++col) {
        std::size_t p = row;
        while (p < r_ && a_[p][col] == 0) ++p;
        if (p == r_) continue;
        std::swap(a_[p], a_[row]);
        const Rat inv = Rat(1) / a_[row][col];
        for (auto& x : a_[row]) x *= inv;
        for (std::size_t i = 0; i < r_; ++i) {
            if (i == row || a_[i][col] == 0) continue;
            const Rat f = a_[i][col];
            for (std::size_t j = col; j < c_; ++j) a_[i][j] -= f * a_[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t QMat::rank() const {
    QMat m = *this;
    return m.rref().size();
}

Rat QMat::det() const {
    if (r_ != c_) throw std::invalid_argument("det: not square");
    QMat m = *this;
    Rat d = 1;
    for (std::size_t col = 0; col < c_; ++col) {
        std::size_t p = col;
        while (p < r_ && m.a_[p][col] == 0) ++p;
        if (p == r_) return 0;
        if (p != col) {
            std::swap(m.a_[p], m.a_[col]);
            d = -d;
        }
        d *= m.a_[col][col];
        const Rat inv = Rat(1) / m.a_[col][col];
        for (std::size_t i = col + 1; i < r_; ++i) {
            if (m.a_[i][col] == 0) continue;
            const Rat f = m.a_[i][col] * inv;
            for (std::size_t j = col; j < c_; ++j) m.a_[i][j] -= f * m.a_[col][j];
        }
    }
    return d;
}

std::vector<QVec> QMat::nullspace() const {
    QMat m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(c_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (std::size_t fc = 0; fc < c_; ++fc) {
        if (is_pivot[fc]) continue;
        QVec v(c_);
        v[fc] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.a_[i][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> QMat::solve(const QVec& b) const {
    if (b.size() != r_) throw std::invalid_argument("solve: dimension mismatch");
    QMat aug(r_, c_ + 1);
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t j = 0; j < c_; ++j) aug.a_[i][j] = a_[i][j];
        aug.a_[i][c_] = b[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == c_) return std::nullopt;  // inconsistent
    QVec x(c_);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.a_[i][c_];
    return x;
}

std::optional<QMat> QMat::inverse() const {
    if (r_ != c_) throw std::invalid_argument("inverse: not square");
    QMat aug(r_, 2 * c_);
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t j = 0; j < c_; ++j) aug.a_[i][j] = a_[i][j];
        aug.a_[i][c_ + i] = 1;
    }
    if (aug.rref().size() != r_) return std::nullopt;
    QMat inv(r_, c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) inv.a_[i][j] = aug.a_[i][c_ + j];
    return inv;
}

std::size_t rank_of_vectors(const std::vector<QVec>& vecs) {
    if (vecs.empty()) return 0;
    return QMat::from_rows(vecs).rank();
}

QVec vec_add(const QVec& a, const QVec& b) {
    QVec v(a);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b[i];
    return v;
}

QVec vec_sub(const QVec& a, const QVec& b) {
    QVec v(a);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b[i];
    return v;
}

QVec vec_scale(const QVec& a, const Rat& s) {
    QVec v(a);
    for (auto& x : v) x *= s;
    return v;
}

bool vec_is_zero(const QVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

}  // namespace chowfano
