#pragma once

#include <optional>
#include <vector>

#include "chowfano/rational.hpp"

namespace chowfano {

using QVec = std::vector<Rat>;

// Dense exact-rational matrix. Small sizes only (a few hundred rows at most),
// plain Gaussian elimination throughout.
class QMat {
public:
    QMat() = default;
    QMat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows, QVec(cols)) {}
    static QMat identity(std::size_t n);
    static QMat from_columns(const std::vector<QVec>& cols);
    static QMat from_rows(const std::vector<QVec>& rows);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i][j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i][j]; }
    const QVec& row(std::size_t i) const { return a_[i]; }

    QVec column(std::size_t j) const;
    QMat transpose() const;
    QMat mul(const QMat& other) const;
    QVec apply(const QVec& v) const;

    // reduced row echelon form in place; returns pivot columns
    std::vector<std::size_t> rref();
    std::size_t rank() const;
    Rat det() const;

    // basis of the right nullspace, as columns
    std::vector<QVec> nullspace() const;
    // one solution of A x = b, if any
    std::optional<QVec> solve(const QVec& b) const;
    std::optional<QMat> inverse() const;

    bool operator==(const QMat& o) const { return a_ == o.a_; }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<QVec> a_;
};

std::size_t rank_of_vectors(const std::vector<QVec>& vecs);
QVec vec_add(const QVec& a, const QVec& b);
QVec vec_sub(const QVec& a, const QVec& b);
QVec vec_scale(const QVec& a, const Rat& s);
bool vec_is_zero(const QVec& a);

}  // namespace chowfano
