#include "qaff/matrix.hpp"

#include "qaff/errors.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace qaff {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DomainError("ragged matrix initializer");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Rational& Matrix::at(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return entries_[i * cols_ + j];
}

const Rational& Matrix::at(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return entries_[i * cols_ + j];
}

bool Matrix::is_zero() const {
    for (const auto& x : entries_)
        if (x != 0) return false;
    return true;
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DomainError("matrix sum: shape mismatch");
    Matrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] += other.entries_[k];
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DomainError("matrix difference: shape mismatch");
    Matrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] -= other.entries_[k];
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw DomainError("matrix product: shape mismatch");
    Matrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Rational& b = other.at(k, j);
                if (b != 0) out.at(i, j) += a * b;
            }
        }
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& x : out.entries_) x = -x;
    return out;
}

Matrix operator*(const Rational& c, const Matrix& m) {
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = c * m.at(i, j);
    return out;
}

Matrix Matrix::pow(unsigned e) const {
    if (!is_square()) throw DomainError("matrix power: not square");
    Matrix out = identity(rows_);
    for (unsigned k = 0; k < e; ++k) out = out * *this;
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
    assert(r0 <= r1 && r1 <= rows_ && c0 <= c1 && c1 <= cols_);
    Matrix out(r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j) out.at(i - r0, j - c0) = at(i, j);
    return out;
}

Matrix Matrix::column(std::size_t j) const { return submatrix(0, rows_, j, j + 1); }

std::vector<std::size_t> Matrix::rref_in_place() {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
        std::size_t p = lead;
        while (p < rows_ && at(p, col) == 0) ++p;
        if (p == rows_) continue;
        if (p != lead)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(lead, j));
        const Rational piv = at(lead, col);
        if (piv != 1)
            for (std::size_t j = col; j < cols_; ++j) at(lead, j) /= piv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == lead || at(i, col) == 0) continue;
            const Rational f = at(i, col);
            for (std::size_t j = col; j < cols_; ++j) at(i, j) -= f * at(lead, j);
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix m = *this;
    return m.rref_in_place().size();
}

Matrix Matrix::inverse() const {
    if (!is_square()) throw DomainError("inverse: not square");
    Matrix aug = hcat(*this, identity(rows_));
    const auto pivots = aug.rref_in_place();
    if (pivots.size() != rows_ || (rows_ > 0 && pivots.back() != rows_ - 1))
        throw DomainError("inverse: singular matrix");
    return aug.submatrix(0, rows_, rows_, 2 * rows_);
}

Matrix Matrix::kernel_basis() const {
    Matrix m = *this;
    const auto pivots = m.rref_in_place();
    std::vector<std::size_t> free_cols;
    free_cols.reserve(cols_ - pivots.size());
    {
        std::size_t pi = 0;
        for (std::size_t col = 0; col < cols_; ++col) {
            if (pi < pivots.size() && pivots[pi] == col)
                ++pi;
            else
                free_cols.push_back(col);
        }
    }
    Matrix out(cols_, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        out.at(free_cols[k], k) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            out.at(pivots[r], k) = -m.at(r, free_cols[k]);
    }
    return out;
}

Matrix hcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DomainError("hcat: row count mismatch");
    Matrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return out;
}

std::size_t max_numerator_bits(const Matrix& m) {
    std::size_t bits = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            bits = std::max(bits, numerator_bits(m.at(i, j)));
    return bits;
}

Matrix solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DomainError("solve: row count mismatch");
    Matrix aug = hcat(a, b);
    const auto pivots = aug.rref_in_place();
    for (const auto p : pivots)
        if (p >= a.cols()) throw DomainError("solve: inconsistent system");
    if (pivots.size() != a.cols()) throw DomainError("solve: columns not independent");
    // pivots are then exactly 0..cols-1, so row r solves unknown r
    return aug.submatrix(0, a.cols(), a.cols(), a.cols() + b.cols());
}

}  // namespace qaff
