#pragma once

#include "qaff/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qaff {

/// Dense matrix over Rational, row-major.
///
/// Elimination uses first-nonzero pivoting: the pivot is the first row with
/// a nonzero entry in the current column, never a magnitude heuristic.
/// Together with exact arithmetic this makes every derived object (rank,
/// kernel, echelon form) a deterministic function of the input bits.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);  // zero-filled
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& at(std::size_t i, std::size_t j);
    const Rational& at(std::size_t i, std::size_t j) const;

    bool is_zero() const;
    bool is_square() const noexcept { return rows_ == cols_; }

    bool operator==(const Matrix&) const = default;

    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator*(const Matrix& other) const;
    Matrix operator-() const;

    /// M^e for square M; pow(0) is the identity.
    Matrix pow(unsigned e) const;

    Matrix transpose() const;

    /// Rows [r0, r1) x columns [c0, c1).
    Matrix submatrix(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;
    Matrix column(std::size_t j) const;

    /// Reduced row echelon form in place; returns the pivot columns.
    std::vector<std::size_t> rref_in_place();

    std::size_t rank() const;

    /// Throws DomainError when not square or singular.
    Matrix inverse() const;

    /// Basis of the right kernel as columns (cols() x nullity), in the
    /// standard free-column parametrization of the echelon form.
    Matrix kernel_basis() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

Matrix operator*(const Rational& c, const Matrix& m);

/// [a | b]; row counts must agree.
Matrix hcat(const Matrix& a, const Matrix& b);

/// diag(a, b) as blocks.
Matrix block_diag(const Matrix& a, const Matrix& b);

/// The unique X with a X = b, for a of full column rank and b with all
/// columns in the column span of a; throws DomainError otherwise.
Matrix solve(const Matrix& a, const Matrix& b);

/// Largest numerator_bits over the entries; 0 for a zero matrix.
std::size_t max_numerator_bits(const Matrix& m);

}  // namespace qaff
