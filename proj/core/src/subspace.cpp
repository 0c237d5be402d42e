#include "qaff/subspace.hpp"

#include "qaff/errors.hpp"

#include <utility>

namespace qaff {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* what) {
    if (a.ambient() != b.ambient())
        throw DomainError(std::string(what) + ": ambient dimension mismatch");
}

}  // namespace

Subspace::Subspace(std::size_t ambient, Matrix canonical_basis)
    : ambient_(ambient), basis_(std::move(canonical_basis)) {}

Subspace Subspace::zero(std::size_t ambient) { return {ambient, Matrix(ambient, 0)}; }

Subspace Subspace::full(std::size_t ambient) { return {ambient, Matrix::identity(ambient)}; }

Subspace Subspace::span(const Matrix& columns) {
    // reduced column echelon = transposed rref of the transpose; rref leaves
    // the nonzero rows first with strictly increasing pivots, which is
    // exactly the canonical form once transposed back
    Matrix t = columns.transpose();
    const auto pivots = t.rref_in_place();
    const std::size_t k = pivots.size();
    Matrix basis(columns.rows(), k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t i = 0; i < columns.rows(); ++i) basis.at(i, r) = t.at(r, i);
    return {columns.rows(), std::move(basis)};
}

bool Subspace::contains(const Matrix& vector) const {
    if (vector.rows() != ambient_ || vector.cols() != 1)
        throw DomainError("contains: expected an ambient x 1 vector");
    return Subspace::span(hcat(basis_, vector)).dim() == dim();
}

bool Subspace::contains(const Subspace& other) const {
    require_same_ambient(*this, other, "contains");
    return Subspace::span(hcat(basis_, other.basis())).dim() == dim();
}

Subspace kernel(const Matrix& m) { return Subspace::span(m.kernel_basis()); }

Subspace eigenspace(const Matrix& m, const Rational& lambda) {
    if (!m.is_square()) throw DomainError("eigenspace: not square");
    Matrix shifted = m;
    for (std::size_t i = 0; i < m.rows(); ++i) shifted.at(i, i) -= lambda;
    return kernel(shifted);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "sum");
    return Subspace::span(hcat(a.basis(), b.basis()));
}

Subspace sum(std::span<const Subspace> spaces) {
    if (spaces.empty()) throw DomainError("sum: empty list");
    Matrix all = spaces.front().basis();
    for (std::size_t i = 1; i < spaces.size(); ++i) {
        require_same_ambient(spaces.front(), spaces[i], "sum");
        all = hcat(all, spaces[i].basis());
    }
    return Subspace::span(all);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "intersect");
    if (a.is_zero() || b.is_zero()) return Subspace::zero(a.ambient());
    // solutions of a x = b y; the intersection is a applied to the x block
    const Matrix null = hcat(a.basis(), -b.basis()).kernel_basis();
    const Matrix xs = null.submatrix(0, a.dim(), 0, null.cols());
    return Subspace::span(a.basis() * xs);
}

bool is_direct_sum(std::span<const Subspace> spaces) {
    if (spaces.empty()) throw DomainError("is_direct_sum: empty list");
    std::size_t total = 0;
    for (const auto& s : spaces) total += s.dim();
    return sum(spaces).dim() == total;
}

Subspace image(const Matrix& m, const Subspace& s) {
    if (m.cols() != s.ambient()) throw DomainError("image: shape mismatch");
    return Subspace::span(m * s.basis());
}

bool restricts_to_bijection(const Matrix& m, unsigned p, const Subspace& from,
                            const Subspace& to) {
    require_same_ambient(from, to, "restricts_to_bijection");
    if (from.dim() != to.dim()) return false;
    const Subspace img = image(m.pow(p), from);
    return img.dim() == from.dim() && to.contains(img);
}

Matrix operator_with_eigenspaces(std::span<const Subspace> parts,
                                 std::span<const Rational> eigenvalues) {
    if (parts.empty() || parts.size() != eigenvalues.size())
        throw DomainError("operator_with_eigenspaces: parts/eigenvalues mismatch");
    const std::size_t n = parts.front().ambient();
    Matrix p(n, 0);
    Matrix pd(n, 0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].ambient() != n)
            throw DomainError("operator_with_eigenspaces: ambient mismatch");
        p = hcat(p, parts[i].basis());
        pd = hcat(pd, eigenvalues[i] * parts[i].basis());
    }
    if (p.cols() != n)
        throw DomainError("operator_with_eigenspaces: parts do not decompose the space");
    return pd * p.inverse();  // inverse() rejects dependent columns
}

}  // namespace qaff
