#pragma once

#include "qaff/matrix.hpp"

#include <span>
#include <vector>

namespace qaff {

/// Subspace of Q^n in canonical form: the basis is reduced column echelon
/// (unit pivots, pivot rows strictly increasing, pivot rows cleared in the
/// other columns).  Canonical form makes equality of subspaces equality of
/// matrices.  The zero subspace is a basis with 0 columns; the ambient
/// dimension is carried alongside so it stays well-typed.
class Subspace {
public:
    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);

    /// Span of the given columns; dependent and zero columns collapse away.
    static Subspace span(const Matrix& columns);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.cols(); }
    bool is_zero() const noexcept { return dim() == 0; }

    /// ambient() x dim(), canonical.
    const Matrix& basis() const noexcept { return basis_; }

    bool contains(const Matrix& vector) const;  // ambient() x 1
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace&) const = default;

private:
    Subspace(std::size_t ambient, Matrix canonical_basis);

    std::size_t ambient_ = 0;
    Matrix basis_;
};

/// Right kernel of m as a subspace of Q^{cols}.
Subspace kernel(const Matrix& m);

/// kernel(m - lambda I); m must be square.  Probing a prescribed eigenvalue
/// is the only spectral operation in the library; there is no general
/// eigenvalue solver anywhere.
Subspace eigenspace(const Matrix& m, const Rational& lambda);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace sum(std::span<const Subspace> spaces);

Subspace intersect(const Subspace& a, const Subspace& b);

/// Directness via dimension count: sum of dims equals dim of sum.
bool is_direct_sum(std::span<const Subspace> spaces);

/// Image m(s) as a subspace of Q^{rows}.
Subspace image(const Matrix& m, const Subspace& s);

/// Does m^p map `from` onto `to` bijectively?
bool restricts_to_bijection(const Matrix& m, unsigned p, const Subspace& from,
                            const Subspace& to);

/// The operator acting on parts[i] as the scalar eigenvalues[i].  The parts
/// must decompose the ambient space; throws DomainError otherwise.
Matrix operator_with_eigenspaces(std::span<const Subspace> parts,
                                 std::span<const Rational> eigenvalues);

}  // namespace qaff
