#pragma once

#include "qaff/construction.hpp"

#include <string>
#include <vector>

namespace qaff {

/// k, e, f matrices over parameter q, subject to
///   k k^-1 = 1,  k e = q^2 e k,  k f = q^-2 f k,
///   e f - f e = (k - k^-1) / (q - q^-1).
struct Sl2Module {
    QParam q;
    Matrix k, e, f;

    std::size_t dim() const noexcept { return k.rows(); }

    bool operator==(const Sl2Module&) const = default;
};

/// One irreducible summand, recorded by its chain basis v, f v, ..., f^d v
/// (the columns of `basis`).  In this normalization k acts on column j as
/// epsilon q^{d-2j}, f shifts columns with coefficient 1, and e acts on
/// column j as epsilon [j][d-j+1] times column j-1.
struct IrreducibleTag {
    int epsilon = 1;  // +1 or -1
    unsigned d = 0;
    Matrix basis;     // ambient x (d+1)
};

/// The (d+1)-dimensional irreducible of type (epsilon, d) on basis u_0..u_d:
///   k u_i = epsilon q^{d-2i} u_i,
///   f u_i = [i+1] u_{i+1} (f u_d = 0),
///   e u_i = epsilon [d-i+1] u_{i-1} (e u_0 = 0).
Sl2Module irreducible_module(int epsilon, unsigned d, const QParam& q);

/// The sl2 structure sitting at index i in a module: (K_i, e_i^+, e_i^-).
Sl2Module restrict_to_sl2(const HatModule& m, int i);

Sl2Module direct_sum(const Sl2Module& x, const Sl2Module& y);

/// Splits m into irreducibles.  Requires q > 0, q != 1 and k diagonalizable
/// with every eigenvalue of the form ±q^j; modules violating that, or whose
/// chains fail to close or to span, raise DomainError -- nothing is ever
/// silently accepted.  Deterministic: weights are scanned from the largest
/// exponent down, +1 sign first.
std::vector<IrreducibleTag> decompose_irreducibles(const Sl2Module& m);

/// For v an eigenvector of k with eigenvalue epsilon q^d (d >= 0, k
/// diagonalizable with ±q^j spectrum): does (e v = 0) <=> (f^{d+1} v = 0)
/// hold?  True on every valid module; exposed as a check because it is the
/// pivot fact behind recognizing highest-weight vectors.
bool ef_kernel_check(const Sl2Module& m, const Matrix& v, int epsilon, unsigned d);

/// "(epsilon, d, multiplicity)" summary lines, largest d first.
std::string render_tags(const std::vector<IrreducibleTag>& tags);

}  // namespace qaff
