#pragma once

#include "qaff/rational.hpp"
#include "qaff/report.hpp"
#include "qaff/subspace.hpp"

#include <cstddef>
#include <vector>

namespace qaff {

/// Direct-sum decomposition U_0, ..., U_d of Q^n with every part nonzero.
/// d is the diameter.  The constructor enforces the invariant; raw part
/// lists that might violate it go through validate_parts() instead, which
/// reports rather than throws.
class Decomposition {
public:
    /// Throws DomainError unless the parts are nonzero subspaces of Q^ambient
    /// whose direct sum is the whole space.
    Decomposition(std::size_t ambient, std::vector<Subspace> parts);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t diameter() const noexcept { return parts_.size() - 1; }

    const Subspace& part(std::size_t i) const { return parts_.at(i); }
    const std::vector<Subspace>& parts() const noexcept { return parts_; }

    /// rho_i = dim U_i.
    std::vector<std::size_t> dims() const;

    bool operator==(const Decomposition&) const = default;

private:
    std::size_t ambient_ = 0;
    std::vector<Subspace> parts_;
};

/// The six clauses on raw parts, each reported by name and never
/// short-circuited.  Structural prechecks (admissible q, operator shapes,
/// decomposition) come first; when one of them fails the algebraic clauses
/// cannot be evaluated and are omitted from the report.
///
/// Check names: q.admissible, shape.operators, decomposition.parts,
/// decomposition.direct, clause.i.raising, clause.ii.lowering,
/// clause.iii.raising-bijections, clause.iv.lowering-bijections,
/// clause.v.serre-r, clause.vi.serre-l.
VerificationReport validate_parts(const Rational& q, std::size_t ambient,
                                  const std::vector<Subspace>& u,
                                  const Matrix& r, const Matrix& l);

/// Raising/lowering data (U_0..U_d, R, L) over parameter q:
///   (i)   R U_i <= U_{i+1},  R U_d = 0
///   (ii)  L U_i <= U_{i-1},  L U_0 = 0
///   (iii) R^{d-2i} restricts to a bijection U_i -> U_{d-i}
///   (iv)  L^{d-2i} restricts to a bijection U_{d-i} -> U_i
///   (v)   R^3 L - [3] R^2 L R + [3] R L R^2 - L R^3 = 0
///   (vi)  L^3 R - [3] L^2 R L + [3] L R L^2 - R L^3 = 0
///
/// admit() is the gatekeeper: it rejects anything failing validation.  The
/// unchecked() factory bypasses the clause checks (the decomposition
/// invariant still holds) and exists so the validator itself can be
/// exercised on bad data.
class RLSystem {
public:
    /// Throws ValidationError carrying the clause report.
    static RLSystem admit(QParam q, Decomposition u, Matrix r, Matrix l);

    static RLSystem unchecked(QParam q, Decomposition u, Matrix r, Matrix l);

    const QParam& q() const noexcept { return q_; }
    const Decomposition& u() const noexcept { return u_; }
    const Matrix& r() const noexcept { return r_; }
    const Matrix& l() const noexcept { return l_; }

    std::size_t dim() const noexcept { return u_.ambient(); }
    std::size_t diameter() const noexcept { return u_.diameter(); }

    bool operator==(const RLSystem&) const = default;

private:
    RLSystem(QParam q, Decomposition u, Matrix r, Matrix l);

    QParam q_;
    Decomposition u_;
    Matrix r_, l_;
};

VerificationReport validate(const RLSystem& sys);

/// The cubic q-Serre expression x^3 y - [3] x^2 y x + [3] x y x^2 - y x^3.
Matrix q_serre_residual(const Matrix& x, const Matrix& y, const QParam& q);

/// K: the invertible operator acting on U_i as q^{2i-d}.  Satisfies
/// K R = q^2 R K and K L = q^-2 L K for valid systems.
Matrix corresponding_k(const Decomposition& u, const QParam& q);

/// Evaluation-type system on basis u_0..u_d:
///   R u_i = [i+1] u_{i+1},  L u_i = a [d-i+1] u_{i-1},  a != 0.
RLSystem gen_evaluation(unsigned d, const Rational& a, const QParam& q);

/// Block direct sum; requires equal q and equal diameter.
RLSystem gen_direct_sum(const RLSystem& x, const RLSystem& y);

/// Change of basis by invertible p: U_i -> p U_i, R -> p R p^-1, L -> p L p^-1.
RLSystem gen_conjugate(const RLSystem& sys, const Matrix& p);

}  // namespace qaff
