#pragma once

#include "qaff/construction.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qaff {

/// Outcome of the basic-module test.  A module is basic of diameter d when
///   basic.K0K1           K_0 K_1 = I exactly,
///   basic.diagonalizable the probed eigenspaces of K_0 fill the space,
///   basic.spectrum       the eigenvalue set is exactly {q^{2i-d} : 0<=i<=d}.
/// `diameter` is set iff all three hold; the report names what failed.
struct BasicResult {
    std::optional<unsigned> diameter;
    VerificationReport report;

    bool is_basic() const noexcept { return diameter.has_value(); }
};

/// Requires q > 0, q != 1 (DomainError otherwise).
BasicResult classify_basic(const HatModule& m);

/// U_i = eigenspace(K_0, q^{2i-d}), R = e1m, L = e0m, fully validated.
/// Throws DomainError when the module is not basic.
RLSystem extract_system(const HatModule& m);

/// (sign of the K_0 eigenvalue, sign of the K_1 eigenvalue, exponent parity).
struct PieceKey {
    int eps0 = 1;
    int eps1 = 1;
    bool odd = false;

    bool operator==(const PieceKey&) const = default;

    /// "p1_m1_even" style: p/m for the two signs, then the parity.
    std::string str() const;
};

/// All eight pieces in a fixed order: eps0 = +1 then -1, eps1 = +1 then -1,
/// even before odd.  Pieces may be zero; their direct sum is the whole
/// space and each is invariant under all six generators.
struct PieceDecomposition {
    std::vector<std::pair<PieceKey, Subspace>> pieces;

    const Subspace& piece(const PieceKey& key) const;
};

/// Splits along the joint eigenvalues (eps0 q^i, eps1 q^-i) of (K_0, K_1).
/// Requires q > 0, q != 1, commuting diagonalizable K_0, K_1 and every
/// joint eigenvalue of that shape; DomainError names the violation.
PieceDecomposition eight_pieces(const HatModule& m);

/// The sign twist: K_i -> eps_i K_i, e_i^+ -> eps_i e_i^+, e_i^- unchanged.
/// An involution when applied twice with the same signs.
HatModule twist(const HatModule& m, int eps0, int eps1);

/// Block direct sum; requires equal q.
HatModule direct_sum(const HatModule& x, const HatModule& y);

/// The standalone module carried by an invariant subspace, written in the
/// subspace's canonical basis.  Throws DomainError when s is not invariant
/// under all six generators.
HatModule restrict_module(const HatModule& m, const Subspace& s);

}  // namespace qaff
