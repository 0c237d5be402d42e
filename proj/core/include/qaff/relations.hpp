#pragma once

#include "qaff/construction.hpp"
#include "qaff/sl2.hpp"

namespace qaff {

/// Residuals of every instance of the defining relations (19 named checks):
///   buq1.K0, buq1.K1           K_i K_i^-1 = K_i^-1 K_i = 1
///   buq2                       K_0 K_1 = K_1 K_0
///   buq3.i{0,1}.{plus,minus}   K_i e_i^± K_i^-1 = q^{±2} e_i^±
///   buq4.i{0,1}j{1,0}.{plus,minus}  K_i e_j^± K_i^-1 = q^{∓2} e_j^±  (i != j)
///   buq5.i0, buq5.i1           e_i^+ e_i^- - e_i^- e_i^+ = (K_i - K_i^-1)/(q - q^-1)
///   buq6.plus, buq6.minus      e_0^± e_1^∓ = e_1^∓ e_0^±
///   buq7.i{0,1}j{1,0}.{plus,minus}  cubic q-Serre between e_i^± and e_j^±
/// A singular K0 or K1 is its own distinguished failure (buq1.K0.invertible /
/// buq1.K1.invertible) since the conjugation relations need the inverse.
VerificationReport check_hat_relations(const HatModule& m);

/// Residuals of the four defining relations of an Sl2Module
/// (uq1.k, uq2.ke, uq3.kf, uq4.ef), with the same invertibility gate.
VerificationReport check_sl2_relations(const Sl2Module& m);

/// The 17 operator identities among K, A, Astar, B, Bstar, R, L, r, l:
///   ab.AB, ab.AstarBstar, ab.BAstar, ab.BstarA
///       (q X Y - q^-1 Y X) / (q - q^-1) = I for the four pairings
///   bk.BKinv, bk.BstarK    same shape against the torus action
///   serre.B.Bstar, serre.Bstar.B
///   op.K.inverses, op.K.conjugates.RL, op.K.conjugates.rl,
///   op.commute.rR.lL, op.cross.commutators,
///   op.serre.RL, op.serre.LR, op.serre.rl, op.serre.lr
/// Checks pairing two equations (e.g. the R and L halves of
/// op.K.conjugates.RL) fold both residuals into one entry.
VerificationReport check_intermediate(const RLSystem& sys, const ConstructionTrace& t);

/// Per-index structural facts tying the trace to the input decomposition:
///   spectrum.A, spectrum.Astar      dim V_i = rho_i, filling the space
///   flag[i]                         U_i+...+U_d = V_i+...+V_d
///   shift[i]                        (K^-1 - q^{d-2i}) V_i <= V_{i+1}
///   vanish[i]                       (U_0+...+U_i) n (V_0+...+V_{d-1-i}) = 0
///   refine[i]                       U_i = (+)_j R^{i-j} H_j
///   span.RH                         Q^n = (+)_{i,j} R^j H_i
///   dim.W[i], dim.Wstar[i]          dim = rho_i
///   rho.symmetric                   rho_i = rho_{d-i}
///   wflag[i]                        W_0+...+W_i = U_0+...+U_i
VerificationReport check_structure(const RLSystem& sys, const ConstructionTrace& t);

}  // namespace qaff
