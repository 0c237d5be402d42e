#pragma once

#include "qaff/rl_system.hpp"

#include <utility>
#include <vector>

namespace qaff {

/// Matrices of the six generators on Q^n.  e0m/e1m are the given lowering
/// and raising maps, e0p/e1p the constructed partners, K0/K1 the torus
/// actions.  Inverses are recomputed on demand, never stored.
struct HatModule {
    QParam q;
    Matrix e0p, e0m, e1p, e1m, K0, K1;

    std::size_t dim() const noexcept { return K0.rows(); }

    bool operator==(const HatModule&) const = default;
};

/// Every intermediate of the construction, for export and verification:
///   K      acts on U_i as q^{2i-d}
///   A      = K + R, with eigenspaces V_i at q^{2i-d}
///   Astar  = K^-1 + L, with eigenspaces Vstar_i at q^{d-2i}
///   W_i    = (U_0+...+U_i) n (V_0+...+V_{d-i})
///   Wstar_i= (U_i+...+U_d) n (Vstar_{d-i}+...+Vstar_d)
///   H_i    = { v in U_i : R^{d-2i+1} v = 0 },  0 <= i <= d/2
///   B      acts on W_i as q^{2i-d};  Bstar acts on Wstar_i as q^{d-2i}
///   r      = (I - K Bstar) / (q (q - q^-1)^2)
///   l      = (I - K^-1 B) / (q (q - q^-1)^2)
struct ConstructionTrace {
    Matrix K;
    Matrix A, Astar;
    std::vector<Subspace> V, Vstar, W, Wstar, H;
    Matrix B, Bstar;
    Matrix r, l;
    std::vector<std::size_t> rho;
};

/// full: run every structural-lemma and relation check along the way.
/// fast: only the assertions the pipeline needs to be well-defined
/// (eigenspace dimensions, directness of W and Wstar).
enum class CheckLevel { full, fast };

struct Construction {
    HatModule module;
    ConstructionTrace trace;
};

Matrix build_A(const Matrix& k, const Matrix& r);
Matrix build_Astar(const Matrix& k, const Matrix& l);

/// Eigenspaces of a at the d+1 prescribed eigenvalues q^{2i-d}.  Asserts
/// dim V_i = rho_i (so the eigenspaces fill the space); LemmaError otherwise.
std::vector<Subspace> compute_V(const RLSystem& sys, const Matrix& a);

/// Eigenspaces of astar at q^{d-2i}, same assertion.
std::vector<Subspace> compute_Vstar(const RLSystem& sys, const Matrix& astar);

/// W_i from the two flags; asserts the W_i decompose the space with
/// dim W_i = rho_i and that W_0+...+W_i = U_0+...+U_i.
std::vector<Subspace> compute_W(const RLSystem& sys, const std::vector<Subspace>& v);

/// Mirror image for Wstar_i.
std::vector<Subspace> compute_Wstar(const RLSystem& sys, const std::vector<Subspace>& vstar);

/// H_i = ker(R^{d-2i+1}) n U_i for 0 <= i <= d/2.
std::vector<Subspace> compute_H(const RLSystem& sys);

Matrix build_B(const std::vector<Subspace>& w, const QParam& q);
Matrix build_Bstar(const std::vector<Subspace>& wstar, const QParam& q);

/// (r, l) from K, B, Bstar.
std::pair<Matrix, Matrix> build_r_l(const Matrix& k, const Matrix& b,
                                    const Matrix& bstar, const QParam& q);

/// The whole pipeline.  The resulting module satisfies all defining
/// relations with e0m = L, e1m = R, K0 = K, K1 = K^-1; at CheckLevel::full
/// this is verified and any violation raises LemmaError naming the failed
/// fact.  Bit-for-bit deterministic: same system, same module.
Construction construct_module(const RLSystem& sys, CheckLevel level = CheckLevel::full);

}  // namespace qaff
