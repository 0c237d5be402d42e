#include "qaff/sl2.hpp"

#include "qaff/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace qaff {

namespace {

void require_sign(int epsilon) {
    if (epsilon != 1 && epsilon != -1) throw DomainError("epsilon must be +1 or -1");
}

void require_positive_q(const QParam& q, const char* who) {
    if (q.value() < 0) throw DomainError(std::string(who) + ": requires q > 0");
}

}  // namespace

Sl2Module irreducible_module(int epsilon, unsigned d, const QParam& q) {
    require_sign(epsilon);
    const std::size_t n = d + 1;
    Matrix k(n, n), e(n, n), f(n, n);
    for (std::size_t i = 0; i < n; ++i)
        k.at(i, i) = epsilon * q_power(q, static_cast<long>(d) - 2 * static_cast<long>(i));
    for (unsigned i = 0; i < d; ++i) {
        f.at(i + 1, i) = q_int(i + 1, q);
        e.at(i, i + 1) = epsilon * q_int(d - i, q);  // e u_{i+1} = eps [d-(i+1)+1] u_i
    }
    return {q, std::move(k), std::move(e), std::move(f)};
}

Sl2Module restrict_to_sl2(const HatModule& m, int i) {
    if (i == 0) return {m.q, m.K0, m.e0p, m.e0m};
    if (i == 1) return {m.q, m.K1, m.e1p, m.e1m};
    throw DomainError("restrict_to_sl2: index must be 0 or 1");
}

Sl2Module direct_sum(const Sl2Module& x, const Sl2Module& y) {
    if (!(x.q == y.q)) throw DomainError("direct_sum: mismatched q");
    return {x.q, block_diag(x.k, y.k), block_diag(x.e, y.e), block_diag(x.f, y.f)};
}

std::vector<IrreducibleTag> decompose_irreducibles(const Sl2Module& m) {
    require_positive_q(m.q, "decompose_irreducibles");
    const std::size_t n = m.dim();
    if (n == 0) return {};

    // weight spaces, probed from the largest exponent down, +1 sign first
    struct Weight {
        int eps;
        long j;
        Subspace space;
    };
    std::vector<Weight> weights;
    std::size_t total = 0;
    const long bound = static_cast<long>(n) - 1;
    for (long j = bound; j >= -bound; --j)
        for (const int eps : {1, -1}) {
            Rational value = eps * q_power(m.q, j);
            Subspace space = eigenspace(m.k, value);
            if (space.is_zero()) continue;
            total += space.dim();
            weights.push_back({eps, j, std::move(space)});
        }
    if (total != n)
        throw DomainError(
            "decompose_irreducibles: k is not diagonalizable with eigenvalues of the form "
            "eps q^j");

    const Subspace ker_e = kernel(m.e);
    std::vector<IrreducibleTag> tags;
    Matrix all_chains(n, 0);
    for (const auto& w : weights) {
        const Subspace tops = intersect(ker_e, w.space);
        if (tops.is_zero()) continue;
        if (w.j < 0)
            throw DomainError(
                "decompose_irreducibles: highest-weight vector at negative exponent; the "
                "module is not a sum of chains");
        const unsigned d = static_cast<unsigned>(w.j);
        for (std::size_t c = 0; c < tops.dim(); ++c) {
            Matrix chain(n, d + 1);
            Matrix v = tops.basis().column(c);
            for (unsigned step = 0; step <= d; ++step) {
                for (std::size_t row = 0; row < n; ++row) chain.at(row, step) = v.at(row, 0);
                v = m.f * v;
            }
            if (!v.is_zero())  // v now holds f^{d+1} (top)
                throw DomainError("decompose_irreducibles: chain of length " +
                                  std::to_string(d + 1) + " does not close under f");
            // exact isomorphism check against the (eps, d) irreducible:
            // k column_t = eps q^{d-2t} column_t, e column_t = eps [t][d-t+1] column_{t-1}
            for (unsigned t = 0; t <= d; ++t) {
                const Matrix col = chain.column(t);
                const Rational kval =
                    w.eps * q_power(m.q, static_cast<long>(d) - 2 * static_cast<long>(t));
                if (!(m.k * col - kval * col).is_zero())
                    throw DomainError("decompose_irreducibles: chain is not a weight chain");
                const Matrix ecol = m.e * col;
                if (t == 0) {
                    if (!ecol.is_zero())
                        throw DomainError("decompose_irreducibles: top of chain not killed by e");
                } else {
                    const Rational coef = w.eps * q_int(t, m.q) * q_int(d - t + 1, m.q);
                    if (!(ecol - coef * chain.column(t - 1)).is_zero())
                        throw DomainError(
                            "decompose_irreducibles: e does not act with the irreducible "
                            "coefficients on the chain");
                }
            }
            all_chains = hcat(all_chains, chain);
            tags.push_back({w.eps, d, std::move(chain)});
        }
    }

    if (all_chains.cols() != n || all_chains.rank() != n)
        throw DomainError(
            "decompose_irreducibles: chain bases do not span the space; the module is not "
            "completely reducible");
    return tags;
}

bool ef_kernel_check(const Sl2Module& m, const Matrix& v, int epsilon, unsigned d) {
    require_sign(epsilon);
    require_positive_q(m.q, "ef_kernel_check");
    if (v.rows() != m.dim() || v.cols() != 1)
        throw DomainError("ef_kernel_check: expected an ambient x 1 vector");
    if (v.is_zero()) throw DomainError("ef_kernel_check: zero vector");
    const Rational weight = epsilon * q_power(m.q, static_cast<long>(d));
    if (!(m.k * v - weight * v).is_zero())
        throw DomainError("ef_kernel_check: v is not a k-eigenvector with eigenvalue eps q^d");
    // diagonalizability over eps q^j, as the equivalence assumes
    std::size_t total = 0;
    const long bound = static_cast<long>(m.dim()) - 1;
    for (long j = bound; j >= -bound; --j)
        for (const int eps : {1, -1}) total += eigenspace(m.k, eps * q_power(m.q, j)).dim();
    if (total != m.dim())
        throw DomainError("ef_kernel_check: k is not diagonalizable with eigenvalues eps q^j");

    const bool e_kills = (m.e * v).is_zero();
    const bool f_kills = (m.f.pow(d + 1) * v).is_zero();
    return e_kills == f_kills;
}

std::string render_tags(const std::vector<IrreducibleTag>& tags) {
    // multiplicity per (epsilon, d), largest d first, +1 before -1
    std::map<std::pair<long, int>, std::size_t> counts;
    for (const auto& t : tags) ++counts[{-static_cast<long>(t.d), -t.epsilon}];
    std::string out;
    for (const auto& [key, mult] : counts) {
        const long d = -key.first;
        const int eps = -key.second;
        out += "(" + std::string(eps > 0 ? "+1" : "-1") + ", " + std::to_string(d) + ", " +
               std::to_string(mult) + ")\n";
    }
    return out;
}

}  // namespace qaff
