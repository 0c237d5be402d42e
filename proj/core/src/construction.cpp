#include "qaff/construction.hpp"

#include "qaff/errors.hpp"
#include "qaff/relations.hpp"

#include <utility>

namespace qaff {

namespace {

// prefix[i] = parts[0] + ... + parts[i]
std::vector<Subspace> prefix_sums(const std::vector<Subspace>& parts) {
    std::vector<Subspace> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(out.empty() ? p : sum(out.back(), p));
    return out;
}

// suffix[i] = parts[i] + ... + parts[d]
std::vector<Subspace> suffix_sums(const std::vector<Subspace>& parts) {
    std::vector<Subspace> out(parts.size(), Subspace::zero(parts.front().ambient()));
    for (std::size_t i = parts.size(); i-- > 0;)
        out[i] = i + 1 == parts.size() ? parts[i] : sum(parts[i], out[i + 1]);
    return out;
}

std::vector<Subspace> eigenspaces_at(const RLSystem& sys, const Matrix& op, bool reversed,
                                     const char* lemma) {
    const long d = static_cast<long>(sys.diameter());
    const auto rho = sys.u().dims();
    std::vector<Subspace> out;
    out.reserve(d + 1);
    for (long i = 0; i <= d; ++i) {
        const long expo = reversed ? d - 2 * i : 2 * i - d;
        Subspace es = eigenspace(op, q_power(sys.q(), expo));
        if (es.dim() != rho[static_cast<std::size_t>(i)])
            throw LemmaError(lemma, "eigenspace " + std::to_string(i) + " has dimension " +
                                        std::to_string(es.dim()) + ", expected " +
                                        std::to_string(rho[static_cast<std::size_t>(i)]));
        out.push_back(std::move(es));
    }
    return out;
}

std::vector<Subspace> intersect_flags(const RLSystem& sys, const std::vector<Subspace>& with,
                                      bool starred) {
    const std::size_t d = sys.diameter();
    const auto rho = sys.u().dims();
    const char* deco_lemma = starred ? "Wstar decomposition" : "W decomposition";
    const char* flag_lemma = starred ? "Wstar flag equality" : "W flag equality";

    std::vector<Subspace> out;
    out.reserve(d + 1);
    if (!starred) {
        const auto pu = prefix_sums(sys.u().parts());
        const auto pv = prefix_sums(with);
        for (std::size_t i = 0; i <= d; ++i) out.push_back(intersect(pu[i], pv[d - i]));
    } else {
        const auto su = suffix_sums(sys.u().parts());
        const auto sv = suffix_sums(with);
        for (std::size_t i = 0; i <= d; ++i) out.push_back(intersect(su[i], sv[d - i]));
    }

    for (std::size_t i = 0; i <= d; ++i)
        if (out[i].dim() != rho[i])
            throw LemmaError(deco_lemma, "part " + std::to_string(i) + " has dimension " +
                                             std::to_string(out[i].dim()) + ", expected " +
                                             std::to_string(rho[i]));
    if (!is_direct_sum(std::span<const Subspace>(out)))
        throw LemmaError(deco_lemma, "parts are not independent");

    // the new flag must reproduce the U flag step by step
    if (!starred) {
        const auto pu = prefix_sums(sys.u().parts());
        const auto pw = prefix_sums(out);
        for (std::size_t i = 0; i <= d; ++i)
            if (!(pw[i] == pu[i]))
                throw LemmaError(flag_lemma, "prefix " + std::to_string(i) + " differs");
    } else {
        const auto su = suffix_sums(sys.u().parts());
        const auto sw = suffix_sums(out);
        for (std::size_t i = 0; i <= d; ++i)
            if (!(sw[i] == su[i]))
                throw LemmaError(flag_lemma, "suffix " + std::to_string(i) + " differs");
    }
    return out;
}

}  // namespace

Matrix build_A(const Matrix& k, const Matrix& r) { return k + r; }

Matrix build_Astar(const Matrix& k, const Matrix& l) { return k.inverse() + l; }

std::vector<Subspace> compute_V(const RLSystem& sys, const Matrix& a) {
    return eigenspaces_at(sys, a, false, "eigenspaces of K+R fill the space");
}

std::vector<Subspace> compute_Vstar(const RLSystem& sys, const Matrix& astar) {
    return eigenspaces_at(sys, astar, true, "eigenspaces of Kinv+L fill the space");
}

std::vector<Subspace> compute_W(const RLSystem& sys, const std::vector<Subspace>& v) {
    return intersect_flags(sys, v, false);
}

std::vector<Subspace> compute_Wstar(const RLSystem& sys, const std::vector<Subspace>& vstar) {
    return intersect_flags(sys, vstar, true);
}

std::vector<Subspace> compute_H(const RLSystem& sys) {
    const std::size_t d = sys.diameter();
    std::vector<Subspace> out;
    out.reserve(d / 2 + 1);
    for (std::size_t i = 0; 2 * i <= d; ++i) {
        const unsigned p = static_cast<unsigned>(d - 2 * i + 1);
        out.push_back(intersect(kernel(sys.r().pow(p)), sys.u().part(i)));
    }
    return out;
}

Matrix build_B(const std::vector<Subspace>& w, const QParam& q) {
    const long d = static_cast<long>(w.size()) - 1;
    std::vector<Rational> eigenvalues;
    eigenvalues.reserve(w.size());
    for (long i = 0; i <= d; ++i) eigenvalues.push_back(q_power(q, 2 * i - d));
    return operator_with_eigenspaces(w, eigenvalues);
}

Matrix build_Bstar(const std::vector<Subspace>& wstar, const QParam& q) {
    const long d = static_cast<long>(wstar.size()) - 1;
    std::vector<Rational> eigenvalues;
    eigenvalues.reserve(wstar.size());
    for (long i = 0; i <= d; ++i) eigenvalues.push_back(q_power(q, d - 2 * i));
    return operator_with_eigenspaces(wstar, eigenvalues);
}

std::pair<Matrix, Matrix> build_r_l(const Matrix& k, const Matrix& b, const Matrix& bstar,
                                    const QParam& q) {
    const Rational diff = q.value() - q.inv();
    const Rational scale = Rational(1) / (q.value() * diff * diff);  // nonzero: q not in {0,1,-1}
    const Matrix id = Matrix::identity(k.rows());
    Matrix r = scale * (id - k * bstar);
    Matrix l = scale * (id - k.inverse() * b);
    return {std::move(r), std::move(l)};
}

Construction construct_module(const RLSystem& sys, CheckLevel level) {
    ConstructionTrace t;
    t.rho = sys.u().dims();
    t.K = corresponding_k(sys.u(), sys.q());
    t.A = build_A(t.K, sys.r());
    t.V = compute_V(sys, t.A);
    t.Astar = build_Astar(t.K, sys.l());
    t.Vstar = compute_Vstar(sys, t.Astar);
    t.W = compute_W(sys, t.V);
    t.Wstar = compute_Wstar(sys, t.Vstar);
    t.H = compute_H(sys);
    t.B = build_B(t.W, sys.q());
    t.Bstar = build_Bstar(t.Wstar, sys.q());
    std::tie(t.r, t.l) = build_r_l(t.K, t.B, t.Bstar, sys.q());

    HatModule m{sys.q(), t.r, sys.l(), t.l, sys.r(), t.K, t.K.inverse()};

    if (level == CheckLevel::full) {
        for (const VerificationReport& rep :
             {check_structure(sys, t), check_intermediate(sys, t), check_hat_relations(m)})
            if (!rep.passed())
                throw LemmaError(rep.first_failure(), "construction self-check failed");
    }
    return {std::move(m), std::move(t)};
}

}  // namespace qaff
