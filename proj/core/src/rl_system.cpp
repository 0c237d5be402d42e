#include "qaff/rl_system.hpp"

#include "qaff/errors.hpp"

#include <utility>

namespace qaff {

Decomposition::Decomposition(std::size_t ambient, std::vector<Subspace> parts)
    : ambient_(ambient), parts_(std::move(parts)) {
    if (ambient_ == 0) throw DomainError("decomposition: ambient dimension must be positive");
    if (parts_.empty()) throw DomainError("decomposition: no parts");
    std::size_t total = 0;
    for (const auto& p : parts_) {
        if (p.ambient() != ambient_) throw DomainError("decomposition: ambient mismatch");
        if (p.is_zero()) throw DomainError("decomposition: zero part");
        total += p.dim();
    }
    if (total != ambient_ || sum(std::span<const Subspace>(parts_)).dim() != total)
        throw DomainError("decomposition: parts do not form a direct sum of the whole space");
}

std::vector<std::size_t> Decomposition::dims() const {
    std::vector<std::size_t> out;
    out.reserve(parts_.size());
    for (const auto& p : parts_) out.push_back(p.dim());
    return out;
}

Matrix q_serre_residual(const Matrix& x, const Matrix& y, const QParam& q) {
    const Rational three = q_int(3, q);
    const Matrix x2 = x * x;
    const Matrix x3 = x2 * x;
    return x3 * y - three * (x2 * y * x) + three * (x * y * x2) - y * x3;
}

VerificationReport validate_parts(const Rational& q, std::size_t ambient,
                                  const std::vector<Subspace>& u, const Matrix& r,
                                  const Matrix& l) {
    VerificationReport rep;

    const bool q_ok = q != 0 && q != 1 && q != -1;
    rep.add({"q.admissible", q_ok, 0});

    const bool shapes_ok = ambient > 0 && r.rows() == ambient && r.cols() == ambient &&
                           l.rows() == ambient && l.cols() == ambient;
    rep.add({"shape.operators", shapes_ok, 0});

    bool parts_ok = !u.empty();
    std::size_t total = 0;
    for (const auto& s : u) {
        if (s.ambient() != ambient || s.is_zero()) parts_ok = false;
        total += s.dim();
    }
    rep.add({"decomposition.parts", parts_ok, 0});

    const bool direct_ok = parts_ok && total == ambient &&
                           sum(std::span<const Subspace>(u)).dim() == total;
    rep.add({"decomposition.direct", direct_ok, 0});

    if (!q_ok || !shapes_ok || !parts_ok || !direct_ok) return rep;

    const QParam qq{q};
    const std::size_t d = u.size() - 1;
    const Subspace none = Subspace::zero(ambient);

    // (i)/(ii): inclusion chains, with U_{d+1} = U_{-1} = 0
    bool raising_ok = true;
    for (std::size_t i = 0; i <= d; ++i) {
        const Subspace& target = i == d ? none : u[i + 1];
        if (!target.contains(image(r, u[i]))) raising_ok = false;
    }
    rep.add({"clause.i.raising", raising_ok, 0});

    bool lowering_ok = true;
    for (std::size_t i = 0; i <= d; ++i) {
        const Subspace& target = i == 0 ? none : u[i - 1];
        if (!target.contains(image(l, u[i]))) lowering_ok = false;
    }
    rep.add({"clause.ii.lowering", lowering_ok, 0});

    // (iii)/(iv): power restrictions are bijections across the middle
    bool up_bij = true;
    bool down_bij = true;
    for (std::size_t i = 0; 2 * i <= d; ++i) {
        const unsigned p = static_cast<unsigned>(d - 2 * i);
        if (!restricts_to_bijection(r, p, u[i], u[d - i])) up_bij = false;
        if (!restricts_to_bijection(l, p, u[d - i], u[i])) down_bij = false;
    }
    rep.add({"clause.iii.raising-bijections", up_bij, 0});
    rep.add({"clause.iv.lowering-bijections", down_bij, 0});

    // (v)/(vi): cubic q-Serre
    const Matrix serre_r = q_serre_residual(r, l, qq);
    rep.add({"clause.v.serre-r", serre_r.is_zero(), max_numerator_bits(serre_r)});
    const Matrix serre_l = q_serre_residual(l, r, qq);
    rep.add({"clause.vi.serre-l", serre_l.is_zero(), max_numerator_bits(serre_l)});

    return rep;
}

RLSystem::RLSystem(QParam q, Decomposition u, Matrix r, Matrix l)
    : q_(std::move(q)), u_(std::move(u)), r_(std::move(r)), l_(std::move(l)) {}

RLSystem RLSystem::admit(QParam q, Decomposition u, Matrix r, Matrix l) {
    VerificationReport rep = validate_parts(q.value(), u.ambient(), u.parts(), r, l);
    if (!rep.passed()) throw ValidationError(std::move(rep));
    return {std::move(q), std::move(u), std::move(r), std::move(l)};
}

RLSystem RLSystem::unchecked(QParam q, Decomposition u, Matrix r, Matrix l) {
    return {std::move(q), std::move(u), std::move(r), std::move(l)};
}

VerificationReport validate(const RLSystem& sys) {
    return validate_parts(sys.q().value(), sys.dim(), sys.u().parts(), sys.r(), sys.l());
}

Matrix corresponding_k(const Decomposition& u, const QParam& q) {
    const long d = static_cast<long>(u.diameter());
    std::vector<Rational> eigenvalues;
    eigenvalues.reserve(u.parts().size());
    for (long i = 0; i <= d; ++i) eigenvalues.push_back(q_power(q, 2 * i - d));
    return operator_with_eigenspaces(u.parts(), eigenvalues);
}

RLSystem gen_evaluation(unsigned d, const Rational& a, const QParam& q) {
    if (a == 0) throw DomainError("gen_evaluation: a must be nonzero");
    const std::size_t n = d + 1;
    std::vector<Subspace> parts;
    parts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix e(n, 1);
        e.at(i, 0) = 1;
        parts.push_back(Subspace::span(e));
    }
    Matrix r(n, n), l(n, n);
    for (unsigned i = 0; i < d; ++i) {
        r.at(i + 1, i) = q_int(i + 1, q);
        l.at(i, i + 1) = a * q_int(d - i, q);  // L u_{i+1} = a [d-(i+1)+1] u_i
    }
    return RLSystem::admit(q, Decomposition(n, std::move(parts)), std::move(r), std::move(l));
}

RLSystem gen_direct_sum(const RLSystem& x, const RLSystem& y) {
    if (!(x.q() == y.q())) throw DomainError("gen_direct_sum: mismatched q");
    if (x.diameter() != y.diameter()) throw DomainError("gen_direct_sum: mismatched diameter");
    const std::size_t nx = x.dim();
    const std::size_t ny = y.dim();
    std::vector<Subspace> parts;
    parts.reserve(x.diameter() + 1);
    for (std::size_t i = 0; i <= x.diameter(); ++i) {
        const Matrix bx = x.u().part(i).basis();
        const Matrix by = y.u().part(i).basis();
        Matrix joint(nx + ny, bx.cols() + by.cols());
        for (std::size_t rr = 0; rr < nx; ++rr)
            for (std::size_t c = 0; c < bx.cols(); ++c) joint.at(rr, c) = bx.at(rr, c);
        for (std::size_t rr = 0; rr < ny; ++rr)
            for (std::size_t c = 0; c < by.cols(); ++c)
                joint.at(nx + rr, bx.cols() + c) = by.at(rr, c);
        parts.push_back(Subspace::span(joint));
    }
    return RLSystem::admit(x.q(), Decomposition(nx + ny, std::move(parts)),
                           block_diag(x.r(), y.r()), block_diag(x.l(), y.l()));
}

RLSystem gen_conjugate(const RLSystem& sys, const Matrix& p) {
    if (p.rows() != sys.dim() || p.cols() != sys.dim())
        throw DomainError("gen_conjugate: shape mismatch");
    const Matrix pinv = p.inverse();  // rejects singular p
    std::vector<Subspace> parts;
    parts.reserve(sys.diameter() + 1);
    for (const auto& part : sys.u().parts()) parts.push_back(image(p, part));
    return RLSystem::admit(sys.q(), Decomposition(sys.dim(), std::move(parts)),
                           p * sys.r() * pinv, p * sys.l() * pinv);
}

}  // namespace qaff
