#include "qaff/relations.hpp"

#include "qaff/errors.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace qaff {

namespace {

void add_residual(VerificationReport& rep, std::string name, const Matrix& residual) {
    const bool ok = residual.is_zero();
    rep.add({std::move(name), ok, ok ? 0 : max_numerator_bits(residual)});
}

void add_residual2(VerificationReport& rep, std::string name, const Matrix& r1,
                   const Matrix& r2) {
    const bool ok = r1.is_zero() && r2.is_zero();
    rep.add({std::move(name), ok,
             ok ? 0 : std::max(max_numerator_bits(r1), max_numerator_bits(r2))});
}

std::optional<Matrix> try_inverse(const Matrix& m) {
    if (!m.is_square() || m.rank() != m.rows()) return std::nullopt;
    return m.inverse();
}

// (q x y - q^-1 y x) / (q - q^-1) - I
Matrix weighted_bracket_residual(const Matrix& x, const Matrix& y, const QParam& q) {
    const Rational qv = q.value();
    const Rational qi = q.inv();
    return Rational(1) / (qv - qi) * (qv * (x * y) - qi * (y * x)) - Matrix::identity(x.rows());
}

}  // namespace

VerificationReport check_hat_relations(const HatModule& m) {
    VerificationReport rep;

    const auto k0i = try_inverse(m.K0);
    const auto k1i = try_inverse(m.K1);
    if (!k0i || !k1i) {
        // distinguished failure: without the inverses the conjugation
        // relations cannot even be stated
        rep.add({"buq1.K0.invertible", k0i.has_value(), 0});
        rep.add({"buq1.K1.invertible", k1i.has_value(), 0});
        return rep;
    }

    const std::size_t n = m.dim();
    const Matrix id = Matrix::identity(n);
    const Rational q2 = q_power(m.q, 2);
    const Rational qm2 = q_power(m.q, -2);
    const Rational denom = m.q.value() - m.q.inv();

    add_residual2(rep, "buq1.K0", m.K0 * *k0i - id, *k0i * m.K0 - id);
    add_residual2(rep, "buq1.K1", m.K1 * *k1i - id, *k1i * m.K1 - id);
    add_residual(rep, "buq2", m.K0 * m.K1 - m.K1 * m.K0);

    add_residual(rep, "buq3.i0.plus", m.K0 * m.e0p * *k0i - q2 * m.e0p);
    add_residual(rep, "buq3.i0.minus", m.K0 * m.e0m * *k0i - qm2 * m.e0m);
    add_residual(rep, "buq3.i1.plus", m.K1 * m.e1p * *k1i - q2 * m.e1p);
    add_residual(rep, "buq3.i1.minus", m.K1 * m.e1m * *k1i - qm2 * m.e1m);

    add_residual(rep, "buq4.i0j1.plus", m.K0 * m.e1p * *k0i - qm2 * m.e1p);
    add_residual(rep, "buq4.i0j1.minus", m.K0 * m.e1m * *k0i - q2 * m.e1m);
    add_residual(rep, "buq4.i1j0.plus", m.K1 * m.e0p * *k1i - qm2 * m.e0p);
    add_residual(rep, "buq4.i1j0.minus", m.K1 * m.e0m * *k1i - q2 * m.e0m);

    add_residual(rep, "buq5.i0",
                 m.e0p * m.e0m - m.e0m * m.e0p - Rational(1) / denom * (m.K0 - *k0i));
    add_residual(rep, "buq5.i1",
                 m.e1p * m.e1m - m.e1m * m.e1p - Rational(1) / denom * (m.K1 - *k1i));

    add_residual(rep, "buq6.plus", m.e0p * m.e1m - m.e1m * m.e0p);
    add_residual(rep, "buq6.minus", m.e0m * m.e1p - m.e1p * m.e0m);

    add_residual(rep, "buq7.i0j1.plus", q_serre_residual(m.e0p, m.e1p, m.q));
    add_residual(rep, "buq7.i0j1.minus", q_serre_residual(m.e0m, m.e1m, m.q));
    add_residual(rep, "buq7.i1j0.plus", q_serre_residual(m.e1p, m.e0p, m.q));
    add_residual(rep, "buq7.i1j0.minus", q_serre_residual(m.e1m, m.e0m, m.q));

    return rep;
}

VerificationReport check_sl2_relations(const Sl2Module& m) {
    VerificationReport rep;

    const auto ki = try_inverse(m.k);
    if (!ki) {
        rep.add({"uq1.k.invertible", false, 0});
        return rep;
    }

    const std::size_t n = m.dim();
    const Matrix id = Matrix::identity(n);
    const Rational q2 = q_power(m.q, 2);
    const Rational qm2 = q_power(m.q, -2);
    const Rational denom = m.q.value() - m.q.inv();

    add_residual2(rep, "uq1.k", m.k * *ki - id, *ki * m.k - id);
    add_residual(rep, "uq2.ke", m.k * m.e - q2 * (m.e * m.k));
    add_residual(rep, "uq3.kf", m.k * m.f - qm2 * (m.f * m.k));
    add_residual(rep, "uq4.ef",
                 m.e * m.f - m.f * m.e - Rational(1) / denom * (m.k - *ki));

    return rep;
}

VerificationReport check_intermediate(const RLSystem& sys, const ConstructionTrace& t) {
    VerificationReport rep;
    const QParam& q = sys.q();
    const Matrix kinv = t.K.inverse();
    const Matrix id = Matrix::identity(t.K.rows());
    const Rational q2 = q_power(q, 2);
    const Rational qm2 = q_power(q, -2);
    const Rational denom = q.value() - q.inv();

    add_residual(rep, "ab.AB", weighted_bracket_residual(t.A, t.B, q));
    add_residual(rep, "ab.AstarBstar", weighted_bracket_residual(t.Astar, t.Bstar, q));
    add_residual(rep, "ab.BAstar", weighted_bracket_residual(t.B, t.Astar, q));
    add_residual(rep, "ab.BstarA", weighted_bracket_residual(t.Bstar, t.A, q));

    add_residual(rep, "bk.BKinv", weighted_bracket_residual(t.B, kinv, q));
    add_residual(rep, "bk.BstarK", weighted_bracket_residual(t.Bstar, t.K, q));

    add_residual(rep, "serre.B.Bstar", q_serre_residual(t.B, t.Bstar, q));
    add_residual(rep, "serre.Bstar.B", q_serre_residual(t.Bstar, t.B, q));

    add_residual2(rep, "op.K.inverses", t.K * kinv - id, kinv * t.K - id);
    add_residual2(rep, "op.K.conjugates.RL", t.K * sys.r() - q2 * (sys.r() * t.K),
                  t.K * sys.l() - qm2 * (sys.l() * t.K));
    add_residual2(rep, "op.K.conjugates.rl", t.K * t.r - q2 * (t.r * t.K),
                  t.K * t.l - qm2 * (t.l * t.K));
    add_residual2(rep, "op.commute.rR.lL", t.r * sys.r() - sys.r() * t.r,
                  t.l * sys.l() - sys.l() * t.l);
    add_residual2(rep, "op.cross.commutators",
                  t.l * sys.r() - sys.r() * t.l - Rational(1) / denom * (kinv - t.K),
                  t.r * sys.l() - sys.l() * t.r - Rational(1) / denom * (t.K - kinv));
    add_residual(rep, "op.serre.RL", q_serre_residual(sys.r(), sys.l(), q));
    add_residual(rep, "op.serre.LR", q_serre_residual(sys.l(), sys.r(), q));
    add_residual(rep, "op.serre.rl", q_serre_residual(t.r, t.l, q));
    add_residual(rep, "op.serre.lr", q_serre_residual(t.l, t.r, q));

    return rep;
}

VerificationReport check_structure(const RLSystem& sys, const ConstructionTrace& t) {
    VerificationReport rep;
    const std::size_t d = sys.diameter();
    const std::size_t n = sys.dim();
    const auto& rho = t.rho;
    const QParam& q = sys.q();

    const auto spectrum_matches = [&](const std::vector<Subspace>& spaces) {
        if (spaces.size() != d + 1) return false;
        std::size_t total = 0;
        for (std::size_t i = 0; i <= d; ++i) {
            if (spaces[i].dim() != rho[i]) return false;
            total += spaces[i].dim();
        }
        return total == n;
    };
    rep.add({"spectrum.A", spectrum_matches(t.V), 0});
    rep.add({"spectrum.Astar", spectrum_matches(t.Vstar), 0});

    std::vector<Subspace> su(d + 1, Subspace::zero(n));
    std::vector<Subspace> sv(d + 1, Subspace::zero(n));
    for (std::size_t i = d + 1; i-- > 0;) {
        su[i] = i == d ? sys.u().part(i) : sum(sys.u().part(i), su[i + 1]);
        sv[i] = i == d ? t.V[i] : sum(t.V[i], sv[i + 1]);
    }
    for (std::size_t i = 0; i <= d; ++i)
        rep.add({"flag[" + std::to_string(i) + "]", su[i] == sv[i], 0});

    const Matrix kinv = t.K.inverse();
    for (std::size_t i = 0; i <= d; ++i) {
        Matrix shifted = kinv;
        const Rational ev = q_power(q, static_cast<long>(d) - 2 * static_cast<long>(i));
        for (std::size_t j = 0; j < n; ++j) shifted.at(j, j) -= ev;
        const Subspace img = image(shifted, t.V[i]);
        const bool ok = i == d ? img.is_zero() : t.V[i + 1].contains(img);
        rep.add({"shift[" + std::to_string(i) + "]", ok, 0});
    }

    std::vector<Subspace> pu(d + 1, Subspace::zero(n));
    std::vector<Subspace> pv(d + 1, Subspace::zero(n));
    std::vector<Subspace> pw(d + 1, Subspace::zero(n));
    for (std::size_t i = 0; i <= d; ++i) {
        pu[i] = i == 0 ? sys.u().part(i) : sum(pu[i - 1], sys.u().part(i));
        pv[i] = i == 0 ? t.V[i] : sum(pv[i - 1], t.V[i]);
        pw[i] = i == 0 ? t.W[i] : sum(pw[i - 1], t.W[i]);
    }
    for (std::size_t i = 0; i + 1 <= d; ++i)
        rep.add({"vanish[" + std::to_string(i) + "]",
                 intersect(pu[i], pv[d - 1 - i]).is_zero(), 0});

    // refinement U_i = (+)_{j <= min(i, d-i)} R^{i-j} H_j
    for (std::size_t i = 0; i <= d; ++i) {
        std::vector<Subspace> layers;
        for (std::size_t j = 0; j <= std::min(i, d - i); ++j)
            layers.push_back(image(sys.r().pow(static_cast<unsigned>(i - j)), t.H[j]));
        const bool ok = is_direct_sum(std::span<const Subspace>(layers)) &&
                        sum(std::span<const Subspace>(layers)) == sys.u().part(i);
        rep.add({"refine[" + std::to_string(i) + "]", ok, 0});
    }

    // whole-space spanning by the R-orbits of the H_i
    {
        std::vector<Subspace> layers;
        for (std::size_t i = 0; 2 * i <= d; ++i)
            for (std::size_t j = 0; j <= d - 2 * i; ++j)
                layers.push_back(image(sys.r().pow(static_cast<unsigned>(j)), t.H[i]));
        const bool ok = is_direct_sum(std::span<const Subspace>(layers)) &&
                        sum(std::span<const Subspace>(layers)).dim() == n;
        rep.add({"span.RH", ok, 0});
    }

    for (std::size_t i = 0; i <= d; ++i)
        rep.add({"dim.W[" + std::to_string(i) + "]", t.W[i].dim() == rho[i], 0});
    for (std::size_t i = 0; i <= d; ++i)
        rep.add({"dim.Wstar[" + std::to_string(i) + "]", t.Wstar[i].dim() == rho[i], 0});

    bool rho_sym = true;
    for (std::size_t i = 0; i <= d; ++i)
        if (rho[i] != rho[d - i]) rho_sym = false;
    rep.add({"rho.symmetric", rho_sym, 0});

    for (std::size_t i = 0; i <= d; ++i)
        rep.add({"wflag[" + std::to_string(i) + "]", pw[i] == pu[i], 0});

    return rep;
}

}  // namespace qaff
