#include "qaff/classify.hpp"

#include "qaff/errors.hpp"

#include <algorithm>
#include <utility>

namespace qaff {

namespace {

void require_sign(int epsilon) {
    if (epsilon != 1 && epsilon != -1) throw DomainError("twist sign must be +1 or -1");
}

void require_positive_q(const QParam& q, const char* who) {
    if (q.value() < 0) throw DomainError(std::string(who) + ": requires q > 0");
}

}  // namespace

std::string PieceKey::str() const {
    std::string out;
    out += eps0 > 0 ? "p1" : "m1";
    out += eps1 > 0 ? "_p1" : "_m1";
    out += odd ? "_odd" : "_even";
    return out;
}

const Subspace& PieceDecomposition::piece(const PieceKey& key) const {
    for (const auto& [k, s] : pieces)
        if (k == key) return s;
    throw DomainError("no piece with key " + key.str());
}

BasicResult classify_basic(const HatModule& m) {
    require_positive_q(m.q, "classify_basic");
    const std::size_t n = m.dim();
    BasicResult res;

    const Matrix prod = m.K0 * m.K1 - Matrix::identity(n);
    res.report.add({"basic.K0K1", prod.is_zero(),
                    prod.is_zero() ? 0 : max_numerator_bits(prod)});

    // probe the positive q-power window |j| <= n-1; exact division walks the
    // candidate eigenvalue down one exponent per step
    const long bound = static_cast<long>(n) - 1;
    std::vector<long> exponents;
    std::size_t total = 0;
    Rational value = q_power(m.q, bound);
    for (long j = bound; j >= -bound; --j, value /= m.q.value()) {
        const std::size_t dim = eigenspace(m.K0, value).dim();
        if (dim == 0) continue;
        exponents.push_back(j);
        total += dim;
    }
    const bool diag = total == n;
    res.report.add({"basic.diagonalizable", diag, 0});

    bool spectrum_ok = false;
    long d = 0;
    if (!exponents.empty()) {
        d = exponents.front();  // scan went downward, so this is the max
        const long dmin = exponents.back();
        spectrum_ok = d >= 0 && dmin == -d &&
                      exponents.size() == static_cast<std::size_t>(d) + 1;
        for (std::size_t t = 0; spectrum_ok && t < exponents.size(); ++t)
            if (exponents[t] != d - 2 * static_cast<long>(t)) spectrum_ok = false;
    }
    res.report.add({"basic.spectrum", spectrum_ok, 0});

    if (res.report.passed()) res.diameter = static_cast<unsigned>(d);
    return res;
}

RLSystem extract_system(const HatModule& m) {
    const BasicResult res = classify_basic(m);
    if (!res.is_basic())
        throw DomainError("extract_system: module is not basic (" +
                          res.report.first_failure() + ")");
    const long d = *res.diameter;
    const std::size_t n = m.dim();
    std::vector<Subspace> parts;
    parts.reserve(d + 1);
    for (long i = 0; i <= d; ++i)
        parts.push_back(eigenspace(m.K0, q_power(m.q, 2 * i - d)));
    return RLSystem::admit(m.q, Decomposition(n, std::move(parts)), m.e1m, m.e0m);
}

PieceDecomposition eight_pieces(const HatModule& m) {
    require_positive_q(m.q, "eight_pieces");
    const std::size_t n = m.dim();
    if (!(m.K0 * m.K1 == m.K1 * m.K0))
        throw DomainError("eight_pieces: K0 and K1 do not commute");

    std::vector<PieceKey> keys;
    for (const int eps0 : {1, -1})
        for (const int eps1 : {1, -1})
            for (const bool odd : {false, true}) keys.push_back({eps0, eps1, odd});

    std::vector<Matrix> columns(keys.size(), Matrix(n, 0));
    const auto key_index = [&](int eps0, int eps1, bool odd) {
        return (eps0 > 0 ? 0 : 4) + (eps1 > 0 ? 0 : 2) + (odd ? 1 : 0);
    };

    std::size_t total = 0;
    const long bound = static_cast<long>(n) - 1;
    for (long j = bound; j >= -bound; --j) {
        const Rational pj = q_power(m.q, j);
        const Rational pmj = Rational(1) / pj;
        for (const int eps0 : {1, -1}) {
            const Subspace e0 = eigenspace(m.K0, eps0 * pj);
            if (e0.is_zero()) continue;
            std::size_t filled = 0;
            for (const int eps1 : {1, -1}) {
                const Subspace joint = intersect(e0, eigenspace(m.K1, eps1 * pmj));
                if (joint.is_zero()) continue;
                filled += joint.dim();
                auto& block = columns[key_index(eps0, eps1, j % 2 != 0)];
                block = hcat(block, joint.basis());
            }
            if (filled != e0.dim())
                throw DomainError(
                    "eight_pieces: K0 eigenvectors at exponent " + std::to_string(j) +
                    " have no matching K1 eigenvalue of the form eps q^-j");
            total += filled;
        }
    }
    if (total != n)
        throw DomainError(
            "eight_pieces: K0 is not diagonalizable with eigenvalues of the form eps q^j");

    PieceDecomposition out;
    std::vector<Subspace> nonzero;
    for (std::size_t t = 0; t < keys.size(); ++t) {
        Subspace s = Subspace::span(columns[t]);
        if (!s.is_zero()) nonzero.push_back(s);
        out.pieces.emplace_back(keys[t], std::move(s));
    }
    if (!nonzero.empty() && !is_direct_sum(std::span<const Subspace>(nonzero)))
        throw DomainError("eight_pieces: pieces are not independent");

    const std::pair<const char*, const Matrix*> gens[] = {
        {"e0p", &m.e0p}, {"e0m", &m.e0m}, {"e1p", &m.e1p},
        {"e1m", &m.e1m}, {"K0", &m.K0},   {"K1", &m.K1}};
    for (const auto& [key, s] : out.pieces) {
        if (s.is_zero()) continue;
        for (const auto& [name, g] : gens)
            if (!s.contains(image(*g, s)))
                throw DomainError("eight_pieces: piece " + key.str() +
                                  " is not invariant under " + name);
    }
    return out;
}

HatModule twist(const HatModule& m, int eps0, int eps1) {
    require_sign(eps0);
    require_sign(eps1);
    const Rational s0{eps0};
    const Rational s1{eps1};
    return {m.q, s0 * m.e0p, m.e0m, s1 * m.e1p, m.e1m, s0 * m.K0, s1 * m.K1};
}

HatModule direct_sum(const HatModule& x, const HatModule& y) {
    if (!(x.q == y.q)) throw DomainError("direct_sum: mismatched q");
    return {x.q,
            block_diag(x.e0p, y.e0p),
            block_diag(x.e0m, y.e0m),
            block_diag(x.e1p, y.e1p),
            block_diag(x.e1m, y.e1m),
            block_diag(x.K0, y.K0),
            block_diag(x.K1, y.K1)};
}

HatModule restrict_module(const HatModule& m, const Subspace& s) {
    if (s.ambient() != m.dim()) throw DomainError("restrict_module: ambient mismatch");
    const std::pair<const char*, const Matrix*> gens[] = {
        {"e0p", &m.e0p}, {"e0m", &m.e0m}, {"e1p", &m.e1p},
        {"e1m", &m.e1m}, {"K0", &m.K0},   {"K1", &m.K1}};
    std::vector<Matrix> restricted;
    restricted.reserve(6);
    for (const auto& [name, g] : gens) {
        const Matrix gc = *g * s.basis();
        if (!s.contains(Subspace::span(gc)))
            throw DomainError(std::string("restrict_module: subspace not invariant under ") +
                              name);
        restricted.push_back(solve(s.basis(), gc));
    }
    return {m.q,
            std::move(restricted[0]),
            std::move(restricted[1]),
            std::move(restricted[2]),
            std::move(restricted[3]),
            std::move(restricted[4]),
            std::move(restricted[5])};
}

}  // namespace qaff
